#pragma once

#include "sato4/diagram.hpp"

namespace sato4 {

/// Inserts a kink on arc x. `under_first` picks whether the strand passes
/// under on its first visit to the new crossing; `sign` is the new
/// crossing's sign. Works on unknot components too.
LinkDiagram r1_add(const LinkDiagram& d, ArcId x, int sign, bool under_first);
/// Removes a kink: c must carry a monogon face.
LinkDiagram r1_remove(const LinkDiagram& d, CrossingId c);

/// Pushes a finger of `over` across `under` inside the face that contains
/// both darts. The darts must lie on the same face.
LinkDiagram r2_add_at(const LinkDiagram& d, ArcEnd over_dart, ArcEnd under_dart);
/// As r2_add_at, choosing the `face_choice`-th face shared by the two arcs.
LinkDiagram r2_add(const LinkDiagram& d, ArcId over, ArcId under, int face_choice = 0);
/// Removes a bigon face between a and b whose one edge is over at both ends.
LinkDiagram r2_remove(const LinkDiagram& d, CrossingId a, CrossingId b);

/// Slides across the triangle face bounded by crossings a, b, c. Crossing
/// ids, signs and over/under relations are kept.
LinkDiagram r3(const LinkDiagram& d, CrossingId a, CrossingId b, CrossingId c);

/// Crossing change restricted to self-crossings.
LinkDiagram self_crossing_change(const LinkDiagram& d, CrossingId c);

/// Shared faces of two arcs, as (face index, dart on a, dart on b).
struct SharedFace {
  std::size_t face;
  ArcEnd dart_a;
  ArcEnd dart_b;
};
std::vector<SharedFace> shared_faces(const LinkDiagram& d, const std::vector<Face>& fs, ArcId a,
                                     ArcId b);

}  // namespace sato4
