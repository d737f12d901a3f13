#pragma once

#include <array>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sato4/error.hpp"

namespace sato4 {

using ArcId = int;
using CrossingId = int;

/// Slot `slot` (0..3) of crossing `crossing`.
struct ArcEnd {
  CrossingId crossing = 0;
  int slot = -1;
  auto operator<=>(const ArcEnd&) const = default;
};

/// A crossing in PD form. Slots run counterclockwise starting at the
/// incoming under-strand, so the under strand always enters at slot 0 and
/// leaves at slot 2. The over strand enters at slot 3 for a positive
/// crossing and at slot 1 for a negative one; the sign is therefore the
/// only orientation datum a crossing needs to carry.
struct Crossing {
  CrossingId id = 0;
  std::array<ArcId, 4> arcs{};
  int sign = 1;

  int over_in() const noexcept { return sign > 0 ? 3 : 1; }
  int over_out() const noexcept { return sign > 0 ? 1 : 3; }
  bool enters(int slot) const noexcept { return slot == 0 || slot == over_in(); }
  /// Slot where the strand entering at `in_slot` leaves.
  int exit_of(int in_slot) const noexcept { return in_slot == 0 ? 2 : over_out(); }

  bool operator==(const Crossing&) const = default;
};

/// Builds the PD tuple of a crossing from its strands and sign.
Crossing make_crossing(CrossingId id, ArcId under_in, ArcId under_out, ArcId over_in,
                       ArcId over_out, int sign);

/// An oriented link diagram. Immutable after construction; every mutating
/// operation returns a new value.
class LinkDiagram {
 public:
  LinkDiagram() = default;
  /// Validates arc multiplicity and orientation consistency.
  LinkDiagram(std::vector<Crossing> crossings, std::vector<ArcId> unknots);

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  const std::vector<ArcId>& unknots() const noexcept { return unknots_; }
  std::size_t crossing_count() const noexcept { return crossings_.size(); }
  int component_count() const noexcept { return static_cast<int>(components_.size()); }

  bool has_crossing(CrossingId c) const noexcept { return index_.count(c) != 0; }
  const Crossing& crossing(CrossingId c) const;
  CrossingId max_crossing_id() const noexcept;
  ArcId max_arc_id() const noexcept;

  bool has_arc(ArcId a) const noexcept { return arcs_.count(a) != 0; }
  std::vector<ArcId> arcs() const;
  bool is_unknot_arc(ArcId a) const;
  /// End where the arc enters a crossing. Unknot arcs have no ends.
  ArcEnd head(ArcId a) const;
  ArcEnd tail(ArcId a) const;
  ArcId successor(ArcId a) const;
  ArcId arc_at(ArcEnd e) const { return crossing(e.crossing).arcs[e.slot]; }
  /// The other end of the arc occupying `e`.
  ArcEnd opposite(ArcEnd e) const;

  /// Components are numbered 1..k in order of their least arc id.
  int component_of(ArcId a) const;
  /// Arcs of component k in traversal order starting from its least arc.
  const std::vector<ArcId>& component_arcs(int k) const;
  int under_component(CrossingId c) const;
  int over_component(CrossingId c) const;
  bool is_self(CrossingId c) const { return under_component(c) == over_component(c); }

  bool operator==(const LinkDiagram& o) const {
    return crossings_ == o.crossings_ && unknots_ == o.unknots_;
  }

 private:
  struct ArcInfo {
    ArcEnd head;
    ArcEnd tail;
    ArcId next = 0;
    int component = 0;
  };

  std::vector<Crossing> crossings_;
  std::vector<ArcId> unknots_;
  std::map<CrossingId, std::size_t> index_;
  std::map<ArcId, ArcInfo> arcs_;
  std::vector<std::vector<ArcId>> components_;

  const ArcInfo& info(ArcId a) const;
};

// --- text I/O --------------------------------------------------------------

/// Parses `PD[X[a,b,c,d], ..., U[n]]` or the line form `X a b c d` / `U n`.
/// `O[n]` marks a component that never passes under as traversed against
/// the default orientation; serialize_pd emits it when needed.
LinkDiagram parse_pd(std::string_view text);
std::string serialize_pd(const LinkDiagram& d);

// --- basic invariants and local operations ---------------------------------

int crossing_sign(const LinkDiagram& d, CrossingId c);
int linking_number(const LinkDiagram& d, int i, int j);
/// Oriented resolution at c.
LinkDiagram smooth(const LinkDiagram& d, CrossingId c);
/// Exchanges over and under at c.
LinkDiagram switch_crossing(const LinkDiagram& d, CrossingId c);
LinkDiagram mirror(const LinkDiagram& d);
/// Crossing ids renumbered 1..n in their current order.
LinkDiagram renumbered(const LinkDiagram& d);
/// String equal for diagrams that differ only by arc and crossing labels.
std::string canonical_encoding(const LinkDiagram& d);

// --- splicing ----------------------------------------------------------------

/// A strand passage through a crossing, as (entry slot, exit slot).
struct Passage {
  int in_slot;
  int out_slot;
};

struct SpliceResult {
  LinkDiagram diagram;
  std::map<ArcId, ArcId> arc_map;  ///< old arc id -> surviving arc id
};

/// Deletes the listed crossings, joining the arcs of each listed passage.
/// Closed chains of arcs become unknot components.
SpliceResult splice(const LinkDiagram& d,
                    const std::map<CrossingId, std::array<Passage, 2>>& removed);

/// Regular passages of a crossing (under strand then over strand).
std::array<Passage, 2> through_passages(const Crossing& x);

// --- planar structure ----------------------------------------------------------

/// A face as the cycle of arc ends traversed with the face on the right;
/// each entry is the end at which the boundary leaves a crossing.
struct Face {
  std::vector<ArcEnd> darts;
};

std::vector<Face> faces(const LinkDiagram& d);
/// Connected pieces of the crossing graph (crossing ids, ascending).
std::vector<std::vector<CrossingId>> pieces(const LinkDiagram& d);
/// Euler-characteristic check: every piece is a sphere diagram.
bool is_planar(const LinkDiagram& d);

}  // namespace sato4
