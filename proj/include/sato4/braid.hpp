#pragma once

#include <vector>

#include "sato4/conway.hpp"
#include "sato4/diagram.hpp"

namespace sato4 {

/// Braid word on `strands` strands; letter +i is sigma_i, -i its inverse.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;
};

/// PD diagram of the braid closure. Strands run upward; sigma_i is a
/// positive crossing with the strand from position i passing over.
LinkDiagram braid_closure(const BraidWord& b);

/// Applies Vogel moves (antiparallel R2 across faces that see two different
/// Seifert circles turning the same way) until the diagram is braided.
LinkDiagram vogel_braidify(const LinkDiagram& d);

/// Reads the braid word of a braided, connected diagram.
BraidWord braid_from_diagram(const LinkDiagram& d);

/// Seifert matrix of the canonical surface of a braid closure: one disc per
/// strand and one band per letter; generators are loops through
/// consecutive bands of a column.
SeifertMatrix braid_seifert_matrix(const BraidWord& b);

}  // namespace sato4
