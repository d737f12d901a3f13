#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sato4/diagram.hpp"

namespace sato4 {

// Sweeps used by the tests and the benchmark. Each one has an OpenMP path
// and a serial path; both visit the same cases and must return equal results.

struct SkeinSweepResult {
  std::size_t checked = 0;
  std::vector<std::string> failures;  // "<diagram index>:<crossing id>"
  bool operator==(const SkeinSweepResult&) const = default;
};

/// Checks nabla(L+) - nabla(L-) = z nabla(L0) at every crossing of every
/// diagram with at most `max_crossings` crossings.
SkeinSweepResult skein_sweep(const std::vector<LinkDiagram>& diagrams, std::size_t max_crossings,
                             bool parallel);

struct PontryaginSweepResult {
  std::size_t cases = 0;
  std::size_t reduction_failures = 0;
  std::size_t additivity_failures = 0;
  bool operator==(const PontryaginSweepResult&) const = default;
};

/// Random diagonal forms of rank 1..max_rank with random class pairs. Case i
/// draws from its own generator seeded by (seed, i).
PontryaginSweepResult pontryagin_random_sweep(std::size_t cases, int max_rank, std::uint64_t seed,
                                              bool parallel);
/// Every form and every pair of classes up to the given rank.
PontryaginSweepResult pontryagin_exhaustive_sweep(int max_rank, bool parallel);

}  // namespace sato4
