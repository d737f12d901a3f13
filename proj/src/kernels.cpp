#include "sato4/kernels.hpp"

#include <random>

#include "sato4/bundle.hpp"
#include "sato4/conway.hpp"

namespace sato4 {

namespace {

struct Site {
  std::size_t diagram;
  CrossingId crossing;
};

bool skein_holds(const LinkDiagram& d, CrossingId c) {
  const LinkDiagram other = switch_crossing(d, c);
  const bool positive = d.crossing(c).sign > 0;
  const ConwayPoly plus = conway(positive ? d : other);
  const ConwayPoly minus = conway(positive ? other : d);
  return plus - minus == conway(smooth(d, c)).times_z();
}

void tally(PontryaginSweepResult& r, const std::vector<int>& u, const std::vector<int>& v,
           const std::vector<int>& f) {
  ++r.cases;
  if (pontryagin_square(u, f).value() % 2 != cup_square_mod2(u, f)) ++r.reduction_failures;
  std::vector<int> sum(u.size());
  for (std::size_t p = 0; p < u.size(); ++p) sum[p] = u[p] ^ v[p];
  const Mod4Class rhs =
      pontryagin_square(u, f) + pontryagin_square(v, f) + Mod4Class(2 * form_pairing(u, v, f));
  if (!(pontryagin_square(sum, f) == rhs)) ++r.additivity_failures;
}

PontryaginSweepResult merge(const std::vector<PontryaginSweepResult>& parts) {
  PontryaginSweepResult out;
  for (const auto& p : parts) {
    out.cases += p.cases;
    out.reduction_failures += p.reduction_failures;
    out.additivity_failures += p.additivity_failures;
  }
  return out;
}

std::vector<int> bits(std::uint64_t mask, int rank) {
  std::vector<int> v(rank);
  for (int p = 0; p < rank; ++p) v[p] = static_cast<int>((mask >> p) & 1u);
  return v;
}

}  // namespace

SkeinSweepResult skein_sweep(const std::vector<LinkDiagram>& diagrams, std::size_t max_crossings,
                             bool parallel) {
  std::vector<Site> sites;
  for (std::size_t i = 0; i < diagrams.size(); ++i) {
    if (diagrams[i].crossing_count() > max_crossings) continue;
    for (const Crossing& x : diagrams[i].crossings()) sites.push_back({i, x.id});
  }
  std::vector<char> ok(sites.size(), 0);
  const long n = static_cast<long>(sites.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long k = 0; k < n; ++k) ok[k] = skein_holds(diagrams[sites[k].diagram], sites[k].crossing);

  SkeinSweepResult r;
  r.checked = sites.size();
  for (std::size_t k = 0; k < sites.size(); ++k)
    if (!ok[k])
      r.failures.push_back(std::to_string(sites[k].diagram) + ":" +
                           std::to_string(sites[k].crossing));
  return r;
}

PontryaginSweepResult pontryagin_random_sweep(std::size_t cases, int max_rank, std::uint64_t seed,
                                              bool parallel) {
  std::vector<PontryaginSweepResult> parts(cases);
  const long n = static_cast<long>(cases);
#pragma omp parallel for schedule(static) if (parallel)
  for (long i = 0; i < n; ++i) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(i)};
    std::mt19937_64 rng(seq);
    const int rank = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_rank));
    std::vector<int> u(rank), v(rank), f(rank);
    for (int p = 0; p < rank; ++p) {
      u[p] = static_cast<int>(rng() & 1u);
      v[p] = static_cast<int>(rng() & 1u);
      f[p] = (rng() & 1u) ? 1 : -1;
    }
    tally(parts[i], u, v, f);
  }
  return merge(parts);
}

PontryaginSweepResult pontryagin_exhaustive_sweep(int max_rank, bool parallel) {
  // One work item per (rank, form); each item runs all class pairs.
  std::vector<std::pair<int, std::uint64_t>> items;
  for (int rank = 1; rank <= max_rank; ++rank)
    for (std::uint64_t fm = 0; fm < (1ull << rank); ++fm) items.push_back({rank, fm});
  std::vector<PontryaginSweepResult> parts(items.size());
  const long n = static_cast<long>(items.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long k = 0; k < n; ++k) {
    const auto [rank, fm] = items[k];
    std::vector<int> f(rank);
    for (int p = 0; p < rank; ++p) f[p] = ((fm >> p) & 1u) ? -1 : 1;
    for (std::uint64_t a = 0; a < (1ull << rank); ++a)
      for (std::uint64_t b = 0; b < (1ull << rank); ++b) tally(parts[k], bits(a, rank), bits(b, rank), f);
  }
  return merge(parts);
}

}  // namespace sato4
