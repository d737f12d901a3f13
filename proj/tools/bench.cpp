// Times the OpenMP sweeps against their serial paths and checks that both
// produce the same result.
#include <omp.h>

#include <CLI11.hpp>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <random>

#include "sato4/braid.hpp"
#include "sato4/conway.hpp"
#include "sato4/corpus.hpp"
#include "sato4/kernels.hpp"

using namespace sato4;

namespace {

template <typename F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<LinkDiagram> random_closures(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<LinkDiagram> out;
  while (out.size() < count) {
    const int strands = 2 + static_cast<int>(rng() % 3);
    const int len = 4 + static_cast<int>(rng() % 6);
    BraidWord b{strands, {}};
    for (int i = 0; i < len; ++i) {
      const int g = 1 + static_cast<int>(rng() % (strands - 1));
      b.letters.push_back((rng() & 1u) ? g : -g);
    }
    out.push_back(braid_closure(b));
  }
  return out;
}

void row(const std::string& name, double serial, double parallel, bool same) {
  std::cout << std::left << std::setw(22) << name << std::right << std::fixed
            << std::setprecision(4) << std::setw(11) << serial << std::setw(11) << parallel
            << std::setw(9) << std::setprecision(2) << (parallel > 0 ? serial / parallel : 0.0)
            << "  " << (same ? "equal" : "DIFFERENT") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP sweeps"};
  std::size_t diagrams = 60;
  std::size_t cases = 200000;
  int rank = 6;
  std::string corpus_dir;
  app.add_option("--diagrams", diagrams, "random braid closures for the skein sweep");
  app.add_option("--cases", cases, "random Pontryagin-law cases");
  app.add_option("--rank", rank, "rank bound for the exhaustive Pontryagin sweep");
  app.add_option("--corpus", corpus_dir, "corpus directory to verify (optional)");
  CLI11_PARSE(app, argc, argv);

  std::cout << "threads: " << omp_get_max_threads() << '\n';
  std::cout << std::left << std::setw(22) << "kernel" << std::right << std::setw(11) << "serial s"
            << std::setw(11) << "omp s" << std::setw(9) << "speedup" << '\n';

  const auto ds = random_closures(diagrams, 42);
  SkeinSweepResult s1, s2;
  // Fresh memo for each run so neither path reuses the other's work.
  shared_conway_memo().clear();
  const double ts = seconds([&] { s1 = skein_sweep(ds, 12, false); });
  shared_conway_memo().clear();
  const double tp = seconds([&] { s2 = skein_sweep(ds, 12, true); });
  row("skein sweep", ts, tp, s1 == s2);

  PontryaginSweepResult p1, p2;
  const double rs = seconds([&] { p1 = pontryagin_random_sweep(cases, 12, 7, false); });
  const double rp = seconds([&] { p2 = pontryagin_random_sweep(cases, 12, 7, true); });
  row("pontryagin random", rs, rp, p1 == p2);

  const double es = seconds([&] { p1 = pontryagin_exhaustive_sweep(rank, false); });
  const double ep = seconds([&] { p2 = pontryagin_exhaustive_sweep(rank, true); });
  row("pontryagin exhaustive", es, ep, p1 == p2);

  if (!corpus_dir.empty()) {
    const auto corpus = load_corpus(corpus_dir);
    const Calibration cal = load_calibration(std::filesystem::path(corpus_dir) / "calibration.json");
    VerifyReport v1, v2;
    shared_conway_memo().clear();
    const double vs = seconds([&] { v1 = verify_corpus(corpus, cal, false); });
    shared_conway_memo().clear();
    const double vp = seconds([&] { v2 = verify_corpus(corpus, cal, true); });
    row("corpus verify", vs, vp, v1.json == v2.json);
  }
  return 0;
}
