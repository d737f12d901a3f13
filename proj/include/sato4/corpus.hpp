#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sato4/bundle.hpp"
#include "sato4/poly.hpp"
#include "sato4/homotopy.hpp"

namespace sato4 {

namespace fs = std::filesystem;

/// One fixture directory: `<name>/link.pd` plus optional `<name>/scripts/*.json`.
/// link.pd may carry `# components: k` and `# linking_number: n` header
/// comments; declared values are checked on load.
struct CorpusEntry {
  std::string name;
  std::string pd;
  LinkDiagram diagram;
  int components = 0;
  int declared_lk = 0;
  std::vector<fs::path> scripts;  // sorted by file name
};

CorpusEntry load_entry(const fs::path& dir);
/// All fixture directories under `root`, sorted by name.
std::vector<CorpusEntry> load_corpus(const fs::path& root);

/// Sum of pairwise linking numbers.
int total_linking_number(const LinkDiagram& d);

/// Builds the script's initial diagram: a corpus name is looked up in
/// `corpus`, anything else is parsed as PD text.
HomotopyScript load_script(const fs::path& file, const std::vector<CorpusEntry>& corpus);
HomotopyScript resolve_script(const ScriptFile& s, const std::vector<CorpusEntry>& corpus);

struct Calibration {
  int e_cal = 1;
  int s_cal = -1;
  bool operator==(const Calibration&) const = default;
};

struct CalibrationResult {
  std::vector<Calibration> passing;  // every pair that agrees corpus-wide
  Calibration chosen;
  std::size_t movies = 0;
  std::size_t nonzero_movies = 0;
};

/// A movie paired with the z^3 coefficient of its link.
struct CalibrationSample {
  std::string label;
  BigInt z3;
  MovieResult movie;
};

CalibrationResult calibrate_samples(const std::vector<CalibrationSample>& samples);

/// Tries all four sign pairs on every scripted fixture. Throws
/// CalibrationError when nothing agrees or when every scripted value is 0.
/// Among the agreeing pairs the one with e_cal = +1 is chosen.
CalibrationResult calibrate(const std::vector<CorpusEntry>& corpus);

void save_calibration(const fs::path& file, const CalibrationResult& r);
Calibration load_calibration(const fs::path& file);

struct VerifyReport {
  nlohmann::json json;
  std::string table;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Evaluates every fixture (concurrently when `parallel`) and assembles a
/// deterministic report.
VerifyReport verify_corpus(const std::vector<CorpusEntry>& corpus, const Calibration& cal,
                           bool parallel = true);

}  // namespace sato4
