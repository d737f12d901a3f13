#include <doctest.h>

#include <fstream>

#include "sato4/conway.hpp"
#include "sato4/corpus.hpp"
#include "sato4/kernels.hpp"

using namespace sato4;

namespace {

const fs::path kCorpus = SATO4_CORPUS_DIR;

// Scratch copy of selected fixtures under the build tree.
fs::path scratch_corpus(const std::string& tag, const std::vector<std::string>& names) {
  const fs::path dir = fs::temp_directory_path() / ("sato4_test_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  for (const auto& n : names) fs::copy(kCorpus / n, dir / n, fs::copy_options::recursive);
  return dir;
}

void write(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

const CorpusEntry& entry(const std::vector<CorpusEntry>& c, const std::string& name) {
  for (const auto& e : c)
    if (e.name == name) return e;
  throw Error("no fixture " + name);
}

}  // namespace

TEST_CASE("shipped corpus loads in name order") {
  const auto c = load_corpus(kCorpus);
  REQUIRE(c.size() >= 8);
  for (std::size_t i = 1; i < c.size(); ++i) CHECK(c[i - 1].name < c[i].name);
  CHECK(entry(c, "whitehead").scripts.size() >= 2);
  CHECK(entry(c, "hopf").declared_lk == 1);
  CHECK(entry(c, "hopf").scripts.empty());
}

TEST_CASE("declared header values are checked") {
  const fs::path dir = scratch_corpus("headers", {});
  fs::create_directories(dir / "bad");
  write(dir / "bad" / "link.pd", "# components: 2\n# linking_number: 0\nPD[X[2,4,3,1], X[4,2,1,3]]\n");
  CHECK_THROWS_AS(load_entry(dir / "bad"), ParseError);
  write(dir / "bad" / "link.pd", "# components: 1\n# linking_number: 1\nPD[X[2,4,3,1], X[4,2,1,3]]\n");
  CHECK_THROWS_AS(load_entry(dir / "bad"), ParseError);
  write(dir / "bad" / "link.pd", "PD[X[2,4,3,1], X[4,2,1,3]]\n");
  CHECK_THROWS_AS(load_entry(dir / "bad"), ParseError);
}

TEST_CASE("calibration") {
  SUBCASE("only zero-valued fixtures is ambiguous") {
    const auto c = load_corpus(scratch_corpus("ambiguous", {"unlink"}));
    CHECK_THROWS_AS(calibrate(c), CalibrationError);
  }
  SUBCASE("shipped corpus: engine and oracle agree up to a common sign") {
    const CalibrationResult r = calibrate(load_corpus(kCorpus));
    REQUIRE(r.passing.size() == 2);
    CHECK(r.passing[0].e_cal * r.passing[0].s_cal == -1);
    CHECK(r.passing[1].e_cal == -r.passing[0].e_cal);
    CHECK(r.chosen.e_cal == 1);
    CHECK(r.nonzero_movies > 0);
  }
  SUBCASE("a corrupted lambda leaves no consistent pair") {
    const auto c = load_corpus(kCorpus);
    const CorpusEntry& w = entry(c, "whitehead");
    std::vector<CalibrationSample> samples;
    for (const auto& f : w.scripts)
      samples.push_back({f.filename().string(), conway(w.diagram).coefficient(3),
                         run_script(load_script(f, c))});
    CHECK(calibrate_samples(samples).passing.size() == 2);
    samples[0].movie.records[0].lambda = 3;
    CHECK_THROWS_AS(calibrate_samples(samples), CalibrationError);
  }
  SUBCASE("persisted file") {
    const fs::path dir = scratch_corpus("persist", {"whitehead"});
    const CalibrationResult r = calibrate(load_corpus(dir));
    save_calibration(dir / "calibration.json", r);
    CHECK(load_calibration(dir / "calibration.json") == r.chosen);
  }
}

TEST_CASE("verify") {
  const auto c = load_corpus(kCorpus);
  const Calibration cal{1, -1};
  SUBCASE("shipped corpus passes and is deterministic") {
    const VerifyReport a = verify_corpus(c, cal, true);
    const VerifyReport b = verify_corpus(c, cal, false);
    for (const auto& f : a.failures) MESSAGE(f);
    CHECK(a.ok());
    CHECK(a.json.dump() == b.json.dump());
    CHECK(a.table == b.table);
  }
  SUBCASE("wrong calibration fails") {
    CHECK_FALSE(verify_corpus(c, Calibration{1, 1}, true).ok());
  }
  SUBCASE("single script fixture reports a self-pair") {
    const VerifyReport r = verify_corpus(c, cal, true);
    for (const auto& f : r.json["fixtures"])
      if (f["name"] == "three_braid_link") CHECK(f["gluing_note"] == "self-pair only");
  }
  SUBCASE("a script for the wrong link is caught") {
    const fs::path dir = scratch_corpus("wrong_link", {"whitehead", "whitehead_mirror"});
    fs::copy(dir / "whitehead_mirror" / "scripts" / "b_kink.json",
             dir / "whitehead" / "scripts" / "z_wrong.json");
    // Point the copied script at the mirror's diagram.
    write(dir / "whitehead" / "scripts" / "z_wrong.json",
          R"({"link": "whitehead_mirror", "moves": [{"kind":"sc","crossing":2},{"kind":"r3","crossings":[1,2,3]},{"kind":"r2_remove","crossings":[1,5]},{"kind":"r2_remove","crossings":[3,4]},{"kind":"r1_remove","crossing":2}]})");
    const VerifyReport r = verify_corpus(load_corpus(dir), cal, true);
    CHECK_FALSE(r.ok());
    bool glue_error = false;
    for (const auto& f : r.failures) glue_error = glue_error || f.find("different links") != std::string::npos;
    CHECK(glue_error);
  }
}

TEST_CASE("serial and OpenMP sweeps agree") {
  std::vector<LinkDiagram> ds;
  for (const auto& e : load_corpus(kCorpus)) ds.push_back(e.diagram);
  CHECK(skein_sweep(ds, 8, true) == skein_sweep(ds, 8, false));
  CHECK(pontryagin_random_sweep(500, 10, 3, true) == pontryagin_random_sweep(500, 10, 3, false));
  CHECK(pontryagin_exhaustive_sweep(4, true) == pontryagin_exhaustive_sweep(4, false));
}
