#include "sato4/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <limits>
#include <regex>
#include <set>
#include <sstream>

#include "sato4/conway.hpp"

namespace sato4 {

using nlohmann::json;

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw ParseError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<int> header_value(const std::string& text, const std::string& key) {
  const std::regex re("#\\s*" + key + "\\s*:\\s*(-?\\d+)");
  std::smatch m;
  if (!std::regex_search(text, m, re)) return std::nullopt;
  return std::stoi(m[1].str());
}

json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

json poly_to_json(const ConwayPoly& p) {
  json a = json::array();
  for (const BigInt& c : p.coefficients()) a.push_back(big_to_json(c));
  return a;
}

}  // namespace

int total_linking_number(const LinkDiagram& d) {
  int s = 0;
  for (int i = 1; i <= d.component_count(); ++i)
    for (int j = i + 1; j <= d.component_count(); ++j) s += linking_number(d, i, j);
  return s;
}

CorpusEntry load_entry(const fs::path& dir) {
  CorpusEntry e;
  e.name = dir.filename().string();
  e.pd = read_file(dir / "link.pd");
  try {
    e.diagram = parse_pd(e.pd);
  } catch (const Error& err) {
    throw ParseError(e.name + "/link.pd: " + err.what());
  }
  const auto comps = header_value(e.pd, "components");
  const auto lk = header_value(e.pd, "linking_number");
  if (!comps || !lk)
    throw ParseError(e.name + "/link.pd: missing '# components:' or '# linking_number:' header");
  e.components = *comps;
  e.declared_lk = *lk;
  if (e.components != e.diagram.component_count())
    throw ParseError(e.name + ": declared " + std::to_string(e.components) +
                     " components, diagram has " + std::to_string(e.diagram.component_count()));
  if (e.declared_lk != total_linking_number(e.diagram))
    throw ParseError(e.name + ": declared linking number " + std::to_string(e.declared_lk) +
                     ", computed " + std::to_string(total_linking_number(e.diagram)));
  if (fs::is_directory(dir / "scripts")) {
    for (const auto& f : fs::directory_iterator(dir / "scripts"))
      if (f.path().extension() == ".json") e.scripts.push_back(f.path());
    std::sort(e.scripts.begin(), e.scripts.end());
  }
  return e;
}

std::vector<CorpusEntry> load_corpus(const fs::path& root) {
  if (!fs::is_directory(root)) throw ParseError("corpus directory not found: " + root.string());
  std::vector<fs::path> dirs;
  for (const auto& f : fs::directory_iterator(root))
    if (f.is_directory() && fs::exists(f.path() / "link.pd")) dirs.push_back(f.path());
  std::sort(dirs.begin(), dirs.end());
  std::vector<CorpusEntry> out;
  for (const auto& d : dirs) out.push_back(load_entry(d));
  return out;
}

HomotopyScript resolve_script(const ScriptFile& s, const std::vector<CorpusEntry>& corpus) {
  for (const auto& e : corpus)
    if (e.name == s.link) return HomotopyScript{e.diagram, s.moves};
  if (s.link.find_first_of("0123456789") == std::string::npos)
    throw ParseError("script names unknown link '" + s.link + "'");
  return HomotopyScript{parse_pd(s.link), s.moves};
}

HomotopyScript load_script(const fs::path& file, const std::vector<CorpusEntry>& corpus) {
  json j;
  try {
    j = json::parse(read_file(file));
  } catch (const json::parse_error& e) {
    throw ParseError(file.filename().string() + ": " + e.what());
  }
  return resolve_script(parse_script(j), corpus);
}

// --- calibration --------------------------------------------------------------

CalibrationResult calibrate_samples(const std::vector<CalibrationSample>& samples) {
  CalibrationResult r;
  r.movies = samples.size();
  for (const auto& s : samples)
    if (s.z3 != 0 || beta_engine(s.movie, 1) != 0) ++r.nonzero_movies;
  if (r.nonzero_movies == 0)
    throw CalibrationError(
        "ambiguous calibration: every scripted fixture has value 0; add a fixture with a "
        "nonzero invariant");
  for (int e : {1, -1}) {
    for (int s : {1, -1}) {
      bool all = true;
      for (const auto& smp : samples) {
        const BigInt oracle = s * smp.z3;
        all = all && BigInt(beta_engine(smp.movie, e)) == oracle &&
              Mod4Class(phi(smp.movie, e)) == Mod4Class(static_cast<long long>(oracle % 4));
      }
      if (all) r.passing.push_back({e, s});
    }
  }
  if (r.passing.empty())
    throw CalibrationError("no consistent (e_cal, s_cal): engine and oracle disagree");
  r.chosen = r.passing.front();
  return r;
}

CalibrationResult calibrate(const std::vector<CorpusEntry>& corpus) {
  std::vector<CalibrationSample> samples;
  for (const auto& e : corpus) {
    if (e.scripts.empty() || e.components != 2 || e.declared_lk != 0) continue;
    const BigInt z3 = conway(e.diagram).coefficient(3);
    for (const auto& f : e.scripts) {
      try {
        samples.push_back({e.name + "/" + f.filename().string(), z3, run_script(load_script(f, corpus))});
      } catch (const Error& err) {
        throw CalibrationError(e.name + "/" + f.filename().string() + ": " + err.what());
      }
    }
  }
  return calibrate_samples(samples);
}

void save_calibration(const fs::path& file, const CalibrationResult& r) {
  json passing = json::array();
  for (const auto& c : r.passing) passing.push_back({{"e_cal", c.e_cal}, {"s_cal", c.s_cal}});
  json j{{"version", 1},
         {"e_cal", r.chosen.e_cal},
         {"s_cal", r.chosen.s_cal},
         {"passing_pairs", passing},
         {"movies", r.movies},
         {"nonzero_movies", r.nonzero_movies}};
  std::ofstream out(file);
  if (!out) throw Error("cannot write " + file.string());
  out << j.dump(2) << '\n';
}

Calibration load_calibration(const fs::path& file) {
  json j;
  try {
    j = json::parse(read_file(file));
  } catch (const json::parse_error& e) {
    throw ParseError(file.string() + ": " + e.what());
  }
  Calibration c{j.at("e_cal").get<int>(), j.at("s_cal").get<int>()};
  if ((c.e_cal != 1 && c.e_cal != -1) || (c.s_cal != 1 && c.s_cal != -1))
    throw ParseError(file.string() + ": calibration signs must be +1 or -1");
  return c;
}

// --- verification ---------------------------------------------------------------

namespace {

struct FixtureOutcome {
  json j;
  std::vector<std::string> failures;
  std::string row;
};

struct ScriptRun {
  std::string file;
  std::optional<MovieResult> movie;
};

FixtureOutcome verify_fixture(const CorpusEntry& e, const std::vector<CorpusEntry>& corpus,
                              const Calibration& cal) {
  FixtureOutcome out;
  auto fail = [&](const std::string& what) { out.failures.push_back(e.name + ": " + what); };
  const LinkDiagram& d = e.diagram;
  const ConwayPoly nabla = conway(d);

  json j{{"name", e.name},
         {"components", e.components},
         {"linking_number", e.declared_lk},
         {"crossings", d.crossing_count()},
         {"conway", poly_to_json(nabla)}};

  const bool connected = d.unknots().empty() ? pieces(d).size() == 1 : d.crossing_count() == 0 &&
                                                                         d.component_count() == 1;
  if (connected) {
    const ConwayPoly other = conway_from_seifert(seifert_matrix(d));
    j["seifert_conway"] = poly_to_json(other);
    if (!(other == nabla)) fail("skein and Seifert Conway polynomials differ");
  }

  const bool scriptable = e.components == 2 && e.declared_lk == 0;
  std::optional<BigInt> oracle;
  if (scriptable) {
    oracle = sato_levine_oracle(d, cal.s_cal);
    j["oracle"] = big_to_json(*oracle);
  } else {
    j["oracle"] = nullptr;
  }

  std::vector<ScriptRun> runs;
  json scripts = json::array();
  for (const auto& f : e.scripts) {
    ScriptRun run{f.filename().string(), std::nullopt};
    json s{{"file", run.file}};
    try {
      if (!scriptable) throw ScriptError("fixture is not a 2-component link with lk = 0", -1);
      run.movie = run_script(load_script(f, corpus));
      const MovieResult& m = *run.movie;
      const int ph = phi(m, cal.e_cal);
      const long long beta = beta_engine(m, cal.e_cal);
      s["phi"] = ph;
      s["beta_engine"] = beta;
      s["verdict"] = ph != 0 ? "not slice" : "";
      s["movie"] = movie_to_json(m);
      if (m.initial_encoding != canonical_encoding(d)) {
        s["link_matches"] = false;
        fail(run.file + ": script certifies a different link");
      }
      if (BigInt(beta) != *oracle) fail(run.file + ": engine value differs from oracle");
      if (Mod4Class(ph) != Mod4Class(static_cast<long long>(*oracle % 4)))
        fail(run.file + ": phi differs from oracle mod 4");
      for (const auto& r : m.records)
        if (r.lambda_other != -r.lambda) fail(run.file + ": smoothing loops disagree on w");
    } catch (const ScriptError& err) {
      s["error"] = err.what();
      s["move_index"] = err.move_index;
      fail(run.file + ": " + err.what());
    } catch (const Error& err) {
      s["error"] = err.what();
      fail(run.file + ": " + err.what());
    }
    scripts.push_back(s);
    runs.push_back(std::move(run));
  }
  j["scripts"] = scripts;

  std::vector<const ScriptRun*> good;
  for (const auto& r : runs)
    if (r.movie) good.push_back(&r);
  std::set<int> phis;
  for (const auto* r : good) phis.insert(phi(*r->movie, cal.e_cal));
  j["script_independent"] = phis.size() <= 1;
  if (phis.size() > 1) fail("phi depends on the script");

  json gluing = json::array();
  for (std::size_t a = 0; a < good.size(); ++a) {
    for (std::size_t b = a; b < good.size(); ++b) {
      json g{{"first", good[a]->file}, {"second", good[b]->file}};
      try {
        const GluingReport rep = verify_gluing(*good[a]->movie, *good[b]->movie, cal.e_cal);
        g["report"] = rep;
        g["ok"] = rep.ok();
        if (!rep.ok()) fail("gluing " + good[a]->file + " with " + good[b]->file + " fails");
      } catch (const Error& err) {
        g["error"] = err.what();
        g["ok"] = false;
        fail("gluing " + good[a]->file + " with " + good[b]->file + ": " + err.what());
      }
      gluing.push_back(g);
    }
  }
  j["gluing"] = gluing;
  if (good.size() == 1) j["gluing_note"] = "self-pair only";
  j["ok"] = out.failures.empty();

  std::ostringstream row;
  std::string phi_col = "-";
  if (!phis.empty()) {
    phi_col.clear();
    for (int p : phis) phi_col += (phi_col.empty() ? "" : ",") + std::to_string(p);
  }
  row << std::left << std::setw(24) << e.name << std::setw(6) << e.components << std::setw(5)
      << e.declared_lk << std::setw(26) << nabla.to_list() << std::setw(8)
      << (oracle ? oracle->str() : std::string("-")) << std::setw(8)
      << (std::to_string(good.size()) + "/" + std::to_string(runs.size())) << std::setw(6)
      << phi_col << (out.failures.empty() ? "ok" : "FAIL");
  out.row = row.str();
  out.j = std::move(j);
  return out;
}

}  // namespace

VerifyReport verify_corpus(const std::vector<CorpusEntry>& corpus, const Calibration& cal,
                           bool parallel) {
  std::vector<FixtureOutcome> outcomes(corpus.size());
  const long n = static_cast<long>(corpus.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long i = 0; i < n; ++i) {
    try {
      outcomes[i] = verify_fixture(corpus[i], corpus, cal);
    } catch (const Error& err) {
      outcomes[i].failures.push_back(corpus[i].name + ": " + err.what());
      outcomes[i].j = json{{"name", corpus[i].name}, {"error", err.what()}, {"ok", false}};
      outcomes[i].row = corpus[i].name + "  FAIL";
    }
  }

  VerifyReport r;
  json fixtures = json::array();
  std::ostringstream table;
  table << std::left << std::setw(24) << "fixture" << std::setw(6) << "comp" << std::setw(5)
        << "lk" << std::setw(26) << "conway" << std::setw(8) << "oracle" << std::setw(8)
        << "scripts" << std::setw(6) << "phi" << "status\n";
  for (auto& o : outcomes) {
    fixtures.push_back(std::move(o.j));
    table << o.row << '\n';
    for (auto& f : o.failures) r.failures.push_back(std::move(f));
  }
  r.json = json{{"calibration", {{"e_cal", cal.e_cal}, {"s_cal", cal.s_cal}}},
                {"fixtures", fixtures},
                {"failures", r.failures},
                {"ok", r.failures.empty()}};
  r.table = table.str();
  return r;
}

}  // namespace sato4
