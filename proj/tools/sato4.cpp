// sato4 command-line front end.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sato4/conway.hpp"
#include "sato4/corpus.hpp"

using namespace sato4;
namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

std::string read_text(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw ParseError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LinkDiagram diagram_arg(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') return parse_pd(read_text(arg.substr(1)));
  return parse_pd(arg);
}

std::optional<Calibration> find_calibration(const std::string& explicit_path,
                                            const std::vector<fs::path>& guesses) {
  if (!explicit_path.empty()) return load_calibration(explicit_path);
  for (const auto& g : guesses)
    if (fs::exists(g)) return load_calibration(g);
  return std::nullopt;
}

int cmd_lk(const std::string& pd) {
  const LinkDiagram d = diagram_arg(pd);
  if (d.component_count() < 2) {
    std::cerr << "linking number needs at least 2 components\n";
    return kCheckFailed;
  }
  if (d.component_count() == 2) {
    std::cout << linking_number(d, 1, 2) << '\n';
    return kOk;
  }
  for (int i = 1; i <= d.component_count(); ++i)
    for (int j = i + 1; j <= d.component_count(); ++j)
      std::cout << i << ' ' << j << ' ' << linking_number(d, i, j) << '\n';
  return kOk;
}

int cmd_conway(const std::string& pd) {
  const ConwayPoly p = conway(diagram_arg(pd));
  std::cout << p.to_string() << '\n' << p.to_list() << '\n';
  return kOk;
}

int cmd_beta(const std::string& pd, const std::string& cal_path) {
  const LinkDiagram d = diagram_arg(pd);
  if (d.component_count() != 2) {
    std::cerr << "beta needs a 2-component link, got " << d.component_count() << " components\n";
    return kCheckFailed;
  }
  if (const int lk = linking_number(d, 1, 2); lk != 0) {
    std::cerr << "beta needs linking number 0, got " << lk << '\n';
    return kCheckFailed;
  }
  const BigInt z3 = conway(d).coefficient(3);
  if (z3 == 0) {
    std::cout << "0\n";
    return kOk;
  }
  const auto cal = find_calibration(cal_path, {fs::path("corpus") / "calibration.json"});
  if (!cal) {
    std::cerr << "the sign of a nonzero value needs a calibration; run 'sato4 calibrate <dir>' "
                 "and pass --calibration\n";
    return kUsage;
  }
  std::cout << sato_levine_oracle(d, cal->s_cal) << '\n';
  return kOk;
}

int cmd_phi(const std::string& script_path, const std::string& cal_path) {
  const fs::path script = fs::absolute(script_path);
  const fs::path fixture = script.parent_path().parent_path();
  const fs::path root = fixture.parent_path();
  std::vector<CorpusEntry> corpus;
  if (fs::exists(fixture / "link.pd")) corpus.push_back(load_entry(fixture));

  const MovieResult m = run_script(load_script(script, corpus));
  int e_cal = 1;
  bool any_w = false;
  for (const auto& r : m.records) any_w = any_w || r.w != 0;
  if (any_w) {
    const auto cal = find_calibration(cal_path, {root / "calibration.json"});
    if (!cal) {
      std::cerr << "phi needs a calibration; run 'sato4 calibrate <dir>' or pass --calibration\n";
      return kUsage;
    }
    e_cal = cal->e_cal;
  }
  const int value = phi(m, e_cal);
  std::cout << "phi = " << value << '\n';
  std::cout << "records = " << m.records.size() << ", moves = " << m.move_count << '\n';
  if (value != 0) std::cout << "not slice\n";
  return kOk;
}

int cmd_calibrate(const std::string& dir) {
  const auto corpus = load_corpus(dir);
  CalibrationResult r;
  try {
    r = calibrate(corpus);
  } catch (const CalibrationError& e) {
    std::cerr << "calibration failed: " << e.what() << '\n';
    return kCheckFailed;
  }
  const fs::path out = fs::path(dir) / "calibration.json";
  save_calibration(out, r);
  std::cout << "agreeing pairs:";
  for (const auto& c : r.passing) std::cout << " (" << c.e_cal << ", " << c.s_cal << ")";
  std::cout << "\nchosen: e_cal = " << r.chosen.e_cal << ", s_cal = " << r.chosen.s_cal << '\n';
  std::cout << "movies: " << r.movies << " (" << r.nonzero_movies << " nonzero)\n";
  std::cout << "wrote " << out.string() << '\n';
  return kOk;
}

int cmd_verify(const std::string& dir, const std::string& json_out, bool serial) {
  const fs::path cal_file = fs::path(dir) / "calibration.json";
  if (!fs::exists(cal_file)) {
    std::cerr << "no calibration at " << cal_file.string() << "; run 'sato4 calibrate' first\n";
    return kUsage;
  }
  const Calibration cal = load_calibration(cal_file);
  const VerifyReport rep = verify_corpus(load_corpus(dir), cal, !serial);
  std::cout << rep.table;
  if (!json_out.empty()) {
    std::ofstream out(json_out);
    if (!out) throw Error("cannot write " + json_out);
    out << rep.json.dump(2) << '\n';
  }
  if (!rep.ok()) {
    std::cout << rep.failures.size() << " failing check(s):\n";
    for (const auto& f : rep.failures) std::cout << "  " << f << '\n';
    return kCheckFailed;
  }
  std::cout << "all checks pass\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Link invariants, disc movies and the Sato-Levine invariant"};
  app.require_subcommand(1);

  std::string pd, script, cal_path, dir, json_out;
  bool serial = false;

  auto* lk = app.add_subcommand("lk", "linking number");
  lk->add_option("pd", pd, "PD string or @file")->required();
  auto* cw = app.add_subcommand("conway", "Conway polynomial");
  cw->add_option("pd", pd, "PD string or @file")->required();
  auto* beta = app.add_subcommand("beta", "Sato-Levine invariant of a 2-component link with lk 0");
  beta->add_option("pd", pd, "PD string or @file")->required();
  beta->add_option("--calibration", cal_path, "calibration.json to use");
  auto* ph = app.add_subcommand("phi", "phi of a disc movie script");
  ph->add_option("--script", script, "script JSON file")->required();
  ph->add_option("--calibration", cal_path, "calibration.json to use");
  auto* cal = app.add_subcommand("calibrate", "fix the sign conventions against a corpus");
  cal->add_option("dir", dir, "corpus directory")->required();
  auto* ver = app.add_subcommand("verify", "check every fixture of a corpus");
  ver->add_option("dir", dir, "corpus directory")->required();
  ver->add_option("--json", json_out, "write the JSON report here");
  ver->add_flag("--serial", serial, "evaluate fixtures on one thread");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*lk) return cmd_lk(pd);
    if (*cw) return cmd_conway(pd);
    if (*beta) return cmd_beta(pd, cal_path);
    if (*ph) return cmd_phi(script, cal_path);
    if (*cal) return cmd_calibrate(dir);
    if (*ver) return cmd_verify(dir, json_out, serial);
  } catch (const ScriptError& e) {
    std::cerr << "script error at move " << e.move_index << ": " << e.what() << '\n';
    return kCheckFailed;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}
