#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sato4/diagram.hpp"

namespace sato4 {

enum class MoveKind { R1Add, R1Remove, R2Add, R2Remove, R3, SelfCrossingChange };

/// One step of a movie. Only the fields used by `kind` are meaningful:
/// R1Add uses arc/sign/under_first, R2Add uses over/under/face, the others
/// use crossings (one, two or three ids).
struct Move {
  MoveKind kind = MoveKind::R1Remove;
  ArcId arc = 0;
  int sign = 1;
  bool under_first = true;
  ArcId over = 0;
  ArcId under = 0;
  int face = 0;
  std::vector<CrossingId> crossings;

  static Move r1_add(ArcId arc, int sign, bool under_first);
  static Move r1_remove(CrossingId c);
  static Move r2_add(ArcId over, ArcId under, int face = 0);
  static Move r2_remove(CrossingId a, CrossingId b);
  static Move r3(CrossingId a, CrossingId b, CrossingId c);
  static Move sc(CrossingId c);

  bool operator==(const Move&) const = default;
};

std::string to_string(MoveKind k);
void to_json(nlohmann::json& j, const Move& m);
void from_json(const nlohmann::json& j, Move& m);

LinkDiagram apply_move(const LinkDiagram& d, const Move& m);

struct SelfIntersectionRecord {
  int component = 0;  ///< component index at change time
  int eps = 0;        ///< sign of the crossing before the change
  long long lambda = 0;
  int w = 0;          ///< lambda mod 2
  /// lk of the complementary smoothing loop; always -lambda when lk = 0.
  long long lambda_other = 0;

  bool operator==(const SelfIntersectionRecord&) const = default;
};

void to_json(nlohmann::json& j, const SelfIntersectionRecord& r);

/// Switches the self-crossing c and reports the smoothing-loop data.
std::pair<LinkDiagram, SelfIntersectionRecord> record_self_crossing_change(const LinkDiagram& d,
                                                                         CrossingId c);

struct HomotopyScript {
  LinkDiagram initial;
  std::vector<Move> moves;
};

/// Reads `{"link": ..., "moves": [...]}`. The link field is returned as-is
/// so the caller can resolve corpus names; PD strings are parsed directly.
struct ScriptFile {
  std::string link;
  std::vector<Move> moves;
};
ScriptFile parse_script(const nlohmann::json& j);
nlohmann::json script_to_json(const std::string& link, const std::vector<Move>& moves);

struct MovieResult {
  std::string initial_encoding;
  LinkDiagram final_diagram;
  std::vector<SelfIntersectionRecord> records;
  std::size_t move_count = 0;
};

nlohmann::json movie_to_json(const MovieResult& r);

/// Applies every move. Throws ScriptError carrying the failing move index.
MovieResult run_script(const HomotopyScript& s);

/// Sum of w * e_cal * eps, reduced into 0..3.
int phi(const MovieResult& r, int e_cal);
/// e_cal * sum of eps * lambda^2.
long long beta_engine(const MovieResult& r, int e_cal);

struct SearchBudget {
  std::size_t max_expansions = 20000;
  std::size_t max_depth = 40;
};

/// Best-first search for a script to the crossingless unlink using
/// R1/R2 removals, R3 and self-crossing changes.
std::optional<HomotopyScript> auto_script(const LinkDiagram& d, SearchBudget budget = {});

}  // namespace sato4
