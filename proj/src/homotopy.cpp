#include "sato4/homotopy.hpp"

#include "sato4/moves.hpp"

namespace sato4 {

using nlohmann::json;

Move Move::r1_add(ArcId arc, int sign, bool under_first) {
  Move m;
  m.kind = MoveKind::R1Add;
  m.arc = arc;
  m.sign = sign;
  m.under_first = under_first;
  return m;
}

Move Move::r1_remove(CrossingId c) {
  Move m;
  m.kind = MoveKind::R1Remove;
  m.crossings = {c};
  return m;
}

Move Move::r2_add(ArcId over, ArcId under, int face) {
  Move m;
  m.kind = MoveKind::R2Add;
  m.over = over;
  m.under = under;
  m.face = face;
  return m;
}

Move Move::r2_remove(CrossingId a, CrossingId b) {
  Move m;
  m.kind = MoveKind::R2Remove;
  m.crossings = {a, b};
  return m;
}

Move Move::r3(CrossingId a, CrossingId b, CrossingId c) {
  Move m;
  m.kind = MoveKind::R3;
  m.crossings = {a, b, c};
  return m;
}

Move Move::sc(CrossingId c) {
  Move m;
  m.kind = MoveKind::SelfCrossingChange;
  m.crossings = {c};
  return m;
}

std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::R1Add: return "r1_add";
    case MoveKind::R1Remove: return "r1_remove";
    case MoveKind::R2Add: return "r2_add";
    case MoveKind::R2Remove: return "r2_remove";
    case MoveKind::R3: return "r3";
    case MoveKind::SelfCrossingChange: return "sc";
  }
  return "?";
}

void to_json(json& j, const Move& m) {
  j = json{{"kind", to_string(m.kind)}};
  switch (m.kind) {
    case MoveKind::R1Add:
      j["arc"] = m.arc;
      j["sign"] = m.sign;
      j["under_first"] = m.under_first;
      break;
    case MoveKind::R2Add:
      j["over"] = m.over;
      j["under"] = m.under;
      if (m.face != 0) j["face"] = m.face;
      break;
    case MoveKind::R1Remove:
    case MoveKind::SelfCrossingChange:
      j["crossing"] = m.crossings.at(0);
      break;
    case MoveKind::R2Remove:
    case MoveKind::R3:
      j["crossings"] = m.crossings;
      break;
  }
}

namespace {

template <typename T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("move is missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("move field '") + key + "' has the wrong type");
  }
}

std::vector<CrossingId> crossing_list(const json& j, std::size_t n) {
  auto v = field<std::vector<CrossingId>>(j, "crossings");
  if (v.size() != n)
    throw ParseError("move needs " + std::to_string(n) + " crossings, got " +
                     std::to_string(v.size()));
  return v;
}

}  // namespace

void from_json(const json& j, Move& m) {
  if (!j.is_object()) throw ParseError("move must be a JSON object");
  const auto kind = field<std::string>(j, "kind");
  if (kind == "r1_add") {
    const int sign = field<int>(j, "sign");
    if (sign != 1 && sign != -1) throw ParseError("r1_add sign must be +1 or -1");
    m = Move::r1_add(field<ArcId>(j, "arc"), sign, j.value("under_first", true));
  } else if (kind == "r1_remove") {
    m = Move::r1_remove(field<CrossingId>(j, "crossing"));
  } else if (kind == "r2_add") {
    m = Move::r2_add(field<ArcId>(j, "over"), field<ArcId>(j, "under"), j.value("face", 0));
  } else if (kind == "r2_remove") {
    const auto v = crossing_list(j, 2);
    m = Move::r2_remove(v[0], v[1]);
  } else if (kind == "r3") {
    const auto v = crossing_list(j, 3);
    m = Move::r3(v[0], v[1], v[2]);
  } else if (kind == "sc") {
    m = Move::sc(field<CrossingId>(j, "crossing"));
  } else {
    throw ParseError("unknown move kind '" + kind + "'");
  }
}

LinkDiagram apply_move(const LinkDiagram& d, const Move& m) {
  switch (m.kind) {
    case MoveKind::R1Add: return r1_add(d, m.arc, m.sign, m.under_first);
    case MoveKind::R1Remove: return r1_remove(d, m.crossings.at(0));
    case MoveKind::R2Add: return r2_add(d, m.over, m.under, m.face);
    case MoveKind::R2Remove: return r2_remove(d, m.crossings.at(0), m.crossings.at(1));
    case MoveKind::R3: return r3(d, m.crossings.at(0), m.crossings.at(1), m.crossings.at(2));
    case MoveKind::SelfCrossingChange: return self_crossing_change(d, m.crossings.at(0));
  }
  throw MoveError("unknown move kind");
}

void to_json(json& j, const SelfIntersectionRecord& r) {
  j = json{{"component", r.component}, {"eps", r.eps}, {"lambda", r.lambda}, {"w", r.w}};
}

std::pair<LinkDiagram, SelfIntersectionRecord> record_self_crossing_change(const LinkDiagram& d,
                                                                         CrossingId c) {
  if (d.component_count() != 2)
    throw MoveError("crossing change records need a 2-component diagram, got " +
                    std::to_string(d.component_count()));
  if (!d.has_crossing(c)) throw MoveError("no crossing " + std::to_string(c));
  if (!d.is_self(c))
    throw MoveError("crossing " + std::to_string(c) +
                    " joins the two components; only self-crossings may change");
  const Crossing& x = d.crossing(c);
  const int s = d.under_component(c);
  const int other = 3 - s;
  const ArcId other_arc = d.component_arcs(other).front();

  std::map<CrossingId, std::array<Passage, 2>> rm;
  rm[c] = {Passage{0, x.over_out()}, Passage{x.over_in(), 2}};
  const SpliceResult sm = splice(d, rm);
  const int loop_a = sm.diagram.component_of(sm.arc_map.at(x.arcs[0]));
  const int loop_b = sm.diagram.component_of(sm.arc_map.at(x.arcs[2]));
  const int target = sm.diagram.component_of(sm.arc_map.at(other_arc));

  SelfIntersectionRecord r;
  r.component = s;
  r.eps = x.sign;
  r.lambda = linking_number(sm.diagram, loop_a, target);
  r.lambda_other = linking_number(sm.diagram, loop_b, target);
  r.w = static_cast<int>(((r.lambda % 2) + 2) % 2);
  return {switch_crossing(d, c), r};
}

ScriptFile parse_script(const json& j) {
  if (!j.is_object()) throw ParseError("script must be a JSON object");
  ScriptFile out;
  if (!j.contains("link") || !j["link"].is_string()) throw ParseError("script needs a 'link' string");
  out.link = j["link"].get<std::string>();
  if (!j.contains("moves") || !j["moves"].is_array()) throw ParseError("script needs a 'moves' array");
  for (std::size_t i = 0; i < j["moves"].size(); ++i) {
    try {
      out.moves.push_back(j["moves"][i].get<Move>());
    } catch (const ParseError& e) {
      throw ScriptError("move " + std::to_string(i) + ": " + e.what(), static_cast<int>(i));
    }
  }
  return out;
}

json script_to_json(const std::string& link, const std::vector<Move>& moves) {
  return json{{"link", link}, {"moves", moves}};
}

json movie_to_json(const MovieResult& r) {
  return json{{"moves", r.move_count}, {"records", r.records}};
}

MovieResult run_script(const HomotopyScript& s) {
  const LinkDiagram& d0 = s.initial;
  if (d0.component_count() != 2)
    throw ScriptError("movie needs a 2-component link, got " +
                          std::to_string(d0.component_count()),
                      -1);
  if (linking_number(d0, 1, 2) != 0) throw ScriptError("movie needs linking number 0", -1);

  MovieResult out;
  out.initial_encoding = canonical_encoding(d0);
  LinkDiagram cur = d0;
  for (std::size_t i = 0; i < s.moves.size(); ++i) {
    const Move& m = s.moves[i];
    const int idx = static_cast<int>(i);
    try {
      if (m.kind == MoveKind::SelfCrossingChange) {
        auto [next, rec] = record_self_crossing_change(cur, m.crossings.at(0));
        out.records.push_back(rec);
        cur = std::move(next);
      } else {
        cur = apply_move(cur, m);
      }
    } catch (const Error& e) {
      throw ScriptError("move " + std::to_string(i) + " (" + to_string(m.kind) + "): " + e.what(),
                        idx);
    }
    if (cur.component_count() != 2 || linking_number(cur, 1, 2) != 0)
      throw ScriptError("move " + std::to_string(i) + " changed the link's components", idx);
  }
  if (cur.crossing_count() != 0)
    throw ScriptError("script does not close the discs: " + std::to_string(cur.crossing_count()) +
                          " crossings remain",
                      static_cast<int>(s.moves.size()));
  out.final_diagram = std::move(cur);
  out.move_count = s.moves.size();
  return out;
}

int phi(const MovieResult& r, int e_cal) {
  long long sum = 0;
  for (const auto& rec : r.records) sum += rec.w * e_cal * rec.eps;
  return static_cast<int>(((sum % 4) + 4) % 4);
}

long long beta_engine(const MovieResult& r, int e_cal) {
  long long sum = 0;
  for (const auto& rec : r.records) sum += rec.eps * rec.lambda * rec.lambda;
  return e_cal * sum;
}

}  // namespace sato4
