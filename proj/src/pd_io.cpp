#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "sato4/diagram.hpp"

namespace sato4 {

namespace {

struct RawPd {
  std::vector<std::array<ArcId, 4>> crossings;
  std::vector<ArcId> unknots;
  std::vector<ArcId> reversed;  // O[n] hints
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
        ++pos_;
      } else {
        break;
      }
    }
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string word() {
    skip_space();
    std::size_t b = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (b == pos_) fail("expected a keyword");
    return std::string(text_.substr(b, pos_ - b));
  }
  ArcId integer() {
    skip_space();
    std::size_t b = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (b == pos_) fail("expected a positive integer");
    const std::string digits(text_.substr(b, pos_ - b));
    if (digits.size() > 9) fail("arc id out of range");
    const int v = std::stoi(digits);
    if (v <= 0) fail("arc ids must be positive");
    return v;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("PD syntax error at offset " + std::to_string(pos_) + ": " + msg);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<ArcId> read_args(Lexer& lx, std::size_t arity) {
  std::vector<ArcId> v;
  if (lx.accept('[')) {
    while (!lx.accept(']')) {
      if (lx.done()) lx.fail("unterminated argument list");
      v.push_back(lx.integer());
    }
  } else {
    for (std::size_t i = 0; i < arity; ++i) v.push_back(lx.integer());
  }
  if (v.size() != arity)
    lx.fail("expected " + std::to_string(arity) + " arguments, got " + std::to_string(v.size()));
  return v;
}

void read_item(Lexer& lx, RawPd& raw, bool allow_pd);

void read_items(Lexer& lx, RawPd& raw) {
  while (!lx.accept(']')) {
    if (lx.done()) lx.fail("unterminated PD[...]");
    read_item(lx, raw, false);
  }
}

void read_item(Lexer& lx, RawPd& raw, bool allow_pd) {
  const std::string kw = lx.word();
  if (kw == "PD" && allow_pd) {
    lx.expect('[');
    read_items(lx, raw);
  } else if (kw == "X") {
    auto v = read_args(lx, 4);
    raw.crossings.push_back({v[0], v[1], v[2], v[3]});
  } else if (kw == "U") {
    raw.unknots.push_back(read_args(lx, 1)[0]);
  } else if (kw == "O") {
    raw.reversed.push_back(read_args(lx, 1)[0]);
  } else {
    lx.fail("unknown item '" + kw + "'");
  }
}

// Resolves crossing signs from the under-strand data, propagating along
// arcs. Components that never pass under get the default orientation
// (positive sign at their first crossing) unless reversed by an O[n] hint.
std::vector<int> orient(const RawPd& raw) {
  const std::size_t n = raw.crossings.size();
  std::map<ArcId, std::vector<ArcEnd>> ends;
  for (std::size_t i = 0; i < n; ++i)
    for (int s = 0; s < 4; ++s) ends[raw.crossings[i][s]].push_back({static_cast<int>(i), s});
  for (const auto& [arc, list] : ends)
    if (list.size() != 2)
      throw DiagramError("arc " + std::to_string(arc) + " appears " +
                         std::to_string(list.size()) + " times; expected 2");

  // role: +1 the arc enters the crossing at this slot, -1 it leaves.
  std::vector<std::array<int, 4>> role(n, {0, 0, 0, 0});
  std::vector<int> sign(n, 0);
  std::deque<ArcEnd> work;

  auto set_role = [&](ArcEnd e, int r) {
    int& cur = role[e.crossing][e.slot];
    if (cur == r) return;
    if (cur != 0) throw DiagramError("inconsistent orientation traversal");
    cur = r;
    work.push_back(e);
  };
  auto set_sign = [&](std::size_t i, int s) {
    if (sign[i] == s) return;
    if (sign[i] != 0) throw DiagramError("inconsistent orientation traversal");
    sign[i] = s;
    set_role({static_cast<int>(i), s > 0 ? 3 : 1}, +1);
    set_role({static_cast<int>(i), s > 0 ? 1 : 3}, -1);
  };
  auto drain = [&] {
    while (!work.empty()) {
      ArcEnd e = work.front();
      work.pop_front();
      const int r = role[e.crossing][e.slot];
      const auto& list = ends[raw.crossings[e.crossing][e.slot]];
      ArcEnd other = list[0] == e ? list[1] : list[0];
      set_role(other, -r);
      if (other.slot == 1 || other.slot == 3) {
        const bool enters = -r > 0;
        set_sign(other.crossing, (other.slot == 3) == enters ? 1 : -1);
      }
    }
  };

  for (std::size_t i = 0; i < n; ++i) {
    set_role({static_cast<int>(i), 0}, +1);
    set_role({static_cast<int>(i), 2}, -1);
  }
  drain();

  // Unoriented components for the O[n] hints.
  std::map<ArcId, ArcId> parent;
  for (const auto& kv : ends) parent[kv.first] = kv.first;
  auto find = [&](ArcId a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& x : raw.crossings) {
    parent[find(x[0])] = find(x[2]);
    parent[find(x[1])] = find(x[3]);
  }
  std::set<ArcId> flipped;
  for (ArcId h : raw.reversed) {
    if (!parent.count(h)) throw DiagramError("O[" + std::to_string(h) + "] names no crossing arc");
    flipped.insert(find(h));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (sign[i] != 0) continue;
    const bool rev = flipped.count(find(raw.crossings[i][1])) != 0;
    set_sign(i, rev ? -1 : 1);
    drain();
  }
  return sign;
}

}  // namespace

LinkDiagram parse_pd(std::string_view text) {
  Lexer lx(text);
  RawPd raw;
  while (!lx.done()) read_item(lx, raw, true);
  const std::vector<int> signs = orient(raw);
  std::vector<Crossing> xs;
  for (std::size_t i = 0; i < raw.crossings.size(); ++i)
    xs.push_back(Crossing{static_cast<CrossingId>(i + 1), raw.crossings[i], signs[i]});
  return LinkDiagram(std::move(xs), raw.unknots);
}

std::string serialize_pd(const LinkDiagram& d) {
  std::ostringstream os;
  os << "PD[";
  bool first = true;
  auto sep = [&] {
    if (!first) os << ", ";
    first = false;
  };
  for (const Crossing& x : d.crossings()) {
    sep();
    os << "X[" << x.arcs[0] << ',' << x.arcs[1] << ',' << x.arcs[2] << ',' << x.arcs[3] << ']';
  }
  for (ArcId u : d.unknots()) {
    sep();
    os << "U[" << u << ']';
  }
  // Components that never pass under: the text alone does not fix their
  // orientation, so record the ones that differ from the parser default.
  std::set<int> under;
  for (const Crossing& x : d.crossings()) under.insert(d.component_of(x.arcs[0]));
  std::set<int> decided;
  for (const Crossing& x : d.crossings()) {
    const int k = d.over_component(x.id);
    if (under.count(k) || decided.count(k)) continue;
    decided.insert(k);
    if (x.sign < 0) {
      sep();
      os << "O[" << d.component_arcs(k).front() << ']';
    }
  }
  os << ']';
  return os.str();
}

}  // namespace sato4
