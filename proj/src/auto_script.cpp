#include <queue>
#include <set>
#include <tuple>

#include "sato4/homotopy.hpp"

namespace sato4 {

namespace {

int inter_crossings(const LinkDiagram& d) {
  int n = 0;
  for (const Crossing& x : d.crossings()) n += d.is_self(x.id) ? 0 : 1;
  return n;
}

// Candidate moves read off the faces: monogons, bigons and triangles, plus
// every self-crossing change.
std::vector<Move> candidates(const LinkDiagram& d) {
  std::vector<Move> out;
  std::set<std::vector<CrossingId>> seen;
  for (const Face& f : faces(d)) {
    std::vector<CrossingId> ids;
    for (const ArcEnd& e : f.darts) ids.push_back(e.crossing);
    std::set<CrossingId> distinct(ids.begin(), ids.end());
    if (distinct.size() != ids.size()) continue;
    std::vector<CrossingId> key(distinct.begin(), distinct.end());
    if (!seen.insert(key).second) continue;
    if (key.size() == 1) out.push_back(Move::r1_remove(key[0]));
    if (key.size() == 2) out.push_back(Move::r2_remove(key[0], key[1]));
    if (key.size() == 3) out.push_back(Move::r3(key[0], key[1], key[2]));
  }
  for (const Crossing& x : d.crossings())
    if (d.is_self(x.id)) out.push_back(Move::sc(x.id));
  return out;
}

struct Node {
  std::size_t crossings;
  int inter;
  std::size_t changes;
  std::size_t depth;
  std::size_t serial;
  LinkDiagram diagram;
  std::vector<Move> path;

  auto key() const { return std::tie(crossings, inter, changes, depth, serial); }
  bool operator>(const Node& o) const { return key() > o.key(); }
};

}  // namespace

std::optional<HomotopyScript> auto_script(const LinkDiagram& d, SearchBudget budget) {
  if (d.component_count() != 2) throw DiagramError("auto_script needs a 2-component link");
  if (linking_number(d, 1, 2) != 0) throw DiagramError("auto_script needs linking number 0");

  std::priority_queue<Node, std::vector<Node>, std::greater<>> open;
  std::set<std::string> visited;
  std::size_t serial = 0;
  open.push(Node{d.crossing_count(), inter_crossings(d), 0, 0, serial++, d, {}});
  visited.insert(canonical_encoding(d));

  for (std::size_t expanded = 0; !open.empty() && expanded < budget.max_expansions; ++expanded) {
    Node n = open.top();
    open.pop();
    if (n.diagram.crossing_count() == 0) return HomotopyScript{d, std::move(n.path)};
    if (n.depth >= budget.max_depth) continue;
    for (const Move& m : candidates(n.diagram)) {
      LinkDiagram next;
      try {
        next = apply_move(n.diagram, m);
      } catch (const Error&) {
        continue;
      }
      if (!visited.insert(canonical_encoding(next)).second) continue;
      std::vector<Move> path = n.path;
      path.push_back(m);
      const std::size_t changes = n.changes + (m.kind == MoveKind::SelfCrossingChange ? 1 : 0);
      open.push(Node{next.crossing_count(), inter_crossings(next), changes, n.depth + 1, serial++,
                     std::move(next), std::move(path)});
    }
  }
  return std::nullopt;
}

}  // namespace sato4
