#include "sato4/diagram.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace sato4 {

Crossing make_crossing(CrossingId id, ArcId under_in, ArcId under_out, ArcId over_in,
                       ArcId over_out, int sign) {
  Crossing x;
  x.id = id;
  x.sign = sign;
  x.arcs = sign > 0 ? std::array<ArcId, 4>{under_in, over_out, under_out, over_in}
                    : std::array<ArcId, 4>{under_in, over_in, under_out, over_out};
  return x;
}

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, std::vector<ArcId> unknots)
    : crossings_(std::move(crossings)), unknots_(std::move(unknots)) {
  std::sort(crossings_.begin(), crossings_.end(),
            [](const Crossing& a, const Crossing& b) { return a.id < b.id; });
  std::sort(unknots_.begin(), unknots_.end());

  for (std::size_t i = 0; i < crossings_.size(); ++i) {
    const Crossing& x = crossings_[i];
    if (x.id <= 0) throw DiagramError("crossing ids must be positive");
    if (x.sign != 1 && x.sign != -1) throw DiagramError("crossing sign must be +1 or -1");
    if (!index_.emplace(x.id, i).second)
      throw DiagramError("duplicate crossing id " + std::to_string(x.id));
  }

  std::map<ArcId, std::vector<ArcEnd>> ends;
  for (const Crossing& x : crossings_) {
    for (int s = 0; s < 4; ++s) {
      if (x.arcs[s] <= 0) throw DiagramError("arc ids must be positive");
      ends[x.arcs[s]].push_back({x.id, s});
    }
  }
  for (const auto& [arc, list] : ends) {
    if (list.size() != 2)
      throw DiagramError("arc " + std::to_string(arc) + " appears " +
                         std::to_string(list.size()) + " times; expected 2");
    const bool in0 = crossing(list[0].crossing).enters(list[0].slot);
    const bool in1 = crossing(list[1].crossing).enters(list[1].slot);
    if (in0 == in1)
      throw DiagramError("inconsistent orientation along arc " + std::to_string(arc));
    ArcInfo inf;
    inf.head = in0 ? list[0] : list[1];
    inf.tail = in0 ? list[1] : list[0];
    const Crossing& hx = crossing(inf.head.crossing);
    inf.next = hx.arcs[hx.exit_of(inf.head.slot)];
    arcs_.emplace(arc, inf);
  }
  for (std::size_t i = 0; i < unknots_.size(); ++i) {
    const ArcId u = unknots_[i];
    if (u <= 0) throw DiagramError("arc ids must be positive");
    if (i > 0 && unknots_[i - 1] == u)
      throw DiagramError("duplicate unknot marker " + std::to_string(u));
    if (ends.count(u)) throw DiagramError("unknot marker " + std::to_string(u) + " reuses an arc");
    ArcInfo inf;
    inf.next = u;
    arcs_.emplace(u, inf);
  }

  // Components: cycles of the successor map, ordered by least arc.
  std::set<ArcId> seen;
  for (auto& [arc, inf] : arcs_) {
    if (seen.count(arc)) continue;
    std::vector<ArcId> cycle;
    ArcId cur = arc;
    do {
      if (!seen.insert(cur).second)
        throw DiagramError("orientation traversal does not close at arc " + std::to_string(arc));
      cycle.push_back(cur);
      cur = arcs_.at(cur).next;
    } while (cur != arc);
    components_.push_back(std::move(cycle));
  }
  // std::map iteration visits least arcs first, so components_ is already
  // ordered by least arc and each cycle starts at its least arc.
  for (std::size_t k = 0; k < components_.size(); ++k)
    for (ArcId a : components_[k]) arcs_.at(a).component = static_cast<int>(k) + 1;
}

const Crossing& LinkDiagram::crossing(CrossingId c) const {
  auto it = index_.find(c);
  if (it == index_.end()) throw DiagramError("unknown crossing id " + std::to_string(c));
  return crossings_[it->second];
}

CrossingId LinkDiagram::max_crossing_id() const noexcept {
  return crossings_.empty() ? 0 : crossings_.back().id;
}

ArcId LinkDiagram::max_arc_id() const noexcept {
  return arcs_.empty() ? 0 : arcs_.rbegin()->first;
}

std::vector<ArcId> LinkDiagram::arcs() const {
  std::vector<ArcId> out;
  out.reserve(arcs_.size());
  for (const auto& kv : arcs_) out.push_back(kv.first);
  return out;
}

const LinkDiagram::ArcInfo& LinkDiagram::info(ArcId a) const {
  auto it = arcs_.find(a);
  if (it == arcs_.end()) throw DiagramError("unknown arc id " + std::to_string(a));
  return it->second;
}

bool LinkDiagram::is_unknot_arc(ArcId a) const { return info(a).head.slot < 0; }

ArcEnd LinkDiagram::head(ArcId a) const {
  const ArcInfo& i = info(a);
  if (i.head.slot < 0) throw DiagramError("unknot arc has no ends");
  return i.head;
}

ArcEnd LinkDiagram::tail(ArcId a) const {
  const ArcInfo& i = info(a);
  if (i.tail.slot < 0) throw DiagramError("unknot arc has no ends");
  return i.tail;
}

ArcId LinkDiagram::successor(ArcId a) const { return info(a).next; }

ArcEnd LinkDiagram::opposite(ArcEnd e) const {
  const ArcInfo& i = info(arc_at(e));
  return i.head == e ? i.tail : i.head;
}

int LinkDiagram::component_of(ArcId a) const { return info(a).component; }

const std::vector<ArcId>& LinkDiagram::component_arcs(int k) const {
  if (k < 1 || k > component_count())
    throw DiagramError("no component " + std::to_string(k));
  return components_[k - 1];
}

int LinkDiagram::under_component(CrossingId c) const {
  return component_of(crossing(c).arcs[0]);
}

int LinkDiagram::over_component(CrossingId c) const {
  const Crossing& x = crossing(c);
  return component_of(x.arcs[x.over_in()]);
}

// ---------------------------------------------------------------------------

int crossing_sign(const LinkDiagram& d, CrossingId c) { return d.crossing(c).sign; }

int linking_number(const LinkDiagram& d, int i, int j) {
  if (i == j) throw DiagramError("linking number needs two distinct components");
  if (i < 1 || j < 1 || i > d.component_count() || j > d.component_count())
    throw DiagramError("no such component");
  int sum = 0;
  for (const Crossing& x : d.crossings()) {
    const int u = d.under_component(x.id);
    const int o = d.over_component(x.id);
    if ((u == i && o == j) || (u == j && o == i)) sum += x.sign;
  }
  // A sum of signs between two closed curves is always even.
  return sum / 2;
}

std::array<Passage, 2> through_passages(const Crossing& x) {
  return {Passage{0, 2}, Passage{x.over_in(), x.over_out()}};
}

SpliceResult splice(const LinkDiagram& d,
                    const std::map<CrossingId, std::array<Passage, 2>>& removed) {
  std::map<ArcId, ArcId> parent;
  for (ArcId a : d.arcs()) parent[a] = a;
  std::function<ArcId(ArcId)> find = [&](ArcId a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& [cid, passages] : removed) {
    const Crossing& x = d.crossing(cid);
    for (const Passage& p : passages) {
      ArcId a = find(x.arcs[p.in_slot]);
      ArcId b = find(x.arcs[p.out_slot]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  SpliceResult out;
  std::set<ArcId> touching;  // classes that still end at a surviving crossing
  std::vector<Crossing> kept;
  for (const Crossing& x : d.crossings()) {
    if (removed.count(x.id)) continue;
    Crossing y = x;
    for (ArcId& a : y.arcs) {
      a = find(a);
      touching.insert(a);
    }
    kept.push_back(y);
  }
  std::vector<ArcId> unknots;
  std::set<ArcId> classes;
  for (ArcId a : d.arcs()) {
    const ArcId r = find(a);
    out.arc_map[a] = r;
    classes.insert(r);
  }
  for (ArcId r : classes)
    if (!touching.count(r)) unknots.push_back(r);
  out.diagram = LinkDiagram(std::move(kept), std::move(unknots));
  return out;
}

LinkDiagram smooth(const LinkDiagram& d, CrossingId c) {
  const Crossing& x = d.crossing(c);
  std::map<CrossingId, std::array<Passage, 2>> rm;
  rm[c] = {Passage{0, x.over_out()}, Passage{x.over_in(), 2}};
  return splice(d, rm).diagram;
}

LinkDiagram switch_crossing(const LinkDiagram& d, CrossingId c) {
  const Crossing& x = d.crossing(c);
  std::vector<Crossing> xs = d.crossings();
  for (Crossing& y : xs) {
    if (y.id != c) continue;
    const auto& a = x.arcs;
    // The old over strand becomes the under strand; rotate so it starts at slot 0.
    y.arcs = x.sign > 0 ? std::array<ArcId, 4>{a[3], a[0], a[1], a[2]}
                        : std::array<ArcId, 4>{a[1], a[2], a[3], a[0]};
    y.sign = -x.sign;
  }
  return LinkDiagram(std::move(xs), d.unknots());
}

LinkDiagram mirror(const LinkDiagram& d) {
  LinkDiagram out = d;
  for (const Crossing& x : d.crossings()) out = switch_crossing(out, x.id);
  return out;
}

LinkDiagram renumbered(const LinkDiagram& d) {
  std::vector<Crossing> xs = d.crossings();
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i].id = static_cast<CrossingId>(i + 1);
  return LinkDiagram(std::move(xs), d.unknots());
}

// --- planar structure ---------------------------------------------------------

std::vector<Face> faces(const LinkDiagram& d) {
  std::set<ArcEnd> used;
  std::vector<Face> out;
  for (const Crossing& x : d.crossings()) {
    for (int s = 0; s < 4; ++s) {
      ArcEnd start{x.id, s};
      if (used.count(start)) continue;
      Face f;
      ArcEnd cur = start;
      do {
        used.insert(cur);
        f.darts.push_back(cur);
        ArcEnd far = d.opposite(cur);
        cur = ArcEnd{far.crossing, (far.slot + 1) % 4};
      } while (cur != start);
      out.push_back(std::move(f));
    }
  }
  return out;
}

std::vector<std::vector<CrossingId>> pieces(const LinkDiagram& d) {
  std::map<CrossingId, CrossingId> parent;
  for (const Crossing& x : d.crossings()) parent[x.id] = x.id;
  auto find = [&](CrossingId c) {
    while (parent[c] != c) c = parent[c] = parent[parent[c]];
    return c;
  };
  for (const Crossing& x : d.crossings()) {
    for (int s = 0; s < 4; ++s) {
      CrossingId o = d.opposite({x.id, s}).crossing;
      CrossingId a = find(x.id), b = find(o);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<CrossingId, std::vector<CrossingId>> groups;
  for (const Crossing& x : d.crossings()) groups[find(x.id)].push_back(x.id);
  std::vector<std::vector<CrossingId>> out;
  for (auto& kv : groups) out.push_back(std::move(kv.second));
  return out;
}

bool is_planar(const LinkDiagram& d) {
  std::map<CrossingId, std::size_t> piece_of;
  const auto ps = pieces(d);
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (CrossingId c : ps[i]) piece_of[c] = i;
  std::vector<std::size_t> face_count(ps.size(), 0);
  for (const Face& f : faces(d)) ++face_count[piece_of[f.darts.front().crossing]];
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (face_count[i] != ps[i].size() + 2) return false;
  return true;
}

// --- canonical encoding --------------------------------------------------------

namespace {

// Relabels one piece by traversal from `start` and returns its sorted tuples.
std::string encode_piece_from(const LinkDiagram& d, ArcId start,
                              const std::set<CrossingId>& piece) {
  std::map<ArcId, int> label;
  std::vector<ArcId> order;
  std::set<int> done_components;
  auto walk = [&](ArcId from) {
    done_components.insert(d.component_of(from));
    ArcId cur = from;
    do {
      label[cur] = static_cast<int>(order.size()) + 1;
      order.push_back(cur);
      cur = d.successor(cur);
    } while (cur != from);
  };
  walk(start);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const ArcEnd h = d.head(order[i]);
    const Crossing& x = d.crossing(h.crossing);
    const int other_in = h.slot == 0 ? x.over_in() : 0;
    const ArcId other_out = x.arcs[x.exit_of(other_in)];
    if (!done_components.count(d.component_of(other_out))) walk(other_out);
  }
  std::vector<std::array<int, 5>> tuples;
  for (CrossingId c : piece) {
    const Crossing& x = d.crossing(c);
    tuples.push_back({label.at(x.arcs[0]), label.at(x.arcs[1]), label.at(x.arcs[2]),
                      label.at(x.arcs[3]), x.sign});
  }
  std::sort(tuples.begin(), tuples.end());
  std::ostringstream os;
  for (const auto& t : tuples)
    os << (t[4] > 0 ? '+' : '-') << t[0] << '.' << t[1] << '.' << t[2] << '.' << t[3] << ';';
  return os.str();
}

}  // namespace

std::string canonical_encoding(const LinkDiagram& d) {
  std::vector<std::string> codes;
  for (const auto& piece_ids : pieces(d)) {
    std::set<CrossingId> piece(piece_ids.begin(), piece_ids.end());
    std::string best;
    bool first = true;
    for (CrossingId c : piece) {
      for (int s : {0, 1, 2, 3}) {
        const ArcId a = d.crossing(c).arcs[s];
        if (d.head(a) != ArcEnd{c, s}) continue;  // each arc once
        std::string code = encode_piece_from(d, a, piece);
        if (first || code < best) {
          best = std::move(code);
          first = false;
        }
      }
    }
    codes.push_back(std::move(best));
  }
  std::sort(codes.begin(), codes.end());
  std::ostringstream os;
  os << "k" << d.component_count() << "|u" << d.unknots().size();
  for (const auto& c : codes) os << '|' << c;
  return os.str();
}

}  // namespace sato4
