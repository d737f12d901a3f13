#include "sato4/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "sato4/moves.hpp"

namespace sato4 {

LinkDiagram braid_closure(const BraidWord& b) {
  if (b.strands < 1) throw DiagramError("a braid needs at least one strand");
  ArcId next = 1;
  std::vector<ArcId> init(b.strands + 1), cur(b.strands + 1);
  for (int p = 1; p <= b.strands; ++p) init[p] = cur[p] = next++;

  std::vector<Crossing> xs;
  CrossingId id = 1;
  for (int letter : b.letters) {
    const int i = std::abs(letter);
    if (letter == 0 || i >= b.strands) throw DiagramError("braid letter out of range");
    const ArcId left = cur[i], right = cur[i + 1];
    const ArcId new_left = next++, new_right = next++;
    // The strand from position i moves to i+1; it is over for sigma_i.
    xs.push_back(letter > 0 ? make_crossing(id++, right, new_left, left, new_right, 1)
                            : make_crossing(id++, left, new_right, right, new_left, -1));
    cur[i] = new_left;
    cur[i + 1] = new_right;
  }
  std::map<ArcId, ArcId> close;
  std::vector<ArcId> unknots;
  for (int p = 1; p <= b.strands; ++p) {
    if (cur[p] == init[p])
      unknots.push_back(init[p]);
    else
      close[cur[p]] = init[p];
  }
  for (Crossing& x : xs)
    for (ArcId& a : x.arcs)
      if (auto it = close.find(a); it != close.end()) a = it->second;
  return LinkDiagram(std::move(xs), std::move(unknots));
}

namespace {

std::map<ArcId, int> circle_index(const std::vector<std::vector<ArcId>>& circles) {
  std::map<ArcId, int> out;
  for (std::size_t i = 0; i < circles.size(); ++i)
    for (ArcId a : circles[i]) out[a] = static_cast<int>(i);
  return out;
}

// A face edge pair seeing two different Seifert circles turning the same way.
std::optional<std::pair<ArcEnd, ArcEnd>> find_defect(const LinkDiagram& d) {
  const auto circle = circle_index(seifert_circles(d));
  for (const Face& f : faces(d)) {
    for (std::size_t i = 0; i < f.darts.size(); ++i) {
      for (std::size_t j = i + 1; j < f.darts.size(); ++j) {
        const ArcEnd a = f.darts[i], b = f.darts[j];
        const bool fa = !d.crossing(a.crossing).enters(a.slot);
        const bool fb = !d.crossing(b.crossing).enters(b.slot);
        if (fa == fb && circle.at(d.arc_at(a)) != circle.at(d.arc_at(b))) return {{a, b}};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

LinkDiagram vogel_braidify(const LinkDiagram& d) {
  LinkDiagram cur = d;
  // Each move lowers the number of incoherent circle pairs; the bound only
  // guards against a broken invariant.
  const std::size_t limit = 64 + 16 * d.crossing_count() * d.crossing_count();
  for (std::size_t step = 0; step < limit; ++step) {
    auto defect = find_defect(cur);
    if (!defect) return cur;
    cur = r2_add_at(cur, defect->first, defect->second);
  }
  throw DiagramError("Vogel braidification did not terminate");
}

BraidWord braid_from_diagram(const LinkDiagram& d) {
  if (d.crossing_count() == 0) {
    if (d.component_count() != 1) throw DiagramError("diagram is not connected");
    return BraidWord{1, {}};
  }
  if (!d.unknots().empty() || pieces(d).size() != 1)
    throw DiagramError("diagram is not connected");

  const auto circles = seifert_circles(d);
  const auto circle = circle_index(circles);
  const int n = static_cast<int>(circles.size());

  // Seifert graph must be a path C_1 - ... - C_n.
  std::vector<std::set<int>> nbr(n);
  std::map<CrossingId, std::pair<int, int>> ends;
  for (const Crossing& x : d.crossings()) {
    const int a = circle.at(x.arcs[0]);
    const int b = circle.at(x.arcs[x.over_in()]);
    if (a == b) throw DiagramError("crossing joins a Seifert circle to itself");
    nbr[a].insert(b);
    nbr[b].insert(a);
    ends[x.id] = {a, b};
  }
  int start = -1;
  for (int i = 0; i < n; ++i) {
    if (nbr[i].size() > 2) throw DiagramError("diagram is not braided");
    if (nbr[i].size() == 1 && start < 0) start = i;
  }
  if (start < 0) throw DiagramError("diagram is not braided");
  std::vector<int> pos(n, -1);
  std::vector<int> order;
  for (int cur = start, prev = -1; cur >= 0;) {
    pos[cur] = static_cast<int>(order.size());
    order.push_back(cur);
    int nxt = -1;
    for (int m : nbr[cur])
      if (m != prev && pos[m] < 0) nxt = m;
    prev = cur;
    cur = nxt;
  }
  if (static_cast<int>(order.size()) != n) throw DiagramError("diagram is not braided");

  auto column = [&](CrossingId c) {
    auto [a, b] = ends.at(c);
    return std::min(pos[a], pos[b]) + 1;
  };
  // Cyclic order of crossings met along circle k (by path position).
  auto along = [&](int k) {
    std::vector<CrossingId> seq;
    for (ArcId a : circles[order[k]]) seq.push_back(d.head(a).crossing);
    return seq;
  };

  std::vector<CrossingId> global = along(0);
  for (int k = 1; k + 1 < n; ++k) {
    std::vector<CrossingId> seq = along(k);
    auto first_lower = std::find_if(seq.begin(), seq.end(),
                                     [&](CrossingId c) { return column(c) == k; });
    std::rotate(seq.begin(), first_lower, seq.end());
    std::map<CrossingId, std::vector<CrossingId>> followers;
    std::vector<CrossingId> lower_order;
    CrossingId last = 0;
    for (CrossingId c : seq) {
      if (column(c) == k) {
        last = c;
        lower_order.push_back(c);
      } else {
        followers[last].push_back(c);
      }
    }
    std::vector<CrossingId> merged;
    std::vector<CrossingId> seen_lower;
    for (CrossingId c : global) {
      merged.push_back(c);
      if (column(c) != k) continue;
      seen_lower.push_back(c);
      for (CrossingId f : followers[c]) merged.push_back(f);
    }
    // Column k must appear in the same cyclic order along both circles.
    auto it = std::find(seen_lower.begin(), seen_lower.end(), lower_order.front());
    std::rotate(seen_lower.begin(), it, seen_lower.end());
    if (seen_lower != lower_order) throw DiagramError("diagram is not braided");
    global = std::move(merged);
  }

  BraidWord b{n, {}};
  for (CrossingId c : global) b.letters.push_back(d.crossing(c).sign * column(c));
  return b;
}

SeifertMatrix braid_seifert_matrix(const BraidWord& b) {
  struct Gen {
    int column;
    std::size_t lo, hi;  // word positions of the two bands
    int eps_lo, eps_hi;
  };
  std::vector<Gen> gens;
  for (int i = 1; i < b.strands; ++i) {
    std::vector<std::size_t> at;
    for (std::size_t p = 0; p < b.letters.size(); ++p)
      if (std::abs(b.letters[p]) == i) at.push_back(p);
    if (at.empty()) throw DiagramError("braid closure is split; Seifert surface disconnected");
    for (std::size_t k = 0; k + 1 < at.size(); ++k)
      gens.push_back({i, at[k], at[k + 1], b.letters[at[k]] > 0 ? 1 : -1,
                      b.letters[at[k + 1]] > 0 ? 1 : -1});
  }
  // Entries are built in the mirrored convention and flipped to -V^T at the
  // end, so that det(t^{1/2}V - t^{-1/2}V^T) follows the skein normalization.
  SeifertMatrix v(gens.size());
  for (std::size_t r = 0; r < gens.size(); ++r) {
    const Gen& g = gens[r];
    v(r, r) = -(g.eps_lo + g.eps_hi) / 2;
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const Gen& h = gens[s];
      if (r == s) continue;
      if (h.column == g.column && h.lo == g.hi) {
        // h follows g through their shared band.
        v(r, s) = g.eps_hi > 0 ? 1 : 0;
        v(s, r) = g.eps_hi < 0 ? -1 : 0;
      } else if (h.column == g.column + 1) {
        if (g.lo < h.lo && h.lo < g.hi && g.hi < h.hi) {
          v(s, r) = 1;
        } else if (h.lo < g.lo && g.lo < h.hi && h.hi < g.hi) {
          v(s, r) = -1;
        }
      }
    }
  }
  SeifertMatrix out(v.size());
  for (std::size_t r = 0; r < v.size(); ++r)
    for (std::size_t s = 0; s < v.size(); ++s) out(r, s) = -v(s, r);
  return out;
}

}  // namespace sato4
