#include "sato4/conway.hpp"

#include <mutex>
#include <set>

namespace sato4 {

std::optional<ConwayPoly> ConwayMemo::find(const std::string& key) const {
  std::shared_lock lock(mutex_);
  auto it = table_.find(key);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void ConwayMemo::insert(const std::string& key, const ConwayPoly& value) {
  std::unique_lock lock(mutex_);
  table_.emplace(key, value);
}

std::size_t ConwayMemo::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

void ConwayMemo::clear() {
  std::unique_lock lock(mutex_);
  table_.clear();
}

ConwayMemo& shared_conway_memo() {
  static ConwayMemo memo;
  return memo;
}

namespace {

// First crossing met as an under-pass when walking the components in index
// order, each from its least arc. None means the diagram is descending.
std::optional<CrossingId> first_ascending(const LinkDiagram& d) {
  std::set<CrossingId> seen;
  for (int k = 1; k <= d.component_count(); ++k) {
    for (ArcId a : d.component_arcs(k)) {
      if (d.is_unknot_arc(a)) continue;
      const ArcEnd h = d.head(a);
      if (!seen.insert(h.crossing).second) continue;
      if (h.slot == 0) return h.crossing;
    }
  }
  return std::nullopt;
}

}  // namespace

ConwayPoly conway(const LinkDiagram& d, ConwayMemo& memo) {
  if (d.crossing_count() == 0) return d.component_count() == 1 ? ConwayPoly::one() : ConwayPoly{};
  const std::string key = canonical_encoding(d);
  if (auto hit = memo.find(key)) return *hit;

  ConwayPoly result;
  if (auto c = first_ascending(d)) {
    const ConwayPoly switched = conway(switch_crossing(d, *c), memo);
    const ConwayPoly smoothed = conway(smooth(d, *c), memo).times_z();
    // nabla(L+) - nabla(L-) = z nabla(L0)
    result = d.crossing(*c).sign > 0 ? switched + smoothed : switched - smoothed;
  } else {
    result = d.component_count() == 1 ? ConwayPoly::one() : ConwayPoly{};
  }
  memo.insert(key, result);
  return result;
}

ConwayPoly conway(const LinkDiagram& d) { return conway(d, shared_conway_memo()); }

std::vector<std::vector<ArcId>> seifert_circles(const LinkDiagram& d) {
  std::vector<std::vector<ArcId>> out;
  std::set<ArcId> seen;
  for (ArcId a : d.arcs()) {
    if (seen.count(a)) continue;
    std::vector<ArcId> circle;
    ArcId cur = a;
    do {
      seen.insert(cur);
      circle.push_back(cur);
      if (d.is_unknot_arc(cur)) break;
      const ArcEnd h = d.head(cur);
      const Crossing& x = d.crossing(h.crossing);
      // The smoothing joins each incoming strand to the other strand's exit.
      cur = x.arcs[h.slot == 0 ? x.over_out() : 2];
    } while (cur != a);
    out.push_back(std::move(circle));
  }
  return out;
}

BigInt sato_levine_oracle(const LinkDiagram& d, int s_cal) {
  if (d.component_count() != 2)
    throw DiagramError("Sato-Levine oracle needs exactly 2 components, got " +
                       std::to_string(d.component_count()));
  if (linking_number(d, 1, 2) != 0) throw DiagramError("Sato-Levine oracle needs lk = 0");
  return s_cal * conway(d).coefficient(3);
}

BigInt coefficient(const ConwayPoly& p, int k) {
  if (k < 0) throw Error("coefficient index must be non-negative");
  return p.coefficient(k);
}

}  // namespace sato4
