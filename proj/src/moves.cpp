#include "sato4/moves.hpp"

#include <algorithm>
#include <set>

namespace sato4 {

namespace {

bool is_over_slot(int s) { return s == 1 || s == 3; }

LinkDiagram checked(LinkDiagram d, const char* move) {
  if (!is_planar(d)) throw MoveError(std::string(move) + " produced a non-planar diagram");
  return d;
}

}  // namespace

LinkDiagram r1_add(const LinkDiagram& d, ArcId x, int sign, bool under_first) {
  if (sign != 1 && sign != -1) throw MoveError("r1_add: sign must be +1 or -1");
  if (!d.has_arc(x)) throw MoveError("r1_add: unknown arc " + std::to_string(x));
  const ArcId loop = d.max_arc_id() + 1;
  const bool closed = d.is_unknot_arc(x);
  const ArcId after = closed ? x : d.max_arc_id() + 2;
  const CrossingId id = d.max_crossing_id() + 1;

  std::vector<Crossing> xs = d.crossings();
  if (!closed) {
    const ArcEnd h = d.head(x);
    for (Crossing& c : xs)
      if (c.id == h.crossing) c.arcs[h.slot] = after;
  }
  // x enters the kink, leaves as `loop`, re-enters on `loop`, leaves as `after`.
  xs.push_back(under_first ? make_crossing(id, x, loop, loop, after, sign)
                           : make_crossing(id, loop, after, x, loop, sign));
  std::vector<ArcId> unknots;
  for (ArcId u : d.unknots())
    if (u != x) unknots.push_back(u);
  return checked(LinkDiagram(std::move(xs), std::move(unknots)), "r1_add");
}

LinkDiagram r1_remove(const LinkDiagram& d, CrossingId c) {
  const Crossing& x = d.crossing(c);
  for (int s = 0; s < 4; ++s) {
    if (d.opposite({c, s}) == ArcEnd{c, (s + 3) % 4}) {
      std::map<CrossingId, std::array<Passage, 2>> rm;
      rm[c] = through_passages(x);
      return splice(d, rm).diagram;
    }
  }
  throw MoveError("r1_remove: crossing " + std::to_string(c) + " bounds no monogon");
}

std::vector<SharedFace> shared_faces(const LinkDiagram& d, const std::vector<Face>& fs, ArcId a,
                                     ArcId b) {
  std::vector<SharedFace> out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const ArcEnd* da = nullptr;
    const ArcEnd* db = nullptr;
    for (const ArcEnd& e : fs[i].darts) {
      const ArcId arc = d.arc_at(e);
      if (arc == a && !da) da = &e;
      if (arc == b && !db) db = &e;
    }
    if (da && db) out.push_back({i, *da, *db});
  }
  return out;
}

LinkDiagram r2_add_at(const LinkDiagram& d, ArcEnd over_dart, ArcEnd under_dart) {
  const ArcId p = d.arc_at(over_dart);
  const ArcId q = d.arc_at(under_dart);
  if (p == q) throw MoveError("r2_add: over and under arcs coincide");

  // Traversal with the face on the right; f = +1 when it follows the arc.
  const int fp = d.crossing(over_dart.crossing).enters(over_dart.slot) ? -1 : 1;
  const int fq = d.crossing(under_dart.crossing).enters(under_dart.slot) ? -1 : 1;
  const ArcEnd p_far = d.opposite(over_dart);
  const ArcEnd q_far = d.opposite(under_dart);

  const ArcId base = d.max_arc_id();
  const CrossingId x1 = d.max_crossing_id() + 1;
  const CrossingId x2 = x1 + 1;

  // Pieces of p along the traversal: p1 (near dart), pm, p2 (far end).
  const ArcId pm = base + 1;
  const ArcId p1 = fp > 0 ? p : base + 2;
  const ArcId p2 = fp > 0 ? base + 2 : p;
  // Along q's traversal the finger is met in the order x2, x1.
  const ArcId qm = base + 3;
  const ArcId q1 = fq > 0 ? q : base + 4;
  const ArcId q2 = fq > 0 ? base + 4 : q;

  struct Strand {
    ArcId in, out;
  };
  const Strand over1 = fp > 0 ? Strand{p1, pm} : Strand{pm, p1};
  const Strand over2 = fp > 0 ? Strand{pm, p2} : Strand{p2, pm};
  const Strand under2 = fq > 0 ? Strand{q1, qm} : Strand{qm, q1};
  const Strand under1 = fq > 0 ? Strand{qm, q2} : Strand{q2, qm};
  const int s1 = -fp * fq;
  const int s2 = fp * fq;

  std::vector<Crossing> xs = d.crossings();
  for (Crossing& c : xs) {
    if (c.id == over_dart.crossing) c.arcs[over_dart.slot] = p1;
    if (c.id == p_far.crossing) c.arcs[p_far.slot] = p2;
    if (c.id == under_dart.crossing) c.arcs[under_dart.slot] = q1;
    if (c.id == q_far.crossing) c.arcs[q_far.slot] = q2;
  }
  xs.push_back(make_crossing(x1, under1.in, under1.out, over1.in, over1.out, s1));
  xs.push_back(make_crossing(x2, under2.in, under2.out, over2.in, over2.out, s2));
  return checked(LinkDiagram(std::move(xs), d.unknots()), "r2_add");
}

LinkDiagram r2_add(const LinkDiagram& d, ArcId over, ArcId under, int face_choice) {
  if (!d.has_arc(over) || !d.has_arc(under)) throw MoveError("r2_add: unknown arc");
  if (d.is_unknot_arc(over) || d.is_unknot_arc(under))
    throw MoveError("r2_add: arcs must end at crossings (add a kink first)");
  const auto fs = faces(d);
  const auto shared = shared_faces(d, fs, over, under);
  if (face_choice < 0 || static_cast<std::size_t>(face_choice) >= shared.size())
    throw MoveError("r2_add: arcs " + std::to_string(over) + " and " + std::to_string(under) +
                    " share no face #" + std::to_string(face_choice));
  const SharedFace& sf = shared[face_choice];
  return r2_add_at(d, sf.dart_a, sf.dart_b);
}

LinkDiagram r2_remove(const LinkDiagram& d, CrossingId a, CrossingId b) {
  if (a == b) throw MoveError("r2_remove: needs two distinct crossings");
  const Crossing& xa = d.crossing(a);
  const Crossing& xb = d.crossing(b);
  for (int s = 0; s < 4; ++s) {
    const ArcEnd far = d.opposite({a, s});
    if (far.crossing != b) continue;
    const ArcEnd back = d.opposite({b, (far.slot + 1) % 4});
    if (back != ArcEnd{a, (s + 3) % 4}) continue;
    // Bigon edges: {a,s}-{b,far.slot} and {b,far.slot+1}-{a,s-1}.
    const bool e1_over = is_over_slot(s) && is_over_slot(far.slot);
    const bool e1_under = !is_over_slot(s) && !is_over_slot(far.slot);
    const bool e2_over = is_over_slot((far.slot + 1) % 4) && is_over_slot(back.slot);
    const bool e2_under = !is_over_slot((far.slot + 1) % 4) && !is_over_slot(back.slot);
    if ((e1_over && e2_under) || (e1_under && e2_over)) {
      std::map<CrossingId, std::array<Passage, 2>> rm;
      rm[a] = through_passages(xa);
      rm[b] = through_passages(xb);
      return splice(d, rm).diagram;
    }
  }
  throw MoveError("r2_remove: crossings " + std::to_string(a) + ", " + std::to_string(b) +
                  " bound no removable bigon");
}

LinkDiagram r3(const LinkDiagram& d, CrossingId a, CrossingId b, CrossingId c) {
  const std::set<CrossingId> ids{a, b, c};
  if (ids.size() != 3) throw MoveError("r3: needs three distinct crossings");
  for (CrossingId id : ids) (void)d.crossing(id);

  const Face* tri = nullptr;
  const auto fs = faces(d);
  for (const Face& f : fs) {
    if (f.darts.size() != 3) continue;
    std::set<CrossingId> at;
    for (const ArcEnd& e : f.darts) at.insert(e.crossing);
    if (at == ids) {
      tri = &f;
      break;
    }
  }
  if (!tri) throw MoveError("r3: crossings bound no triangle face");

  struct Strand {
    ArcId entry, middle, exit;
    CrossingId first, second;
    bool over_first, over_second;
  };
  std::vector<Strand> strands;
  for (const ArcEnd& e : tri->darts) {
    const ArcId mid = d.arc_at(e);
    const ArcEnd t = d.tail(mid);
    const ArcEnd h = d.head(mid);
    if (!ids.count(t.crossing) || !ids.count(h.crossing) || t.crossing == h.crossing)
      throw MoveError("r3: degenerate triangle");
    const Crossing& xt = d.crossing(t.crossing);
    const Crossing& xh = d.crossing(h.crossing);
    const int in_slot = t.slot == 2 ? 0 : xt.over_in();
    strands.push_back({xt.arcs[in_slot], mid, xh.arcs[xh.exit_of(h.slot)], t.crossing,
                       h.crossing, t.slot != 2, h.slot != 0});
  }

  // Each strand must be over at both, under at both, or mixed, with one of
  // each kind: a cyclic over-relation admits no slide.
  int tops = 0, bottoms = 0;
  for (const Strand& s : strands) {
    tops += s.over_first && s.over_second;
    bottoms += !s.over_first && !s.over_second;
  }
  if (tops != 1 || bottoms != 1) throw MoveError("r3: cyclic over/under pattern");

  struct Pass {
    ArcId in = 0, out = 0;
    bool over = false;
    bool set = false;
  };
  std::map<CrossingId, std::array<Pass, 2>> passes;
  auto put = [&](CrossingId x, Pass p) {
    auto& slots = passes[x];
    (slots[0].set ? slots[1] : slots[0]) = p;
  };
  for (const Strand& s : strands) {
    // Order along each strand reverses: second crossing first.
    put(s.second, {s.entry, s.middle, s.over_second, true});
    put(s.first, {s.middle, s.exit, s.over_first, true});
  }

  std::vector<Crossing> xs;
  for (const Crossing& x : d.crossings()) {
    if (!ids.count(x.id)) {
      xs.push_back(x);
      continue;
    }
    const auto& pp = passes.at(x.id);
    if (!pp[0].set || !pp[1].set || pp[0].over == pp[1].over)
      throw MoveError("r3: inconsistent strands at crossing " + std::to_string(x.id));
    const Pass& o = pp[0].over ? pp[0] : pp[1];
    const Pass& u = pp[0].over ? pp[1] : pp[0];
    xs.push_back(make_crossing(x.id, u.in, u.out, o.in, o.out, x.sign));
  }
  return checked(LinkDiagram(std::move(xs), d.unknots()), "r3");
}

LinkDiagram self_crossing_change(const LinkDiagram& d, CrossingId c) {
  if (!d.is_self(c))
    throw MoveError("crossing " + std::to_string(c) +
                    " joins two components; changing it would make the discs intersect");
  return switch_crossing(d, c);
}

}  // namespace sato4
