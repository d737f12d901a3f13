#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "sato4/conway.hpp"
#include "sato4/homotopy.hpp"
#include "sato4/moves.hpp"

using namespace sato4;

TEST_CASE("R1 removal of a kink") {
  const LinkDiagram d = r1_remove(parse_pd(fx::kink), 1);
  CHECK(d.crossing_count() == 0);
  CHECK(d.component_count() == 1);
  CHECK_THROWS_AS(r1_remove(parse_pd(fx::trefoil), 1), MoveError);
}

TEST_CASE("R1 add then remove restores the diagram") {
  const LinkDiagram t = parse_pd(fx::trefoil);
  for (ArcId a : t.arcs()) {
    for (int sign : {1, -1}) {
      for (bool under_first : {true, false}) {
        const LinkDiagram k = r1_add(t, a, sign, under_first);
        CHECK(k.crossing_count() == 4);
        CHECK(k.crossing(t.max_crossing_id() + 1).sign == sign);
        CHECK(canonical_encoding(r1_remove(k, t.max_crossing_id() + 1)) == canonical_encoding(t));
      }
    }
  }
  // Kinks on a crossingless circle.
  const LinkDiagram u = r1_add(parse_pd("PD[U[1]]"), 1, -1, true);
  CHECK(u.crossing_count() == 1);
  CHECK(u.component_count() == 1);
}

TEST_CASE("R2 add then remove restores the diagram") {
  const LinkDiagram w = parse_pd(fx::whitehead);
  int tried = 0;
  for (ArcId a : w.arcs()) {
    for (ArcId b : w.arcs()) {
      if (a == b) continue;
      LinkDiagram r;
      try {
        r = r2_add(w, a, b);
      } catch (const MoveError&) {
        continue;
      }
      ++tried;
      CHECK(r.crossing_count() == w.crossing_count() + 2);
      CHECK(linking_number(r, 1, 2) == 0);
      const CrossingId x1 = w.max_crossing_id() + 1;
      CHECK(canonical_encoding(r2_remove(r, x1, x1 + 1)) == canonical_encoding(w));
    }
  }
  CHECK(tried > 0);
}

TEST_CASE("R2 removal needs a clasp-free bigon") {
  // The Hopf bigons are clasps: one strand is over at one end and under at the other.
  CHECK_THROWS_AS(r2_remove(parse_pd(fx::hopf), 1, 2), MoveError);
}

TEST_CASE("R3 keeps the link and is undone by a second R3") {
  // The Whitehead fixture has a triangle face on crossings 1, 2, 3 after the clasp change.
  const LinkDiagram w = self_crossing_change(parse_pd(fx::whitehead), 2);
  const LinkDiagram r = r3(w, 1, 2, 3);
  CHECK(r.crossing_count() == w.crossing_count());
  CHECK(conway(r) == conway(w));
  CHECK(canonical_encoding(r3(r, 1, 2, 3)) == canonical_encoding(w));
  CHECK_THROWS_AS(r3(parse_pd(fx::figure_eight), 1, 2, 3), MoveError);
}

TEST_CASE("self-crossing change rejects inter-component crossings") {
  CHECK_THROWS_AS(self_crossing_change(parse_pd(fx::hopf), 1), MoveError);
  CHECK_THROWS_AS(self_crossing_change(parse_pd(fx::hopf), 2), MoveError);
  const LinkDiagram t = self_crossing_change(parse_pd(fx::trefoil), 1);
  CHECK(t.crossing(1).sign == -parse_pd(fx::trefoil).crossing(1).sign);
}

TEST_CASE("random R-moves preserve the Conway polynomial and lk") {
  std::mt19937 rng(17);
  const LinkDiagram w = parse_pd(fx::whitehead);
  const ConwayPoly expect = conway(w);
  for (int t = 0; t < 25; ++t) {
    LinkDiagram e = w;
    for (int s = 0; s < 4; ++s) {
      const auto arcs = e.arcs();
      const ArcId a = arcs[rng() % arcs.size()];
      const ArcId b = arcs[rng() % arcs.size()];
      try {
        e = (rng() % 2) ? r1_add(e, a, (rng() % 2) ? 1 : -1, rng() % 2)
                        : r2_add(e, a, b, static_cast<int>(rng() % 2));
      } catch (const MoveError&) {
      }
    }
    CHECK(linking_number(e, 1, 2) == 0);
    CHECK(conway(e) == expect);
  }
}
