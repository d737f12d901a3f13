#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "sato4/braid.hpp"
#include "sato4/diagram.hpp"

using namespace sato4;

TEST_CASE("parse and serialize round trip") {
  for (const char* pd : {fx::hopf, fx::trefoil, fx::figure_eight, fx::whitehead, fx::kinked_unlink,
                         fx::unlink}) {
    const LinkDiagram d = parse_pd(pd);
    CHECK(parse_pd(serialize_pd(d)) == d);
  }
}

TEST_CASE("line form and comments") {
  const LinkDiagram a = parse_pd("# trefoil\nX 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3\n");
  CHECK(a == parse_pd(fx::trefoil));
}

TEST_CASE("malformed PD text is rejected") {
  CHECK_THROWS_AS(parse_pd("PD[X[1,2,3]]"), ParseError);
  CHECK_THROWS_AS(parse_pd("PD[X[1,2,3,4]"), ParseError);
  CHECK_THROWS_AS(parse_pd("PD[Y[1,2,3,4]]"), ParseError);
  // Arc 5 appears once.
  CHECK_THROWS_AS(parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[7,2,6,3]]"), Error);
}

TEST_CASE("components and linking numbers") {
  CHECK(parse_pd(fx::trefoil).component_count() == 1);
  const LinkDiagram h = parse_pd(fx::hopf);
  CHECK(h.component_count() == 2);
  CHECK(linking_number(h, 1, 2) == 1);
  CHECK(linking_number(mirror(h), 1, 2) == -1);
  const LinkDiagram w = parse_pd(fx::whitehead);
  CHECK(w.component_count() == 2);
  CHECK(linking_number(w, 1, 2) == 0);
  CHECK(parse_pd(fx::unlink).component_count() == 2);
  CHECK_THROWS_AS(linking_number(w, 1, 1), DiagramError);
}

TEST_CASE("crossing signs of the standard trefoil agree") {
  const LinkDiagram t = parse_pd(fx::trefoil);
  int sum = 0;
  for (const Crossing& x : t.crossings()) sum += x.sign;
  CHECK(std::abs(sum) == 3);
  const LinkDiagram m = mirror(t);
  int msum = 0;
  for (const Crossing& x : m.crossings()) msum += x.sign;
  CHECK(msum == -sum);
}

TEST_CASE("switch is an involution and keeps components") {
  const LinkDiagram w = parse_pd(fx::whitehead);
  for (const Crossing& x : w.crossings()) {
    const LinkDiagram s = switch_crossing(w, x.id);
    CHECK(s.crossing(x.id).sign == -x.sign);
    CHECK(s.component_count() == 2);
    CHECK(switch_crossing(s, x.id) == w);
  }
}

TEST_CASE("smoothing changes the component count by one") {
  const LinkDiagram t = parse_pd(fx::trefoil);
  for (const Crossing& x : t.crossings()) CHECK(smooth(t, x.id).component_count() == 2);
  const LinkDiagram h = parse_pd(fx::hopf);
  for (const Crossing& x : h.crossings()) CHECK(smooth(h, x.id).component_count() == 1);
}

TEST_CASE("canonical encoding ignores labels") {
  const LinkDiagram w = parse_pd(fx::whitehead);
  // Shift every arc label and reverse the crossing order.
  std::vector<Crossing> xs;
  for (auto it = w.crossings().rbegin(); it != w.crossings().rend(); ++it) {
    Crossing y = *it;
    y.id += 10;
    for (ArcId& a : y.arcs) a += 100;
    xs.push_back(y);
  }
  const LinkDiagram shifted(xs, {});
  CHECK(canonical_encoding(shifted) == canonical_encoding(w));
  CHECK(canonical_encoding(renumbered(shifted)) == canonical_encoding(w));
  CHECK(canonical_encoding(w) != canonical_encoding(mirror(w)));
  CHECK(canonical_encoding(parse_pd(fx::unlink)) != canonical_encoding(parse_pd("PD[U[1]]")));
}

TEST_CASE("faces and planarity") {
  for (const char* pd : {fx::hopf, fx::trefoil, fx::figure_eight, fx::whitehead, fx::kink}) {
    const LinkDiagram d = parse_pd(pd);
    CHECK(is_planar(d));
    CHECK(faces(d).size() == d.crossing_count() + 2);
  }
  // Same crossing data as the trefoil but with a non-planar gluing.
  CHECK_FALSE(is_planar(parse_pd("PD[X[1,4,2,5], X[3,1,4,6], X[5,2,6,3]]")));
}

TEST_CASE("braid closures") {
  const LinkDiagram t = braid_closure({2, {1, 1, 1}});
  CHECK(t.component_count() == 1);
  CHECK(t.crossing_count() == 3);
  const LinkDiagram h = braid_closure({2, {1, 1}});
  CHECK(h.component_count() == 2);
  CHECK(linking_number(h, 1, 2) == 1);
  CHECK(braid_closure({3, {1}}).unknots().size() == 1);
  CHECK_THROWS_AS(braid_closure({2, {2}}), DiagramError);
}

TEST_CASE("two-crossing Hopf code in the alternate labelling") {
  const LinkDiagram h = parse_pd("PD[X[4,1,3,2],X[2,3,1,4]]");
  CHECK(h.component_count() == 2);
  CHECK(h.crossing(1).sign == h.crossing(2).sign);
  CHECK(std::abs(linking_number(h, 1, 2)) == 1);
  CHECK(linking_number(switch_crossing(h, 1), 1, 2) == 0);
  CHECK(canonical_encoding(h) != canonical_encoding(parse_pd(fx::kink)));
  CHECK(parse_pd("PD[] U[1] U[2]").component_count() == 2);
  CHECK(smooth(parse_pd(fx::kink), 1).component_count() == 2);
}

TEST_CASE("smoothing, switching and loop properties over corpus diagrams") {
  const char* corpus[] = {fx::hopf, fx::trefoil, fx::figure_eight, fx::whitehead,
                          fx::kinked_unlink,
                          "PD[X[2,3,5,4], X[4,7,6,1], X[7,5,9,8], X[8,9,11,10], X[10,11,13,12], "
                          "X[12,15,1,6], X[15,13,3,2]]"};
  for (const char* pd : corpus) {
    const LinkDiagram d = parse_pd(pd);
    for (const Crossing& x : d.crossings()) {
      CHECK(std::abs(smooth(d, x.id).component_count() - d.component_count()) == 1);
      if (!d.is_self(x.id) || d.component_count() != 2) continue;
      CHECK(linking_number(switch_crossing(d, x.id), 1, 2) == linking_number(d, 1, 2));
      if (linking_number(d, 1, 2) != 0) continue;
      // The smoothing splits component s into two loops; their lk with the
      // other component sum to zero.
      const int other = 3 - d.under_component(x.id);
      const LinkDiagram s = smooth(d, x.id);
      int sum = 0;
      int other_new = 0;
      const ArcId probe = d.component_arcs(other).front();
      for (int k = 1; k <= 3; ++k)
        if (std::find(s.component_arcs(k).begin(), s.component_arcs(k).end(), probe) !=
            s.component_arcs(k).end())
          other_new = k;
      REQUIRE(other_new > 0);
      for (int k = 1; k <= 3; ++k)
        if (k != other_new) sum += linking_number(s, k, other_new);
      CHECK(sum == 0);
    }
  }
}
