#include <doctest.h>

#include "sato4/bundle.hpp"

using namespace sato4;

namespace {

SelfIntersectionRecord rec(int eps, int w) {
  SelfIntersectionRecord r;
  r.component = 1;
  r.eps = eps;
  r.lambda = w;
  r.lambda_other = -w;
  r.w = w;
  return r;
}

MovieResult movie(std::vector<SelfIntersectionRecord> records, std::string link = "L") {
  MovieResult m;
  m.initial_encoding = std::move(link);
  m.records = std::move(records);
  return m;
}

}  // namespace

TEST_CASE("V4 multiplication") {
  const auto e = V4Element::e(), x1 = V4Element::x1(), x2 = V4Element::x2(), x3 = V4Element::x3();
  CHECK(v4_multiply(x1, x1) == e);
  CHECK(v4_multiply(x1, x2) == x3);
  CHECK(v4_multiply(x2, x3) == x1);
  CHECK(v4_multiply(x3, x1) == x2);
  for (const auto& g : V4Element::all()) {
    CHECK(v4_multiply(e, g) == g);
    CHECK(v4_multiply(g, g) == e);
    int det = 1;
    for (int i = 0; i < 3; ++i) det *= g.entry(i);
    CHECK(det == 1);
    for (const auto& h : V4Element::all()) CHECK(v4_multiply(g, h) == v4_multiply(h, g));
  }
  CHECK(x2.name() == "x2");
}

TEST_CASE("torus cohomology ring") {
  const TorusCohomology a(TorusCohomology::abar), b(TorusCohomology::bbar),
      one(TorusCohomology::one);
  CHECK(a.cup(a).bits() == 0);
  CHECK(b.cup(b).bits() == 0);
  CHECK(a.cup(b).evaluate() == 1);
  CHECK(b.cup(a).evaluate() == 1);
  CHECK(one.cup(a) == a);
  CHECK((a + b).cup(a + b).bits() == 0);
}

TEST_CASE("w2 of flat V4 bundles over the torus") {
  using V = V4Element;
  CHECK(torus_w2_cup({V::x1(), V::x2()}) == 1);
  CHECK(torus_w2_cup({V::x1(), V::x1()}) == 0);
  CHECK(torus_w2_cup({V::e(), V::x3()}) == 0);
  CHECK(torus_w2_surjectivity({V::x1(), V::x2()}) == 1);
  CHECK(torus_w2_surjectivity({V::x2(), V::x2()}) == 0);
  CHECK(torus_w2_surjectivity({V::e(), V::e()}) == 0);
  // w1 of the first summand for eta(a) = x1 is 0, since x1 fixes the first axis.
  CHECK(line_bundle_w1({V::x1(), V::x2()}, 0).bits() == TorusCohomology::bbar);
}

TEST_CASE("Pontryagin square examples") {
  CHECK(pontryagin_square({1}, {1}).value() == 1);
  CHECK(pontryagin_square({1, 1}, {1, -1}).value() == 0);
  CHECK(pontryagin_square({1, 1, 1}, {-1, -1, -1}).value() == 1);
  CHECK(pontryagin_square({}, {}).value() == 0);
  CHECK_THROWS_AS(pontryagin_square({1, 0}, {1}), Error);
  CHECK(Mod4Class(-3).value() == 1);
  CHECK((Mod4Class(3) + Mod4Class(2)).value() == 1);
}

TEST_CASE("Dold-Whitney realizability") {
  CHECK(dold_whitney_realizable(Mod4Class(0), {1, 1}, {1, -1}));
  CHECK(dold_whitney_realizable(Mod4Class(1), {1}, {1}));
  CHECK_FALSE(dold_whitney_realizable(Mod4Class(0), {1}, {1}));
  CHECK_THROWS_AS(dold_whitney_realizable(Mod4Class(0), {1}, {}), Error);
}

TEST_CASE("gluing movies") {
  SUBCASE("self-gluing is symmetric") {
    const MovieResult m = movie({rec(1, 1), rec(-1, 0), rec(1, 1)});
    const XLambdaModel x = glue_movies(m, m, 1);
    CHECK(x.n_plus() == x.n_minus());
    CHECK(x.b2() == 6);
    CHECK(x.b2_plus() == x.n_plus());
    CHECK(x.b2_minus() == x.n_minus());
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(x.records[i].w == x.records[i + 3].w);
      CHECK(x.records[i].d == -x.records[i + 3].d);
    }
    CHECK(x.p1() == 0);
    CHECK(x.h1_rank() == 2);
  }
  SUBCASE("empty movies") {
    CHECK(glue_movies(movie({}), movie({}), 1).b2() == 0);
  }
  SUBCASE("one plus three records") {
    const XLambdaModel x = glue_movies(movie({rec(-1, 1)}),
                                       movie({rec(1, 0), rec(-1, 1), rec(-1, 0)}), 1);
    CHECK(x.b2() == 4);
    CHECK(x.records[0].d == -1);
    CHECK(x.records[1].d == -1);
    CHECK(x.records[2].d == 1);
  }
  SUBCASE("different links") {
    CHECK_THROWS_AS(glue_movies(movie({}, "A"), movie({}, "B"), 1), Error);
  }
  SUBCASE("JSON") {
    const XLambdaModel x = glue_movies(movie({rec(1, 1)}), movie({}), 1);
    const nlohmann::json j = x;
    CHECK(j["n_plus"] == 1);
    CHECK(j["n_minus"] == 0);
    CHECK(j["p1"] == 0);
    CHECK(j.get<XLambdaModel>().records == x.records);
  }
}

TEST_CASE("verify_gluing") {
  const MovieResult a = movie({rec(-1, 1)});
  const MovieResult b = movie({rec(1, 0), rec(-1, 1), rec(-1, 0)});
  SUBCASE("identical movies") {
    const GluingReport r = verify_gluing(a, a, 1);
    CHECK(r.pontryagin.value() == 0);
    CHECK(r.delta_phi.value() == 0);
    CHECK(r.ok());
  }
  SUBCASE("two scripts of one link") {
    const GluingReport r = verify_gluing(a, b, -1);
    CHECK(r.ok());
  }
  SUBCASE("a flipped w is caught") {
    MovieResult bad = b;
    bad.records[0].w = 1;
    const GluingReport r = verify_gluing(a, bad, 1);
    CHECK(r.pontryagin.value() != 0);
    CHECK_FALSE(r.square_vanishes);
    CHECK(r.square_matches_delta);
    CHECK_FALSE(r.realizable);
    CHECK_FALSE(r.ok());
  }
  SUBCASE("a flipped eps is caught") {
    MovieResult bad = b;
    bad.records[1].eps = 1;
    const GluingReport r = verify_gluing(a, bad, 1);
    CHECK(r.pontryagin.value() == 2);
    CHECK_FALSE(r.square_vanishes);
  }
}
