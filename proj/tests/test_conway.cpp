#include <doctest.h>

#include <random>
#include <thread>

#include "fixtures.hpp"
#include "sato4/braid.hpp"
#include "sato4/conway.hpp"

using namespace sato4;

TEST_CASE("polynomial arithmetic and printing") {
  const ConwayPoly p{1, 0, 1};
  CHECK(p.to_list() == "[1, 0, 1]");
  CHECK(p.to_string() == "z^2 + 1");
  CHECK((p - p).is_zero());
  CHECK(ConwayPoly::z().times_z() == ConwayPoly{0, 0, 1});
  CHECK(ConwayPoly{}.to_list() == "[]");
  CHECK(coefficient(ConwayPoly{0, 0, 0, -2}, 3) == -2);
  CHECK(coefficient(p, 7) == 0);
  CHECK_THROWS_AS(coefficient(p, -1), Error);
}

TEST_CASE("skein values of small links") {
  CHECK(conway(parse_pd("PD[U[1]]")) == ConwayPoly::one());
  CHECK(conway(parse_pd(fx::kink)) == ConwayPoly::one());
  CHECK(conway(parse_pd(fx::unlink)).is_zero());
  CHECK(conway(parse_pd(fx::kinked_unlink)).is_zero());
  CHECK(conway(parse_pd(fx::hopf)) == ConwayPoly{0, 1});
  CHECK(conway(mirror(parse_pd(fx::hopf))) == ConwayPoly{0, -1});
  CHECK(conway(parse_pd(fx::trefoil)) == ConwayPoly{1, 0, 1});
  CHECK(conway(parse_pd(fx::figure_eight)) == ConwayPoly{1, 0, -1});
  CHECK(conway(parse_pd(fx::whitehead)) == ConwayPoly{0, 0, 0, 1});
  CHECK(conway(mirror(parse_pd(fx::whitehead))) == ConwayPoly{0, 0, 0, -1});
}

TEST_CASE("z^1 coefficient of a two-component link is its linking number") {
  std::mt19937 rng(3);
  int seen = 0;
  for (int t = 0; t < 200 && seen < 40; ++t) {
    BraidWord b{3, {}};
    // An odd word length gives a transposition, hence two components.
    for (int i = 0; i < 7; ++i) b.letters.push_back((rng() % 2 ? 1 : -1) * (1 + int(rng() % 2)));
    const LinkDiagram d = braid_closure(b);
    if (d.component_count() != 2) continue;
    ++seen;
    CHECK(conway(d).coefficient(1) == linking_number(d, 1, 2));
  }
  CHECK(seen > 0);
}

TEST_CASE("Seifert matrix examples") {
  CHECK(conway_from_seifert(SeifertMatrix{{3}}) == ConwayPoly{0, 3});
  CHECK(conway_from_seifert(SeifertMatrix{{-2}}) == ConwayPoly{0, -2});
  CHECK(conway_from_seifert(SeifertMatrix(0)) == ConwayPoly::one());
  CHECK(determinant(SeifertMatrix{{2, 1}, {1, 1}}) == 1);
  CHECK(determinant(SeifertMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 5}}) == -5);

  const SeifertMatrix v = seifert_matrix(parse_pd(fx::trefoil));
  CHECK(v.size() == 2);
  CHECK(conway_from_seifert(v) == ConwayPoly{1, 0, 1});
  const SeifertMatrix h = seifert_matrix(parse_pd(fx::hopf));
  CHECK(h.size() == 1);
  CHECK(conway_from_seifert(h) == ConwayPoly{0, 1});
  CHECK_THROWS_AS(seifert_matrix(parse_pd(fx::unlink)), DiagramError);
}

TEST_CASE("any square integer matrix gives a polynomial in z") {
  // det(tV - V^T) = (-t)^n det(t^{-1}V - V^T), so the Laurent form is always
  // (anti)symmetric in the parity of n and the substitution closes.
  std::mt19937 rng(9);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng() % 5;
    SeifertMatrix v(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v(i, j) = static_cast<int>(rng() % 5) - 2;
    CHECK_NOTHROW(conway_from_seifert(v));
  }
}

TEST_CASE("skein and Seifert routes agree on random braid closures") {
  std::mt19937 rng(101);
  for (int t = 0; t < 60; ++t) {
    const int n = 2 + static_cast<int>(rng() % 3);
    BraidWord b{n, {}};
    for (int i = 1; i < n; ++i) b.letters.push_back((rng() % 2 ? 1 : -1) * i);
    const int extra = static_cast<int>(rng() % 6);
    for (int i = 0; i < extra; ++i) {
      const int g = 1 + static_cast<int>(rng() % (n - 1));
      b.letters.push_back(rng() % 2 ? g : -g);
    }
    std::shuffle(b.letters.begin(), b.letters.end(), rng);
    const LinkDiagram d = braid_closure(b);
    CHECK(conway_from_seifert(braid_seifert_matrix(b)) == conway(d));
    CHECK(conway_from_seifert(seifert_matrix(d)) == conway(d));
  }
}

TEST_CASE("Vogel moves braid a non-braided diagram") {
  const LinkDiagram w = parse_pd(fx::whitehead);
  const LinkDiagram v = vogel_braidify(w);
  CHECK(conway(v) == conway(w));
  const BraidWord b = braid_from_diagram(v);
  CHECK(conway(braid_closure(b)) == conway(w));
}

TEST_CASE("Sato-Levine oracle preconditions") {
  CHECK(sato_levine_oracle(parse_pd(fx::whitehead), 1) == 1);
  CHECK(sato_levine_oracle(parse_pd(fx::whitehead), -1) == -1);
  CHECK(sato_levine_oracle(parse_pd(fx::unlink), 1) == 0);
  CHECK_THROWS_AS(sato_levine_oracle(parse_pd(fx::hopf), 1), DiagramError);
  CHECK_THROWS_AS(sato_levine_oracle(parse_pd(fx::trefoil), 1), DiagramError);
}

TEST_CASE("shared memo under concurrent use") {
  ConwayMemo memo;
  const LinkDiagram w = parse_pd(fx::whitehead);
  std::vector<ConwayPoly> got(8);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < got.size(); ++i)
    threads.emplace_back([&, i] { got[i] = conway(i % 2 ? w : mirror(w), memo); });
  for (auto& t : threads) t.join();
  for (std::size_t i = 0; i < got.size(); ++i)
    CHECK(got[i] == (i % 2 ? ConwayPoly{0, 0, 0, 1} : ConwayPoly{0, 0, 0, -1}));
  CHECK(memo.size() > 0);
}
