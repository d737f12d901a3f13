#include "sato4/bundle.hpp"

#include <algorithm>

namespace sato4 {

using nlohmann::json;

std::string V4Element::name() const {
  if (*this == e()) return "e";
  if (*this == x1()) return "x1";
  if (*this == x2()) return "x2";
  return "x3";
}

V4Element v4_multiply(const V4Element& g, const V4Element& h) {
  for (const V4Element& k : V4Element::all()) {
    bool match = true;
    for (int i = 0; i < 3; ++i) match = match && k.entry(i) == g.entry(i) * h.entry(i);
    if (match) return k;
  }
  throw Error("V4 is not closed under multiplication");
}

TorusCohomology TorusCohomology::cup(const TorusCohomology& o) const {
  // Bilinear extension of 1.x = x, abar.abar = bbar.bbar = 0, abar.bbar = bbar.abar = top.
  unsigned out = 0;
  for (unsigned i = 1; i <= 8; i <<= 1) {
    if (!(bits_ & i)) continue;
    for (unsigned j = 1; j <= 8; j <<= 1) {
      if (!(o.bits_ & j)) continue;
      if (i == one) out ^= j;
      else if (j == one) out ^= i;
      else if ((i == abar && j == bbar) || (i == bbar && j == abar)) out ^= top;
    }
  }
  return TorusCohomology(out);
}

TorusCohomology line_bundle_w1(const TorusRep& rep, int i) {
  unsigned bits = 0;
  if (rep.a.entry(i) < 0) bits |= TorusCohomology::abar;
  if (rep.b.entry(i) < 0) bits |= TorusCohomology::bbar;
  return TorusCohomology(bits);
}

int torus_w2_cup(const TorusRep& rep) {
  TorusCohomology w2;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) w2 = w2 + line_bundle_w1(rep, i).cup(line_bundle_w1(rep, j));
  return w2.evaluate();
}

int torus_w2_surjectivity(const TorusRep& rep) {
  return !rep.a.is_identity() && !rep.b.is_identity() && !(rep.a == rep.b) ? 1 : 0;
}

int XLambdaModel::n_plus() const {
  return static_cast<int>(std::count_if(records.begin(), records.end(),
                                        [](const GluedRecord& r) { return r.d > 0; }));
}

int XLambdaModel::n_minus() const { return b2() - n_plus(); }

int XLambdaModel::b2_plus() const {
  const auto f = form();
  return static_cast<int>(std::count(f.begin(), f.end(), 1));
}

int XLambdaModel::b2_minus() const {
  const auto f = form();
  return static_cast<int>(std::count(f.begin(), f.end(), -1));
}

std::vector<int> XLambdaModel::w2_vector() const {
  std::vector<int> v;
  for (const auto& r : records) v.push_back(r.w);
  return v;
}

std::vector<int> XLambdaModel::form() const {
  std::vector<int> f;
  for (const auto& r : records) f.push_back(r.d);
  return f;
}

void to_json(json& j, const XLambdaModel& m) {
  json recs = json::array();
  for (const auto& r : m.records) recs.push_back({{"w", r.w}, {"d", r.d}});
  j = json{{"records", recs}, {"n_plus", m.n_plus()}, {"n_minus", m.n_minus()}, {"p1", m.p1()}};
}

void from_json(const json& j, XLambdaModel& m) {
  m.records.clear();
  for (const auto& r : j.at("records")) {
    const int w = r.at("w").get<int>();
    const int d = r.at("d").get<int>();
    if ((w != 0 && w != 1) || (d != 1 && d != -1)) throw ParseError("bad model record");
    m.records.push_back({w, d});
  }
}

XLambdaModel glue_movies(const MovieResult& m1, const MovieResult& m2, int e_cal) {
  if (m1.initial_encoding != m2.initial_encoding)
    throw Error("cannot glue movies of different links");
  XLambdaModel m;
  for (const auto& r : m1.records) m.records.push_back({r.w, e_cal * r.eps});
  for (const auto& r : m2.records) m.records.push_back({r.w, -e_cal * r.eps});
  return m;
}

namespace {

void check_shape(const std::vector<int>& v, const std::vector<int>& form) {
  if (v.size() != form.size())
    throw Error("class has " + std::to_string(v.size()) + " entries but the form has rank " +
                std::to_string(form.size()));
}

}  // namespace

Mod4Class pontryagin_square(const std::vector<int>& v, const std::vector<int>& form) {
  check_shape(v, form);
  long long s = 0;
  for (std::size_t p = 0; p < v.size(); ++p) s += static_cast<long long>(v[p]) * v[p] * form[p];
  return Mod4Class(s);
}

int cup_square_mod2(const std::vector<int>& v, const std::vector<int>& form) {
  check_shape(v, form);
  long long s = 0;
  for (std::size_t p = 0; p < v.size(); ++p) s += v[p] * form[p];
  return static_cast<int>(((s % 2) + 2) % 2);
}

long long form_pairing(const std::vector<int>& u, const std::vector<int>& v,
                       const std::vector<int>& form) {
  check_shape(u, form);
  check_shape(v, form);
  long long s = 0;
  for (std::size_t p = 0; p < v.size(); ++p) s += static_cast<long long>(u[p]) * v[p] * form[p];
  return s;
}

bool dold_whitney_realizable(Mod4Class a, const std::vector<int>& v, const std::vector<int>& form) {
  return a == pontryagin_square(v, form);
}

void to_json(json& j, const GluingReport& r) {
  j = json{{"pontryagin_square", r.pontryagin.value()},
           {"delta_phi", r.delta_phi.value()},
           {"square_matches_delta", r.square_matches_delta},
           {"square_vanishes", r.square_vanishes},
           {"realizable", r.realizable},
           {"model", r.model}};
}

GluingReport verify_gluing(const MovieResult& m1, const MovieResult& m2, int e_cal) {
  GluingReport r;
  r.model = glue_movies(m1, m2, e_cal);
  const auto v = r.model.w2_vector();
  const auto f = r.model.form();
  r.pontryagin = pontryagin_square(v, f);
  r.delta_phi = Mod4Class(phi(m1, e_cal)) - Mod4Class(phi(m2, e_cal));
  r.square_matches_delta = r.pontryagin == r.delta_phi;
  r.square_vanishes = r.pontryagin == Mod4Class(0);
  r.realizable = dold_whitney_realizable(Mod4Class(0), v, f);
  return r;
}

}  // namespace sato4
