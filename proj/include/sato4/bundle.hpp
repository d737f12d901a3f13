#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "sato4/homotopy.hpp"

namespace sato4 {

/// Element of the Klein four-group of diagonal rotations diag(s1, s2, s3),
/// s_i = +-1, s1 s2 s3 = 1.
class V4Element {
 public:
  static V4Element e() { return V4Element({1, 1, 1}); }
  static V4Element x1() { return V4Element({1, -1, -1}); }
  static V4Element x2() { return V4Element({-1, 1, -1}); }
  static V4Element x3() { return V4Element({-1, -1, 1}); }
  static std::array<V4Element, 4> all() { return {e(), x1(), x2(), x3()}; }

  int entry(int i) const { return diag_.at(i); }
  const std::array<int, 3>& diagonal() const noexcept { return diag_; }
  bool is_identity() const noexcept { return diag_ == std::array<int, 3>{1, 1, 1}; }
  std::string name() const;

  bool operator==(const V4Element&) const = default;

 private:
  explicit V4Element(std::array<int, 3> d) : diag_(d) {}
  std::array<int, 3> diag_;
};

V4Element v4_multiply(const V4Element& g, const V4Element& h);

/// Images of the two basis loops a, b of the torus fundamental group.
struct TorusRep {
  V4Element a = V4Element::e();
  V4Element b = V4Element::e();
};

/// Mod-2 cohomology of the torus on the basis {1, abar, bbar, abar.bbar},
/// stored as a 4-bit mask.
class TorusCohomology {
 public:
  static constexpr unsigned one = 1, abar = 2, bbar = 4, top = 8;

  TorusCohomology() = default;
  explicit TorusCohomology(unsigned bits) : bits_(bits & 15u) {}

  unsigned bits() const noexcept { return bits_; }
  TorusCohomology operator+(const TorusCohomology& o) const {
    return TorusCohomology(bits_ ^ o.bits_);
  }
  TorusCohomology cup(const TorusCohomology& o) const;
  /// Evaluation on the fundamental class.
  int evaluate() const noexcept { return (bits_ & top) ? 1 : 0; }

  bool operator==(const TorusCohomology&) const = default;

 private:
  unsigned bits_ = 0;
};

/// w1 of the i-th line summand (i = 0, 1, 2).
TorusCohomology line_bundle_w1(const TorusRep& rep, int i);
/// w2 of the flat bundle as the second elementary symmetric function of
/// the line-bundle w1 classes.
int torus_w2_cup(const TorusRep& rep);
/// 1 iff the representation is onto V4.
int torus_w2_surjectivity(const TorusRep& rep);

/// Integer mod 4.
class Mod4Class {
 public:
  Mod4Class() = default;
  explicit Mod4Class(long long v) : v_(static_cast<int>(((v % 4) + 4) % 4)) {}
  int value() const noexcept { return v_; }
  Mod4Class operator+(Mod4Class o) const { return Mod4Class(v_ + o.v_); }
  Mod4Class operator-(Mod4Class o) const { return Mod4Class(v_ - o.v_); }
  Mod4Class operator*(Mod4Class o) const { return Mod4Class(v_ * o.v_); }
  Mod4Class operator-() const { return Mod4Class(-v_); }
  bool operator==(const Mod4Class&) const = default;

 private:
  int v_ = 0;
};

/// A torus class: its w2 restriction and its self-intersection.
struct GluedRecord {
  int w = 0;
  int d = 1;
  bool operator==(const GluedRecord&) const = default;
};

/// Second homology of the glued 4-manifold, reduced to a diagonal form with
/// one torus per self-intersection, and the w2 values on those tori.
struct XLambdaModel {
  std::vector<GluedRecord> records;

  int n_plus() const;
  int n_minus() const;
  int b2() const { return static_cast<int>(records.size()); }
  int b2_plus() const;   ///< positive eigenvalues of the form
  int b2_minus() const;  ///< negative eigenvalues of the form
  int h1_rank() const { return 2; }
  int p1() const { return 0; }
  std::vector<int> w2_vector() const;
  std::vector<int> form() const;
};

void to_json(nlohmann::json& j, const XLambdaModel& m);
void from_json(const nlohmann::json& j, XLambdaModel& m);

/// Joins two movies of the same link: records of m1 enter with d = sigma,
/// records of m2 with d = -sigma.
XLambdaModel glue_movies(const MovieResult& m1, const MovieResult& m2, int e_cal);

/// Sum of v_p^2 d_p mod 4 over a diagonal form.
Mod4Class pontryagin_square(const std::vector<int>& v, const std::vector<int>& form);
/// Mod-2 cup square, sum of v_p d_p mod 2.
int cup_square_mod2(const std::vector<int>& v, const std::vector<int>& form);
/// Form pairing sum u_p v_p d_p (integral).
long long form_pairing(const std::vector<int>& u, const std::vector<int>& v,
                       const std::vector<int>& form);
/// Whether (p1 mod 4, w2) = (a, v) is a realizable pair.
bool dold_whitney_realizable(Mod4Class a, const std::vector<int>& v, const std::vector<int>& form);

struct GluingReport {
  Mod4Class pontryagin;
  Mod4Class delta_phi;
  bool square_matches_delta = false;  // P = phi1 - phi2
  bool square_vanishes = false;       // P = 0
  bool realizable = false;            // (0, w2) realizable
  XLambdaModel model;

  bool ok() const { return square_matches_delta && square_vanishes && realizable; }
};

void to_json(nlohmann::json& j, const GluingReport& r);

GluingReport verify_gluing(const MovieResult& m1, const MovieResult& m2, int e_cal);

}  // namespace sato4
