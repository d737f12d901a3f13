#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <string>
#include <vector>

namespace sato4 {

using BigInt = boost::multiprecision::cpp_int;

/// Integer polynomial in z; coefficient index = power. Trailing zeros are
/// trimmed, so the zero polynomial has no coefficients.
class ConwayPoly {
 public:
  ConwayPoly() = default;
  ConwayPoly(std::initializer_list<long long> coeffs);
  explicit ConwayPoly(std::vector<BigInt> coeffs);

  static ConwayPoly one() { return ConwayPoly{1}; }
  static ConwayPoly z() { return ConwayPoly{0, 1}; }

  const std::vector<BigInt>& coefficients() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  /// z^k coefficient, zero beyond the stored range.
  BigInt coefficient(int k) const;

  ConwayPoly times_z() const;
  ConwayPoly operator+(const ConwayPoly& o) const;
  ConwayPoly operator-(const ConwayPoly& o) const;
  ConwayPoly operator*(const ConwayPoly& o) const;
  ConwayPoly operator-() const;
  bool operator==(const ConwayPoly& o) const { return c_ == o.c_; }

  /// `[c0, c1, ...]`
  std::string to_list() const;
  /// Human form such as `z^3 + 2z`.
  std::string to_string() const;

 private:
  std::vector<BigInt> c_;
  void trim();
};

}  // namespace sato4
