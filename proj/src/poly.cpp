#include "sato4/poly.hpp"

#include <sstream>

namespace sato4 {

ConwayPoly::ConwayPoly(std::initializer_list<long long> coeffs) {
  for (long long v : coeffs) c_.emplace_back(v);
  trim();
}

ConwayPoly::ConwayPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

void ConwayPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt ConwayPoly::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

ConwayPoly ConwayPoly::times_z() const {
  if (is_zero()) return {};
  std::vector<BigInt> out;
  out.reserve(c_.size() + 1);
  out.emplace_back(0);
  out.insert(out.end(), c_.begin(), c_.end());
  return ConwayPoly(std::move(out));
}

ConwayPoly ConwayPoly::operator+(const ConwayPoly& o) const {
  std::vector<BigInt> out(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
  return ConwayPoly(std::move(out));
}

ConwayPoly ConwayPoly::operator-() const {
  std::vector<BigInt> out = c_;
  for (auto& v : out) v = -v;
  return ConwayPoly(std::move(out));
}

ConwayPoly ConwayPoly::operator-(const ConwayPoly& o) const { return *this + (-o); }

ConwayPoly ConwayPoly::operator*(const ConwayPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> out(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  return ConwayPoly(std::move(out));
}

std::string ConwayPoly::to_list() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? ", " : "") << c_[i];
  os << ']';
  return os.str();
}

std::string ConwayPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    BigInt v = c_[k];
    if (v == 0) continue;
    const bool neg = v < 0;
    if (neg) v = -v;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (v != 1 || k == 0) os << v;
    if (k >= 1) os << 'z';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

}  // namespace sato4
