#include <boost/multiprecision/cpp_int.hpp>
#include <map>

#include "sato4/braid.hpp"
#include "sato4/conway.hpp"

namespace sato4 {

using BigRational = boost::multiprecision::cpp_rational;

SeifertMatrix::SeifertMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : n_(rows.size()), v_(rows.size() * rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw Error("Seifert matrix must be square");
    std::size_t j = 0;
    for (long long x : row) v_[i * n_ + j++] = x;
    ++i;
  }
}

SeifertMatrix SeifertMatrix::transposed() const {
  SeifertMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

// Fraction-free Gaussian elimination (Bareiss).
BigInt determinant(const SeifertMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  SeifertMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

ConwayPoly conway_from_seifert(const SeifertMatrix& v) {
  const std::size_t n = v.size();
  // D(t) = det(tV - V^T) has degree <= n; sample t = 0..n and interpolate.
  std::vector<BigRational> xs, ys;
  for (std::size_t s = 0; s <= n; ++s) {
    SeifertMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = BigInt(s) * v(i, j) - v(j, i);
    xs.emplace_back(static_cast<long long>(s));
    ys.emplace_back(determinant(m));
  }
  // Newton divided differences, then expand to monomial coefficients.
  std::vector<BigRational> dd = ys;
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t i = n; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  std::vector<BigRational> coeff(n + 1);
  for (std::size_t k = n + 1; k-- > 0;) {
    // coeff <- coeff * (t - x_k) + dd[k]
    std::vector<BigRational> next(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      if (coeff[i] == 0) continue;
      if (i + 1 <= n) next[i + 1] += coeff[i];
      next[i] -= coeff[i] * xs[k];
    }
    next[0] += dd[k];
    coeff = std::move(next);
  }
  // f(x) = x^{-n} D(x^2): Laurent polynomial in x = t^{1/2}, exponent 2i - n.
  std::map<int, BigInt> laurent;
  for (std::size_t i = 0; i <= n; ++i) {
    if (denominator(coeff[i]) != 1) throw Error("Seifert determinant is not integral");
    const BigInt c = numerator(coeff[i]);
    if (c != 0) laurent[2 * static_cast<int>(i) - static_cast<int>(n)] = c;
  }
  // Peel off c * z^m = c * (x - 1/x)^m from the top exponent down.
  std::vector<BigInt> z;
  while (!laurent.empty()) {
    const auto [m, c] = *laurent.rbegin();
    if (m < 0) throw Error("Seifert matrix gives a non-polynomial remainder in z");
    if (z.size() <= static_cast<std::size_t>(m)) z.resize(m + 1);
    z[m] += c;
    BigInt binom = 1;
    for (int j = 0; j <= m; ++j) {
      // (x - 1/x)^m = sum_j C(m,j) (-1)^j x^{m-2j}
      const BigInt term = (j % 2 ? -1 : 1) * binom * c;
      const int e = m - 2 * j;
      laurent[e] -= term;
      if (laurent[e] == 0) laurent.erase(e);
      binom = binom * (m - j) / (j + 1);
    }
  }
  return ConwayPoly(std::move(z));
}

SeifertMatrix seifert_matrix(const LinkDiagram& d) {
  if (d.crossing_count() == 0) {
    if (d.component_count() == 1) return SeifertMatrix(0);
    throw DiagramError("diagram is not connected");
  }
  if (!d.unknots().empty() || pieces(d).size() != 1)
    throw DiagramError("diagram is not connected; present a connected diagram of the link");
  return braid_seifert_matrix(braid_from_diagram(vogel_braidify(d)));
}

}  // namespace sato4
