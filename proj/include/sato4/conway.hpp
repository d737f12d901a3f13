#pragma once

#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "sato4/diagram.hpp"
#include "sato4/poly.hpp"

namespace sato4 {

/// Memo table keyed by canonical_encoding. Readers share a lock; inserts
/// take it exclusively. Two threads racing on the same key both compute
/// the same value, so a lost race only wastes work.
class ConwayMemo {
 public:
  std::optional<ConwayPoly> find(const std::string& key) const;
  void insert(const std::string& key, const ConwayPoly& value);
  std::size_t size() const;
  void clear();

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, ConwayPoly> table_;
};

ConwayMemo& shared_conway_memo();

/// Conway polynomial by descending-diagram skein recursion.
ConwayPoly conway(const LinkDiagram& d, ConwayMemo& memo);
ConwayPoly conway(const LinkDiagram& d);

/// Oriented smoothing of every crossing; each circle lists its arcs in order.
std::vector<std::vector<ArcId>> seifert_circles(const LinkDiagram& d);

/// Square integer matrix, row-major.
class SeifertMatrix {
 public:
  SeifertMatrix() = default;
  explicit SeifertMatrix(std::size_t n) : n_(n), v_(n * n) {}
  SeifertMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  std::size_t size() const noexcept { return n_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return v_[i * n_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return v_[i * n_ + j]; }
  SeifertMatrix transposed() const;
  bool operator==(const SeifertMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> v_;
};

BigInt determinant(const SeifertMatrix& m);

/// Seifert matrix of the surface built by Seifert's algorithm on a braided
/// form of d. Requires a connected diagram.
SeifertMatrix seifert_matrix(const LinkDiagram& d);

/// det(t^{1/2} V - t^{-1/2} V^T) rewritten in z = t^{1/2} - t^{-1/2}.
ConwayPoly conway_from_seifert(const SeifertMatrix& v);

/// s_cal times the z^3 coefficient; needs two components with lk = 0.
BigInt sato_levine_oracle(const LinkDiagram& d, int s_cal);

BigInt coefficient(const ConwayPoly& p, int k);

}  // namespace sato4
