#ifndef POLYCHOW_BLOCKS_HPP
#define POLYCHOW_BLOCKS_HPP

#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polychow/linalg.hpp"
#include "polychow/polytope.hpp"
#include "polychow/subsets.hpp"

namespace polychow {

/// Composition r = (r_1, ..., r_m) of n: the columns [0, n) are cut into m
/// consecutive blocks, block i having r_i columns.
class BlockStructure {
 public:
  BlockStructure() = default;
  explicit BlockStructure(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("BlockStructure: no parts");
    for (int r : parts_)
      if (r <= 0) throw std::invalid_argument("BlockStructure: parts must be positive");
    for (size_t i = 0; i < parts_.size(); ++i) {
      for (int k = 0; k < parts_[i]; ++k) block_of_.push_back(i);
    }
  }

  static BlockStructure trivial(size_t n) { return BlockStructure(std::vector<int>(n, 1)); }

  const std::vector<int>& parts() const { return parts_; }
  size_t m() const { return parts_.size(); }
  size_t n() const { return block_of_.size(); }
  int part(size_t i) const { return parts_.at(i); }
  size_t block_of(size_t j) const { return block_of_.at(j); }

  IndexSubset block(size_t i) const {
    std::vector<size_t> out;
    for (size_t j = 0; j < n(); ++j)
      if (block_of_[j] == i) out.push_back(j);
    return IndexSubset(std::move(out));
  }

  /// Same composition with block i removed.
  BlockStructure without(size_t i) const {
    std::vector<int> p = parts_;
    p.erase(p.begin() + static_cast<long>(i));
    return BlockStructure(std::move(p));
  }

  /// The m x n 0/1 matrix of the projection lambda_r.
  Matrix projection_matrix() const {
    Matrix L(m(), n());
    for (size_t j = 0; j < n(); ++j) L(block_of_[j], j) = 1;
    return L;
  }

  /// Multiset image of a subset as a count vector.
  std::vector<int> count_vector(const IndexSubset& A) const {
    std::vector<int> v(m(), 0);
    for (size_t j : A) ++v[block_of_.at(j)];
    return v;
  }

  Vec image(const IndexSubset& A) const { return to_vec(count_vector(A)); }

  std::string to_string() const {
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  bool operator==(const BlockStructure& o) const { return parts_ == o.parts_; }

 private:
  std::vector<int> parts_;
  std::vector<size_t> block_of_;
};

inline void check_hypersimplex_args(size_t d, size_t n) {
  if (n == 0 || d > n) throw std::invalid_argument("hypersimplex: need 0 <= d <= n, n >= 1");
}

/// Indicator vector e_A in Q^n.
inline Vec indicator(const IndexSubset& A, size_t n) {
  Vec v(n);
  for (size_t j : A) v.at(j) = 1;
  return v;
}

inline Polytope hypersimplex(size_t d, size_t n) {
  check_hypersimplex_args(d, n);
  std::vector<Vec> pts;
  for (const auto& A : k_subsets(n, d)) pts.push_back(indicator(A, n));
  return hull(std::move(pts));
}

/// lambda_r(Delta(d, n)) with its generating configuration being the images
/// of all hypersimplex vertices (so non-vertex images such as midpoints are
/// kept as marked points).
inline Polytope projected_hypersimplex(size_t d, const BlockStructure& r) {
  check_hypersimplex_args(d, r.n());
  std::vector<Vec> pts;
  for (const auto& A : k_subsets(r.n(), d)) pts.push_back(r.image(A));
  return hull(std::move(pts));
}

/// Image multiset {lambda_r(e_A)} with multiplicities.
inline std::map<Vec, size_t> image_multiplicities(size_t d, const BlockStructure& r) {
  check_hypersimplex_args(d, r.n());
  std::map<Vec, size_t> out;
  for (const auto& A : k_subsets(r.n(), d)) ++out[r.image(A)];
  return out;
}

/// Non-degenerate images of hypersimplex edges: segments
/// lambda(e_A) lambda(e_B) with |A cap B| = d - 1 and distinct endpoints,
/// stored with endpoints in increasing order.
inline std::set<std::pair<Vec, Vec>> image_segments(size_t d, const BlockStructure& r) {
  check_hypersimplex_args(d, r.n());
  std::set<std::pair<Vec, Vec>> out;
  const auto subsets = k_subsets(r.n(), d);
  for (size_t a = 0; a < subsets.size(); ++a)
    for (size_t b = a + 1; b < subsets.size(); ++b) {
      if (subsets[a].set_intersection(subsets[b]).size() + 1 != d) continue;
      Vec u = r.image(subsets[a]), v = r.image(subsets[b]);
      if (u == v) continue;
      if (v < u) std::swap(u, v);
      out.insert({u, v});
    }
  return out;
}

}  // namespace polychow

#endif  // POLYCHOW_BLOCKS_HPP
