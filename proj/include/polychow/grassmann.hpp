#ifndef POLYCHOW_GRASSMANN_HPP
#define POLYCHOW_GRASSMANN_HPP

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "polychow/blocks.hpp"
#include "polychow/linalg.hpp"
#include "polychow/polymatroid.hpp"
#include "polychow/polytope.hpp"

namespace polychow {

/// The input matrix does not have full row rank.
class RankDeficient : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An intersection or projection did not have the dimension a generic
/// subspace would give it.
class NonGeneric : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Plücker coordinates of a d-dimensional subspace of Q^n, stored in
/// lexicographic d-subset order.
class PluckerVector {
 public:
  PluckerVector(size_t d, size_t n, std::vector<Rat> coords)
      : d_(d), n_(n), coords_(std::move(coords)) {
    if (coords_.size() != binomial(n, d))
      throw std::invalid_argument("PluckerVector: wrong number of coordinates");
    if (std::all_of(coords_.begin(), coords_.end(), [](const Rat& x) { return x == 0; }))
      throw std::invalid_argument("PluckerVector: identically zero");
  }

  size_t d() const { return d_; }
  size_t n() const { return n_; }
  const std::vector<Rat>& coords() const { return coords_; }
  std::vector<IndexSubset> subsets() const { return k_subsets(n_, d_); }

  const Rat& at(const IndexSubset& I) const {
    const auto subs = subsets();
    auto it = std::lower_bound(subs.begin(), subs.end(), I);
    if (it == subs.end() || *it != I) throw std::out_of_range("PluckerVector: not a d-subset");
    return coords_[static_cast<size_t>(it - subs.begin())];
  }

  bool operator==(const PluckerVector& o) const {
    return d_ == o.d_ && n_ == o.n_ && coords_ == o.coords_;
  }

 private:
  size_t d_;
  size_t n_;
  std::vector<Rat> coords_;
};

inline void require_full_row_rank(const Matrix& M, const char* what) {
  if (rank(M) != M.rows()) throw RankDeficient(std::string(what) + ": matrix is not of full row rank");
}

/// All maximal minors, columns in increasing order.
inline PluckerVector plucker(const Matrix& M) {
  require_full_row_rank(M, "plucker");
  const IndexSubset all_rows = IndexSubset::range(M.rows());
  std::vector<Rat> coords;
  for (const auto& I : k_subsets(M.cols(), M.rows())) coords.push_back(minor(M, all_rows, I));
  return PluckerVector(M.rows(), M.cols(), std::move(coords));
}

inline Matroid support_matroid(const PluckerVector& p) {
  std::set<IndexSubset> bases;
  const auto subs = p.subsets();
  for (size_t k = 0; k < subs.size(); ++k)
    if (p.coords()[k] != 0) bases.insert(subs[k]);
  return Matroid(p.n(), p.d(), bases);
}

inline Matroid support_matroid(const Matrix& M) { return support_matroid(plucker(M)); }

/// Moment polytope of the S-orbit closure: hull of lambda_r(e_A) over the
/// nonzero Plücker coordinates.
inline Polytope orbit_polytope(const Matrix& M, const BlockStructure& r) {
  if (r.n() != M.cols()) throw std::invalid_argument("orbit_polytope: block structure does not match n");
  const PluckerVector p = plucker(M);
  const auto subs = p.subsets();
  std::vector<Vec> pts;
  for (size_t k = 0; k < subs.size(); ++k)
    if (p.coords()[k] != 0) pts.push_back(r.image(subs[k]));
  return hull(std::move(pts));
}

enum class FaceSign { Plus, Minus };

/// Gamma_I^+ = hull{e_A : A contains I}, Gamma_I^- = hull{e_A : A misses I}.
inline Polytope gamma_face(size_t d, size_t n, const IndexSubset& I, FaceSign sign) {
  check_hypersimplex_args(d, n);
  if (!I.within(n) || I.size() >= n) throw std::invalid_argument("gamma_face: need I a proper subset of [n]");
  std::vector<Vec> pts;
  for (const auto& A : k_subsets(n, d)) {
    const bool keep = sign == FaceSign::Plus ? A.includes(I) : A.disjoint(I);
    if (keep) pts.push_back(indicator(A, n));
  }
  if (pts.empty()) throw std::invalid_argument("gamma_face: no hypersimplex vertex on this face");
  return hull(std::move(pts));
}

/// L cap {x_j = 0, j in I} with the I-columns dropped, as a (d-|I|) x (n-|I|)
/// matrix. Throws NonGeneric if the intersection is not of dimension d - |I|.
inline Matrix intersect_with_coordinate_subspace(const Matrix& M, const IndexSubset& I) {
  require_full_row_rank(M, "intersect_with_coordinate_subspace");
  if (!I.within(M.cols())) throw std::invalid_argument("intersect_with_coordinate_subspace: index outside [n]");
  if (I.empty()) return M;
  if (I.size() > M.rows()) throw NonGeneric("intersect_with_coordinate_subspace: |I| exceeds d");
  // combinations c of the rows with (c M)_j = 0 for j in I
  const auto ker = kernel_basis(M.select_columns(I).transpose());
  if (ker.size() != M.rows() - I.size())
    throw NonGeneric("intersect_with_coordinate_subspace: intersection has unexpected dimension");
  Matrix C = Matrix::from_rows(ker, M.rows());
  return (C * M).drop_columns(I);
}

/// Deletes the I-columns. Throws NonGeneric if the rank drops.
inline Matrix project_away(const Matrix& M, const IndexSubset& I) {
  require_full_row_rank(M, "project_away");
  if (!I.within(M.cols())) throw std::invalid_argument("project_away: index outside [n]");
  Matrix out = M.drop_columns(I);
  if (rank(out) != M.rows()) throw NonGeneric("project_away: projection lowers the rank");
  return out;
}

/// Basis of the orthogonal complement of the row space, as rows.
inline Matrix gale_dual(const Matrix& M) {
  require_full_row_rank(M, "gale_dual");
  return Matrix::from_rows(kernel_basis(M), M.cols());
}

/// Cells tile the target: each lies in it, they meet pairwise in common
/// faces, and their volumes add up.
inline bool decomposition_check(const std::vector<Polytope>& cells, const Polytope& target) {
  Int total = 0;
  for (const auto& c : cells) {
    if (c.ambient_dim() != target.ambient_dim())
      throw std::invalid_argument("decomposition_check: ambient dimensions differ");
    if (!target.contains(c)) return false;
    if (c.affine_dim() != target.affine_dim()) return false;
    total += normalized_volume(c);
  }
  if (total != normalized_volume(target)) return false;
  for (size_t i = 0; i < cells.size(); ++i)
    for (size_t j = i + 1; j < cells.size(); ++j)
      if (!is_common_face(cells[i], cells[j])) return false;
  return true;
}

inline std::vector<Vec> vertex_differences(const std::vector<Vec>& pts) {
  std::vector<Vec> out;
  for (size_t i = 1; i < pts.size(); ++i) out.push_back(pts[i] - pts[0]);
  return out;
}

/// Index of the lattice spanned by differences of the weights lambda_r(e_B),
/// B a basis of the support, inside the one spanned by all projected
/// hypersimplex vertices. The weights are the images of the vertices of the
/// matroid polytope upstairs; a weight may land inside an edge of the orbit
/// polytope, so hull vertices alone can give a smaller lattice.
/// Empty when the orbit polytope has lower dimension than lambda_r(Delta(d, n)).
inline std::optional<Int> multiplicity_index(const Matrix& M, const BlockStructure& r) {
  if (r.n() != M.cols()) throw std::invalid_argument("multiplicity_index: block structure does not match n");
  const Matroid support = support_matroid(M);
  std::set<Vec> weights;
  for (const auto& B : support.bases()) weights.insert(r.image(B));
  std::vector<Vec> images;
  for (const auto& [v, mult] : image_multiplicities(M.rows(), r)) images.push_back(v);
  const auto gens = vertex_differences(std::vector<Vec>(weights.begin(), weights.end()));
  const auto ambient = vertex_differences(images);
  if (ambient.empty()) return Int(1);
  return lattice_index(gens, ambient, r.m());
}

struct VolumeIdentity {
  bool plus_defined = false;
  Int plus_face_volume, plus_reduced_volume;
  bool minus_defined = false;
  Int minus_face_volume, minus_reduced_volume;

  bool holds() const {
    return (!plus_defined || plus_face_volume == plus_reduced_volume) &&
           (!minus_defined || minus_face_volume == minus_reduced_volume) &&
           (plus_defined || minus_defined);
  }
};

/// Compares the volume of lambda_r(Gamma_I^pm) for I the i-th block with the
/// volume of the projected hypersimplex one block smaller:
///   + side: Delta(d - r_i, n - r_i),  - side: Delta(d, n - r_i).
/// A side is skipped (left undefined) when one of its polytopes is empty.
inline VolumeIdentity volume_identity_check(size_t d, const BlockStructure& r, size_t i) {
  if (i >= r.m()) throw std::invalid_argument("volume_identity_check: block index out of range");
  if (r.m() < 2) throw std::invalid_argument("volume_identity_check: need at least two blocks");
  const size_t n = r.n();
  check_hypersimplex_args(d, n);
  const IndexSubset I = r.block(i);
  const size_t ri = I.size();
  const BlockStructure rest = r.without(i);
  const Matrix L = r.projection_matrix();
  VolumeIdentity out;
  if (ri <= d && d - ri <= n - ri) {
    out.plus_defined = true;
    out.plus_face_volume = normalized_volume(linear_image(L, gamma_face(d, n, I, FaceSign::Plus)));
    out.plus_reduced_volume = normalized_volume(projected_hypersimplex(d - ri, rest));
  }
  if (d <= n - ri) {
    out.minus_defined = true;
    out.minus_face_volume = normalized_volume(linear_image(L, gamma_face(d, n, I, FaceSign::Minus)));
    out.minus_reduced_volume = normalized_volume(projected_hypersimplex(d, rest));
  }
  return out;
}

/// Block-diagonal scaling D with scales[i] on every column of block i.
inline Matrix block_scaling(const BlockStructure& r, const std::vector<Rat>& scales) {
  if (scales.size() != r.m()) throw std::invalid_argument("block_scaling: one scale per block required");
  Matrix D(r.n(), r.n());
  for (size_t j = 0; j < r.n(); ++j) {
    if (scales[r.block_of(j)] == 0) throw std::invalid_argument("block_scaling: zero scale");
    D(j, j) = scales[r.block_of(j)];
  }
  return D;
}

/// orbit_polytope(g M D) == orbit_polytope(M): the orbit polytope only
/// depends on the GL_d x S orbit of M.
inline bool gm_invariance_report(const Matrix& M, const BlockStructure& r, const Matrix& g,
                                 const std::vector<Rat>& scales) {
  if (g.rows() != g.cols() || g.rows() != M.rows())
    throw std::invalid_argument("gm_invariance_report: g must be d x d");
  if (determinant(g) == 0) throw std::invalid_argument("gm_invariance_report: g is singular");
  const Matrix moved = g * M * block_scaling(r, scales);
  return orbit_polytope(moved, r) == orbit_polytope(M, r);
}

// ---- seeded sampling -----------------------------------------------------

/// Random integer matrix with entries in [lo, hi].
inline Matrix random_matrix(std::mt19937_64& rng, size_t rows, size_t cols, long lo = -9, long hi = 9) {
  std::uniform_int_distribution<long> dist(lo, hi);
  Matrix M(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) M(i, j) = dist(rng);
  return M;
}

inline Matrix random_full_rank_matrix(std::mt19937_64& rng, size_t rows, size_t cols) {
  while (true) {
    Matrix M = random_matrix(rng, rows, cols);
    if (rank(M) == std::min(rows, cols)) return M;
  }
}

/// All compositions of n into at most max_parts positive parts.
inline std::vector<BlockStructure> compositions(size_t n, size_t max_parts) {
  std::vector<BlockStructure> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, size_t left) -> void {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    if (cur.size() == max_parts) return;
    for (size_t p = 1; p <= left; ++p) {
      cur.push_back(static_cast<int>(p));
      self(self, left - p);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

}  // namespace polychow

#endif  // POLYCHOW_GRASSMANN_HPP
