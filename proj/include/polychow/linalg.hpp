#ifndef POLYCHOW_LINALG_HPP
#define POLYCHOW_LINALG_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polychow/rational.hpp"
#include "polychow/subsets.hpp"

namespace polychow {

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix from_rows(const std::vector<Vec>& rows, size_t cols_if_empty = 0) {
    if (rows.empty()) return Matrix(0, cols_if_empty);
    Matrix m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw std::invalid_argument("Matrix: ragged rows");
      for (size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_ints(const std::vector<std::vector<long>>& rows) {
    std::vector<Vec> r;
    for (const auto& row : rows) r.push_back(to_vec(row));
    return from_rows(r);
  }

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Rat& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  Vec row(size_t i) const {
    return Vec(data_.begin() + static_cast<long>(i * cols_),
               data_.begin() + static_cast<long>((i + 1) * cols_));
  }

  std::vector<Vec> row_list() const {
    std::vector<Vec> out;
    for (size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  Vec column(size_t j) const {
    Vec c(rows_);
    for (size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix select_columns(const IndexSubset& cols) const {
    Matrix m(rows_, cols.size());
    for (size_t i = 0; i < rows_; ++i)
      for (size_t k = 0; k < cols.size(); ++k) m(i, k) = (*this)(i, cols[k]);
    return m;
  }

  Matrix select_rows(const IndexSubset& rows) const {
    Matrix m(rows.size(), cols_);
    for (size_t k = 0; k < rows.size(); ++k)
      for (size_t j = 0; j < cols_; ++j) m(k, j) = (*this)(rows[k], j);
    return m;
  }

  Matrix drop_columns(const IndexSubset& cols) const { return select_columns(cols.complement(cols_)); }

  Vec operator*(const Vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Matrix*Vec: shape mismatch");
    Vec out(rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix*Matrix: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Rat> data_;
};

struct RowEchelon {
  Matrix reduced;               // reduced row echelon form
  std::vector<size_t> pivots;   // pivot column of each nonzero row
};

inline RowEchelon rref(Matrix m) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Rat inv = 1 / m(r, c);
    for (size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rat f = m(i, c);
      for (size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

inline size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

inline size_t rank(const std::vector<Vec>& rows, size_t cols) {
  return rank(Matrix::from_rows(rows, cols));
}

inline Rat determinant(Matrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const size_t n = m.rows();
  Rat det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Rat f = m(i, c) / m(c, c);
      for (size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

/// Determinant of the submatrix on (rows, cols), both taken in increasing order.
inline Rat minor(const Matrix& m, const IndexSubset& rows, const IndexSubset& cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor: |rows| != |cols|");
  if (!rows.within(m.rows()) || !cols.within(m.cols()))
    throw std::out_of_range("minor: index outside matrix");
  return determinant(m.select_rows(rows).select_columns(cols));
}

/// Basis of the right null space. The vector attached to free column f has
/// a 1 in position f and zeros on the other free columns.
inline std::vector<Vec> kernel_basis(const Matrix& m) {
  const auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Row-space equality of two matrices with the same column count.
inline bool same_row_space(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) return false;
  auto ra = rref(a), rb = rref(b);
  if (ra.pivots != rb.pivots) return false;
  for (size_t i = 0; i < ra.pivots.size(); ++i)
    if (ra.reduced.row(i) != rb.reduced.row(i)) return false;
  return true;
}

/// Unique solution of m x = rhs, if the system is consistent and determined.
inline std::optional<Vec> solve_unique(const Matrix& m, const Vec& rhs) {
  Matrix aug(m.rows(), m.cols() + 1);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  auto [r, pivots] = rref(std::move(aug));
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  if (pivots.size() != m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r(i, m.cols());
  return x;
}

// ---- integer lattices ----------------------------------------------------

using IntMatrix = std::vector<std::vector<Int>>;

inline IntMatrix to_int_matrix(const std::vector<Vec>& rows) {
  IntMatrix out;
  for (const auto& r : rows) {
    std::vector<Int> ir;
    for (const auto& x : r) {
      if (!is_integer(x)) throw std::invalid_argument("expected an integer vector");
      ir.push_back(x.get_num());
    }
    out.push_back(std::move(ir));
  }
  return out;
}

/// Nonzero diagonal entries of the Smith normal form (the elementary divisors).
inline std::vector<Int> elementary_divisors(IntMatrix a) {
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  std::vector<Int> divisors;
  size_t t = 0;
  while (t < rows && t < cols) {
    // pick a nonzero entry of smallest magnitude in the trailing block
    size_t pi = rows, pj = cols;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    std::swap(a[t], a[pi]);
    for (size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        Int q = a[i][t] / a[t][t];
        for (size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        Int q = a[t][j] / a[t][t];
        for (size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][j]);
          clean = false;
        }
      }
      if (clean) {
        // the pivot must divide the whole trailing block
        for (size_t i = t + 1; i < rows && clean; ++i)
          for (size_t j = t + 1; j < cols; ++j)
            if (a[i][j] % a[t][t] != 0) {
              for (size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
              clean = false;
              break;
            }
      }
    }
    divisors.push_back(abs(a[t][t]));
    ++t;
  }
  return divisors;
}

/// Index of the lattice spanned by `gens` inside the lattice spanned by
/// `ambient`. Empty optional means infinite index (rank drop).
inline std::optional<Int> lattice_index(const std::vector<Vec>& gens,
                                        const std::vector<Vec>& ambient, size_t dim) {
  std::vector<Vec> both = ambient;
  both.insert(both.end(), gens.begin(), gens.end());
  const size_t amb_rank = rank(ambient, dim);
  if (rank(both, dim) != amb_rank)
    throw std::invalid_argument("lattice_index: generators not contained in ambient span");
  const size_t gen_rank = rank(gens, dim);
  if (gen_rank != amb_rank) return std::nullopt;
  auto covolume = [](const std::vector<Vec>& rows) {
    Int prod = 1;
    for (const auto& d : elementary_divisors(to_int_matrix(rows))) prod *= d;
    return prod;
  };
  const Int num = covolume(gens), den = covolume(ambient);
  if (covolume(both) != den)
    throw std::invalid_argument("lattice_index: generators not contained in ambient lattice");
  return Int(num / den);
}

}  // namespace polychow

#endif  // POLYCHOW_LINALG_HPP
