#ifndef POLYCHOW_SECONDARY_HPP
#define POLYCHOW_SECONDARY_HPP

#include <algorithm>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "polychow/blocks.hpp"
#include "polychow/polytope.hpp"
#include "polychow/subsets.hpp"

namespace polychow {

struct LabeledPoint {
  Vec coords;
  std::string name;                   // display name, e.g. "13"
  std::optional<IndexSubset> subset;  // the d-subset the point came from, if any
};

/// Point multiset with stable labels 0..N-1; label order is the coordinate
/// order of R^A.
class LabeledConfig {
 public:
  LabeledConfig(size_t ambient_dim, std::vector<LabeledPoint> points)
      : ambient_dim_(ambient_dim), points_(std::move(points)) {
    if (points_.empty()) throw std::invalid_argument("LabeledConfig: no points");
    for (const auto& p : points_)
      if (p.coords.size() != ambient_dim_)
        throw std::invalid_argument("LabeledConfig: point of wrong dimension");
  }

  /// Unnamed configuration from plain integer points.
  static LabeledConfig from_points(const std::vector<Vec>& pts) {
    if (pts.empty()) throw std::invalid_argument("LabeledConfig: no points");
    std::vector<LabeledPoint> lp;
    for (const auto& p : pts) lp.push_back({p, "", std::nullopt});
    return LabeledConfig(pts[0].size(), std::move(lp));
  }

  size_t ambient_dim() const { return ambient_dim_; }
  size_t size() const { return points_.size(); }
  const LabeledPoint& operator[](size_t label) const { return points_.at(label); }
  const std::vector<LabeledPoint>& points() const { return points_; }

  std::vector<Vec> coordinates() const {
    std::vector<Vec> out;
    for (const auto& p : points_) out.push_back(p.coords);
    return out;
  }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (const auto& p : points_) out.push_back(p.name);
    return out;
  }

  Polytope convex_hull() const { return hull(coordinates()); }

 private:
  size_t ambient_dim_;
  std::vector<LabeledPoint> points_;
};

/// The multiset A = {lambda_r(e_I) : I a d-subset of [n]}, labelled in
/// lexicographic d-subset order.
inline LabeledConfig weight_config(size_t d, const BlockStructure& r) {
  check_hypersimplex_args(d, r.n());
  std::vector<LabeledPoint> pts;
  for (const auto& I : k_subsets(r.n(), d)) pts.push_back({r.image(I), I.name(r.n()), I});
  return LabeledConfig(r.m(), std::move(pts));
}

/// Labels of a simplex, sorted.
struct LabeledSimplex {
  std::vector<size_t> labels;
  auto operator<=>(const LabeledSimplex&) const = default;
};

struct Triangulation {
  std::vector<LabeledSimplex> cells;  // sorted
  auto operator<=>(const Triangulation&) const = default;
};

using CharVector = std::vector<Int>;

class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct EnumerationOptions {
  size_t cap = 12;   // maximum number of labels
  unsigned jobs = 1;
};

inline std::vector<Vec> simplex_coordinates(const LabeledConfig& A, const LabeledSimplex& s) {
  std::vector<Vec> out;
  for (size_t l : s.labels) out.push_back(A[l].coords);
  return out;
}

/// Labelled compatibility: conv(s) and conv(t) must meet exactly in the hull
/// of the points carrying labels common to both. Two copies of a repeated
/// point with different labels therefore do not count as a shared vertex.
inline bool compatible(const LabeledConfig& A, const LabeledSimplex& s, const LabeledSimplex& t) {
  if (s == t) return true;
  std::vector<size_t> shared;
  std::set_intersection(s.labels.begin(), s.labels.end(), t.labels.begin(), t.labels.end(),
                        std::back_inserter(shared));
  const Polytope meet =
      intersect(hull(simplex_coordinates(A, s)), hull(simplex_coordinates(A, t)));
  if (shared.empty()) return meet.is_empty();
  return meet == hull(simplex_coordinates(A, LabeledSimplex{shared}));
}

namespace detail {

struct CandidateCells {
  std::vector<LabeledSimplex> cells;
  std::vector<Int> volumes;
  Int total;
};

// Full-dimensional labelled simplices of A in lexicographic label order.
inline CandidateCells full_dimensional_cells(const LabeledConfig& A) {
  const Polytope H = A.convex_hull();
  CandidateCells c;
  c.total = normalized_volume(H);
  const size_t k = static_cast<size_t>(H.affine_dim());
  for_each_combination(A.size(), k + 1, [&](const std::vector<size_t>& idx) {
    LabeledSimplex s{idx};
    Int v = simplex_volume(simplex_coordinates(A, s));
    if (v > 0) {
      c.cells.push_back(std::move(s));
      c.volumes.push_back(v);
    }
  });
  return c;
}

}  // namespace detail

/// Every triangulation of (conv A, A), by exhaustive search over sets of
/// pairwise compatible full-dimensional cells whose volumes add up to the
/// volume of conv A. Labels may go unused.
inline std::vector<Triangulation> enumerate_triangulations(const LabeledConfig& A,
                                                           EnumerationOptions opts = {}) {
  if (A.size() > opts.cap)
    throw CapExceeded("enumerate_triangulations: " + std::to_string(A.size()) +
                      " labels exceed cap " + std::to_string(opts.cap));
  const auto cand = detail::full_dimensional_cells(A);
  const size_t N = cand.cells.size();
  if (cand.total == 0) {
    // conv A is a point: the single 0-simplex on the first label
    return {Triangulation{{LabeledSimplex{{0}}}}};
  }

  std::vector<std::vector<char>> compat(N, std::vector<char>(N, 1));
  const unsigned jobs = std::max(1u, opts.jobs);
  {
    auto work = [&](unsigned worker) {
      for (size_t i = worker; i < N; i += jobs)
        for (size_t j = i + 1; j < N; ++j) {
          const char ok = compatible(A, cand.cells[i], cand.cells[j]) ? 1 : 0;
          compat[i][j] = ok;
          compat[j][i] = ok;
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < jobs; ++w) pool.emplace_back(work, w);
    work(0);
    for (auto& t : pool) t.join();
  }

  std::vector<Triangulation> result;
  std::mutex mu;
  auto search_from = [&](size_t first) {
    std::vector<size_t> chosen{first};
    std::vector<Triangulation> local;
    auto dfs = [&](auto&& self, size_t next, const Int& vol) -> void {
      if (vol == cand.total) {
        Triangulation T;
        for (size_t c : chosen) T.cells.push_back(cand.cells[c]);
        local.push_back(std::move(T));
        return;
      }
      for (size_t j = next; j < N; ++j) {
        if (vol + cand.volumes[j] > cand.total) continue;
        bool ok = true;
        for (size_t c : chosen)
          if (!compat[c][j]) {
            ok = false;
            break;
          }
        if (!ok) continue;
        chosen.push_back(j);
        self(self, j + 1, vol + cand.volumes[j]);
        chosen.pop_back();
      }
    };
    dfs(dfs, first + 1, cand.volumes[first]);
    std::lock_guard<std::mutex> lock(mu);
    result.insert(result.end(), local.begin(), local.end());
  };
  {
    auto work = [&](unsigned worker) {
      for (size_t i = worker; i < N; i += jobs) search_from(i);
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < jobs; ++w) pool.emplace_back(work, w);
    work(0);
    for (auto& t : pool) t.join();
  }
  std::sort(result.begin(), result.end());
  return result;
}

/// phi_T(a): total normalized volume of the cells having label a as a vertex.
inline CharVector char_function(const Triangulation& T, const LabeledConfig& A) {
  CharVector phi(A.size(), Int(0));
  for (const auto& cell : T.cells) {
    if (cell.labels.size() == 1) continue;
    const Int v = simplex_volume(simplex_coordinates(A, cell));
    for (size_t l : cell.labels) phi.at(l) += v;
  }
  return phi;
}

inline Vec to_point(const CharVector& phi) {
  Vec v;
  for (const auto& x : phi) v.emplace_back(x);
  return v;
}

/// Secondary polytope: hull of the characteristic vectors of all
/// triangulations (regular or not).
inline Polytope secondary_polytope(const LabeledConfig& A, EnumerationOptions opts = {}) {
  std::vector<Vec> pts;
  for (const auto& T : enumerate_triangulations(A, opts)) pts.push_back(to_point(char_function(T, A)));
  return hull(std::move(pts));
}

/// Coordinate order for n = 2d pairing each d-subset containing the first
/// element with its complement: for (2, 4) this is 12, 34, 13, 24, 14, 23.
/// Entry k is the lexicographic label placed at position k.
inline std::vector<size_t> complementary_pair_order(size_t d, size_t n) {
  if (n != 2 * d || d == 0)
    throw std::invalid_argument("complementary_pair_order: requires n = 2d");
  const auto subs = k_subsets(n, d);
  auto label_of = [&](const IndexSubset& S) {
    return static_cast<size_t>(std::lower_bound(subs.begin(), subs.end(), S) - subs.begin());
  };
  std::vector<size_t> order;
  for (const auto& S : subs) {
    if (!S.contains(0)) continue;
    order.push_back(label_of(S));
    order.push_back(label_of(S.complement(n)));
  }
  return order;
}

template <typename T>
std::vector<T> permute(const std::vector<T>& xs, const std::vector<size_t>& order) {
  std::vector<T> out;
  for (size_t k : order) out.push_back(xs.at(k));
  return out;
}

}  // namespace polychow

#endif  // POLYCHOW_SECONDARY_HPP
