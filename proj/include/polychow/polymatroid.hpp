#ifndef POLYCHOW_POLYMATROID_HPP
#define POLYCHOW_POLYMATROID_HPP

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "polychow/blocks.hpp"
#include "polychow/polytope.hpp"
#include "polychow/subsets.hpp"

namespace polychow {

using CountVector = std::vector<int>;

inline int modulus(const CountVector& v) { return std::accumulate(v.begin(), v.end(), 0); }

/// Thrown when deletion or contraction would lower the rank, or when a
/// contraction set is dependent.
class RankCollapse : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Matroid on [0, n) given by its bases. Validity (basis exchange) is
/// checkable via is_valid() but not enforced, so candidate systems can be
/// represented too.
class Matroid {
 public:
  Matroid(size_t n, size_t d, std::set<IndexSubset> bases)
      : n_(n), d_(d), bases_(std::move(bases)) {
    if (bases_.empty()) throw std::invalid_argument("Matroid: no bases");
    for (const auto& B : bases_) {
      if (B.size() != d_) throw std::invalid_argument("Matroid: basis of wrong size");
      if (!B.within(n_)) throw std::invalid_argument("Matroid: basis outside ground set");
    }
  }

  static Matroid uniform(size_t d, size_t n) {
    auto subs = k_subsets(n, d);
    return Matroid(n, d, std::set<IndexSubset>(subs.begin(), subs.end()));
  }

  size_t n() const { return n_; }
  size_t rank() const { return d_; }
  const std::set<IndexSubset>& bases() const { return bases_; }
  bool is_basis(const IndexSubset& B) const { return bases_.count(B) > 0; }

  bool is_independent(const IndexSubset& I) const {
    for (const auto& B : bases_)
      if (B.includes(I)) return true;
    return false;
  }

  bool is_valid() const {
    for (const auto& B1 : bases_)
      for (const auto& B2 : bases_)
        for (size_t x : B1.set_difference(B2)) {
          bool ok = false;
          for (size_t y : B2.set_difference(B1)) {
            auto C = B1.set_difference(IndexSubset{x}).set_union(IndexSubset{y});
            if (is_basis(C)) {
              ok = true;
              break;
            }
          }
          if (!ok) return false;
        }
    return true;
  }

  bool operator==(const Matroid& o) const {
    return n_ == o.n_ && d_ == o.d_ && bases_ == o.bases_;
  }

 private:
  size_t n_;
  size_t d_;
  std::set<IndexSubset> bases_;
};

/// Discrete polymatroid on the multiset [caps] given by its basis vectors.
/// As with Matroid, the exchange property is checkable, not enforced.
class Polymatroid {
 public:
  Polymatroid(CountVector caps, std::set<CountVector> bases)
      : caps_(std::move(caps)), bases_(std::move(bases)) {
    if (bases_.empty()) throw std::invalid_argument("Polymatroid: no bases");
    d_ = modulus(*bases_.begin());
    for (const auto& v : bases_) {
      if (v.size() != caps_.size()) throw std::invalid_argument("Polymatroid: basis length");
      if (modulus(v) != d_) throw std::invalid_argument("Polymatroid: unequal moduli");
      for (size_t i = 0; i < v.size(); ++i)
        if (v[i] < 0 || v[i] > caps_[i])
          throw std::invalid_argument("Polymatroid: basis entry outside [0, cap]");
    }
  }

  /// Caps taken as the coordinatewise maxima of the bases.
  static Polymatroid with_derived_caps(const std::set<CountVector>& bases) {
    if (bases.empty()) throw std::invalid_argument("Polymatroid: no bases");
    CountVector caps(bases.begin()->size(), 0);
    for (const auto& v : bases)
      for (size_t i = 0; i < caps.size() && i < v.size(); ++i) caps[i] = std::max(caps[i], v[i]);
    return Polymatroid(caps, bases);
  }

  size_t m() const { return caps_.size(); }
  int rank() const { return d_; }
  const CountVector& caps() const { return caps_; }
  const std::set<CountVector>& bases() const { return bases_; }

  bool operator==(const Polymatroid& o) const { return caps_ == o.caps_ && bases_ == o.bases_; }

 private:
  CountVector caps_;
  int d_ = 0;
  std::set<CountVector> bases_;
};

/// Vector exchange axiom: for u, v in B and u_i > v_i there is j with
/// u_j < v_j and u - e_i + e_j in B.
inline bool check_exchange(const std::set<CountVector>& B) {
  if (B.empty()) throw std::invalid_argument("check_exchange: empty basis set");
  const int d = modulus(*B.begin());
  const size_t m = B.begin()->size();
  for (const auto& v : B)
    if (modulus(v) != d || v.size() != m)
      throw std::invalid_argument("check_exchange: basis vectors of unequal modulus");
  for (const auto& u : B)
    for (const auto& v : B)
      for (size_t i = 0; i < m; ++i) {
        if (u[i] <= v[i]) continue;
        bool ok = false;
        for (size_t j = 0; j < m && !ok; ++j) {
          if (u[j] >= v[j]) continue;
          CountVector w = u;
          --w[i];
          ++w[j];
          ok = B.count(w) > 0;
        }
        if (!ok) return false;
      }
  return true;
}

inline bool check_exchange(const Polymatroid& B) { return check_exchange(B.bases()); }

/// pi_r: a matroid on [n] to the polymatroid of its basis count vectors.
inline Polymatroid project_matroid(const Matroid& M, const BlockStructure& r) {
  if (r.n() != M.n()) throw std::invalid_argument("project_matroid: sum of r differs from n");
  std::set<CountVector> out;
  for (const auto& B : M.bases()) out.insert(r.count_vector(B));
  return Polymatroid(r.parts(), out);
}

/// pi_r^{-1}: all subsets of [n] whose count vector is a basis.
inline Matroid lift_polymatroid(const Polymatroid& B, const BlockStructure& r) {
  if (B.caps() != r.parts())
    throw std::invalid_argument("lift_polymatroid: caps do not match the block structure");
  std::set<IndexSubset> out;
  for (const auto& A : k_subsets(r.n(), static_cast<size_t>(B.rank())))
    if (B.bases().count(r.count_vector(A))) out.insert(A);
  return Matroid(r.n(), static_cast<size_t>(B.rank()), out);
}

inline Vec to_point(const CountVector& v) { return to_vec(v); }

inline CountVector to_count_vector(const Vec& v) {
  CountVector out;
  for (const auto& x : v) {
    if (!is_integer(x) || !x.get_num().fits_sint_p())
      throw std::invalid_argument("expected a small integer vector");
    out.push_back(static_cast<int>(x.get_num().get_si()));
  }
  return out;
}

inline Polytope base_polytope(const std::set<CountVector>& bases) {
  std::vector<Vec> pts;
  for (const auto& v : bases) pts.push_back(to_point(v));
  return hull(std::move(pts));
}

inline Polytope base_polytope(const Polymatroid& B) { return base_polytope(B.bases()); }

inline Polytope matroid_polytope(const Matroid& M) {
  std::vector<Vec> pts;
  for (const auto& B : M.bases()) pts.push_back(indicator(B, M.n()));
  return hull(std::move(pts));
}

/// Whether Q, with its marked configuration Q.points(), is the polytope of a
/// rank-d discrete polymatroid on [r]:
///  - the marked points are exactly the lattice points of Q,
///  - every vertex is an image lambda_r(e_A) of a hypersimplex vertex,
///  - along every edge of Q consecutive marked points span images of
///    hypersimplex edges (collapsed images excluded).
inline bool is_polymatroid_polytope(const Polytope& Q, size_t d, const BlockStructure& r) {
  if (Q.is_empty() || Q.ambient_dim() != r.m()) return false;
  if (d > r.n()) return false;
  const auto images = image_multiplicities(d, r);
  for (const auto& v : Q.vertices())
    if (!images.count(v)) return false;
  if (lattice_points(Q) != Q.points()) return false;
  const auto segments = image_segments(d, r);
  const auto& V = Q.vertices();
  for (const auto& e : edges(Q)) {
    const Vec& u = V[e.a];
    const Vec dir = V[e.b] - u;
    // marked points on the edge, ordered by their parameter along it
    size_t pivot = 0;
    while (dir[pivot] == 0) ++pivot;
    std::vector<std::pair<Rat, Vec>> on;
    for (const auto& p : Q.points()) {
      const Rat t = (p[pivot] - u[pivot]) / dir[pivot];
      if (t < 0 || t > 1) continue;
      bool collinear = true;
      for (size_t j = 0; j < p.size() && collinear; ++j) collinear = (p[j] == u[j] + t * dir[j]);
      if (collinear) on.emplace_back(t, p);
    }
    std::sort(on.begin(), on.end());
    for (size_t k = 0; k + 1 < on.size(); ++k) {
      Vec a = on[k].second, b = on[k + 1].second;
      if (b < a) std::swap(a, b);
      if (!segments.count({a, b})) return false;
    }
  }
  return true;
}

/// Recovers the bases as the lattice points of Q (all of modulus d).
inline Polymatroid polymatroid_from_polytope(const Polytope& Q, size_t d, const BlockStructure& r) {
  if (!is_polymatroid_polytope(Q, d, r))
    throw std::invalid_argument("polymatroid_from_polytope: not a polymatroid polytope");
  std::set<CountVector> bases;
  for (const auto& p : lattice_points(Q)) {
    CountVector v = to_count_vector(p);
    if (modulus(v) == static_cast<int>(d)) bases.insert(v);
  }
  return Polymatroid(r.parts(), bases);
}

/// v -> caps - v.
inline Polymatroid dual(const Polymatroid& B) {
  std::set<CountVector> out;
  for (const auto& v : B.bases()) {
    CountVector w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = B.caps()[i] - v[i];
    out.insert(w);
  }
  return Polymatroid(B.caps(), out);
}

inline Matroid dual(const Matroid& M) {
  std::set<IndexSubset> out;
  for (const auto& B : M.bases()) out.insert(B.complement(M.n()));
  return Matroid(M.n(), M.n() - M.rank(), out);
}

namespace detail {
// Relabels a subset of ground \ removed onto [0, n - |removed|) in increasing order.
inline IndexSubset relabel_without(const IndexSubset& S, const IndexSubset& removed) {
  std::vector<size_t> out;
  for (size_t x : S) {
    size_t shift = 0;
    for (size_t y : removed)
      if (y < x) ++shift;
    out.push_back(x - shift);
  }
  return IndexSubset(std::move(out));
}
}  // namespace detail

/// M \ I, ground set relabelled in increasing order. Throws RankCollapse if
/// no basis avoids I (the rank would drop).
inline Matroid delete_elements(const Matroid& M, const IndexSubset& I) {
  if (!I.within(M.n())) throw std::invalid_argument("delete_elements: index outside ground set");
  std::set<IndexSubset> out;
  for (const auto& B : M.bases())
    if (B.disjoint(I)) out.insert(detail::relabel_without(B, I));
  if (out.empty()) throw RankCollapse("delete_elements: deleting a coloop lowers the rank");
  return Matroid(M.n() - I.size(), M.rank(), out);
}

/// M / I for independent I, ground set relabelled in increasing order.
inline Matroid contract(const Matroid& M, const IndexSubset& I) {
  if (!I.within(M.n())) throw std::invalid_argument("contract: index outside ground set");
  std::set<IndexSubset> out;
  for (const auto& B : M.bases())
    if (B.includes(I)) out.insert(detail::relabel_without(B.set_difference(I), I));
  if (out.empty()) throw RankCollapse("contract: contraction set is dependent");
  return Matroid(M.n() - I.size(), M.rank() - I.size(), out);
}

}  // namespace polychow

#endif  // POLYCHOW_POLYMATROID_HPP
