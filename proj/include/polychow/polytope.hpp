#ifndef POLYCHOW_POLYTOPE_HPP
#define POLYCHOW_POLYTOPE_HPP

#include <algorithm>
#include <compare>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polychow/linalg.hpp"
#include "polychow/rational.hpp"
#include "polychow/subsets.hpp"

namespace polychow {

/// normal . x <= offset, with a primitive integer normal.
struct Halfspace {
  Vec normal;
  Rat offset;
  bool operator==(const Halfspace& o) const { return normal == o.normal && offset == o.offset; }
  bool operator<(const Halfspace& o) const {
    if (normal != o.normal) return normal < o.normal;
    return offset < o.offset;
  }
};

/// normal . x == offset, with a primitive integer normal.
struct Hyperplane {
  Vec normal;
  Rat offset;
  bool operator==(const Hyperplane& o) const { return normal == o.normal && offset == o.offset; }
  bool operator<(const Hyperplane& o) const {
    if (normal != o.normal) return normal < o.normal;
    return offset < o.offset;
  }
};

/// Pair of vertex indices (a < b) spanning a 1-face.
struct Edge {
  size_t a = 0;
  size_t b = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Convex polytope over Q held in both V- and H-form.
///
/// The vertex list is sorted and free of non-extremal points. `points()` keeps
/// the deduplicated configuration the polytope was built from (a superset of
/// the vertices); it matters for lattice-point-sensitive questions such as
/// which segments along an edge a configuration actually marks.
///
/// Facet normals live on the coordinates in `local_coordinates()`, a set of
/// affine_dim coordinates that parametrize the affine hull; `equations()`
/// cut out the affine hull itself.
class Polytope {
 public:
  static Polytope empty(size_t ambient_dim) {
    Polytope p;
    p.ambient_dim_ = ambient_dim;
    p.affine_dim_ = -1;
    return p;
  }

  size_t ambient_dim() const { return ambient_dim_; }
  int affine_dim() const { return affine_dim_; }
  bool is_empty() const { return affine_dim_ < 0; }

  const std::vector<Vec>& vertices() const { return vertices_; }
  const std::vector<Vec>& points() const { return points_; }
  const std::vector<Halfspace>& facets() const { return facets_; }
  const std::vector<Hyperplane>& equations() const { return equations_; }
  const IndexSubset& local_coordinates() const { return local_; }

  bool contains(const Vec& x) const {
    if (is_empty() || x.size() != ambient_dim_) return false;
    for (const auto& e : equations_)
      if (dot(e.normal, x) != e.offset) return false;
    for (const auto& f : facets_)
      if (dot(f.normal, x) > f.offset) return false;
    return true;
  }

  bool contains(const Polytope& other) const {
    if (other.is_empty()) return true;
    for (const auto& v : other.vertices_)
      if (!contains(v)) return false;
    return true;
  }

  bool is_tight(const Halfspace& f, const Vec& x) const { return dot(f.normal, x) == f.offset; }

  /// Indices of the facets containing x.
  std::vector<size_t> tight_facets(const Vec& x) const {
    std::vector<size_t> out;
    for (size_t i = 0; i < facets_.size(); ++i)
      if (is_tight(facets_[i], x)) out.push_back(i);
    return out;
  }

  size_t vertex_index(const Vec& v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) throw std::out_of_range("not a vertex: " + to_string(v));
    return static_cast<size_t>(it - vertices_.begin());
  }

  bool has_vertex(const Vec& v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }

  // Geometric equality: same ambient space and vertex set.
  bool operator==(const Polytope& o) const {
    return ambient_dim_ == o.ambient_dim_ && affine_dim_ == o.affine_dim_ &&
           vertices_ == o.vertices_;
  }

 private:
  friend Polytope hull(std::vector<Vec> points);

  size_t ambient_dim_ = 0;
  int affine_dim_ = -1;
  std::vector<Vec> vertices_;
  std::vector<Vec> points_;
  std::vector<Halfspace> facets_;
  std::vector<Hyperplane> equations_;
  IndexSubset local_;
};

/// Convex hull. Facets are found by brute force over affinely spanning
/// subsets of the input, which is exact and adequate for a few dozen points
/// in dimension <= 6.
inline Polytope hull(std::vector<Vec> points) {
  if (points.empty()) throw std::invalid_argument("hull: empty point list");
  const size_t m = points[0].size();
  for (const auto& p : points)
    if (p.size() != m) throw std::invalid_argument("hull: points of mixed dimension");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  Polytope P;
  P.ambient_dim_ = m;
  P.points_ = points;
  const Vec& base = points[0];

  std::vector<Vec> diffs;
  for (size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - base);
  const Matrix dmat = Matrix::from_rows(diffs, m);
  const auto echelon = rref(dmat);
  const size_t k = echelon.pivots.size();
  P.affine_dim_ = static_cast<int>(k);
  P.local_ = IndexSubset(echelon.pivots);

  for (const auto& c : kernel_basis(dmat)) {
    Vec n = primitive(c);
    P.equations_.push_back({n, dot(n, base)});
  }
  std::sort(P.equations_.begin(), P.equations_.end());

  if (k == 0) {
    P.vertices_ = {base};
    return P;
  }

  std::vector<Vec> local;
  for (const auto& p : points) {
    Vec y(k);
    for (size_t j = 0; j < k; ++j) y[j] = p[echelon.pivots[j]];
    local.push_back(std::move(y));
  }

  std::set<std::pair<Vec, Rat>> found;
  if (k == 1) {
    Rat lo = local[0][0], hi = lo;
    for (const auto& y : local) {
      if (y[0] < lo) lo = y[0];
      if (y[0] > hi) hi = y[0];
    }
    found.insert({Vec{Rat(1)}, hi});
    found.insert({Vec{Rat(-1)}, -lo});
  } else {
    for_each_combination(local.size(), k, [&](const std::vector<size_t>& c) {
      std::vector<Vec> rows;
      for (size_t j = 1; j < k; ++j) rows.push_back(local[c[j]] - local[c[0]]);
      auto ker = kernel_basis(Matrix::from_rows(rows, k));
      if (ker.size() != 1) return;
      Vec a = primitive(ker[0]);
      const Rat b = dot(a, local[c[0]]);
      bool pos = false, neg = false;
      for (const auto& y : local) {
        Rat v = dot(a, y);
        if (v > b) pos = true;
        if (v < b) neg = true;
        if (pos && neg) return;
      }
      if (pos) {
        for (auto& x : a) x = -x;
        found.insert({a, -b});
      } else {
        found.insert({a, b});
      }
    });
  }

  for (const auto& [a, b] : found) {
    Vec normal(m);
    for (size_t j = 0; j < k; ++j) normal[echelon.pivots[j]] = a[j];
    P.facets_.push_back({normal, b});
  }

  for (size_t i = 0; i < points.size(); ++i) {
    std::vector<Vec> normals;
    for (const auto& [a, b] : found)
      if (dot(a, local[i]) == b) normals.push_back(a);
    if (rank(normals, k) == k) P.vertices_.push_back(points[i]);
  }
  return P;
}

/// All 1-faces. A vertex pair spans an edge iff the facets containing both
/// have normals of rank affine_dim - 1.
inline std::vector<Edge> edges(const Polytope& P) {
  std::vector<Edge> out;
  if (P.affine_dim() < 1) return out;
  const auto& V = P.vertices();
  if (P.affine_dim() == 1) {
    out.push_back({0, 1});
    return out;
  }
  const size_t k = static_cast<size_t>(P.affine_dim());
  std::vector<std::vector<size_t>> tight;
  for (const auto& v : V) tight.push_back(P.tight_facets(v));
  for (size_t i = 0; i < V.size(); ++i)
    for (size_t j = i + 1; j < V.size(); ++j) {
      std::vector<size_t> common;
      std::set_intersection(tight[i].begin(), tight[i].end(), tight[j].begin(), tight[j].end(),
                            std::back_inserter(common));
      if (common.size() + 1 < k) continue;
      std::vector<Vec> normals;
      for (size_t f : common) normals.push_back(P.facets()[f].normal);
      if (rank(normals, P.ambient_dim()) == k - 1) out.push_back({i, j});
    }
  return out;
}

/// Image under a linear map; the generating configuration is mapped too.
inline Polytope linear_image(const Matrix& map, const Polytope& P) {
  if (map.cols() != P.ambient_dim())
    throw std::invalid_argument("linear_image: map does not match ambient dimension");
  if (P.is_empty()) return Polytope::empty(map.rows());
  std::vector<Vec> img;
  for (const auto& p : P.points()) img.push_back(map * p);
  return hull(std::move(img));
}

/// Lattice-normalized volume of the simplex on `verts` (affinely independent
/// integer points): the index of the lattice spanned by the edge vectors in
/// Z^m intersected with their span.
inline Int simplex_volume(const std::vector<Vec>& verts) {
  if (verts.size() <= 1) return 0;
  std::vector<Vec> diffs;
  for (size_t i = 1; i < verts.size(); ++i) diffs.push_back(verts[i] - verts[0]);
  if (rank(diffs, verts[0].size()) != diffs.size()) return 0;
  Int vol = 1;
  for (const auto& d : elementary_divisors(to_int_matrix(diffs))) vol *= d;
  return vol;
}

/// Pulling triangulation from the first vertex, recursing into the facets
/// that avoid it. Simplices are returned as vertex lists.
inline std::vector<std::vector<Vec>> triangulate(const Polytope& P) {
  std::vector<std::vector<Vec>> out;
  if (P.is_empty()) return out;
  const auto& V = P.vertices();
  if (P.affine_dim() == 0) return {{V[0]}};
  if (P.affine_dim() == 1) return {{V[0], V[1]}};
  const Vec& apex = V[0];
  for (const auto& f : P.facets()) {
    if (P.is_tight(f, apex)) continue;
    std::vector<Vec> on;
    for (const auto& v : V)
      if (P.is_tight(f, v)) on.push_back(v);
    for (auto& s : triangulate(hull(on))) {
      s.push_back(apex);
      out.push_back(std::move(s));
    }
  }
  return out;
}

inline Int normalized_volume(const Polytope& P) {
  if (P.affine_dim() <= 0) return 0;
  for (const auto& v : P.vertices())
    if (!is_integral(v)) throw std::invalid_argument("normalized_volume: non-integral vertex");
  Int total = 0;
  for (const auto& s : triangulate(P)) total += simplex_volume(s);
  return total;
}

/// Integer points of P by exact membership over the bounding box.
inline std::vector<Vec> lattice_points(const Polytope& P) {
  std::vector<Vec> out;
  if (P.is_empty()) return out;
  const size_t m = P.ambient_dim();
  std::vector<Int> lo(m), hi(m);
  for (size_t j = 0; j < m; ++j) {
    Rat mn = P.vertices()[0][j], mx = mn;
    for (const auto& v : P.vertices()) {
      if (v[j] < mn) mn = v[j];
      if (v[j] > mx) mx = v[j];
    }
    mpz_cdiv_q(lo[j].get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
    mpz_fdiv_q(hi[j].get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
    if (lo[j] > hi[j]) return out;
  }
  std::vector<Int> cur = lo;
  while (true) {
    Vec x(m);
    for (size_t j = 0; j < m; ++j) x[j] = Rat(cur[j]);
    if (P.contains(x)) out.push_back(std::move(x));
    size_t j = 0;
    while (j < m && cur[j] == hi[j]) {
      cur[j] = lo[j];
      ++j;
    }
    if (j == m) break;
    ++cur[j];
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Intersection of two polytopes: vertices are the feasible points where the
/// combined constraint system has a unique solution.
inline Polytope intersect(const Polytope& P, const Polytope& Q) {
  if (P.ambient_dim() != Q.ambient_dim())
    throw std::invalid_argument("intersect: ambient dimensions differ");
  const size_t m = P.ambient_dim();
  if (P.is_empty() || Q.is_empty()) return Polytope::empty(m);

  std::vector<Vec> eq_rows;
  Vec eq_rhs;
  for (const auto* X : {&P, &Q})
    for (const auto& e : X->equations()) {
      eq_rows.push_back(e.normal);
      eq_rhs.push_back(e.offset);
    }
  std::vector<Halfspace> ineqs = P.facets();
  ineqs.insert(ineqs.end(), Q.facets().begin(), Q.facets().end());
  std::sort(ineqs.begin(), ineqs.end());
  ineqs.erase(std::unique(ineqs.begin(), ineqs.end()), ineqs.end());

  const size_t eq_rank = rank(eq_rows, m);
  if (eq_rank > m) return Polytope::empty(m);
  const size_t need = m - eq_rank;

  std::vector<Vec> found;
  auto feasible = [&](const Vec& x) {
    for (size_t i = 0; i < eq_rows.size(); ++i)
      if (dot(eq_rows[i], x) != eq_rhs[i]) return false;
    for (const auto& h : ineqs)
      if (dot(h.normal, x) > h.offset) return false;
    return true;
  };
  for_each_combination(ineqs.size(), need, [&](const std::vector<size_t>& c) {
    std::vector<Vec> rows = eq_rows;
    Vec rhs = eq_rhs;
    for (size_t i : c) {
      rows.push_back(ineqs[i].normal);
      rhs.push_back(ineqs[i].offset);
    }
    auto x = solve_unique(Matrix::from_rows(rows, m), rhs);
    if (x && feasible(*x)) found.push_back(std::move(*x));
  });
  if (found.empty()) return Polytope::empty(m);
  return hull(std::move(found));
}

/// True iff F (contained in P) equals the smallest face of P containing it.
inline bool is_face(const Polytope& F, const Polytope& P) {
  if (F.is_empty()) return true;
  if (!P.contains(F)) return false;
  std::vector<size_t> common;
  bool first = true;
  for (const auto& v : F.vertices()) {
    auto t = P.tight_facets(v);
    if (first) {
      common = t;
      first = false;
    } else {
      std::vector<size_t> next;
      std::set_intersection(common.begin(), common.end(), t.begin(), t.end(),
                            std::back_inserter(next));
      common = std::move(next);
    }
  }
  std::vector<Vec> face_vertices;
  for (const auto& v : P.vertices()) {
    bool on = true;
    for (size_t f : common)
      if (!P.is_tight(P.facets()[f], v)) {
        on = false;
        break;
      }
    if (on) face_vertices.push_back(v);
  }
  return face_vertices == F.vertices();
}

/// True iff P and Q meet in a common face of both (the empty set counts).
inline bool is_common_face(const Polytope& P, const Polytope& Q) {
  const Polytope I = intersect(P, Q);
  return is_face(I, P) && is_face(I, Q);
}

}  // namespace polychow

#endif  // POLYCHOW_POLYTOPE_HPP
