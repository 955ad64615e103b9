#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "polychow/blocks.hpp"
#include "polychow/grassmann.hpp"
#include "polychow/polytope.hpp"

using namespace polychow;

namespace {

Vec V(std::vector<long> xs) { return to_vec(xs); }

std::vector<Vec> permutations_of(std::vector<long> v) {
  std::sort(v.begin(), v.end());
  std::vector<Vec> out;
  do out.push_back(V(v));
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::set<std::pair<Vec, Vec>> edge_pairs(const Polytope& P) {
  std::set<std::pair<Vec, Vec>> out;
  for (const auto& e : edges(P)) {
    Vec a = P.vertices()[e.a], b = P.vertices()[e.b];
    if (b < a) std::swap(a, b);
    out.insert({a, b});
  }
  return out;
}

const std::vector<Vec> kTrapezoid{V({1, 2, 0}), V({1, 0, 2}), V({0, 1, 2}), V({0, 2, 1}), V({1, 1, 1})};

}  // namespace

TEST(Hull, Octahedron) {
  const Polytope P = hull(permutations_of({1, 1, 0, 0}));
  EXPECT_EQ(P.vertices().size(), 6u);
  EXPECT_EQ(P.affine_dim(), 3);
  EXPECT_EQ(P.facets().size(), 8u);
  EXPECT_EQ(P.equations().size(), 1u);
}

TEST(Hull, TrapezoidDropsInteriorEdgePoint) {
  const Polytope P = hull(kTrapezoid);
  EXPECT_EQ(P.vertices().size(), 4u);
  EXPECT_FALSE(P.has_vertex(V({1, 1, 1})));
  EXPECT_TRUE(P.contains(V({1, 1, 1})));
  EXPECT_EQ(P.affine_dim(), 2);
}

TEST(Hull, SinglePointAndDuplicates) {
  const Polytope P = hull({V({3, -1}), V({3, -1})});
  EXPECT_EQ(P.affine_dim(), 0);
  EXPECT_EQ(P.vertices().size(), 1u);
  EXPECT_TRUE(edges(P).empty());
}

TEST(Hull, RationalPoints) {
  const Polytope P = hull({{make_rat(1, 2), Rat(0)}, {Rat(0), make_rat(1, 3)}, {Rat(0), Rat(0)}});
  EXPECT_EQ(P.vertices().size(), 3u);
  EXPECT_TRUE(P.contains(Vec{make_rat(1, 4), make_rat(1, 6)}));
  EXPECT_FALSE(P.contains(Vec{make_rat(1, 4), make_rat(1, 5)}));
  EXPECT_THROW(normalized_volume(P), std::invalid_argument);
}

TEST(Hull, FacetNormalsArePrimitiveAndVerticesTight) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 25; ++t) {
    std::vector<Vec> pts;
    const size_t dim = 2 + rng() % 2;
    for (int k = 0; k < 7; ++k) {
      Vec p;
      for (size_t i = 0; i < dim; ++i) p.push_back(Rat(static_cast<long>(rng() % 5)));
      pts.push_back(p);
    }
    const Polytope P = hull(pts);
    for (const auto& f : P.facets()) {
      EXPECT_EQ(primitive(f.normal), f.normal);
      for (const auto& x : f.normal) EXPECT_TRUE(is_integer(x));
    }
    for (const auto& v : P.vertices()) EXPECT_GE(P.tight_facets(v).size(), static_cast<size_t>(P.affine_dim()));
    for (const auto& p : pts) EXPECT_TRUE(P.contains(p));
    // idempotence
    EXPECT_EQ(hull(P.vertices()), P);
    EXPECT_EQ(hull(P.vertices()).facets(), P.facets());
  }
}

TEST(Edges, OctahedronMatchesFunctionalOracle) {
  const Polytope P = hypersimplex(2, 4);
  const auto E = edges(P);
  EXPECT_EQ(E.size(), 12u);
  for (const auto& e : E) {
    Vec a = P.vertices()[e.a], b = P.vertices()[e.b];
    Rat common = 0;
    for (size_t i = 0; i < 4; ++i) common += a[i] * b[i];
    EXPECT_EQ(common, 1);  // |A ∩ B| = 1
  }
}

TEST(Edges, HypersimplicesAgreeWithOracleExhaustively) {
  for (size_t n = 2; n <= 6; ++n)
    for (size_t d = 1; d <= std::min<size_t>(3, n - 1); ++d) {
      const Polytope P = hypersimplex(d, n);
      std::set<std::pair<Vec, Vec>> expect;
      for (const auto& [A, B] : oracle::hypersimplex_edges_by_functionals(d, n)) {
        Vec a = indicator(A, n), b = indicator(B, n);
        if (b < a) std::swap(a, b);
        expect.insert({a, b});
      }
      EXPECT_EQ(edge_pairs(P), expect) << "d=" << d << " n=" << n;
    }
}

TEST(Edges, TrapezoidAndSegment) {
  const Polytope T = hull(kTrapezoid);
  EXPECT_EQ(edges(T).size(), 4u);
  EXPECT_EQ(edges(hull({V({0, 0}), V({2, 2})})).size(), 1u);
}

TEST(LinearImage, IdentityAndProjections) {
  const Polytope P = hypersimplex(2, 4);
  EXPECT_EQ(linear_image(Matrix::identity(4), P), P);
  const BlockStructure r({1, 2, 2});
  const Polytope T = linear_image(r.projection_matrix(), hypersimplex(3, 5));
  EXPECT_EQ(T, hull({V({1, 2, 0}), V({1, 0, 2}), V({0, 1, 2}), V({0, 2, 1})}));
  const Polytope S = linear_image(BlockStructure({2, 2}).projection_matrix(), P);
  EXPECT_EQ(S, hull({V({2, 0}), V({0, 2})}));
  EXPECT_THROW(linear_image(Matrix::identity(3), P), std::invalid_argument);
}

TEST(LinearImage, CommutesWithHull) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 20; ++t) {
    std::vector<Vec> X;
    for (int k = 0; k < 6; ++k) X.push_back(V({long(rng() % 4), long(rng() % 4), long(rng() % 4)}));
    Matrix L = random_matrix(rng, 2, 3, -2, 2);
    std::vector<Vec> img;
    for (const auto& x : X) img.push_back(L * x);
    EXPECT_EQ(linear_image(L, hull(X)), hull(img));
  }
}

TEST(Volume, SpecExamples) {
  for (size_t k = 1; k <= 4; ++k) {
    std::vector<Vec> pts{Vec(k, Rat(0))};
    for (size_t i = 0; i < k; ++i) {
      Vec e(k, Rat(0));
      e[i] = 1;
      pts.push_back(e);
    }
    EXPECT_EQ(normalized_volume(hull(pts)), 1) << k;
  }
  EXPECT_EQ(normalized_volume(hypersimplex(2, 4)), 4);
  EXPECT_EQ(normalized_volume(hull({V({2, 0}), V({0, 2})})), 2);
  EXPECT_EQ(normalized_volume(hull({V({5, 5})})), 0);
}

TEST(Volume, HypersimplexEulerianNumbers) {
  // vol Delta(d, n) is the Eulerian number A(n-1, d-1)
  EXPECT_EQ(normalized_volume(hypersimplex(2, 5)), 11);
  EXPECT_EQ(normalized_volume(hypersimplex(3, 6)), 66);
  EXPECT_EQ(normalized_volume(hypersimplex(2, 6)), 26);
  EXPECT_EQ(normalized_volume(hypersimplex(1, 6)), 1);
}

TEST(Volume, RelativeLatticeAndAdditivity) {
  // a square with side 2 tilted inside R^3
  const Polytope Q = hull({V({0, 0, 0}), V({2, 0, 0}), V({0, 2, 2}), V({2, 2, 2})});
  EXPECT_EQ(Q.affine_dim(), 2);
  EXPECT_EQ(normalized_volume(Q), 8);
  Int sum = 0;
  for (const auto& s : triangulate(Q)) sum += simplex_volume(s);
  EXPECT_EQ(sum, 8);
}

TEST(LatticePoints, SpecExamples) {
  const auto seg = lattice_points(hull({V({0, 0}), V({2, 2})}));
  EXPECT_EQ(seg, (std::vector<Vec>{V({0, 0}), V({1, 1}), V({2, 2})}));
  const auto tri = lattice_points(hull({V({4, 4, 2, 2, 2, 2}), V({2, 2, 4, 4, 2, 2}), V({2, 2, 2, 2, 4, 4})}));
  EXPECT_EQ(tri.size(), 6u);
  const auto trap = lattice_points(hull(kTrapezoid));
  EXPECT_NE(std::find(trap.begin(), trap.end(), V({1, 1, 1})), trap.end());
  EXPECT_EQ(trap.size(), 5u);
}

TEST(LatticePoints, AgreeWithBoxOracleForPolymatroids) {
  const Polytope P = projected_hypersimplex(3, BlockStructure({1, 2, 2}));
  size_t count = 0;
  for (const auto& v : oracle::box_points(3, 3, {1, 2, 2}))
    if (P.contains(to_vec(v))) ++count;
  EXPECT_EQ(lattice_points(P).size(), count);
}

TEST(Intersect, SpecExamples) {
  const Polytope sq = hull({V({0, 0}), V({1, 0}), V({0, 1}), V({1, 1})});
  EXPECT_EQ(intersect(sq, sq), sq);
  const Polytope t1 = hull({V({0, 0}), V({1, 0}), V({1, 1})});
  const Polytope t2 = hull({V({0, 0}), V({0, 1}), V({1, 1})});
  EXPECT_EQ(intersect(t1, t2), hull({V({0, 0}), V({1, 1})}));
  const Polytope far = hull({V({3, 0}), V({4, 0}), V({3, 1}), V({4, 1})});
  EXPECT_TRUE(intersect(sq, far).is_empty());
  EXPECT_EQ(intersect(sq, far).affine_dim(), -1);
}

TEST(Intersect, LowerDimensionalPieces) {
  const Polytope seg = hull({V({0, 0}), V({2, 2})});
  const Polytope other = hull({V({0, 2}), V({2, 0})});
  EXPECT_EQ(intersect(seg, other), hull({V({1, 1})}));
  const Polytope sq = hull({V({0, 0}), V({2, 0}), V({0, 2}), V({2, 2})});
  EXPECT_EQ(intersect(sq, hull({V({1, -1}), V({1, 3})})), hull({V({1, 0}), V({1, 2})}));
}

TEST(CommonFace, SpecExamples) {
  const Polytope t1 = hull({V({0, 0}), V({1, 0}), V({1, 1})});
  const Polytope t2 = hull({V({0, 0}), V({0, 1}), V({1, 1})});
  EXPECT_TRUE(is_common_face(t1, t2));
  const Polytope t3 = hull({V({0, 0}), V({1, 0}), V({0, 1})});
  EXPECT_FALSE(is_common_face(t1, t3));
  const Polytope sq = hull({V({0, 0}), V({1, 0}), V({0, 1}), V({1, 1})});
  EXPECT_TRUE(is_common_face(sq, hull({V({0, 0}), V({1, 0})})));
  // a segment through the interior is not a face
  EXPECT_FALSE(is_common_face(sq, hull({V({0, 0}), V({1, 1})})));
  // disjoint: the empty set is a face of both
  EXPECT_TRUE(is_common_face(sq, hull({V({5, 5})})));
}

TEST(CommonFace, PartialEdgeOverlapIsNotAFace) {
  const Polytope a = hull({V({0, 0}), V({2, 0}), V({1, 1})});
  const Polytope b = hull({V({1, 0}), V({3, 0}), V({2, -1})});
  EXPECT_FALSE(is_common_face(a, b));
}
