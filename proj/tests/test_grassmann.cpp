#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "polychow/grassmann.hpp"
#include "polychow/relations.hpp"

using namespace polychow;

namespace {

Vec V(std::vector<long> xs) { return to_vec(xs); }

}  // namespace

TEST(Plucker, SpecExamples) {
  const auto p = plucker(Matrix::from_ints({{1, 0, 0, 0}, {0, 1, 0, 0}}));
  EXPECT_EQ(p.at({0, 1}), 1);
  for (const auto& I : p.subsets())
    if (I != IndexSubset{0, 1}) EXPECT_EQ(p.at(I), 0);

  const auto q = plucker(Matrix::from_ints({{1, 0, 1, 1}, {0, 1, 1, 2}}));
  EXPECT_EQ(q.coords(), (std::vector<Rat>{1, 1, 2, -1, -1, 1}));
  EXPECT_THROW(plucker(Matrix::from_ints({{1, 2, 3}, {2, 4, 6}})), RankDeficient);
}

TEST(Plucker, MatchesCofactorMinorsAndRelations) {
  std::mt19937_64 rng(31);
  for (const auto& [d, n] : std::vector<std::pair<size_t, size_t>>{{2, 4}, {2, 5}, {3, 5}, {2, 6}, {3, 6}}) {
    const auto rels = three_term_relations(d, n);
    for (int t = 0; t < 10; ++t) {
      const Matrix M = random_full_rank_matrix(rng, d, n);
      const auto p = plucker(M);
      for (const auto& I : p.subsets()) EXPECT_EQ(p.at(I), oracle::cofactor_minor(M.row_list(), I));
      for (const auto& rel : rels) EXPECT_EQ(evaluate(rel, p), 0);
    }
  }
}

TEST(SupportMatroid, SpecExamples) {
  const auto single = support_matroid(Matrix::from_ints({{1, 0, 0, 0}, {0, 1, 0, 0}}));
  EXPECT_EQ(single.bases(), (std::set<IndexSubset>{{0, 1}}));
  const auto four = support_matroid(Matrix::from_ints({{1, 0, 1, 0}, {0, 1, 0, 1}}));
  EXPECT_EQ(four.bases(), (std::set<IndexSubset>{{0, 1}, {0, 3}, {1, 2}, {2, 3}}));
  EXPECT_TRUE(four.is_valid());
  std::mt19937_64 rng(32);
  int uniform = 0;
  for (int t = 0; t < 20; ++t)
    if (support_matroid(random_full_rank_matrix(rng, 2, 4)) == Matroid::uniform(2, 4)) ++uniform;
  EXPECT_GE(uniform, 15);
}

TEST(OrbitPolytope, SpecExamples) {
  const BlockStructure r({1, 2, 2});
  const Matrix M = Matrix::from_ints({{1, 0, 0, 1, 2}, {0, 1, 0, 3, 1}, {0, 0, 1, 1, 5}});
  ASSERT_EQ(support_matroid(M), Matroid::uniform(3, 5));
  EXPECT_EQ(orbit_polytope(M, r), hull({V({1, 2, 0}), V({1, 0, 2}), V({0, 1, 2}), V({0, 2, 1})}));
  EXPECT_EQ(orbit_polytope(M, BlockStructure::trivial(5)), hypersimplex(3, 5));
}

TEST(OrbitPolytope, EqualsProjectedMatroidPolytope) {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 30; ++t) {
    // small entries make non-uniform supports common
    const Matrix M = random_matrix(rng, 2, 5, -1, 1);
    if (rank(M) < 2) continue;
    for (const auto& r : compositions(5, 3)) {
      const Polytope P = orbit_polytope(M, r);
      EXPECT_EQ(P, base_polytope(project_matroid(support_matroid(M), r)));
      EXPECT_EQ(P, linear_image(r.projection_matrix(), orbit_polytope(M, BlockStructure::trivial(5))));
    }
  }
}

TEST(GammaFace, SpecExamples) {
  EXPECT_EQ(gamma_face(2, 4, {0}, FaceSign::Plus), hull({V({1, 1, 0, 0}), V({1, 0, 1, 0}), V({1, 0, 0, 1})}));
  EXPECT_EQ(gamma_face(2, 4, {0}, FaceSign::Minus), hull({V({0, 1, 1, 0}), V({0, 1, 0, 1}), V({0, 0, 1, 1})}));
  EXPECT_EQ(gamma_face(3, 5, {0, 1}, FaceSign::Plus),
            hull({V({1, 1, 1, 0, 0}), V({1, 1, 0, 1, 0}), V({1, 1, 0, 0, 1})}));
  EXPECT_THROW(gamma_face(2, 4, {0, 1, 2}, FaceSign::Plus), std::invalid_argument);
  EXPECT_THROW(gamma_face(3, 4, {0, 1}, FaceSign::Minus), std::invalid_argument);
}

TEST(GammaFace, IsAFaceOfTheHypersimplex) {
  for (const auto& I : k_subsets(5, 2)) {
    EXPECT_TRUE(is_face(gamma_face(2, 5, I, FaceSign::Plus), hypersimplex(2, 5)));
    EXPECT_TRUE(is_face(gamma_face(2, 5, I, FaceSign::Minus), hypersimplex(2, 5)));
  }
}

TEST(Intersect, SpecExamples) {
  // rowspace{e1, e3} meets {x1 = 0} in e3, which is (0,1,0) on coordinates 2,3,4
  const Matrix M = Matrix::from_ints({{1, 0, 0, 0}, {0, 0, 1, 0}});
  const Matrix K = intersect_with_coordinate_subspace(M, {0});
  EXPECT_TRUE(same_row_space(K, Matrix::from_ints({{0, 1, 0}})));
  const Matrix G = Matrix::from_ints({{1, 0, 0, 1, 2}, {0, 1, 0, 3, 1}, {0, 0, 1, 1, 5}});
  const Matrix K2 = intersect_with_coordinate_subspace(G, {0, 1});
  EXPECT_EQ(K2.rows(), 1u);
  EXPECT_EQ(K2.cols(), 3u);
  EXPECT_EQ(rank(K2), 1u);
  EXPECT_EQ(intersect_with_coordinate_subspace(G, {}), G);
  // rowspace{e1, e2} lies inside {x3 = 0}: dimension 2 instead of 1
  EXPECT_THROW(intersect_with_coordinate_subspace(Matrix::from_ints({{1, 0, 0, 0}, {0, 1, 0, 0}}), {2}), NonGeneric);
}

TEST(ProjectAway, SpecExamples) {
  const Matrix M = Matrix::from_ints({{1, 0, 2, 3}, {0, 1, 4, 5}});
  EXPECT_EQ(project_away(M, {}), M);
  EXPECT_EQ(project_away(M, {2}), Matrix::from_ints({{1, 0, 3}, {0, 1, 5}}));
  EXPECT_THROW(project_away(Matrix::from_ints({{1, 0, 0}, {0, 1, 0}}), {0}), NonGeneric);
}

TEST(MatrixMaps, MatchMatroidMinorsOnGenericSamples) {
  std::mt19937_64 rng(34);
  size_t agreed = 0, skipped = 0;
  for (const auto& [d, n] : std::vector<std::pair<size_t, size_t>>{{2, 4}, {2, 5}, {3, 5}, {3, 6}}) {
    for (int t = 0; t < 10; ++t) {
      const Matrix M = random_full_rank_matrix(rng, d, n);
      const Matroid SM = support_matroid(M);
      for (size_t k = 1; k < d; ++k)
        for (const auto& I : k_subsets(n, k)) {
          try {
            // matrix side first: a non-generic I throws before the matroid side is reached
            const Matroid cut = support_matroid(intersect_with_coordinate_subspace(M, I));
            const Matroid proj = support_matroid(project_away(M, I));
            EXPECT_EQ(cut, contract(SM, I));
            EXPECT_EQ(proj, delete_elements(SM, I));
            ++agreed;
          } catch (const NonGeneric&) {
            ++skipped;
          }
        }
    }
  }
  EXPECT_GT(agreed, 100u);
  RecordProperty("skipped_non_generic", static_cast<int>(skipped));
}

TEST(Gale, SpecExamples) {
  const Matrix M = Matrix::from_ints({{1, 0, 2, -1}, {0, 1, 3, 5}});
  EXPECT_TRUE(same_row_space(gale_dual(M), Matrix::from_ints({{-2, -3, 1, 0}, {1, -5, 0, 1}})));
  EXPECT_THROW(gale_dual(Matrix::from_ints({{1, 1}, {2, 2}})), RankDeficient);
}

TEST(Gale, DualMatroidAndInvolution) {
  std::mt19937_64 rng(35);
  for (const auto& [d, n] : std::vector<std::pair<size_t, size_t>>{{2, 4}, {2, 5}, {3, 5}}) {
    for (int t = 0; t < 15; ++t) {
      const Matrix M = random_matrix(rng, d, n, -2, 2);
      if (rank(M) < d) continue;
      const Matrix G = gale_dual(M);
      EXPECT_EQ(G.rows(), n - d);
      EXPECT_EQ(support_matroid(G), dual(support_matroid(M)));
      EXPECT_TRUE(same_row_space(gale_dual(G), M));
      for (const auto& r : compositions(n, 3))
        EXPECT_EQ(project_matroid(support_matroid(G), r), dual(project_matroid(support_matroid(M), r)));
    }
  }
}

TEST(Decomposition, SpecExamples) {
  const Polytope sq = hull({V({0, 0}), V({1, 0}), V({0, 1}), V({1, 1})});
  EXPECT_TRUE(decomposition_check({sq}, sq));
  EXPECT_FALSE(decomposition_check({sq, sq}, sq));
  EXPECT_TRUE(decomposition_check({hull({V({0, 0}), V({1, 0}), V({1, 1})}), hull({V({0, 0}), V({0, 1}), V({1, 1})})}, sq));
  // right volume, wrong shape
  EXPECT_FALSE(decomposition_check({hull({V({0, 0}), V({1, 0}), V({1, 1})}), hull({V({0, 0}), V({1, 0}), V({0, 1})})}, sq));
}

TEST(Multiplicity, SpecExamples) {
  const Matrix M = Matrix::from_ints({{1, 0, 0, 1, 2}, {0, 1, 0, 3, 1}, {0, 0, 1, 1, 5}});
  EXPECT_EQ(multiplicity_index(M, BlockStructure({1, 2, 2})), Int(1));
  EXPECT_EQ(multiplicity_index(M, BlockStructure::trivial(5)), Int(1));
  // (1,1) is a weight inside the segment from (2,0) to (0,2)
  EXPECT_EQ(multiplicity_index(Matrix::from_ints({{1, 0, 1, 1}, {0, 1, 1, 2}}), BlockStructure({2, 2})), Int(1));
  // single basis: the orbit is a point
  EXPECT_EQ(multiplicity_index(Matrix::from_ints({{1, 0, 0, 0}, {0, 1, 0, 0}}), BlockStructure::trivial(4)),
            std::nullopt);
}

TEST(VolumeIdentity, SpecExamples) {
  const auto a = volume_identity_check(3, BlockStructure({2, 1, 1, 1}), 0);
  ASSERT_TRUE(a.plus_defined);
  EXPECT_EQ(a.plus_face_volume, 1);
  EXPECT_EQ(a.plus_reduced_volume, 1);
  EXPECT_TRUE(a.holds());
  const auto b = volume_identity_check(2, BlockStructure({1, 1, 2}), 2);
  ASSERT_TRUE(b.minus_defined);
  EXPECT_EQ(b.minus_face_volume, b.minus_reduced_volume);
  EXPECT_TRUE(b.holds());
}

TEST(VolumeIdentity, TrivialBlocksUpToSix) {
  for (size_t n = 2; n <= 6; ++n)
    for (size_t d = 1; d < n; ++d)
      for (size_t i = 0; i < n; ++i) EXPECT_TRUE(volume_identity_check(d, BlockStructure::trivial(n), i).holds());
}

TEST(GM, SpecExamples) {
  const Matrix M = Matrix::from_ints({{1, 0, 0, 1, 2}, {0, 1, 0, 3, 1}, {0, 0, 1, 1, 5}});
  const BlockStructure r({1, 2, 2});
  EXPECT_TRUE(gm_invariance_report(M, r, Matrix::identity(3), {1, 1, 1}));
  EXPECT_TRUE(gm_invariance_report(M, r, Matrix::from_ints({{2, 1, 0}, {0, 1, 0}, {1, 0, 1}}), {3, -1, make_rat(1, 2)}));
  EXPECT_THROW(gm_invariance_report(M, r, Matrix(3, 3), {1, 1, 1}), std::invalid_argument);
  EXPECT_THROW(gm_invariance_report(M, r, Matrix::identity(3), {1, 0, 1}), std::invalid_argument);
}

TEST(Compositions, Counts) {
  EXPECT_EQ(compositions(4, 4).size(), 8u);
  EXPECT_EQ(compositions(5, 4).size(), 15u);  // 16 minus (1,1,1,1,1)
  EXPECT_EQ(compositions(5, 1).size(), 1u);
}
