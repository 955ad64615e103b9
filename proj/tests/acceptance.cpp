// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "polychow/golden.hpp"
#include "polychow/grassmann.hpp"

using namespace polychow;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void run(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  const bool in_time = secs < limit_s;
  const bool pass = o.ok && in_time;
  if (!pass) ++failures;
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(3);
  line << (pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " [" << secs << "s / limit " << limit_s
       << "s]";
  if (!in_time) line << " over time limit";
  if (!o.detail.empty()) line << " -- " << o.detail;
  std::cout << line.str() << std::endl;
}

// Golden checks of one section, filtered by name.
Outcome golden(const std::string& section, const std::function<bool(const std::string&)>& keep) {
  static const json g = json::parse(default_golden_json());
  Outcome o;
  size_t n = 0;
  for (const auto& c : verify_examples(g, section)) {
    if (!keep(c.name)) continue;
    ++n;
    if (!c.passed) {
      o.ok = false;
      o.detail += "[" + c.name + ": " + c.detail + "] ";
    }
  }
  if (n == 0) {
    o.ok = false;
    o.detail = "no checks ran";
  }
  if (o.ok) o.detail = std::to_string(n) + " checks";
  return o;
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

bool is_relation_check(const std::string& name) {
  return starts_with(name, "lift") || name.find("divisible") != std::string::npos ||
         name.find("relation") != std::string::npos || name == "substituted products";
}

void check(bool cond, const std::string& what, Outcome& o) {
  if (!cond) {
    o.ok = false;
    o.detail += what + "; ";
  }
}

}  // namespace

int main() {
  run(1, "Gr(2,4), blocks (1,1,1,1): 3 triangulations, char vectors, 6 lattice points", 1.0, [] {
    Outcome o = golden("3.1", [](const std::string& n) { return !is_relation_check(n) && !starts_with(n, "reduced"); });
    // independent of the golden file
    const auto A = weight_config(2, BlockStructure::trivial(4));
    check(enumerate_triangulations(A).size() == 3, "count", o);
    check(lattice_points(secondary_polytope(A)).size() == 6, "lattice points", o);
    return o;
  });

  run(2, "Gr(2,4), blocks (1,1,2): 8 triangulations, v1..v4 and w1..w4, two parallel squares", 5.0,
      [] { return golden("3.2", [](const std::string& n) { return !is_relation_check(n); }); });

  run(3, "Gr(2,4), blocks (2,2): 5 triangulations, cone over a tetrahedron", 1.0, [] {
    return golden("3.3", [](const std::string& n) {
      return n == "triangulation count" || n == "char vectors" || n == "cone over a tetrahedron";
    });
  });

  run(4, "Delta(3,5) under (1,2,2): image multiset, 4 hull vertices, (1,1,1) inside an edge", 5.0,
      [] { return golden("fig1", [](const std::string&) { return true; }); });

  run(5, "exchange goldens", 5.0, [] {
    Outcome o = golden("exchange", [](const std::string& n) { return starts_with(n, "check_exchange"); });
    check(check_exchange(std::set<CountVector>{{1, 1, 1}, {1, 2, 0}}), "segment", o);
    check(!check_exchange(std::set<CountVector>{{1, 2, 0}, {1, 0, 2}, {0, 1, 2}, {0, 2, 1}}), "trapezoid", o);
    return o;
  });

  run(6, "exchange <=> polymatroid polytope, all candidate sets, m <= 3, d <= 3, caps <= 2", 120.0, [] {
    Outcome o;
    size_t sets = 0, positive = 0;
    for (size_t m = 1; m <= 3; ++m) {
      std::vector<int> caps(m, 1);
      while (true) {
        const BlockStructure r(caps);
        for (int d = 0; d <= 3; ++d) {
          if (static_cast<size_t>(d) > r.n()) continue;
          const auto cands = oracle::box_points(m, d, caps);
          for (unsigned long mask = 1; mask < (1ul << cands.size()); ++mask) {
            std::set<CountVector> B;
            for (size_t k = 0; k < cands.size(); ++k)
              if (mask >> k & 1) B.insert(cands[k]);
            const bool ex = check_exchange(B);
            const bool poly = is_polymatroid_polytope(base_polytope(B), static_cast<size_t>(d), r);
            ++sets;
            if (ex) ++positive;
            if (ex != poly) {
              o.ok = false;
              if (o.detail.size() < 400) o.detail += "mismatch caps " + r.to_string() + " d " + std::to_string(d) + "; ";
            }
          }
        }
        size_t i = 0;
        while (i < m && caps[i] == 2) caps[i++] = 1;
        if (i == m) break;
        ++caps[i];
      }
    }
    if (o.ok) o.detail = std::to_string(sets) + " sets, " + std::to_string(positive) + " polymatroids";
    return o;
  });

  run(7, "orbit polytope = projected support matroid polytope, multiplicity 1", 60.0, [] {
    Outcome o;
    std::mt19937_64 rng(7);
    size_t matrices = 0, small_matrices = 0, pairs = 0, lower_dim = 0;
    for (const auto& [d, n] : std::vector<std::pair<size_t, size_t>>{{2, 4}, {2, 5}, {3, 5}}) {
      for (int t = 0; t < 60; ++t) {
        // entries in [-9, 9]; every third sample in {-1, 0, 1} so that non-uniform supports occur
        const bool small = t % 3 == 2;
        Matrix M = small ? random_matrix(rng, d, n, -1, 1) : random_full_rank_matrix(rng, d, n);
        if (small && rank(M) < d) continue;
        ++(small ? small_matrices : matrices);
        const Matroid SM = support_matroid(M);
        for (const auto& r : compositions(n, 4)) {
          ++pairs;
          check(orbit_polytope(M, r) == base_polytope(project_matroid(SM, r)), "polytope mismatch", o);
          const auto idx = multiplicity_index(M, r);
          if (!idx) {
            check(small, "lower-dimensional orbit from a [-9,9] sample", o);
            ++lower_dim;
            continue;
          }
          check(*idx == 1, "multiplicity " + idx->get_str(), o);
        }
      }
    }
    check(matrices >= 100, "too few matrices", o);
    if (o.ok)
      o.detail = std::to_string(matrices) + " matrices in [-9,9] plus " + std::to_string(small_matrices) +
                 " in [-1,1], " + std::to_string(pairs) + " (M, r) pairs, " +
                 std::to_string(lower_dim) + " lower-dimensional orbits of [-1,1] samples skipped for the index";
    return o;
  });

  run(8, "relation lifts, divisibility by the Plucker relation, balanced identity report", 10.0, [] {
    Outcome o;
    for (const auto* s : {"3.1", "3.2", "3.3"}) {
      Outcome part = golden(s, is_relation_check);
      o.ok = o.ok && part.ok;
      o.detail += std::string(s) + ": " + part.detail + "; ";
    }
    const auto rep = verify_balanced_identity();
    check(rep.quartic_divisible, "quartic", o);
    check(rep.printed_degree_mismatch, "printed relation not flagged", o);
    return o;
  });

  run(9, "volume identity for n <= 6, both signs; matrix maps match matroid minors", 120.0, [] {
    Outcome o;
    size_t sides = 0, degenerate = 0;
    for (size_t n = 2; n <= 6; ++n)
      for (const auto& r : compositions(n, n)) {
        if (r.m() < 2) continue;
        for (size_t d = 1; d < n; ++d)
          for (size_t i = 0; i < r.m(); ++i) {
            const auto v = volume_identity_check(d, r, i);
            if (!v.plus_defined && !v.minus_defined) {
              ++degenerate;
              continue;
            }
            sides += v.plus_defined + v.minus_defined;
            if (!v.holds()) {
              o.ok = false;
              if (o.detail.size() < 400)
                o.detail += "d " + std::to_string(d) + " r " + r.to_string() + " i " + std::to_string(i) + "; ";
            }
          }
      }
    std::mt19937_64 rng(9);
    size_t agreed = 0, skipped = 0;
    for (const auto& [d, n] : std::vector<std::pair<size_t, size_t>>{{2, 4}, {2, 5}, {3, 5}, {3, 6}, {4, 6}})
      for (int t = 0; t < 8; ++t) {
        const Matrix M = random_full_rank_matrix(rng, d, n);
        const Matroid SM = support_matroid(M);
        for (size_t k = 1; k < d; ++k)
          for (const auto& I : k_subsets(n, k)) {
            try {
              const Matroid cut = support_matroid(intersect_with_coordinate_subspace(M, I));
              const Matroid proj = support_matroid(project_away(M, I));
              check(cut == contract(SM, I), "contract", o);
              check(proj == delete_elements(SM, I), "delete", o);
              ++agreed;
            } catch (const NonGeneric&) {
              ++skipped;
            }
          }
      }
    check(agreed >= 100, "too few generic samples", o);
    if (o.ok)
      o.detail = std::to_string(sides) + " identity sides (" + std::to_string(degenerate) +
                 " cases with both sides degenerate skipped), " + std::to_string(agreed) + " minor samples (" +
                 std::to_string(skipped) + " non-generic skipped)";
    return o;
  });

  run(10, "dual involution, Gale duality, GL_d x S invariance", 60.0, [] {
    Outcome o;
    // every polymatroid with m <= 3 blocks, caps <= 2
    size_t polys = 0;
    for (const auto& caps : std::vector<std::vector<int>>{{2, 2}, {1, 2, 2}, {2, 2, 2}, {1, 1, 2}})
      for (int d = 1; d <= 3; ++d) {
        const auto cands = oracle::box_points(caps.size(), d, caps);
        for (unsigned long mask = 1; mask < (1ul << cands.size()); ++mask) {
          std::set<CountVector> B;
          for (size_t k = 0; k < cands.size(); ++k)
            if (mask >> k & 1) B.insert(cands[k]);
          if (!check_exchange(B)) continue;
          const Polymatroid P(caps, B);
          ++polys;
          check(dual(dual(P)) == P, "involution", o);
          check(check_exchange(dual(P)), "dual not a polymatroid", o);
        }
      }
    std::mt19937_64 rng(10);
    size_t gale = 0;
    for (const auto& [d, n] : std::vector<std::pair<size_t, size_t>>{{2, 4}, {2, 5}, {3, 5}, {2, 6}, {3, 6}})
      for (int t = 0; t < 8; ++t) {
        Matrix M = random_matrix(rng, d, n, -2, 2);
        if (rank(M) < d) continue;
        const Matroid SM = support_matroid(M), SG = support_matroid(gale_dual(M));
        for (const auto& r : compositions(n, 3)) {
          ++gale;
          check(project_matroid(SG, r) == dual(project_matroid(SM, r)), "gale " + r.to_string(), o);
        }
      }
    size_t gm = 0;
    std::uniform_int_distribution<long> nz(1, 5), sign(0, 1);
    while (gm < 100) {
      const size_t d = 2 + gm % 2, n = 5;
      const Matrix M = random_full_rank_matrix(rng, d, n);
      const auto rs = compositions(n, 4);
      const BlockStructure& r = rs[gm % rs.size()];
      const Matrix g = random_full_rank_matrix(rng, d, d);
      std::vector<Rat> scales;
      for (size_t b = 0; b < r.m(); ++b) scales.push_back(make_rat((sign(rng) ? 1 : -1) * nz(rng), nz(rng)));
      check(gm_invariance_report(M, r, g, scales), "gm", o);
      ++gm;
    }
    if (o.ok)
      o.detail = std::to_string(polys) + " polymatroids, " + std::to_string(gale) + " Gale pairs, " +
                 std::to_string(gm) + " GM samples";
    return o;
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
