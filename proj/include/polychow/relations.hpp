#ifndef POLYCHOW_RELATIONS_HPP
#define POLYCHOW_RELATIONS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polychow/grassmann.hpp"
#include "polychow/rational.hpp"
#include "polychow/secondary.hpp"
#include "polychow/subsets.hpp"

namespace polychow {

using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
  int s = 0;
  for (int x : e) s += x;
  return s;
}

/// Degree-lexicographic order, earlier variables heavier.
struct DegLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(Exponents e) : exps_(std::move(e)) {
    for (int x : exps_)
      if (x < 0) throw std::invalid_argument("Monomial: negative exponent");
  }
  static Monomial one(size_t nvars) { return Monomial(Exponents(nvars, 0)); }

  const Exponents& exponents() const { return exps_; }
  size_t nvars() const { return exps_.size(); }
  int degree() const { return total_degree(exps_); }

  bool divides(const Monomial& o) const {
    if (o.nvars() != nvars()) return false;
    for (size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > o.exps_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("Monomial: ring mismatch");
    Exponents e(a.nvars());
    for (size_t i = 0; i < e.size(); ++i) e[i] = a.exps_[i] + b.exps_[i];
    return Monomial(std::move(e));
  }

  /// Exact quotient a / b; b must divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    if (!b.divides(a)) throw std::invalid_argument("Monomial: inexact division");
    Exponents e(a.nvars());
    for (size_t i = 0; i < e.size(); ++i) e[i] = a.exps_[i] - b.exps_[i];
    return Monomial(std::move(e));
  }

  auto operator<=>(const Monomial&) const = default;

 private:
  Exponents exps_;
};

/// Sparse polynomial over Q in a fixed, named list of variables.
class MultiPoly {
 public:
  using Terms = std::map<Exponents, Rat, DegLexLess>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(std::vector<std::string> vars, const Rat& c) {
    MultiPoly p(std::move(vars));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
  }

  static MultiPoly variable(std::vector<std::string> vars, size_t i) {
    MultiPoly p(std::move(vars));
    Exponents e(p.vars_.size(), 0);
    e.at(i) = 1;
    p.add_term(e, 1);
    return p;
  }

  static MultiPoly variable(const std::vector<std::string>& vars, const std::string& name) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw std::invalid_argument("MultiPoly: unknown variable " + name);
    return variable(vars, static_cast<size_t>(it - vars.begin()));
  }

  static MultiPoly from_monomial(std::vector<std::string> vars, const Monomial& m, const Rat& c = 1) {
    if (m.nvars() != vars.size()) throw std::invalid_argument("MultiPoly: monomial arity");
    MultiPoly p(std::move(vars));
    p.add_term(m.exponents(), c);
    return p;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add_term(const Exponents& e, const Rat& c) {
    if (e.size() != vars_.size()) throw std::invalid_argument("MultiPoly: exponent arity");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Leading term in degree-lex order. Requires a nonzero polynomial.
  std::pair<Exponents, Rat> leading() const {
    if (terms_.empty()) throw std::logic_error("MultiPoly: zero has no leading term");
    return *terms_.rbegin();
  }

  std::set<int> degrees() const {
    std::set<int> out;
    for (const auto& [e, c] : terms_) out.insert(total_degree(e));
    return out;
  }

  bool is_homogeneous() const { return degrees().size() <= 1; }

  Rat evaluate(const std::vector<Rat>& at) const {
    if (at.size() != vars_.size()) throw std::invalid_argument("MultiPoly: evaluation arity");
    Rat total = 0;
    for (const auto& [e, c] : terms_) {
      Rat t = c;
      for (size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) t *= at[i];
      total += t;
    }
    return total;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(const MultiPoly& a) { return a * Rat(-1); }

  friend MultiPoly operator*(const MultiPoly& a, const Rat& s) {
    MultiPoly out(a.vars_);
    for (const auto& [e, c] : a.terms_) out.add_term(e, c * s);
    return out;
  }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_ring(b);
    MultiPoly out(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(ea.size());
        for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }

  friend MultiPoly operator*(const MultiPoly& a, const Monomial& m) {
    return a * from_monomial(a.vars_, m);
  }

  MultiPoly pow(unsigned k) const {
    MultiPoly out = constant(vars_, 1);
    for (unsigned i = 0; i < k; ++i) out = out * *this;
    return out;
  }

  bool operator==(const MultiPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Rat mag = abs(c);
      if (first) {
        if (c < 0) s += "-";
      } else {
        s += c < 0 ? " - " : " + ";
      }
      first = false;
      std::string mono;
      for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) {
        s += polychow::to_string(mag);
      } else {
        if (mag != 1) s += polychow::to_string(mag) + "*";
        s += mono;
      }
    }
    return s;
  }

 private:
  void check_ring(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("MultiPoly: variable lists differ");
  }

  std::vector<std::string> vars_;
  Terms terms_;
};

/// Replaces variable i of p by images[i] (all images share one ring).
inline MultiPoly substitute(const MultiPoly& p, const std::vector<MultiPoly>& images) {
  if (images.size() != p.vars().size()) throw std::invalid_argument("substitute: arity");
  if (images.empty()) throw std::invalid_argument("substitute: no images");
  MultiPoly out(images[0].vars());
  for (const auto& [e, c] : p.terms()) {
    MultiPoly t = MultiPoly::constant(images[0].vars(), c);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) t = t * images[i].pow(static_cast<unsigned>(e[i]));
    out += t;
  }
  return out;
}

/// Replaces each term's monomial by its image under `images`, which must
/// cover every monomial occurring in p (e.g. x^2 -> m1, x*y -> m4).
inline MultiPoly map_monomials(const MultiPoly& p, const std::vector<std::string>& target_vars,
                               const std::map<Exponents, MultiPoly>& images) {
  MultiPoly out(target_vars);
  for (const auto& [e, c] : p.terms()) {
    auto it = images.find(e);
    if (it == images.end()) throw std::invalid_argument("map_monomials: monomial without image");
    out += it->second * c;
  }
  return out;
}

/// Quotient p / q if q divides p exactly, by single-divisor division in
/// degree-lex order (a zero remainder is then equivalent to divisibility).
inline std::optional<MultiPoly> divides_exactly(const MultiPoly& p, const MultiPoly& q) {
  if (q.is_zero()) throw std::invalid_argument("divides_exactly: division by zero");
  if (p.vars() != q.vars()) throw std::invalid_argument("divides_exactly: variable lists differ");
  const auto [lq, lc] = q.leading();
  const Monomial lead(lq);
  MultiPoly rest = p, quotient(p.vars());
  while (!rest.is_zero()) {
    const auto [lr, rc] = rest.leading();
    const Monomial lm(lr);
    if (!lead.divides(lm)) return std::nullopt;
    const MultiPoly step = MultiPoly::from_monomial(p.vars(), lm / lead, rc / lc);
    quotient += step;
    rest -= step * q;
  }
  return quotient;
}

// ---- Plücker ring --------------------------------------------------------

inline std::vector<std::string> plucker_variables(size_t d, size_t n) {
  std::vector<std::string> out;
  for (const auto& I : k_subsets(n, d)) out.push_back("x" + I.name(n));
  return out;
}

/// x_{Sab} x_{Scd} - x_{Sac} x_{Sbd} + x_{Sad} x_{Sbc} for every (d-2)-subset S
/// and every 4-subset {a<b<c<d} of its complement; subscripts are sorted sets.
inline std::vector<MultiPoly> three_term_relations(size_t d, size_t n) {
  if (d < 2 || n < d) throw std::invalid_argument("three_term_relations: need n >= d >= 2");
  const auto vars = plucker_variables(d, n);
  const auto subs = k_subsets(n, d);
  auto x = [&](const IndexSubset& I) {
    auto it = std::lower_bound(subs.begin(), subs.end(), I);
    return MultiPoly::variable(vars, static_cast<size_t>(it - subs.begin()));
  };
  std::vector<MultiPoly> out;
  for (const auto& S : k_subsets(n, d - 2)) {
    const IndexSubset rest = S.complement(n);
    for (const auto& pos : k_subsets(rest.size(), 4)) {
      const size_t a = rest[pos[0]], b = rest[pos[1]], c = rest[pos[2]], e = rest[pos[3]];
      auto with = [&](size_t u, size_t v) { return x(S.set_union(IndexSubset{u, v})); };
      out.push_back(with(a, b) * with(c, e) - with(a, c) * with(b, e) + with(a, e) * with(b, c));
    }
  }
  return out;
}

inline Rat evaluate(const MultiPoly& p, const PluckerVector& pv) { return p.evaluate(pv.coords()); }

/// Variables "x<name>" for the labels of a named configuration.
inline std::vector<std::string> config_variables(const LabeledConfig& A) {
  std::vector<std::string> out;
  for (const auto& p : A.points()) {
    if (p.name.empty()) throw std::invalid_argument("config_variables: unnamed label");
    out.push_back("x" + p.name);
  }
  return out;
}

/// prod_I x_I^{phi(I)} over the labels of A.
inline Monomial monomial_from_vertex(const CharVector& phi, const LabeledConfig& A) {
  if (phi.size() != A.size()) throw std::invalid_argument("monomial_from_vertex: length mismatch");
  config_variables(A);  // validates names
  Exponents e;
  for (const auto& v : phi) {
    if (v < 0 || !v.fits_sint_p()) throw std::invalid_argument("monomial_from_vertex: bad exponent");
    e.push_back(static_cast<int>(v.get_si()));
  }
  return Monomial(std::move(e));
}

inline Monomial monomial_from_vertex(const Vec& phi, const LabeledConfig& A) {
  CharVector c;
  for (const auto& x : phi) {
    if (!is_integer(x)) throw std::invalid_argument("monomial_from_vertex: non-integral vertex");
    c.push_back(x.get_num());
  }
  return monomial_from_vertex(c, A);
}

/// Divides every monomial by their coordinatewise minimum.
inline std::vector<Monomial> reduce_by_common_gcd(const std::vector<Monomial>& ms) {
  if (ms.empty()) throw std::invalid_argument("reduce_by_common_gcd: empty list");
  Exponents g = ms[0].exponents();
  for (const auto& m : ms) {
    if (m.nvars() != g.size()) throw std::invalid_argument("reduce_by_common_gcd: ring mismatch");
    for (size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], m.exponents()[i]);
  }
  const Monomial common(g);
  std::vector<Monomial> out;
  for (const auto& m : ms) out.push_back(m / common);
  return out;
}

struct NamedMonomial {
  std::string name;
  Monomial monomial;
};

using LinearCombination = std::vector<std::pair<std::string, Rat>>;

/// Writes common_factor * multiplier * rel as sum_k c_k ms_k by matching
/// terms exactly. Pass the common factor that was divided out of `ms` (if
/// any) to reinstate it. Coefficients come back in the order of `ms`.
inline std::optional<LinearCombination> lift_relation(const MultiPoly& rel, const Monomial& multiplier,
                                                      const std::vector<NamedMonomial>& ms,
                                                      std::optional<Monomial> common_factor = {}) {
  MultiPoly target = rel * multiplier;
  if (common_factor) target = target * *common_factor;
  std::vector<Rat> coeff(ms.size());
  std::vector<bool> used(ms.size(), false);
  for (const auto& [e, c] : target.terms()) {
    bool matched = false;
    for (size_t k = 0; k < ms.size() && !matched; ++k)
      if (ms[k].monomial.exponents() == e) {
        coeff[k] += c;
        used[k] = true;
        matched = true;
      }
    if (!matched) return std::nullopt;
  }
  if (target.is_zero() && ms.empty()) return std::nullopt;
  LinearCombination out;
  for (size_t k = 0; k < ms.size(); ++k)
    if (used[k] && coeff[k] != 0) out.emplace_back(ms[k].name, coeff[k]);
  return out;
}

/// Re-expands a combination over named monomials into a polynomial.
inline MultiPoly expand(const LinearCombination& combo, const std::vector<NamedMonomial>& ms,
                        const std::vector<std::string>& vars) {
  MultiPoly out(vars);
  for (const auto& [name, c] : combo) {
    auto it = std::find_if(ms.begin(), ms.end(), [&](const NamedMonomial& m) { return m.name == name; });
    if (it == ms.end()) throw std::invalid_argument("expand: unknown name " + name);
    out += MultiPoly::from_monomial(vars, it->monomial, c);
  }
  return out;
}

inline std::string to_string(const LinearCombination& combo) {
  if (combo.empty()) return "0";
  std::string s;
  for (size_t k = 0; k < combo.size(); ++k) {
    const auto& [name, c] = combo[k];
    if (k == 0) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    Rat mag = abs(c);
    if (mag != 1) s += to_string(mag) + "*";
    s += name;
  }
  return s;
}

// ---- the balanced rank-two torus on Gr(2,4) ------------------------------

struct BalancedIdentityReport {
  bool quartic_divisible = false;        // quartic in p,q,r divisible by p - q + r
  MultiPoly quartic_quotient;
  bool homogeneous_divisible = false;    // m-relation with m5^4, pulled back to x
  bool printed_divisible = false;        // m-relation with m5^2, pulled back to x
  std::set<int> homogeneous_degrees;     // x-degrees of the pulled-back terms
  std::set<int> printed_degrees;
  bool printed_degree_mismatch = false;
  Rat homogeneous_at_point;              // at the Plücker vector of [[1,0,1,2],[0,1,3,4]]
  Rat printed_at_point;
  Rat homogeneous_off_grassmannian;      // at x_I = 1 for all I (not on Gr(2,4))
  MultiPoly printed_relation;            // in m1..m5
  MultiPoly homogeneous_relation;        // in m1..m5
};

/// With p = x12 x34, q = x13 x24, r = x14 x23 the Plücker relation reads
/// p - q + r = 0; squaring twice clears it of the square roots
/// sqrt(m5) = p, sqrt(m1 m4 / m5) = q, sqrt(m2 m3 / m5) = r. This checks the
/// resulting quartic and both the m5^2 and m5^4 forms of the relation among
/// m1 = x12 x13^2 x34, m2 = x12 x14^2 x34, m3 = x12 x23^2 x34,
/// m4 = x12 x24^2 x34, m5 = x12^2 x34^2.
inline BalancedIdentityReport verify_balanced_identity() {
  BalancedIdentityReport rep;

  const std::vector<std::string> pqr{"p", "q", "r"};
  const auto p = MultiPoly::variable(pqr, 0), q = MultiPoly::variable(pqr, 1), r = MultiPoly::variable(pqr, 2);
  const MultiPoly quartic = p.pow(4) + q.pow(4) + r.pow(4) - q.pow(2) * r.pow(2) * Rat(2) -
                            p.pow(2) * q.pow(2) * Rat(2) - p.pow(2) * r.pow(2) * Rat(2);
  auto qq = divides_exactly(quartic, p - q + r);
  rep.quartic_divisible = qq.has_value();
  if (qq) rep.quartic_quotient = *qq;

  const std::vector<std::string> mvars{"m1", "m2", "m3", "m4", "m5"};
  std::vector<MultiPoly> m;
  for (size_t i = 0; i < 5; ++i) m.push_back(MultiPoly::variable(mvars, i));
  auto relation = [&](unsigned m5_power) {
    return m[0].pow(2) * m[3].pow(2) + m[1].pow(2) * m[2].pow(2) + m[4].pow(m5_power) -
           m[0] * m[1] * m[2] * m[3] * Rat(2) - m[0] * m[3] * m[4].pow(2) * Rat(2) -
           m[1] * m[2] * m[4].pow(2) * Rat(2);
  };
  rep.printed_relation = relation(2);
  rep.homogeneous_relation = relation(4);

  // vertex monomials, variables x12 x13 x14 x23 x24 x34
  const auto xvars = plucker_variables(2, 4);
  const std::vector<Exponents> vertices{
      {1, 2, 0, 0, 0, 1}, {1, 0, 2, 0, 0, 1}, {1, 0, 0, 2, 0, 1}, {1, 0, 0, 0, 2, 1}, {2, 0, 0, 0, 0, 2}};
  std::vector<MultiPoly> images;
  for (const auto& e : vertices) images.push_back(MultiPoly::from_monomial(xvars, Monomial(e)));
  const MultiPoly plucker_rel = three_term_relations(2, 4).front();

  const MultiPoly hom_x = substitute(rep.homogeneous_relation, images);
  const MultiPoly printed_x = substitute(rep.printed_relation, images);
  rep.homogeneous_divisible = divides_exactly(hom_x, plucker_rel).has_value();
  rep.printed_divisible = divides_exactly(printed_x, plucker_rel).has_value();
  rep.homogeneous_degrees = hom_x.degrees();
  rep.printed_degrees = printed_x.degrees();
  rep.printed_degree_mismatch = !printed_x.is_homogeneous();

  const PluckerVector pt = plucker(Matrix::from_ints({{1, 0, 1, 2}, {0, 1, 3, 4}}));
  rep.homogeneous_at_point = evaluate(hom_x, pt);
  rep.printed_at_point = evaluate(printed_x, pt);
  rep.homogeneous_off_grassmannian = hom_x.evaluate(std::vector<Rat>(6, Rat(1)));
  return rep;
}

}  // namespace polychow

#endif  // POLYCHOW_RELATIONS_HPP
