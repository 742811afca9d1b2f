#pragma once

#include "zastava/principal_sl2.hpp"

namespace zastava {

/// Laurent polynomial in v with nonnegative integer coefficients. The
/// variable convention used everywhere: one power of v stands for a combined
/// half-twist and shift, so a summand W(i)[2i] contributes dim(W) * v^(2i)
/// and a graded piece W_n in degree n contributes dim(W_n) * v^(-n).
struct StalkPolynomial {
  std::map<Int, Int> coeffs;  // exponent -> coefficient

  static StalkPolynomial one() {
    StalkPolynomial p;
    p.coeffs[0] = 1;
    return p;
  }
  static StalkPolynomial monomial(Int exp, Int c = 1) {
    StalkPolynomial p;
    if (c != 0) p.coeffs[exp] = c;
    return p;
  }

  void add(Int exp, Int c) {
    if (c == 0) return;
    coeffs[exp] += c;
    if (coeffs[exp] == 0) coeffs.erase(exp);
  }

  Int coeff(Int exp) const {
    auto it = coeffs.find(exp);
    return it == coeffs.end() ? 0 : it->second;
  }

  bool is_zero() const { return coeffs.empty(); }

  Int eval_at_one() const {
    Int s = 0;
    for (auto& [e, c] : coeffs) s += c;
    return s;
  }

  friend StalkPolynomial operator+(const StalkPolynomial& a, const StalkPolynomial& b) {
    StalkPolynomial r = a;
    for (auto& [e, c] : b.coeffs) r.add(e, c);
    return r;
  }
  friend StalkPolynomial operator*(const StalkPolynomial& a, const StalkPolynomial& b) {
    StalkPolynomial r;
    for (auto& [ea, ca] : a.coeffs)
      for (auto& [eb, cb] : b.coeffs) r.add(ea + eb, ca * cb);
    return r;
  }
  friend bool operator==(const StalkPolynomial& a, const StalkPolynomial& b) { return a.coeffs == b.coeffs; }

  StalkPolynomial shifted(Int k) const {  // multiply by v^k
    StalkPolynomial r;
    for (auto& [e, c] : coeffs) r.coeffs[e + k] = c;
    return r;
  }

  StalkPolynomial pow(Int n) const {
    StalkPolynomial r = one();
    for (Int k = 0; k < n; ++k) r = r * (*this);
    return r;
  }

  /// coefficientwise a <= b
  static bool dominated(const StalkPolynomial& a, const StalkPolynomial& b) {
    for (auto& [e, c] : a.coeffs)
      if (c > b.coeff(e)) return false;
    return true;
  }
};

/// v-polynomial of a graded space: degree n contributes v^(-n).
inline StalkPolynomial poly_of_graded(const GradedDims& g) {
  StalkPolynomial p;
  for (auto& [d, m] : g) p.add(-d, m);
  return p;
}

/// One isotypic summand: the label of a dual-Levi irreducible, its
/// multiplicity, and the attached v-exponent.
struct TwistedTerm {
  Coweight hw;
  Int mult;
  Int exp;
};

struct TwistedDecomposition {
  std::vector<TwistedTerm> terms;  // sorted by (exp, hw)

  void sort() {
    std::sort(terms.begin(), terms.end(), [](const TwistedTerm& a, const TwistedTerm& b) {
      if (a.exp != b.exp) return a.exp < b.exp;
      return graded_lex_less(a.hw.c, b.hw.c);
    });
  }

  Int total_mult() const {
    Int s = 0;
    for (auto& t : terms) s += t.mult;
    return s;
  }
};

namespace detail {

/// Decompose the tower sum_i Sym^i(u)_theta, attaching exponent 2i to the
/// pieces born in symmetric degree i.
inline TwistedDecomposition sym_tower_decomposition(const ParabolicData& pd, const Theta& theta) {
  TwistedDecomposition out;
  auto tower = u_env_graded(pd, theta);
  for (size_t i = 0; i < tower.size(); ++i) {
    if (tower[i].empty()) continue;
    for (auto& [hw, m] : decompose(pd.datum, tower[i]))
      out.terms.push_back({hw, m, 2 * (Int)i});
  }
  out.sort();
  return out;
}

}  // namespace detail

/// Stalk data for the relative compactification on a stratum indexed by a
/// decomposition: one twisted isotypic decomposition per part occurrence
/// (a part of multiplicity n appears n times), with the global normalization
/// exponent carried separately. Normalization is 0 here: the twist outside
/// the localized factor cancels against the one inside it.
struct CanonicalStalkReport {
  VectorPartition decomposition;
  std::vector<std::pair<Theta, TwistedDecomposition>> factors;
  Int normalization = 0;
};

inline CanonicalStalkReport bunpw_stalk(const ParabolicData& pd, const VectorPartition& A) {
  // validate the decomposition
  Theta sum(A.total.size(), 0);
  for (auto& [p, n] : A.parts) {
    if (theta_zero(p) || !theta_nonneg(p) || n <= 0)
      throw std::invalid_argument("bunpw_stalk: invalid decomposition part");
    for (size_t i = 0; i < sum.size(); ++i) sum[i] += n * p[i];
  }
  if (sum != A.total) throw std::invalid_argument("bunpw_stalk: parts do not sum to the total");
  pd.check_theta(A.total);

  CanonicalStalkReport rep;
  rep.decomposition = A;
  rep.normalization = 0;
  std::map<Theta, TwistedDecomposition> cache;
  for (auto& [p, n] : A.parts) {
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, detail::sym_tower_decomposition(pd, p)).first;
    for (Int k = 0; k < n; ++k) rep.factors.push_back({p, it->second});
  }
  return rep;
}

/// Numeric evaluation of a canonical-stalk report: each term contributes
/// mult * dim(hw) * v^exp, factors multiply, then the normalization shift.
inline StalkPolynomial bunpw_eval(const ParabolicData& pd, const CanonicalStalkReport& rep) {
  StalkPolynomial prod = StalkPolynomial::one();
  for (auto& [theta, dec] : rep.factors) {
    StalkPolynomial f;
    for (auto& t : dec.terms) f.add(t.exp, t.mult * weyl_dimension(pd.datum, pd.levi, t.hw));
    prod = prod * f;
  }
  return prod.shifted(rep.normalization);
}

/// Hyperbolic restriction data at a point of the quotient degree theta:
/// the isotypic decomposition of Sym(u)_theta (exponents 0, overall
/// normalization -1), plus the same module computed along the independent
/// factorized route, which the enveloping-side identification must match.
struct HyperbolicReport {
  TwistedDecomposition sym_side;
  TwistedDecomposition env_side;
  Int normalization = -1;
};

inline HyperbolicReport bunpw_hyperbolic(const ParabolicData& pd, const Theta& theta) {
  pd.check_theta(theta);
  if (!theta_nonneg(theta)) throw std::invalid_argument("bunpw_hyperbolic: theta outside the positive cone");
  HyperbolicReport rep;

  Character total;
  total.tag = pd.levi;
  for (const Character& c : u_env_graded(pd, theta))
    for (auto& [w, m] : c.weights) total.add(w, m);
  for (auto& [hw, m] : decompose(pd.datum, total)) rep.sym_side.terms.push_back({hw, m, 0});
  rep.sym_side.sort();

  // independent route: sum over partitions of the products of per-part
  // symmetric powers of the graded pieces of u
  auto u = u_module(pd);
  Character other;
  other.tag = pd.levi;
  for (const VectorPartition& P : enumerate_coroot_partitions(pd, theta)) {
    Character prod = trivial_character(pd.datum, pd.levi);
    for (auto& [p, n] : P.parts) {
      auto it = u.components.find(p);
      if (it == u.components.end()) { prod.weights.clear(); break; }
      prod = tensor(prod, sym_power(pd.datum, it->second, n));
    }
    for (auto& [w, m] : prod.weights) other.add(w, m);
  }
  for (auto& [hw, m] : decompose(pd.datum, other)) rep.env_side.terms.push_back({hw, m, 0});
  rep.env_side.sort();

  auto same = [](const TwistedDecomposition& a, const TwistedDecomposition& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (size_t i = 0; i < a.terms.size(); ++i)
      if (!(a.terms[i].hw == b.terms[i].hw) || a.terms[i].mult != b.terms[i].mult ||
          a.terms[i].exp != b.terms[i].exp)
        return false;
    return true;
  };
  if (!same(rep.sym_side, rep.env_side))
    throw std::logic_error("bunpw_hyperbolic: symmetric and enveloping routes disagree (invariant violation)");
  return rep;
}

/// Local-model data at degree theta: the model dimension (pairing of the
/// canonical lift with the doubled rho difference) and one summand per
/// partition, placed at shift -|P|.
struct ZastavaReport {
  Int dim = 0;
  std::vector<std::pair<VectorPartition, Int>> summands;  // (partition, shift)
};

inline Int zastava_dim(const ParabolicData& pd, const Theta& theta) {
  pd.check_theta(theta);
  Weight diff = pd.datum.two_rho() - pd.two_rho_levi();
  return pd.datum.pairing(pd.lift(theta), diff);
}

inline ZastavaReport zastava_data(const ParabolicData& pd, const Theta& theta) {
  if (!theta_nonneg(theta)) throw std::invalid_argument("zastava_data: theta outside the positive cone");
  ZastavaReport rep;
  rep.dim = zastava_dim(pd, theta);
  if (rep.dim < 0) throw std::logic_error("zastava_data: negative model dimension (invariant violation)");
  for (const VectorPartition& P : enumerate_coroot_partitions(pd, theta))
    rep.summands.push_back({P, -P.size()});
  return rep;
}

/// Stalk polynomial of the naive compactification on the stratum of a
/// decomposition, relative to the IC of the stratum:
///   prod_k [ sum_i poly(Sym^i(n^f)_{theta_k}) v^(2i) ]^(n_k) * v^(-|A|).
inline StalkPolynomial bunp_naive_stalk(const ParabolicData& pd, const VectorPartition& A,
                                        SymConvention conv = SymConvention::Plain) {
  Theta sum(A.total.size(), 0);
  for (auto& [p, n] : A.parts) {
    if (theta_zero(p) || !theta_nonneg(p) || n <= 0)
      throw std::invalid_argument("bunp_naive_stalk: invalid decomposition part");
    for (size_t i = 0; i < sum.size(); ++i) sum[i] += n * p[i];
  }
  if (sum != A.total) throw std::invalid_argument("bunp_naive_stalk: parts do not sum to the total");
  pd.check_theta(A.total);

  auto nf = n_f(pd);
  StalkPolynomial prod = StalkPolynomial::one();
  for (auto& [p, n] : A.parts) {
    StalkPolynomial f;
    for (Int i = 0; i <= theta_height(p); ++i) {
      GradedDims s = sym_bigraded(nf, p, i, conv);
      if (s.empty()) continue;
      f = f + poly_of_graded(s).shifted(2 * i);
    }
    prod = prod * f.pow(n);
  }
  return prod.shifted(-A.size());
}

/// Pushforward stalk at a configuration of distinct points: one summand per
/// partition, with generic-fiber polynomial
///   prod_k poly(principal profile of u_{theta_k})^(n_k) * v^(2|P|).
struct PushforwardReport {
  std::vector<std::pair<VectorPartition, StalkPolynomial>> summands;
};

inline PushforwardReport pushforward_stalk(const ParabolicData& pd, const Theta& theta) {
  pd.check_theta(theta);
  if (!theta_nonneg(theta)) throw std::invalid_argument("pushforward_stalk: theta outside the positive cone");
  auto u = u_module(pd);
  PushforwardReport rep;
  for (const VectorPartition& P : enumerate_coroot_partitions(pd, theta)) {
    StalkPolynomial prod = StalkPolynomial::one();
    for (auto& [p, n] : P.parts) {
      auto it = u.components.find(p);
      if (it == u.components.end()) throw std::logic_error("pushforward_stalk: partition part without a u-component");
      StalkPolynomial f = poly_of_graded(principal_grading(pd, it->second));
      prod = prod * f.pow(n);
    }
    rep.summands.push_back({P, prod.shifted(2 * P.size())});
  }
  return rep;
}

/// Assemble the pushforward stalk at the fully collided configuration: the
/// per-part symmetric powers are taken as symmetric powers of graded spaces,
/// which acquire alternating signs in odd degrees (their diagonal stalks do,
/// whatever convention the naive-stalk side runs under). Units: relative to
/// the product of the plain stratum sheaf with the open-part IC.
inline StalkPolynomial pushforward_diagonal_stalk(const ParabolicData& pd, const Theta& theta) {
  pd.check_theta(theta);
  auto u = u_module(pd);
  StalkPolynomial total;
  for (const VectorPartition& P : enumerate_coroot_partitions(pd, theta)) {
    StalkPolynomial prod = StalkPolynomial::one();
    for (auto& [p, n] : P.parts) {
      auto it = u.components.find(p);
      if (it == u.components.end()) throw std::logic_error("pushforward stalk: missing u-component");
      BiGradedDims line;  // single block carrying the principal profile of u_p
      line.by_theta[p] = principal_grading(pd, it->second);
      Theta target(p.size());
      for (size_t k = 0; k < p.size(); ++k) target[k] = n * p[k];
      prod = prod * poly_of_graded(sym_bigraded(line, target, n, SymConvention::Signed));
    }
    total = total + prod.shifted(2 * P.size());
  }
  return total;
}

/// Check that the naive-compactification stalk embeds in the pushforward
/// stalk assembled at the main diagonal (both sides in stratum-sheaf units).
/// The embedding is a direct-summand bound, so the comparison is
/// coefficientwise. Runs under the Signed convention on both sides, which is
/// the one the diagonal assembly itself forces.
struct SummandCheck {
  bool ok = false;
  StalkPolynomial lhs;  // naive IC stalk, stratum-sheaf units
  StalkPolynomial rhs;  // pushforward diagonal stalk, same units
};

inline SummandCheck ic_summand_check(const ParabolicData& pd, const Theta& theta) {
  pd.check_theta(theta);
  if (!theta_nonneg(theta)) throw std::invalid_argument("ic_summand_check: theta outside the positive cone");
  SummandCheck out;
  VectorPartition A0 = trivial_decomposition(theta);
  // bunp_naive_stalk is relative to the stratum IC; multiply by v^{|A0|}
  // to express it in the same units as the diagonal assembly.
  out.lhs = bunp_naive_stalk(pd, A0, SymConvention::Signed).shifted(A0.size());
  out.rhs = pushforward_diagonal_stalk(pd, theta);
  out.ok = StalkPolynomial::dominated(out.lhs, out.rhs);
  return out;
}

}  // namespace zastava
