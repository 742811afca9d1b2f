#pragma once

#include <deque>
#include <map>

#include "zastava/partitions.hpp"
#include "zastava/root_datum.hpp"

namespace zastava {

/// Exact character of a module for the dual group of the Levi on `tag`
/// (tag = all simple indices for the full group). Weights of dual-side
/// modules are coweights here; stored sparsely, multiplicities positive.
struct Character {
  std::map<Coweight, Int> weights;
  std::vector<int> tag;  // sorted simple indices generating the acting group

  Int dim() const {
    Int d = 0;
    for (auto& [w, m] : weights) d += m;
    return d;
  }

  Int mult(const Coweight& w) const {
    auto it = weights.find(w);
    return it == weights.end() ? 0 : it->second;
  }

  bool empty() const { return weights.empty(); }

  void add(const Coweight& w, Int m) {
    if (m == 0) return;
    auto it = weights.find(w);
    if (it == weights.end()) {
      weights.emplace(w, m);
    } else {
      it->second += m;
      if (it->second == 0) weights.erase(it);
    }
  }

  friend bool operator==(const Character& a, const Character& b) {
    return a.weights == b.weights && a.tag == b.tag;
  }
};

namespace detail {

inline void check_same_tag(const Character& a, const Character& b) {
  if (a.tag != b.tag) throw std::invalid_argument("characters carry different group tags");
}

inline void check_no_torus(const RootDatum& rd, const Coweight& w) {
  if (rd.has_torus_component(w.c))
    throw std::invalid_argument(
        "weight has central-torus components; character calculus works in the semisimple block "
        "(torus factors only affect lattices)");
}

/// Integer Weyl-invariant form on the span of the simple coroots:
/// B[i][j] = d_j * cartan[i][j], symmetrized and scaled to integers.
inline std::vector<Vec> invariant_form(const RootDatum& rd) {
  auto d = detail::symmetrizer(rd.cartan);
  Int lcm = 1;
  for (auto& x : d) lcm = std::lcm(lcm, x.den);
  std::vector<Vec> B(rd.rank, Vec(rd.rank));
  for (int i = 0; i < rd.rank; ++i)
    for (int j = 0; j < rd.rank; ++j) {
      Rational v = d[j] * Rational(rd.cartan[i][j] * lcm);
      if (!v.is_integer()) throw std::logic_error("invariant form failed to clear denominators");
      B[i][j] = v.num;
    }
  return B;
}

inline Int form_ip(const std::vector<Vec>& B, const Vec& x, const Vec& y) {
  Int s = 0;
  int n = (int)B.size();
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n; ++j) s += B[i][j] * x[i] * y[j];
  }
  return s;
}

}  // namespace detail

/// Weight multiplicities of the irreducible with highest weight `hw`
/// (dominant for the Levi on `tag`), by the Freudenthal recursion run inside
/// the Levi subsystem. Exact integer arithmetic throughout; the recursion's
/// divisions are asserted exact.
inline Character irreducible_character(const RootDatum& rd, const std::vector<int>& tag,
                                       const Coweight& hw) {
  detail::check_no_torus(rd, hw);
  if (!rd.is_dominant(hw, tag))
    throw std::invalid_argument("irreducible_character: highest weight is not dominant for the tag");

  Character out;
  out.tag = tag;
  const auto pos = rd.positive_coroots_of(tag);
  const auto B = detail::invariant_form(rd);
  const int n = rd.rank;
  const int tot = rd.total_rank();

  // all recursion bookkeeping lives in the semisimple block
  const Vec lam(hw.c.begin(), hw.c.begin() + n);

  // 2*rho of the Levi subsystem on the dual side = sum of its positive coroots
  Vec two_rho_d(n, 0);
  for (const Coweight& g : pos)
    for (int i = 0; i < n; ++i) two_rho_d[i] += g.c[i];

  auto shifted = [&](const Vec& mu) {  // 2*(mu + rho)
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = 2 * mu[i] + two_rho_d[i];
    return v;
  };
  const Vec lam_sh = shifted(lam);
  const Int top_norm = detail::form_ip(B, lam_sh, lam_sh);

  // candidate weights: hw minus nonnegative combinations of the Levi simple
  // coroots, pruned by |2(mu+rho)|^2 <= |2(hw+rho)|^2, generated by height
  std::map<Vec, Int> mults;
  std::vector<Vec> order;
  std::deque<Vec> frontier;
  mults[lam] = 1;
  order.push_back(lam);
  frontier.push_back(lam);
  std::map<Vec, bool> seen;
  seen[lam] = true;
  while (!frontier.empty()) {
    Vec x = frontier.front();
    frontier.pop_front();
    for (int i : tag) {
      Vec y = x;
      y[i] -= 1;
      if (seen.count(y)) continue;
      seen[y] = true;
      Vec ysh = shifted(y);
      if (detail::form_ip(B, ysh, ysh) > top_norm) continue;
      order.push_back(y);
      frontier.push_back(y);
    }
  }
  std::sort(order.begin() + 1, order.end(), [](const Vec& a, const Vec& b) {
    return graded_lex_less(b, a);  // descending height below the highest weight
  });

  for (size_t oi = 1; oi < order.size(); ++oi) {
    const Vec& mu = order[oi];
    // numerator: 2 * sum_{gamma>0} sum_{k>=1} mult(mu+k*gamma) * B(mu+k*gamma, gamma)
    // computed with the doubled vectors so everything stays integral:
    // B(2(mu+k*gamma), 2*gamma) = 4 * B(mu+k*gamma, gamma)
    Int acc4 = 0;
    for (const Coweight& g : pos) {
      Vec g2(n);
      for (int i = 0; i < n; ++i) g2[i] = 2 * g.c[i];
      for (Int k = 1;; ++k) {
        Vec nu(n);
        for (int i = 0; i < n; ++i) nu[i] = mu[i] + k * g.c[i];
        auto it = mults.find(nu);
        if (it == mults.end()) {
          Vec nush = shifted(nu);
          if (detail::form_ip(B, nush, nush) > top_norm) break;  // out of range for good
          continue;
        }
        Vec nu2(n);
        for (int i = 0; i < n; ++i) nu2[i] = 2 * nu[i];
        acc4 += it->second * detail::form_ip(B, nu2, g2);
      }
    }
    Vec mu_sh = shifted(mu);
    Int den4 = top_norm - detail::form_ip(B, mu_sh, mu_sh);  // 4*(|hw+rho|^2 - |mu+rho|^2)
    if (den4 == 0) continue;
    Int num4 = 2 * acc4;
    if (num4 % den4 != 0) throw std::logic_error("Freudenthal recursion produced a non-integer multiplicity");
    Int m = num4 / den4;
    if (m < 0) throw std::logic_error("Freudenthal recursion produced a negative multiplicity");
    if (m > 0) mults[mu] = m;
  }

  for (auto& [v, m] : mults) {
    Vec full(tot, 0);
    for (int i = 0; i < n; ++i) full[i] = v[i];
    out.add(Coweight(full), m);
  }
  return out;
}

/// dim of the irreducible with highest weight hw via the Weyl product formula;
/// independent of the Freudenthal path, used as a cross-check.
inline Int weyl_dimension(const RootDatum& rd, const std::vector<int>& tag, const Coweight& hw) {
  detail::check_no_torus(rd, hw);
  if (!rd.is_dominant(hw, tag))
    throw std::invalid_argument("weyl_dimension: highest weight is not dominant for the tag");
  const auto pos = rd.positive_coroots_of(tag);
  const auto B = detail::invariant_form(rd);
  const int n = rd.rank;
  Vec two_rho_d(n, 0);
  for (const Coweight& g : pos)
    for (int i = 0; i < n; ++i) two_rho_d[i] += g.c[i];
  Vec lam_sh(n);
  for (int i = 0; i < n; ++i) lam_sh[i] = 2 * hw.c[i] + two_rho_d[i];
  // accumulate the product of B(2(hw+rho), gamma) / B(2rho, gamma) with running gcd reduction
  __int128 num = 1, den = 1;
  auto reduce = [&]() {
    __int128 a = num < 0 ? -num : num, b = den;
    while (b) { __int128 t = a % b; a = b; b = t; }
    if (a > 1) { num /= a; den /= a; }
  };
  for (const Coweight& g : pos) {
    Vec gv(g.c.begin(), g.c.begin() + n);
    num *= detail::form_ip(B, lam_sh, gv);
    den *= detail::form_ip(B, two_rho_d, gv);
    reduce();
  }
  if (den != 1) throw std::logic_error("Weyl dimension product did not reduce to an integer");
  return (Int)num;
}

/// Decompose a Weyl-invariant character into irreducibles by repeatedly
/// stripping the highest dominant weight. Non-invariant input surfaces as a
/// non-dominant maximum or a negative multiplicity mid-peel.
inline std::vector<std::pair<Coweight, Int>> decompose(const RootDatum& rd, const Character& c) {
  Character rem = c;
  std::vector<std::pair<Coweight, Int>> out;
  while (!rem.weights.empty()) {
    // graded-lex maximum is maximal for the Levi dominance order
    auto best = rem.weights.begin();
    for (auto it = rem.weights.begin(); it != rem.weights.end(); ++it)
      if (graded_lex_less(best->first.c, it->first.c)) best = it;
    Coweight hw = best->first;
    Int m = best->second;
    if (!rd.is_dominant(hw, c.tag))
      throw std::invalid_argument("decompose: character is not Weyl-invariant for its tag (offending weight " +
                                  detail::vec_to_string(hw.c) + ")");
    if (m < 0)
      throw std::invalid_argument("decompose: negative multiplicity encountered at weight " +
                                  detail::vec_to_string(hw.c));
    Character irr = irreducible_character(rd, c.tag, hw);
    for (auto& [w, k] : irr.weights) rem.add(w, -m * k);
    for (auto& [w, k] : rem.weights)
      if (k < 0)
        throw std::invalid_argument("decompose: negative multiplicity encountered at weight " +
                                    detail::vec_to_string(w.c));
    out.push_back({hw, m});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return graded_lex_less(a.first.c, b.first.c); });
  return out;
}

inline Character tensor(const Character& a, const Character& b) {
  detail::check_same_tag(a, b);
  Character out;
  out.tag = a.tag;
  for (auto& [wa, ma] : a.weights)
    for (auto& [wb, mb] : b.weights) out.add(wa + wb, ma * mb);
  return out;
}

/// Adams operation: scale every weight by k.
inline Character adams(const Character& c, Int k) {
  Character out;
  out.tag = c.tag;
  for (auto& [w, m] : c.weights) out.add(k * w, m);
  return out;
}

inline Character trivial_character(const RootDatum& rd, const std::vector<int>& tag) {
  Character out;
  out.tag = tag;
  out.add(Coweight(Vec(rd.total_rank(), 0)), 1);
  return out;
}

/// n-th symmetric power through the Adams/Newton recursion
///   n * Sym^n(c) = sum_{k=1..n} psi^k(c) * Sym^{n-k}(c).
/// The division by n is exact on every weight; a remainder is a bug, not a
/// user error.
inline std::vector<Character> sym_power_tower(const RootDatum& rd, const Character& c, Int n) {
  std::vector<Character> tower;
  tower.push_back(trivial_character(rd, c.tag));
  std::vector<Character> psi;  // psi[k-1] = adams(c, k)
  for (Int k = 1; k <= n; ++k) psi.push_back(adams(c, k));
  for (Int m = 1; m <= n; ++m) {
    Character acc;
    acc.tag = c.tag;
    for (Int k = 1; k <= m; ++k)
      for (auto& [w, mu] : tensor(psi[k - 1], tower[m - k]).weights) acc.add(w, mu);
    Character sm;
    sm.tag = c.tag;
    for (auto& [w, mu] : acc.weights) {
      if (mu % m != 0)
        throw std::logic_error("sym_power: Adams recursion division was not exact (invariant violation)");
      sm.add(w, mu / m);
    }
    tower.push_back(std::move(sm));
  }
  return tower;
}

inline Character sym_power(const RootDatum& rd, const Character& c, Int n) {
  if (n < 0) throw std::invalid_argument("sym_power: negative exponent");
  return sym_power_tower(rd, c, n)[n];
}

/// The dual nilpotent radical as a module for the dual Levi, graded by the
/// quotient lattice: weights are the positive coroots outside the Levi, each
/// with multiplicity one, keyed by their projections.
struct ThetaGradedCharacter {
  std::map<Theta, Character> components;

  Int total_dim() const {
    Int d = 0;
    for (auto& [t, c] : components) d += c.dim();
    return d;
  }
};

inline ThetaGradedCharacter u_module(const ParabolicData& pd) {
  ThetaGradedCharacter out;
  for (const Coweight& g : pd.coroots_outside_levi()) {
    Theta t = pd.project(g);
    auto it = out.components.find(t);
    if (it == out.components.end()) {
      Character c;
      c.tag = pd.levi;
      out.components.emplace(t, std::move(c));
      it = out.components.find(t);
    }
    it->second.add(g, 1);
  }
  return out;
}

/// Full character of the dual nilpotent radical (all components together).
inline Character u_module_character(const ParabolicData& pd) {
  Character c;
  c.tag = pd.levi;
  for (const Coweight& g : pd.coroots_outside_levi()) c.add(g, 1);
  return c;
}

/// Slice of a Levi-tagged character by the quotient grading.
inline Character theta_component(const ParabolicData& pd, const Character& c, const Theta& theta) {
  pd.check_theta(theta);
  Character out;
  out.tag = c.tag;
  for (auto& [w, m] : c.weights)
    if (pd.project(w) == theta) out.add(w, m);
  return out;
}

/// Restriction to the Levi on any subset (the full set and the empty set are
/// allowed here): retag the ambient character and peel. The multiplicity of
/// nu is dim Hom over the dual Levi into the restriction.
inline std::vector<std::pair<Coweight, Int>> branch_to_levi(const RootDatum& rd,
                                                            const std::vector<int>& subset,
                                                            const Coweight& hw) {
  Character c = irreducible_character(rd, rd.all_indices(), hw);
  c.tag = subset;
  return decompose(rd, c);
}

inline std::vector<std::pair<Coweight, Int>> branch_to_levi(const ParabolicData& pd, const Coweight& hw) {
  return branch_to_levi(pd.datum, pd.levi, hw);
}

/// Graded pieces Sym^i(u)_theta for i = 0..i_max. Components vanish for
/// i > height(theta) because every weight of u has quotient height >= 1,
/// so the default cutoff is exact.
inline std::vector<Character> u_env_graded(const ParabolicData& pd, const Theta& theta, Int i_max = -1) {
  pd.check_theta(theta);
  if (!theta_nonneg(theta)) throw std::invalid_argument("u_env_graded: theta outside the positive cone");
  Int cutoff = theta_height(theta);
  if (i_max < 0) i_max = cutoff;
  if (i_max < cutoff)
    throw std::invalid_argument("u_env_graded: i_max below the height bound loses components");
  Character u = u_module_character(pd);
  auto tower = sym_power_tower(pd.datum, u, i_max);
  std::vector<Character> out;
  for (Int i = 0; i <= i_max; ++i) out.push_back(theta_component(pd, tower[i], theta));
  return out;
}

/// dim U(u)_theta = sum_i dim Sym^i(u)_theta.
inline Int u_env_dim(const ParabolicData& pd, const Theta& theta) {
  Int d = 0;
  for (const Character& c : u_env_graded(pd, theta)) d += c.dim();
  return d;
}

}  // namespace zastava
