#pragma once

#include "zastava/character.hpp"
#include "zastava/stalks.hpp"

namespace zastava {

/// Dimension bounds and component counts for intersections of semi-infinite
/// orbits, reported at the level of the representation theory that counts
/// them.
struct MVReport {
  Coweight nu;
  std::optional<Coweight> lambda;
  Rational dim_bound;
  Int component_count = 0;
  std::string note;
};

/// <nu + lambda, rho_G> as an exact rational (computed against 2*rho).
inline Rational mv_dim_bound(const ParabolicData& pd, const Coweight& nu, const Coweight& lambda) {
  if (!pd.datum.is_dominant(lambda)) throw std::invalid_argument("mv_dim_bound: lambda is not dominant");
  if (!pd.is_levi_dominant(nu)) throw std::invalid_argument("mv_dim_bound: nu is not Levi-dominant");
  return Rational(pd.datum.pairing(nu + lambda, pd.datum.two_rho()), 2);
}

/// Number of top-dimensional components: the multiplicity of the Levi
/// irreducible nu inside the restriction of the ambient irreducible lambda.
inline Int mv_component_count(const ParabolicData& pd, const Coweight& nu, const Coweight& lambda) {
  if (!pd.datum.is_dominant(lambda)) throw std::invalid_argument("mv_component_count: lambda is not dominant");
  if (!pd.is_levi_dominant(nu)) throw std::invalid_argument("mv_component_count: nu is not Levi-dominant");
  for (auto& [hw, m] : branch_to_levi(pd, lambda))
    if (hw == nu) return m;
  return 0;
}

/// Top-dimensional components of the intersection with the opposite
/// unipotent orbit: the multiplicity of nu in the enveloping algebra of u,
/// truncated to the block of its own degree (each block is
/// finite-dimensional, so the truncation is exact).
inline MVReport semiinf_component_count(const ParabolicData& pd, const Coweight& nu) {
  if (!pd.is_levi_dominant(nu)) throw std::invalid_argument("semiinf_component_count: nu is not Levi-dominant");
  MVReport rep;
  rep.nu = nu;
  rep.dim_bound = Rational(pd.datum.pairing(nu, pd.datum.two_rho()), 2);
  Theta theta = pd.project(nu);
  if (!theta_nonneg(theta)) {
    rep.component_count = 0;
    rep.note = "projection of nu lies outside the positive cone";
    return rep;
  }
  Character block;
  block.tag = pd.levi;
  for (const Character& c : u_env_graded(pd, theta))
    for (auto& [w, m] : c.weights) block.add(w, m);
  for (auto& [hw, m] : decompose(pd.datum, block))
    if (hw == nu) rep.component_count = m;
  return rep;
}

/// The two sides of the stable-limit identification at the Borel: the weight
/// multiplicity of nu-mu in the irreducible with highest weight -w0(mu), and
/// the dimension of the nu weight space of the enveloping algebra of the full
/// nilpotent radical. Equal once mu is deep enough; both values are returned
/// regardless.
struct StableLimit {
  Int weight_space_dim = 0;
  Int env_dim = 0;
  bool equal = false;
};

inline StableLimit stable_limit_check(const RootDatum& rd, const Coweight& nu, const Coweight& mu) {
  if (!rd.is_dominant(mu)) throw std::invalid_argument("stable_limit_check: mu is not dominant");
  if (!theta_nonneg(nu.c)) throw std::invalid_argument("stable_limit_check: nu outside the positive cone");
  StableLimit out;
  Coweight lam = Int(-1) * rd.longest_element_action(rd.all_indices(), mu);
  Character V = irreducible_character(rd, rd.all_indices(), lam);
  out.weight_space_dim = V.mult(nu - mu);

  ParabolicData borel(rd, {});
  out.env_dim = u_env_dim(borel, borel.project(nu));
  out.equal = out.weight_space_dim == out.env_dim;
  return out;
}

/// Operational depth: mu is deep enough once every simple pairing reaches the
/// height of nu.
inline Coweight deep_dominant(const RootDatum& rd, Int depth) {
  // scan integer coweights in a growing box for a dominant one with all
  // simple pairings >= depth and minimal height
  for (Int bound = 1; bound <= 8 * (depth + 1); ++bound) {
    std::optional<Coweight> best;
    Vec cur(rd.rank, 0);
    while (true) {
      Coweight cw{Vec(rd.total_rank(), 0)};
      for (int i = 0; i < rd.rank; ++i) cw.c[i] = cur[i];
      bool ok = true;
      for (int i = 0; i < rd.rank && ok; ++i)
        if (rd.pair_with_simple_root(cw, i) < depth) ok = false;
      if (ok && (!best || cw.height() < best->height())) best = cw;
      int i = 0;
      while (i < rd.rank && cur[i] == bound) cur[i++] = 0;
      if (i == rd.rank) break;
      ++cur[i];
    }
    if (best) return *best;
  }
  throw std::logic_error("deep_dominant: no dominant coweight found in scan range");
}

/// Minimal-height integer coweight central for the Levi and strictly
/// dominant across the quotient: pairs to zero with the Levi simple roots
/// and to at least `depth` with the others.
inline Coweight wall_vector(const ParabolicData& pd, Int depth) {
  const RootDatum& rd = pd.datum;
  for (Int bound = 1; bound <= 8 * (depth + 1); ++bound) {
    std::optional<Coweight> best;
    Vec cur(rd.rank, 0);
    while (true) {
      Coweight cw{Vec(rd.total_rank(), 0)};
      for (int i = 0; i < rd.rank; ++i) cw.c[i] = cur[i];
      bool ok = true;
      for (int i : pd.levi)
        if (rd.pair_with_simple_root(cw, i) != 0) { ok = false; break; }
      if (ok)
        for (int j : pd.non_levi)
          if (rd.pair_with_simple_root(cw, j) < depth) { ok = false; break; }
      if (ok && (!best || cw.height() < best->height())) best = cw;
      int i = 0;
      while (i < rd.rank && cur[i] == bound) cur[i++] = 0;
      if (i == rd.rank) break;
      ++cur[i];
    }
    if (best) return *best;
  }
  throw std::logic_error("wall_vector: no wall-dominant coweight found in scan range");
}

/// General-parabolic stabilized count: the multiplicity of the shifted Levi
/// irreducible nu - mu' in the restriction of the ambient irreducible
/// -w0(mu'), for mu' central in the Levi and deep on its wall. Stabilizes to
/// semiinf_component_count(nu).
inline Int shifted_component_count(const ParabolicData& pd, const Coweight& nu, const Coweight& mu_wall) {
  Coweight lam = Int(-1) * pd.datum.longest_element_action(pd.datum.all_indices(), mu_wall);
  if (!pd.datum.is_dominant(lam)) throw std::invalid_argument("shifted_component_count: -w0(mu') is not dominant");
  return mv_component_count(pd, nu - mu_wall, lam);
}

}  // namespace zastava
