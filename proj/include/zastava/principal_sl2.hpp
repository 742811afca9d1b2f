#pragma once

#include <map>

#include "zastava/character.hpp"

namespace zastava {

/// Finite map degree -> dimension.
using GradedDims = std::map<Int, Int>;

inline Int graded_total(const GradedDims& g) {
  Int t = 0;
  for (auto& [d, m] : g) t += m;
  return t;
}

/// Grading of a Levi-invariant character by the pairing with the doubled
/// half-sum of the Levi positive roots; this is the h-grading of the
/// principal sl2 triple of the dual Levi. Symmetric for invariant input.
inline GradedDims principal_grading(const ParabolicData& pd, const Character& c) {
  Weight tr = pd.two_rho_levi();
  GradedDims out;
  for (auto& [w, m] : c.weights) out[pd.datum.pairing(w, tr)] += m;
  for (auto& [d, m] : out) {
    auto it = out.find(-d);
    if (it == out.end() || it->second != m)
      throw std::invalid_argument("principal_grading: asymmetric profile, input is not Weyl-invariant for the Levi");
  }
  return out;
}

/// Dimensions of the f-annihilated subspace from the weight profile alone:
/// the strings pair degree d with d+2, so Ker(f) sits at the string bottoms,
///   s_d = m_d - m_{d-2}  for d <= 0,  s_d = 0 for d > 0.
/// A negative difference means the profile is not an sl2-module profile.
inline GradedDims kernel_f_dims(const GradedDims& g) {
  for (auto& [d, m] : g) {
    auto it = g.find(-d);
    if (it == g.end() || it->second != m)
      throw std::invalid_argument("kernel_f_dims: profile is not symmetric");
    if (m < 0) throw std::invalid_argument("kernel_f_dims: negative dimension in profile");
  }
  GradedDims out;
  for (auto& [d, m] : g) {
    if (d > 0) continue;
    auto it = g.find(d - 2);
    Int below = it == g.end() ? 0 : it->second;
    Int s = m - below;
    if (s < 0) throw std::invalid_argument("kernel_f_dims: profile is not an sl2-module profile");
    if (s > 0) out[d] = s;
  }
  return out;
}

/// Rebuild a module profile from string bottoms: a string with lowest weight
/// d contributes one dimension to each of d, d+2, ..., -d.
inline GradedDims strings_to_profile(const GradedDims& bottoms) {
  GradedDims out;
  for (auto& [d, m] : bottoms) {
    if (d > 0) throw std::invalid_argument("strings_to_profile: string bottom above zero");
    for (Int k = d; k <= -d; k += 2) out[k] += m;
  }
  return out;
}

/// Finite map (theta, degree) -> dimension.
struct BiGradedDims {
  std::map<Theta, GradedDims> by_theta;

  Int total() const {
    Int t = 0;
    for (auto& [th, g] : by_theta) t += graded_total(g);
    return t;
  }
};

/// The graded space Ker(f) inside the dual nilpotent radical, computed
/// componentwise: f preserves the central grading, so each block's kernel
/// comes from its own string profile.
inline BiGradedDims n_f(const ParabolicData& pd) {
  BiGradedDims out;
  for (auto& [theta, comp] : u_module(pd).components) {
    GradedDims k = kernel_f_dims(principal_grading(pd, comp));
    if (!k.empty()) out.by_theta[theta] = k;
  }
  return out;
}

/// Convention for symmetric powers of a graded space with odd-degree pieces.
/// Plain treats every line polynomially; Signed caps odd-degree lines at
/// exponent one, the Koszul rule for symmetric powers of complexes.
enum class SymConvention { Plain, Signed };

/// Sym^i of a bigraded space, then the theta slice. Degrees and thetas add.
inline GradedDims sym_bigraded(const BiGradedDims& space, const Theta& theta, Int i,
                               SymConvention conv = SymConvention::Plain) {
  if (i < 0) throw std::invalid_argument("sym_bigraded: negative exponent");
  // DP over the basis lines; state = (theta used, degree, symmetric degree)
  struct Key {
    Theta t;
    Int deg;
    Int count;
    bool operator<(const Key& o) const {
      if (t != o.t) return t < o.t;
      if (deg != o.deg) return deg < o.deg;
      return count < o.count;
    }
  };
  std::map<Key, Int> dp;
  dp[{Theta(theta.size(), 0), 0, 0}] = 1;
  for (auto& [th, g] : space.by_theta) {
    for (auto& [d, dim] : g) {
      const bool odd = ((d % 2) + 2) % 2 == 1;
      std::map<Key, Int> next;
      for (auto& [key, val] : dp) {
        // choose exponent j on this line (a line of dimension `dim` contributes
        // multichoose(dim, j) plain / choose(dim, j) signed)
        Int maxj = i - key.count;
        if (conv == SymConvention::Signed && odd && maxj > dim) maxj = dim;
        Int ways = 1;
        for (Int j = 0; j <= maxj; ++j) {
          if (j > 0) {
            if (conv == SymConvention::Signed && odd)
              ways = ways * (dim - j + 1) / j;  // C(dim, j), exact stepwise
            else
              ways = ways * (dim + j - 1) / j;  // C(dim+j-1, j), exact stepwise
            if (ways == 0) break;
          }
          Theta t = key.t;
          bool ok = true;
          for (size_t k = 0; k < t.size(); ++k) {
            t[k] += j * th[k];
            if (t[k] > theta[k]) ok = false;
          }
          if (!ok) break;  // th is componentwise nonnegative, larger j only grows
          Key nk{t, key.deg + j * d, key.count + j};
          next[nk] += val * ways;
        }
      }
      dp = std::move(next);
    }
  }
  GradedDims out;
  for (auto& [key, val] : dp)
    if (key.t == theta && key.count == i && val != 0) out[key.deg] += val;
  return out;
}

/// Sym^i(n^f)_theta.
inline GradedDims sym_n_f(const ParabolicData& pd, const Theta& theta, Int i,
                          SymConvention conv = SymConvention::Plain) {
  pd.check_theta(theta);
  if (!theta_nonneg(theta)) throw std::invalid_argument("sym_n_f: theta outside the positive cone");
  return sym_bigraded(n_f(pd), theta, i, conv);
}

}  // namespace zastava
