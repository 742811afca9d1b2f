#pragma once

#include <functional>
#include <mutex>

#include "zastava/principal_sl2.hpp"

namespace zastava {
namespace oracle {

/// Brute-force reference computations for the fast paths. These stay
/// deliberately naive: no shared logic with the modules they check, hard
/// guards instead of heuristics.

/// Kostant partition function at the Borel: number of multisets of positive
/// coroots summing to theta. Plain recursion over a fixed coroot ordering,
///   K(0) = 1,  K(theta) = sum over copies of the last allowed coroot.
inline Int kostant_pf(const RootDatum& rd, const Vec& theta) {
  if ((int)theta.size() != rd.rank) throw std::invalid_argument("kostant_pf: theta has wrong dimension");
  if (!theta_nonneg(theta)) throw std::invalid_argument("kostant_pf: theta outside the positive cone");
  static std::map<std::string, Int> cache;
  static std::mutex mu;
  std::function<Int(const Vec&, int)> K = [&](const Vec& t, int j) -> Int {
    if (theta_zero(t)) return 1;
    if (j < 0) return 0;
    std::string key = rd.label + "|" + detail::vec_to_string(t) + "|" + std::to_string(j);
    {
      std::lock_guard<std::mutex> lk(mu);
      auto it = cache.find(key);
      if (it != cache.end()) return it->second;
    }
    Int total = 0;
    const Vec& g = rd.positive_coroots[j].c;
    Vec rem = t;
    for (Int k = 0;; ++k) {
      if (k > 0) {
        bool ok = true;
        for (int i = 0; i < rd.rank; ++i) {
          rem[i] -= g[i];
          if (rem[i] < 0) ok = false;
        }
        if (!ok) break;
      }
      total += K(rem, j - 1);
    }
    std::lock_guard<std::mutex> lk(mu);
    cache[key] = total;
    return total;
  };
  return K(theta, (int)rd.positive_coroots.size() - 1);
}

/// Symmetric power by direct multiset enumeration: nondecreasing index
/// tuples over the expanded weight list. Guarded; the guard is a hard limit.
inline Character brute_sym_power(const RootDatum& rd, const Character& c, Int n) {
  if (c.dim() > 8 || n > 5)
    throw std::invalid_argument("brute_sym_power: guard exceeded (dim <= 8, n <= 5); use the fast path");
  std::vector<Coweight> slots;
  for (auto& [w, m] : c.weights)
    for (Int k = 0; k < m; ++k) slots.push_back(w);
  Character out;
  out.tag = c.tag;
  std::vector<size_t> idx(n, 0);
  if (n == 0) {
    out.add(Coweight(Vec(rd.total_rank(), 0)), 1);
    return out;
  }
  if (slots.empty()) return out;
  while (true) {
    Vec sum(rd.total_rank(), 0);
    for (size_t i : idx)
      for (int k = 0; k < rd.total_rank(); ++k) sum[k] += slots[i].c[k];
    out.add(Coweight(sum), 1);
    // next nondecreasing tuple
    int pos = (int)n - 1;
    while (pos >= 0 && idx[pos] == slots.size() - 1) --pos;
    if (pos < 0) break;
    size_t v = idx[pos] + 1;
    for (size_t p = pos; p < (size_t)n; ++p) idx[p] = v;
  }
  return out;
}

/// Symmetric power of a list of graded lines by the same multiset walk,
/// skipping repeats of odd-degree lines under the signed convention.
inline GradedDims brute_sym_graded(const std::vector<std::pair<Int, Int>>& lines /*(degree,dim)*/, Int n,
                                   SymConvention conv) {
  std::vector<Int> degs;
  for (auto& [d, dim] : lines)
    for (Int k = 0; k < dim; ++k) degs.push_back(d);
  if (degs.size() > 10 || n > 6) throw std::invalid_argument("brute_sym_graded: guard exceeded");
  GradedDims out;
  if (n == 0) {
    out[0] = 1;
    return out;
  }
  if (degs.empty()) return out;
  std::vector<size_t> idx(n, 0);
  while (true) {
    bool keep = true;
    if (conv == SymConvention::Signed) {
      for (size_t p = 0; p + 1 < idx.size(); ++p)
        if (idx[p] == idx[p + 1] && (((degs[idx[p]] % 2) + 2) % 2 == 1)) keep = false;
    }
    if (keep) {
      Int d = 0;
      for (size_t i : idx) d += degs[i];
      out[d] += 1;
    }
    int pos = (int)n - 1;
    while (pos >= 0 && idx[pos] == degs.size() - 1) --pos;
    if (pos < 0) break;
    size_t v = idx[pos] + 1;
    for (size_t p = pos; p < (size_t)n; ++p) idx[p] = v;
  }
  return out;
}

/// Greedy string peeling from the top weight. Returns the multiset of string
/// bottoms (lowest weights), the same data kernel_f_dims reports.
inline GradedDims sl2_strings_bruteforce(GradedDims profile) {
  GradedDims bottoms;
  while (!profile.empty()) {
    Int top = profile.rbegin()->first;
    if (top < 0) throw std::invalid_argument("sl2_strings_bruteforce: profile is not an sl2-module profile");
    for (Int d = top; d >= -top; d -= 2) {
      auto it = profile.find(d);
      if (it == profile.end() || it->second <= 0)
        throw std::invalid_argument("sl2_strings_bruteforce: string peel failed, invalid profile");
      if (--it->second == 0) profile.erase(it);
    }
    bottoms[-top] += 1;
  }
  return bottoms;
}

}  // namespace oracle
}  // namespace zastava
