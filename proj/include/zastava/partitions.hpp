#pragma once

#include <map>
#include <mutex>
#include <optional>

#include "zastava/root_datum.hpp"

namespace zastava {

/// A way of writing theta as a sum of parts with multiplicities. Used both
/// for decompositions into arbitrary nonzero positive elements (the stratum
/// index) and for partitions into coroot projections (the summand index).
/// Parts are pairwise distinct, kept sorted graded-lex descending.
struct VectorPartition {
  std::vector<std::pair<Theta, Int>> parts;  // (part value, multiplicity > 0)
  Theta total;

  /// |.| = sum of the multiplicities.
  Int size() const {
    Int s = 0;
    for (auto& [p, n] : parts) s += n;
    return s;
  }

  friend bool operator==(const VectorPartition& a, const VectorPartition& b) {
    return a.parts == b.parts && a.total == b.total;
  }
  friend bool operator<(const VectorPartition& a, const VectorPartition& b) { return a.parts < b.parts; }
};

namespace detail {

inline void enumerate_with_parts(const std::vector<Theta>& parts_desc, size_t from, Theta remaining,
                                 std::vector<std::pair<Theta, Int>>& acc, const Theta& total,
                                 std::vector<VectorPartition>& out) {
  if (theta_zero(remaining)) {
    out.push_back(VectorPartition{acc, total});
    return;
  }
  for (size_t idx = from; idx < parts_desc.size(); ++idx) {
    const Theta& p = parts_desc[idx];
    Theta r = remaining;
    Int used = 0;
    while (true) {
      bool fits = true;
      for (size_t i = 0; i < r.size(); ++i)
        if (r[i] < p[i]) { fits = false; break; }
      if (!fits) break;
      for (size_t i = 0; i < r.size(); ++i) r[i] -= p[i];
      ++used;
      acc.push_back({p, used});
      enumerate_with_parts(parts_desc, idx + 1, r, acc, total, out);
      acc.pop_back();
    }
  }
}

inline std::vector<VectorPartition> enumerate_desc(const std::vector<Theta>& allowed, const Theta& theta) {
  std::vector<Theta> parts = allowed;
  std::sort(parts.begin(), parts.end(), [](const Theta& a, const Theta& b) { return graded_lex_less(b, a); });
  std::vector<VectorPartition> out;
  std::vector<std::pair<Theta, Int>> acc;
  enumerate_with_parts(parts, 0, theta, acc, theta, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// All decompositions of theta into nonzero elements of the positive cone.
/// theta = 0 yields the single empty decomposition.
inline std::vector<VectorPartition> enumerate_decompositions(const ParabolicData& pd, const Theta& theta) {
  pd.check_theta(theta);
  if (!theta_nonneg(theta))
    throw std::invalid_argument("enumerate_decompositions: theta outside the positive cone");
  // candidate parts: all nonzero vectors componentwise <= theta
  std::vector<Theta> parts;
  Theta cur(theta.size(), 0);
  while (true) {
    if (!theta_zero(cur)) parts.push_back(cur);
    size_t i = 0;
    while (i < cur.size() && cur[i] == theta[i]) cur[i++] = 0;
    if (i == cur.size()) break;
    ++cur[i];
  }
  return detail::enumerate_desc(parts, theta);
}

/// All partitions of theta into projections of positive coroots lying outside
/// the Levi. Parts that coincide after projection are identified.
inline std::vector<VectorPartition> enumerate_coroot_partitions(const ParabolicData& pd, const Theta& theta) {
  pd.check_theta(theta);
  if (!theta_nonneg(theta))
    throw std::invalid_argument("enumerate_coroot_partitions: theta outside the positive cone");
  return detail::enumerate_desc(pd.coroot_projections(), theta);
}

/// The one-part partition {theta}, present iff theta itself is a coroot
/// projection. There is at most one partition of size 1.
inline std::optional<VectorPartition> principal_partition(const ParabolicData& pd, const Theta& theta) {
  pd.check_theta(theta);
  if (!theta_nonneg(theta)) return std::nullopt;
  for (const Theta& p : pd.coroot_projections())
    if (p == theta) return VectorPartition{{{theta, 1}}, theta};
  return std::nullopt;
}

/// The decomposition consisting of the single part theta (with multiplicity 1).
inline VectorPartition trivial_decomposition(const Theta& theta) {
  if (theta_zero(theta)) return VectorPartition{{}, theta};
  return VectorPartition{{{theta, 1}}, theta};
}

/// Memoized counts; stalk assembly queries these repeatedly. Guarded for
/// concurrent use, invisible to the enumeration contract.
inline Int count_coroot_partitions(const ParabolicData& pd, const Theta& theta) {
  static std::map<std::string, Int> cache;
  static std::mutex mu;
  std::string key = pd.datum.label + "|" + pd.levi_string() + "|" + detail::vec_to_string(theta);
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Int n = (Int)enumerate_coroot_partitions(pd, theta).size();
  std::lock_guard<std::mutex> lk(mu);
  cache[key] = n;
  return n;
}

/// Merge two partitions of theta1 and theta2 into one of theta1+theta2
/// (multiset union of parts).
inline VectorPartition merge_partitions(const VectorPartition& a, const VectorPartition& b) {
  std::map<Theta, Int> m;
  for (auto& [p, n] : a.parts) m[p] += n;
  for (auto& [p, n] : b.parts) m[p] += n;
  VectorPartition out;
  if (a.total.size() != b.total.size()) throw std::invalid_argument("merge_partitions: mismatched quotient rank");
  out.total.resize(a.total.size());
  for (size_t i = 0; i < out.total.size(); ++i) out.total[i] = a.total[i] + b.total[i];
  for (auto& [p, n] : m) out.parts.push_back({p, n});
  std::sort(out.parts.begin(), out.parts.end(),
            [](const auto& x, const auto& y) { return graded_lex_less(y.first, x.first); });
  return out;
}

}  // namespace zastava
