#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "zastava/rational.hpp"

namespace zastava {

using Vec = std::vector<Int>;

/// Coweight in simple-coroot coordinates (torus coordinates, if any, appended).
struct Coweight {
  Vec c;
  Coweight() = default;
  explicit Coweight(Vec v) : c(std::move(v)) {}
  friend bool operator==(const Coweight& a, const Coweight& b) { return a.c == b.c; }
  friend bool operator!=(const Coweight& a, const Coweight& b) { return a.c != b.c; }
  friend bool operator<(const Coweight& a, const Coweight& b) { return a.c < b.c; }
  friend Coweight operator+(const Coweight& a, const Coweight& b) {
    Vec r(a.c.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.c[i] + b.c[i];
    return Coweight(r);
  }
  friend Coweight operator-(const Coweight& a, const Coweight& b) {
    Vec r(a.c.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.c[i] - b.c[i];
    return Coweight(r);
  }
  friend Coweight operator*(Int k, const Coweight& a) {
    Vec r(a.c.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = k * a.c[i];
    return Coweight(r);
  }
  Int height() const { return std::accumulate(c.begin(), c.end(), Int(0)); }
  bool is_zero() const { return std::all_of(c.begin(), c.end(), [](Int x) { return x == 0; }); }
};

/// Weight in simple-root coordinates (torus coordinates appended).
struct Weight {
  Vec c;
  Weight() = default;
  explicit Weight(Vec v) : c(std::move(v)) {}
  friend bool operator==(const Weight& a, const Weight& b) { return a.c == b.c; }
  friend bool operator<(const Weight& a, const Weight& b) { return a.c < b.c; }
  friend Weight operator+(const Weight& a, const Weight& b) {
    Vec r(a.c.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.c[i] + b.c[i];
    return Weight(r);
  }
  friend Weight operator-(const Weight& a, const Weight& b) {
    Vec r(a.c.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.c[i] - b.c[i];
    return Weight(r);
  }
  friend Weight operator*(Int k, const Weight& a) {
    Vec r(a.c.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = k * a.c[i];
    return Weight(r);
  }
};

/// Graded-lex order used for all deterministic enumeration output:
/// first by height (sum of coordinates), then lexicographically.
inline bool graded_lex_less(const Vec& a, const Vec& b) {
  Int ha = std::accumulate(a.begin(), a.end(), Int(0));
  Int hb = std::accumulate(b.begin(), b.end(), Int(0));
  if (ha != hb) return ha < hb;
  return a < b;
}

namespace detail {

inline std::string vec_to_string(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

}  // namespace detail

/// A split root datum of finite type: the Cartan pairing between the
/// coweight lattice (simple-coroot coordinates, optional torus block) and the
/// weight lattice (simple-root coordinates), with the full sets of positive
/// coroots and roots generated by reflection closure.
///
/// cartan[i][j] = <alpha_i, alphacheck_j>, the pairing of the i-th simple
/// coroot with the j-th simple root.
class RootDatum {
 public:
  int rank = 0;        // semisimple rank (number of simple roots)
  int torus_rank = 0;  // central torus coordinates, appended after the simple block
  std::vector<Vec> cartan;
  std::vector<Coweight> positive_coroots;  // sorted by (height, lex)
  std::vector<Weight> positive_roots;      // sorted by (height, lex)
  std::string label;

  int total_rank() const { return rank + torus_rank; }

  /// <coweight, weight>. Torus blocks pair via dual bases.
  Int pairing(const Coweight& lam, const Weight& mu) const {
    check_size(lam.c, "coweight");
    check_size(mu.c, "weight");
    Int s = 0;
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) s += lam.c[i] * cartan[i][j] * mu.c[j];
    for (int t = 0; t < torus_rank; ++t) s += lam.c[rank + t] * mu.c[rank + t];
    return s;
  }

  /// <lam, alphacheck_j>
  Int pair_with_simple_root(const Coweight& lam, int j) const {
    check_simple_index(j);
    check_size(lam.c, "coweight");
    Int s = 0;
    for (int i = 0; i < rank; ++i) s += lam.c[i] * cartan[i][j];
    return s;
  }

  /// <alpha_i, mu>
  Int pair_with_simple_coroot(int i, const Weight& mu) const {
    check_simple_index(i);
    check_size(mu.c, "weight");
    Int s = 0;
    for (int j = 0; j < rank; ++j) s += cartan[i][j] * mu.c[j];
    return s;
  }

  Coweight simple_coroot(int i) const {
    check_simple_index(i);
    Vec v(total_rank(), 0);
    v[i] = 1;
    return Coweight(v);
  }

  Weight simple_root(int j) const {
    check_simple_index(j);
    Vec v(total_rank(), 0);
    v[j] = 1;
    return Weight(v);
  }

  Coweight reflect(const Coweight& lam, int j) const {
    Int k = pair_with_simple_root(lam, j);
    Coweight r = lam;
    r.c[j] -= k;
    return r;
  }

  Weight reflect(const Weight& mu, int i) const {
    Int k = pair_with_simple_coroot(i, mu);
    Weight r = mu;
    r.c[i] -= k;
    return r;
  }

  bool is_dominant(const Coweight& lam, const std::vector<int>& subset) const {
    for (int i : subset)
      if (pair_with_simple_root(lam, i) < 0) return false;
    return true;
  }

  bool is_dominant(const Coweight& lam) const { return is_dominant(lam, all_indices()); }

  std::vector<int> all_indices() const {
    std::vector<int> v(rank);
    std::iota(v.begin(), v.end(), 0);
    return v;
  }

  /// 2*rho for the Levi on the given subset: the sum of its positive roots.
  /// Kept doubled so that everything stays integral.
  Weight two_rho(const std::vector<int>& subset) const {
    Vec tot(total_rank(), 0);
    for (const Weight& r : positive_roots) {
      if (!supported_on(r.c, subset)) continue;
      for (int j = 0; j < total_rank(); ++j) tot[j] += r.c[j];
    }
    return Weight(tot);
  }

  Weight two_rho() const { return two_rho(all_indices()); }

  /// Positive coroots of the Levi on the subset (the ones supported there).
  std::vector<Coweight> positive_coroots_of(const std::vector<int>& subset) const {
    std::vector<Coweight> out;
    for (const Coweight& g : positive_coroots)
      if (supported_on(g.c, subset)) out.push_back(g);
    return out;
  }

  /// Reduced word for the longest element of the Weyl group on the subset:
  /// drive a strictly dominant weight to the antidominant chamber, recording
  /// the reflections used.
  std::vector<int> longest_word(const std::vector<int>& subset) const {
    Weight mu = two_rho(subset);
    std::vector<int> word;
    bool progress = true;
    while (progress) {
      progress = false;
      for (int i : subset) {
        if (pair_with_simple_coroot(i, mu) > 0) {
          mu = reflect(mu, i);
          word.push_back(i);
          progress = true;
          break;
        }
      }
    }
    return word;
  }

  template <typename Elt>
  Elt apply_word(const std::vector<int>& word, Elt x) const {
    for (int i : word) x = reflect(x, i);
    return x;
  }

  /// Action of the longest Weyl element of the Levi on the subset.
  template <typename Elt>
  Elt longest_element_action(const std::vector<int>& subset, const Elt& x) const {
    return apply_word(longest_word(subset), x);
  }

  bool has_torus_component(const Vec& v) const {
    for (int t = 0; t < torus_rank; ++t)
      if (v[rank + t] != 0) return true;
    return false;
  }

 private:
  static bool supported_on(const Vec& v, const std::vector<int>& subset) {
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      if (std::find(subset.begin(), subset.end(), (int)i) == subset.end()) return false;
    }
    return true;
  }

  void check_simple_index(int i) const {
    if (i < 0 || i >= rank) throw std::invalid_argument("simple index out of range");
  }

  void check_size(const Vec& v, const char* what) const {
    if ((int)v.size() != total_rank())
      throw std::invalid_argument(std::string(what) + " has wrong dimension for this root datum");
  }
};

namespace detail {

/// Per-component symmetrizer d with d[j]*cartan[i][j] == d[i]*cartan[j][i];
/// fails when the matrix is not symmetrizable.
inline std::vector<Rational> symmetrizer(const std::vector<Vec>& cartan) {
  int n = (int)cartan.size();
  std::vector<Rational> d(n, Rational(0));
  std::vector<bool> have(n, false);
  for (int start = 0; start < n; ++start) {
    if (have[start]) continue;
    d[start] = Rational(1);
    have[start] = true;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i < n; ++i) {
        if (!have[i]) continue;
        for (int j = 0; j < n; ++j) {
          if (cartan[i][j] == 0) continue;
          if (cartan[j][i] == 0) throw std::invalid_argument("Cartan matrix not symmetrizable: one-sided zero entry");
          if (!have[j]) {
            d[j] = d[i] * Rational(cartan[j][i], cartan[i][j]);
            have[j] = true;
            changed = true;
          }
        }
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d[j] * Rational(cartan[i][j]) != d[i] * Rational(cartan[j][i]))
        throw std::invalid_argument("Cartan matrix not symmetrizable");
  return d;
}

/// Finite type iff the symmetrized matrix is positive definite (Sylvester on
/// leading principal minors, exact rational arithmetic). Returns the failing
/// leading index set when not.
inline std::optional<std::vector<int>> finite_type_failure(const std::vector<Vec>& cartan) {
  int n = (int)cartan.size();
  std::vector<Rational> d = symmetrizer(cartan);
  std::vector<std::vector<Rational>> s(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s[i][j] = d[j] * Rational(cartan[i][j]);
  // leading principal minors by fraction Gaussian elimination
  for (int k = 1; k <= n; ++k) {
    std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) m[i][j] = s[i][j];
    Rational det(1);
    bool singular = false;
    for (int col = 0; col < k && !singular; ++col) {
      int piv = -1;
      for (int row = col; row < k; ++row)
        if (m[row][col].num != 0) { piv = row; break; }
      if (piv < 0) { singular = true; break; }
      if (piv != col) { std::swap(m[piv], m[col]); det = det * Rational(-1); }
      det = det * m[col][col];
      for (int row = col + 1; row < k; ++row) {
        Rational f = m[row][col] / m[col][col];
        for (int j = col; j < k; ++j) m[row][j] = m[row][j] - f * m[col][j];
      }
    }
    if (singular || !(Rational(0) < det)) {
      std::vector<int> idx(k);
      std::iota(idx.begin(), idx.end(), 0);
      return idx;
    }
  }
  return std::nullopt;
}

inline void close_under_reflections(RootDatum& rd) {
  auto run = [&](auto get_simple, auto reflect, auto& out) {
    using E = decltype(get_simple(0));
    std::set<Vec> pos;
    std::vector<E> frontier;
    for (int i = 0; i < rd.rank; ++i) {
      E e = get_simple(i);
      pos.insert(e.c);
      frontier.push_back(e);
    }
    while (!frontier.empty()) {
      std::vector<E> next;
      for (const E& g : frontier) {
        for (int j = 0; j < rd.rank; ++j) {
          E r = reflect(g, j);
          bool positive = false, negative = false;
          for (Int x : r.c) {
            if (x > 0) positive = true;
            if (x < 0) negative = true;
          }
          if (positive && !negative && !pos.count(r.c)) {
            pos.insert(r.c);
            next.push_back(r);
          }
        }
      }
      frontier = std::move(next);
    }
    out.clear();
    for (const Vec& v : pos) out.emplace_back(std::decay_t<decltype(out[0])>(v));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return graded_lex_less(a.c, b.c); });
  };
  run([&](int i) { return rd.simple_coroot(i); },
      [&](const Coweight& g, int j) { return rd.reflect(g, j); }, rd.positive_coroots);
  run([&](int i) { return rd.simple_root(i); },
      [&](const Weight& g, int j) { return rd.reflect(g, j); }, rd.positive_roots);
}

}  // namespace detail

/// Build a root datum from an explicit Cartan matrix (plus optional torus
/// coordinates). Rejects matrices that are not of finite type, reporting the
/// failing leading submatrix.
inline RootDatum build_root_datum(const std::vector<Vec>& cartan, int torus_rank = 0,
                                  std::string label = "") {
  int n = (int)cartan.size();
  for (const Vec& row : cartan)
    if ((int)row.size() != n) throw std::invalid_argument("Cartan matrix must be square");
  for (int i = 0; i < n; ++i) {
    if (cartan[i][i] != 2) throw std::invalid_argument("Cartan matrix must have 2 on the diagonal");
    for (int j = 0; j < n; ++j)
      if (i != j && cartan[i][j] > 0)
        throw std::invalid_argument("Cartan matrix off-diagonal entries must be <= 0");
  }
  if (torus_rank < 0) throw std::invalid_argument("torus rank must be nonnegative");
  if (auto bad = detail::finite_type_failure(cartan)) {
    std::ostringstream os;
    os << "Cartan matrix is not of finite type; failing leading submatrix on indices {";
    for (size_t i = 0; i < bad->size(); ++i) os << (i ? "," : "") << (*bad)[i] + 1;
    os << "}";
    throw std::invalid_argument(os.str());
  }
  RootDatum rd;
  rd.rank = n;
  rd.torus_rank = torus_rank;
  rd.cartan = cartan;
  rd.label = label.empty() ? "cartan" : std::move(label);
  detail::close_under_reflections(rd);
  if (rd.positive_coroots.size() != rd.positive_roots.size())
    throw std::logic_error("coroot/root count mismatch after reflection closure");
  return rd;
}

/// Cartan matrix of a simple type in the convention cartan[i][j] =
/// <alpha_i, alphacheck_j> (the transpose of the usual root-side table),
/// Bourbaki numbering.
inline std::vector<Vec> simple_cartan(char type, int rank) {
  auto sym = [&](const std::vector<std::pair<int, int>>& edges) {
    std::vector<Vec> c(rank, Vec(rank, 0));
    for (int i = 0; i < rank; ++i) c[i][i] = 2;
    for (auto [a, b] : edges) { c[a][b] = -1; c[b][a] = -1; }
    return c;
  };
  auto chain = [&]() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < rank; ++i) e.push_back({i, i + 1});
    return e;
  };
  switch (type) {
    case 'A': {
      if (rank < 1) throw std::invalid_argument("type A needs rank >= 1");
      auto e = chain();
      return sym(e);
    }
    case 'B': {
      if (rank < 2) throw std::invalid_argument("type B needs rank >= 2");
      auto e = chain();
      auto c = sym(e);
      c[rank - 2][rank - 1] = -1;  // <alpha_{n-1}, acheck_n>
      c[rank - 1][rank - 2] = -2;  // <alpha_n, acheck_{n-1}>
      return c;
    }
    case 'C': {
      if (rank < 2) throw std::invalid_argument("type C needs rank >= 2");
      auto e = chain();
      auto c = sym(e);
      c[rank - 2][rank - 1] = -2;
      c[rank - 1][rank - 2] = -1;
      return c;
    }
    case 'D': {
      if (rank < 3) throw std::invalid_argument("type D needs rank >= 3");
      std::vector<std::pair<int, int>> e;
      for (int i = 0; i + 2 < rank; ++i) e.push_back({i, i + 1});
      e.push_back({rank - 3, rank - 1});
      return sym(e);
    }
    case 'E': {
      if (rank < 6 || rank > 8) throw std::invalid_argument("type E needs rank 6..8");
      // Bourbaki: node 2 attaches to node 4 of the chain 1-3-4-5-...
      std::vector<std::pair<int, int>> e = {{0, 2}, {2, 3}, {1, 3}};
      for (int i = 3; i + 1 < rank; ++i) e.push_back({i, i + 1});
      return sym(e);
    }
    case 'F': {
      if (rank != 4) throw std::invalid_argument("type F needs rank 4");
      auto c = sym({{0, 1}, {2, 3}});
      c[1][2] = -1;  // transpose of the usual a_23 = -2 table
      c[2][1] = -2;
      return c;
    }
    case 'G': {
      if (rank != 2) throw std::invalid_argument("type G needs rank 2");
      std::vector<Vec> c = {{2, -3}, {-1, 2}};
      return c;
    }
    default:
      throw std::invalid_argument(std::string("unknown simple type '") + type + "'");
  }
}

inline RootDatum build_root_datum(char type, int rank) {
  return build_root_datum(simple_cartan(type, rank), 0, std::string(1, type) + std::to_string(rank));
}

/// Product datum: block-diagonal Cartan over the simple factors plus the
/// summed torus rank. "T" factors contribute lattice coordinates only.
struct FactorSpec {
  char type;  // 'A'..'G' or 'T'
  int rank;
};

inline RootDatum build_product_datum(const std::vector<FactorSpec>& factors) {
  std::vector<Vec> cartan;
  int torus = 0;
  std::string label;
  for (const FactorSpec& f : factors) {
    if (f.type == 'T') {
      if (f.rank < 1) throw std::invalid_argument("torus factor needs rank >= 1");
      torus += f.rank;
      label += (label.empty() ? "" : "x") + std::string("T") + std::to_string(f.rank);
      continue;
    }
    auto c = simple_cartan(f.type, f.rank);
    int off = (int)cartan.size();
    for (auto& row : cartan) row.resize(off + f.rank, 0);
    for (int i = 0; i < f.rank; ++i) {
      Vec row(off + f.rank, 0);
      for (int j = 0; j < f.rank; ++j) row[off + j] = c[i][j];
      cartan.push_back(std::move(row));
    }
    label += (label.empty() ? "" : "x") + std::string(1, f.type) + std::to_string(f.rank);
  }
  if (cartan.empty()) throw std::invalid_argument("a root datum needs at least one simple factor");
  return build_root_datum(cartan, torus, label);
}

/// Theta element: coordinates over the non-Levi simple indices, i.e. an
/// element of the quotient lattice the strata are graded by.
using Theta = Vec;

inline Int theta_height(const Theta& t) { return std::accumulate(t.begin(), t.end(), Int(0)); }
inline bool theta_nonneg(const Theta& t) {
  return std::all_of(t.begin(), t.end(), [](Int x) { return x >= 0; });
}
inline bool theta_zero(const Theta& t) {
  return std::all_of(t.begin(), t.end(), [](Int x) { return x == 0; });
}

/// A standard proper parabolic: the root datum together with the Levi subset
/// of simple indices. Carries the quotient-lattice bookkeeping (projection,
/// canonical lift, flat) used everywhere downstream.
class ParabolicData {
 public:
  RootDatum datum;
  std::vector<int> levi;       // sorted, 0-based
  std::vector<int> non_levi;   // sorted complement, 0-based

  ParabolicData(RootDatum rd, std::vector<int> levi_subset) : datum(std::move(rd)), levi(std::move(levi_subset)) {
    std::sort(levi.begin(), levi.end());
    levi.erase(std::unique(levi.begin(), levi.end()), levi.end());
    for (int i : levi)
      if (i < 0 || i >= datum.rank) throw std::invalid_argument("Levi index out of range");
    if ((int)levi.size() == datum.rank)
      throw std::invalid_argument("degenerate parabolic P = G is not allowed; drop at least one simple index from the Levi");
    for (int i = 0; i < datum.rank; ++i)
      if (!std::binary_search(levi.begin(), levi.end(), i)) non_levi.push_back(i);
    longest_levi_word_ = datum.longest_word(levi);
  }

  int quotient_rank() const { return (int)non_levi.size(); }

  bool in_levi(int i) const { return std::binary_search(levi.begin(), levi.end(), i); }

  /// Projection to the quotient lattice; kills the Levi simple coroots.
  Theta project(const Coweight& lam) const {
    Theta t(non_levi.size());
    for (size_t k = 0; k < non_levi.size(); ++k) t[k] = lam.c[non_levi[k]];
    return t;
  }

  /// The unique lift of theta supported on the non-Levi simple coroots.
  Coweight lift(const Theta& theta) const {
    check_theta(theta);
    Vec v(datum.total_rank(), 0);
    for (size_t k = 0; k < non_levi.size(); ++k) v[non_levi[k]] = theta[k];
    return Coweight(v);
  }

  /// flat(theta) = w_0^M(lift(theta)); M-dominant by construction.
  Coweight flat(const Theta& theta) const {
    if (!theta_nonneg(theta))
      throw std::invalid_argument("flat: theta lies outside the positive cone " + detail::vec_to_string(theta));
    return datum.apply_word(longest_levi_word_, lift(theta));
  }

  Weight two_rho_levi() const { return datum.two_rho(levi); }

  bool is_levi_dominant(const Coweight& lam) const { return datum.is_dominant(lam, levi); }

  /// Positive coroots outside the Levi subsystem: the weights of the
  /// nilpotent radical on the dual side, each with multiplicity one.
  std::vector<Coweight> coroots_outside_levi() const {
    std::vector<Coweight> out;
    for (const Coweight& g : datum.positive_coroots) {
      bool outside = false;
      for (size_t k = 0; k < non_levi.size(); ++k)
        if (g.c[non_levi[k]] != 0) outside = true;
      if (outside) out.push_back(g);
    }
    return out;
  }

  /// Distinct projections of the coroots outside the Levi, sorted graded-lex.
  std::vector<Theta> coroot_projections() const {
    std::set<Theta> s;
    for (const Coweight& g : coroots_outside_levi()) s.insert(project(g));
    std::vector<Theta> out(s.begin(), s.end());
    std::sort(out.begin(), out.end(), graded_lex_less);
    return out;
  }

  const std::vector<int>& longest_levi_word() const { return longest_levi_word_; }

  std::string levi_string() const {
    std::string s = "{";
    for (size_t i = 0; i < levi.size(); ++i) s += (i ? "," : "") + std::to_string(levi[i] + 1);
    return s + "}";
  }

  void check_theta(const Theta& theta) const {
    if ((int)theta.size() != quotient_rank())
      throw std::invalid_argument("theta has wrong dimension for this parabolic");
  }

 private:
  std::vector<int> longest_levi_word_;
};

}  // namespace zastava
