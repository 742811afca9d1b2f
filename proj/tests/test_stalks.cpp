#include <catch_amalgamated.hpp>

#include "zastava/stalks.hpp"

using namespace zastava;

namespace {

Coweight cw(const RootDatum& rd, Vec v) {
  v.resize(rd.total_rank(), 0);
  return Coweight(v);
}

StalkPolynomial poly(std::initializer_list<std::pair<Int, Int>> terms) {
  StalkPolynomial p;
  for (auto& [e, c] : terms) p.add(e, c);
  return p;
}

}  // namespace

TEST_CASE("canonical compactification stalks") {
  SECTION("A1: single summand at exponent 2n") {
    auto a1 = build_root_datum('A', 1);
    ParabolicData pd(a1, {});
    for (Int n = 1; n <= 4; ++n) {
      auto rep = bunpw_stalk(pd, trivial_decomposition({n}));
      CHECK(rep.normalization == 0);
      REQUIRE(rep.factors.size() == 1);
      auto& dec = rep.factors[0].second;
      REQUIRE(dec.terms.size() == 1);
      CHECK(dec.terms[0].hw == cw(a1, {n}));
      CHECK(dec.terms[0].mult == 1);
      CHECK(dec.terms[0].exp == 2 * n);
    }
  }

  SECTION("A2 Borel, theta (1,1): exponents 2 and 4 on the same label") {
    auto a2 = build_root_datum('A', 2);
    ParabolicData pd(a2, {});
    auto rep = bunpw_stalk(pd, trivial_decomposition({1, 1}));
    REQUIRE(rep.factors.size() == 1);
    auto& dec = rep.factors[0].second;
    REQUIRE(dec.terms.size() == 2);
    CHECK(dec.terms[0].hw == cw(a2, {1, 1}));
    CHECK(dec.terms[0].exp == 2);
    CHECK(dec.terms[1].hw == cw(a2, {1, 1}));
    CHECK(dec.terms[1].exp == 4);
  }

  SECTION("unit parts give one term at exponent 2 with label flat(unit)") {
    for (char t : {'A', 'B', 'C'}) {
      auto rd = build_root_datum(t, 2);
      for (std::vector<int> levi : {std::vector<int>{}, {0}, {1}}) {
        ParabolicData pd(rd, levi);
        VectorPartition A;
        A.total = Theta(pd.quotient_rank(), 1);
        for (int k = 0; k < pd.quotient_rank(); ++k) {
          Theta unit(pd.quotient_rank(), 0);
          unit[k] = 1;
          A.parts.push_back({unit, 1});
        }
        std::sort(A.parts.begin(), A.parts.end(),
                  [](auto& a, auto& b) { return graded_lex_less(b.first, a.first); });
        auto rep = bunpw_stalk(pd, A);
        REQUIRE((Int)rep.factors.size() == A.size());
        for (auto& [theta, dec] : rep.factors) {
          REQUIRE(dec.terms.size() == 1);
          CHECK(dec.terms[0].exp == 2);
          CHECK(dec.terms[0].mult == 1);
          CHECK(dec.terms[0].hw == pd.flat(theta));
        }
      }
    }
  }

  SECTION("a part of multiplicity n is reported n times") {
    auto a2 = build_root_datum('A', 2);
    ParabolicData pd(a2, {});
    VectorPartition A{{{{1, 0}, 2}}, {2, 0}};
    auto rep = bunpw_stalk(pd, A);
    REQUIRE(rep.factors.size() == 2);
    CHECK(rep.factors[0].first == rep.factors[1].first);
  }

  SECTION("invalid decompositions are rejected") {
    auto a2 = build_root_datum('A', 2);
    ParabolicData pd(a2, {});
    CHECK_THROWS(bunpw_stalk(pd, VectorPartition{{{{1, 0}, 1}}, {2, 0}}));
    CHECK_THROWS(bunpw_stalk(pd, VectorPartition{{{{0, 0}, 1}}, {0, 0}}));
  }
}

TEST_CASE("hyperbolic restriction data") {
  SECTION("A1") {
    auto a1 = build_root_datum('A', 1);
    ParabolicData pd(a1, {});
    for (Int n = 1; n <= 3; ++n) {
      auto rep = bunpw_hyperbolic(pd, {n});
      CHECK(rep.normalization == -1);
      REQUIRE(rep.sym_side.terms.size() == 1);
      CHECK(rep.sym_side.terms[0].hw == cw(a1, {n}));
      CHECK(rep.sym_side.terms[0].exp == 0);
    }
  }

  SECTION("A2 Borel theta (1,1): total multiplicity 2") {
    auto a2 = build_root_datum('A', 2);
    ParabolicData pd(a2, {});
    auto rep = bunpw_hyperbolic(pd, {1, 1});
    CHECK(rep.sym_side.total_mult() == 2);
  }

  SECTION("unit theta: the single irreducible flat(theta)") {
    auto b2 = build_root_datum('B', 2);
    ParabolicData pd(b2, {0});
    auto rep = bunpw_hyperbolic(pd, {1});
    REQUIRE(rep.sym_side.terms.size() == 1);
    CHECK(rep.sym_side.terms[0].hw == pd.flat({1}));
    CHECK(rep.sym_side.terms[0].mult == 1);
  }
}

TEST_CASE("local model dimension and summands") {
  SECTION("A1: dim 2n, one summand at shift -n") {
    auto a1 = build_root_datum('A', 1);
    ParabolicData pd(a1, {});
    for (Int n = 1; n <= 4; ++n) {
      auto rep = zastava_data(pd, {n});
      CHECK(rep.dim == 2 * n);
      REQUIRE(rep.summands.size() == 1);
      CHECK(rep.summands[0].second == -n);
    }
  }

  SECTION("A2 Borel theta (1,1): dim 4, shifts -1 and -2") {
    auto a2 = build_root_datum('A', 2);
    ParabolicData pd(a2, {});
    auto rep = zastava_data(pd, {1, 1});
    CHECK(rep.dim == 4);
    std::multiset<Int> shifts;
    for (auto& [p, s] : rep.summands) shifts.insert(s);
    CHECK(shifts == std::multiset<Int>{-2, -1});
  }

  SECTION("A2 Levi {1} theta 1: dim 3") {
    auto a2 = build_root_datum('A', 2);
    ParabolicData pd(a2, {0});
    auto rep = zastava_data(pd, {1});
    CHECK(rep.dim == 3);
    REQUIRE(rep.summands.size() == 1);
    CHECK(rep.summands[0].second == -1);
  }

  SECTION("all shifts are strictly negative") {
    auto g2 = build_root_datum('G', 2);
    ParabolicData pd(g2, {1});
    for (Int n = 1; n <= 3; ++n)
      for (auto& [p, s] : zastava_data(pd, {n}).summands) CHECK(s <= -1);
  }
}

TEST_CASE("naive compactification stalk polynomials") {
  SECTION("A1: the single monomial v^(2n-1)") {
    auto a1 = build_root_datum('A', 1);
    ParabolicData pd(a1, {});
    for (Int n = 1; n <= 6; ++n)
      CHECK(bunp_naive_stalk(pd, trivial_decomposition({n})) == poly({{2 * n - 1, 1}}));
  }

  SECTION("A2 Borel theta (1,1): v + v^3") {
    auto a2 = build_root_datum('A', 2);
    ParabolicData pd(a2, {});
    CHECK(bunp_naive_stalk(pd, trivial_decomposition({1, 1})) == poly({{1, 1}, {3, 1}}));
  }

  SECTION("A2 Levi {1} theta 1: v^2") {
    auto a2 = build_root_datum('A', 2);
    ParabolicData pd(a2, {0});
    CHECK(bunp_naive_stalk(pd, trivial_decomposition({1})) == poly({{2, 1}}));
  }

  SECTION("C2 Siegel-type parabolic, theta 2: the two conventions split") {
    auto c2 = build_root_datum('C', 2);
    ParabolicData pd(c2, {0});
    CHECK(bunp_naive_stalk(pd, trivial_decomposition({2}), SymConvention::Plain) ==
          poly({{1, 1}, {5, 1}}));
    CHECK(bunp_naive_stalk(pd, trivial_decomposition({2}), SymConvention::Signed) == poly({{1, 1}}));
  }

  SECTION("multiplicativity over the parts") {
    auto a2 = build_root_datum('A', 2);
    ParabolicData pd(a2, {});
    VectorPartition split{{{{1, 0}, 1}, {{0, 1}, 1}}, {1, 1}};
    std::sort(split.parts.begin(), split.parts.end(),
              [](auto& a, auto& b) { return graded_lex_less(b.first, a.first); });
    auto whole = bunp_naive_stalk(pd, split);
    auto f1 = bunp_naive_stalk(pd, trivial_decomposition({1, 0})).shifted(1);
    auto f2 = bunp_naive_stalk(pd, trivial_decomposition({0, 1})).shifted(1);
    CHECK(whole == (f1 * f2).shifted(-split.size()));
  }

  SECTION("support bound: every exponent is at least |A|, in particular positive") {
    // each part contributes at least v^2 (its lowest symmetric degree is 1 and
    // the kernel space sits in degrees <= 0), so after the v^(-|A|) shift the
    // exponents stay >= |A| >= 1
    auto b2 = build_root_datum('B', 2);
    for (std::vector<int> levi : {std::vector<int>{}, {0}, {1}}) {
      ParabolicData pd(b2, levi);
      Theta t(pd.quotient_rank(), 2);
      for (auto& A : enumerate_decompositions(pd, t)) {
        auto p = bunp_naive_stalk(pd, A);
        for (auto& [e, c] : p.coeffs) {
          CHECK(c > 0);
          CHECK(e >= A.size());
        }
      }
    }
  }
}

TEST_CASE("pushforward stalks at distinct points") {
  SECTION("A1 theta alpha: v^2") {
    auto a1 = build_root_datum('A', 1);
    ParabolicData pd(a1, {});
    auto rep = pushforward_stalk(pd, {1});
    REQUIRE(rep.summands.size() == 1);
    CHECK(rep.summands[0].second == poly({{2, 1}}));
  }

  SECTION("A2 Borel theta (1,1): v^2 and v^4") {
    auto a2 = build_root_datum('A', 2);
    ParabolicData pd(a2, {});
    auto rep = pushforward_stalk(pd, {1, 1});
    REQUIRE(rep.summands.size() == 2);
    std::multiset<std::map<Int, Int>> polys;
    for (auto& [p, q] : rep.summands) polys.insert(q.coeffs);
    CHECK(polys == std::multiset<std::map<Int, Int>>{{{2, 1}}, {{4, 1}}});
  }

  SECTION("A2 Levi {1} theta 1: v + v^3") {
    auto a2 = build_root_datum('A', 2);
    ParabolicData pd(a2, {0});
    auto rep = pushforward_stalk(pd, {1});
    REQUIRE(rep.summands.size() == 1);
    CHECK(rep.summands[0].second == poly({{1, 1}, {3, 1}}));
  }
}

TEST_CASE("the naive stalk embeds in the diagonal pushforward stalk") {
  SECTION("A1") {
    auto a1 = build_root_datum('A', 1);
    ParabolicData pd(a1, {});
    for (Int n = 1; n <= 4; ++n) {
      auto chk = ic_summand_check(pd, {n});
      INFO("n=" << n);
      CHECK(chk.ok);
    }
  }

  SECTION("A2 Borel up to (2,2)") {
    auto a2 = build_root_datum('A', 2);
    ParabolicData pd(a2, {});
    for (Int a = 0; a <= 2; ++a)
      for (Int b = 0; b <= 2; ++b) {
        auto chk = ic_summand_check(pd, {a, b});
        INFO("theta=(" << a << "," << b << ")");
        CHECK(chk.ok);
      }
  }

  SECTION("unit theta across types and parabolics") {
    for (char t : {'A', 'B', 'C', 'G'}) {
      auto rd = build_root_datum(t, 2);
      for (std::vector<int> levi : {std::vector<int>{}, {0}, {1}}) {
        ParabolicData pd(rd, levi);
        Theta unit(pd.quotient_rank(), 0);
        unit[0] = 1;
        CHECK(ic_summand_check(pd, unit).ok);
      }
    }
  }

  SECTION("C2 Siegel-type theta 2: strict inequality with the expected values") {
    auto c2 = build_root_datum('C', 2);
    ParabolicData pd(c2, {0});
    auto chk = ic_summand_check(pd, {2});
    CHECK(chk.ok);
    CHECK(chk.lhs == poly({{2, 1}}));
    CHECK(chk.rhs == poly({{2, 1}, {4, 1}}));
  }
}

TEST_CASE("Borel coincidence of the two compactifications") {
  // evaluating the canonical-stalk report numerically equals the naive stalk
  // shifted by |A|: over a torus Levi every label is one-dimensional
  for (char t : {'A', 'B'}) {
    auto rd = build_root_datum(t, 2);
    ParabolicData pd(rd, {});
    for (Int a = 0; a <= 2; ++a)
      for (Int b = 0; b <= 2; ++b)
        for (auto& A : enumerate_decompositions(pd, {a, b})) {
          INFO(rd.label << " theta=(" << a << "," << b << ")");
          CHECK(bunpw_eval(pd, bunpw_stalk(pd, A)) == bunp_naive_stalk(pd, A).shifted(A.size()));
        }
  }
}
