#include <catch_amalgamated.hpp>

#include "zastava/oracles.hpp"
#include "zastava/semiinfinite.hpp"

using namespace zastava;

namespace {

Coweight cw(const RootDatum& rd, Vec v) {
  v.resize(rd.total_rank(), 0);
  return Coweight(v);
}

}  // namespace

TEST_CASE("dimension bounds") {
  auto a2 = build_root_datum('A', 2);
  ParabolicData pd(a2, {0});
  CHECK(mv_dim_bound(pd, cw(a2, {0, 0}), cw(a2, {0, 0})) == Rational(0));
  CHECK(mv_dim_bound(pd, cw(a2, {1, 1}), cw(a2, {1, 1})) == Rational(4));

  auto a1 = build_root_datum('A', 1);
  ParabolicData pb(a1, {});
  CHECK(mv_dim_bound(pb, cw(a1, {1}), cw(a1, {1})) == Rational(2));
  // genuinely half-integral bounds occur
  CHECK(mv_dim_bound(pb, cw(a1, {1}), cw(a1, {0})) == Rational(1));

  CHECK_THROWS(mv_dim_bound(pd, cw(a2, {0, 0}), cw(a2, {-1, 0})));
}

TEST_CASE("component counts against the Levi branching") {
  auto a2 = build_root_datum('A', 2);

  SECTION("torus case: weight multiplicities") {
    ParabolicData pd(a2, {});
    CHECK(mv_component_count(pd, cw(a2, {0, 0}), cw(a2, {1, 1})) == 2);
    CHECK(mv_component_count(pd, cw(a2, {1, 0}), cw(a2, {1, 1})) == 1);
  }

  SECTION("the highest weight itself always counts once") {
    ParabolicData pd(a2, {0});
    CHECK(mv_component_count(pd, cw(a2, {2, 1}), cw(a2, {2, 1})) == 1);
  }
}

TEST_CASE("components against the opposite unipotent orbit") {
  SECTION("Borel: the Kostant partition function") {
    auto a2 = build_root_datum('A', 2);
    ParabolicData pd(a2, {});
    for (Int a = 0; a <= 3; ++a)
      for (Int b = 0; b <= 3; ++b) {
        auto rep = semiinf_component_count(pd, cw(a2, {a, b}));
        CHECK(rep.component_count == oracle::kostant_pf(a2, {a, b}));
      }
  }

  SECTION("projection outside the cone reports zero with a note") {
    auto a2 = build_root_datum('A', 2);
    ParabolicData pd(a2, {0});
    auto rep = semiinf_component_count(pd, cw(a2, {0, -1}));
    CHECK(rep.component_count == 0);
    CHECK(!rep.note.empty());
  }

  SECTION("A2 Levi {1}, nu = alpha_1 + alpha_2") {
    auto a2 = build_root_datum('A', 2);
    ParabolicData pd(a2, {0});
    auto rep = semiinf_component_count(pd, cw(a2, {1, 1}));
    CHECK(rep.component_count == 1);
  }

  SECTION("bound consistency for counted components") {
    auto b2 = build_root_datum('B', 2);
    for (std::vector<int> levi : {std::vector<int>{}, {0}, {1}}) {
      ParabolicData pd(b2, levi);
      for (Int a = -1; a <= 2; ++a)
        for (Int b = -1; b <= 2; ++b) {
          Coweight nu = cw(b2, {a, b});
          if (!pd.is_levi_dominant(nu)) continue;
          auto rep = semiinf_component_count(pd, nu);
          if (rep.component_count > 0) {
            CHECK(Rational(0) <= rep.dim_bound);
            Coweight gap = pd.flat(pd.project(nu)) - nu;
            CHECK(theta_zero(pd.project(gap)));
            for (int i : pd.levi) CHECK(gap.c[i] >= 0);
          }
        }
    }
  }
}

TEST_CASE("stable limits at the Borel") {
  SECTION("nu = 0") {
    auto a1 = build_root_datum('A', 1);
    auto s = stable_limit_check(a1, cw(a1, {0}), cw(a1, {2}));
    CHECK(s.weight_space_dim == 1);
    CHECK(s.env_dim == 1);
    CHECK(s.equal);
  }

  SECTION("A1, nu = alpha") {
    auto a1 = build_root_datum('A', 1);
    auto s = stable_limit_check(a1, cw(a1, {1}), cw(a1, {1}));
    CHECK(s.weight_space_dim == 1);
    CHECK(s.env_dim == 1);
    CHECK(s.equal);
  }

  SECTION("A2, nu = alpha_1 + alpha_2 at depth 2") {
    auto a2 = build_root_datum('A', 2);
    auto s = stable_limit_check(a2, cw(a2, {1, 1}), cw(a2, {2, 2}));
    CHECK(s.weight_space_dim == 2);
    CHECK(s.env_dim == 2);
    CHECK(s.equal);
  }

  SECTION("stabilization: nondecreasing in depth, constant past the height") {
    auto a2 = build_root_datum('A', 2);
    for (Vec nuv : {Vec{2, 1}, Vec{1, 1}, Vec{3, 0}, Vec{2, 2}}) {
      Coweight nu = cw(a2, nuv);
      Int h = nu.height();
      Int prev = 0;
      for (Int m = 1; m <= h + 2; ++m) {
        auto s = stable_limit_check(a2, nu, cw(a2, {m, m}));
        CHECK(prev <= s.weight_space_dim);
        prev = s.weight_space_dim;
        if (m >= h) {  // depth of m*(alpha_1+alpha_2) is m on both walls
          CHECK(s.equal);
        }
      }
    }
  }
}

TEST_CASE("general-parabolic stabilization on the wall") {
  auto a2 = build_root_datum('A', 2);
  ParabolicData pd(a2, {0});

  SECTION("the minimal wall vector") {
    Coweight w = wall_vector(pd, 1);
    CHECK(w == cw(a2, {1, 2}));
    CHECK(pd.datum.pair_with_simple_root(w, 0) == 0);
    CHECK(pd.datum.pair_with_simple_root(w, 1) == 3);
  }

  SECTION("shifted counts stabilize to the semi-infinite count") {
    for (Vec nuv : {Vec{1, 1}, Vec{0, 0}, Vec{2, 2}}) {
      Coweight nu = cw(a2, nuv);
      Int expect = semiinf_component_count(pd, nu).component_count;
      for (Int k = 1; k <= 2; ++k) {
        Coweight mu = Int(k) * wall_vector(pd, std::max<Int>(1, nu.height()));
        INFO("nu " << detail::vec_to_string(nuv) << " k=" << k);
        CHECK(shifted_component_count(pd, nu, mu) == expect);
      }
    }
  }

  SECTION("a label missing from the block gives zero") {
    // nu = 2*alpha_1 + alpha_2 projects to 1 but is not a constituent of u_1
    Coweight nu = cw(a2, {2, 1});
    REQUIRE(pd.is_levi_dominant(nu));
    CHECK(semiinf_component_count(pd, nu).component_count == 0);
    Coweight mu = Int(2) * wall_vector(pd, 2);
    CHECK(shifted_component_count(pd, nu, mu) == 0);
  }
}

TEST_CASE("deep dominant scan") {
  auto b2 = build_root_datum('B', 2);
  Coweight mu = deep_dominant(b2, 3);
  for (int i = 0; i < b2.rank; ++i) CHECK(b2.pair_with_simple_root(mu, i) >= 3);
}
