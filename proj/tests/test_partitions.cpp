#include <catch_amalgamated.hpp>

#include <set>

#include "zastava/oracles.hpp"
#include "zastava/partitions.hpp"

using namespace zastava;

TEST_CASE("decompositions of theta") {
  auto a2 = build_root_datum('A', 2);
  ParabolicData pd(a2, {});

  SECTION("unit vector has exactly one decomposition") {
    auto d = enumerate_decompositions(pd, {1, 0});
    REQUIRE(d.size() == 1);
    CHECK(d[0].parts == std::vector<std::pair<Theta, Int>>{{{1, 0}, 1}});
  }

  SECTION("theta = (1,1)") {
    auto d = enumerate_decompositions(pd, {1, 1});
    REQUIRE(d.size() == 2);
    // {(1,1)} and {(1,0),(0,1)}
    std::set<Int> sizes;
    for (auto& x : d) sizes.insert(x.size());
    CHECK(sizes == std::set<Int>{1, 2});
  }

  SECTION("theta = (2,0)") {
    auto d = enumerate_decompositions(pd, {2, 0});
    REQUIRE(d.size() == 2);  // {(2,0)} and {(1,0) x 2}
  }

  SECTION("theta = 0 gives the single empty decomposition") {
    auto d = enumerate_decompositions(pd, {0, 0});
    REQUIRE(d.size() == 1);
    CHECK(d[0].parts.empty());
  }

  CHECK_THROWS(enumerate_decompositions(pd, {-1, 0}));
}

TEST_CASE("partitions into coroot projections") {
  SECTION("A1 at the Borel: a single partition") {
    auto a1 = build_root_datum('A', 1);
    ParabolicData pd(a1, {});
    for (Int n = 1; n <= 5; ++n) {
      auto p = enumerate_coroot_partitions(pd, {n});
      REQUIRE(p.size() == 1);
      CHECK(p[0].parts == std::vector<std::pair<Theta, Int>>{{{1}, n}});
      CHECK(p[0].size() == n);
    }
  }

  SECTION("A2 Borel") {
    auto a2 = build_root_datum('A', 2);
    ParabolicData pd(a2, {});
    CHECK(enumerate_coroot_partitions(pd, {1, 1}).size() == 2);
    CHECK(enumerate_coroot_partitions(pd, {2, 2}).size() == 3);
  }

  SECTION("projections that coincide are identified") {
    // A2, Levi {1}: both coroots outside the Levi project to 1
    auto a2 = build_root_datum('A', 2);
    ParabolicData pd(a2, {0});
    CHECK(pd.coroot_projections() == std::vector<Theta>{{1}});
    CHECK(enumerate_coroot_partitions(pd, {2}).size() == 1);
  }
}

TEST_CASE("principal partition") {
  auto a2 = build_root_datum('A', 2);

  SECTION("present iff theta is a coroot projection") {
    ParabolicData pd(a2, {});
    CHECK(principal_partition(pd, {1, 1}).has_value());
    CHECK_FALSE(principal_partition(pd, {2, 2}).has_value());
  }

  SECTION("Levi {1}, theta = 1") {
    ParabolicData pd(a2, {0});
    auto p = principal_partition(pd, {1});
    REQUIRE(p.has_value());
    CHECK(p->size() == 1);
  }
}

TEST_CASE("Borel partition counts match the Kostant recursion") {
  for (char t : {'A', 'B', 'G'}) {
    auto rd = build_root_datum(t, 2);
    ParabolicData pd(rd, {});
    for (Int a = 0; a <= 4; ++a)
      for (Int b = 0; b <= 4; ++b) {
        INFO(rd.label << " theta=(" << a << "," << b << ")");
        CHECK((Int)enumerate_coroot_partitions(pd, {a, b}).size() ==
              oracle::kostant_pf(rd, {a, b}));
      }
  }
}

TEST_CASE("every coroot partition maps to a valid decomposition") {
  auto b2 = build_root_datum('B', 2);
  ParabolicData pd(b2, {1});
  for (Int n = 0; n <= 4; ++n) {
    auto ps = enumerate_coroot_partitions(pd, {n});
    auto ds = enumerate_decompositions(pd, {n});
    std::set<std::vector<std::pair<Theta, Int>>> dset;
    for (auto& d : ds) dset.insert(d.parts);
    for (auto& p : ps) {
      for (auto& [part, mult] : p.parts) {
        CHECK(!theta_zero(part));
        CHECK(theta_nonneg(part));
      }
      if (n > 0) CHECK(dset.count(p.parts) == 1);
    }
  }
}

TEST_CASE("factorization consistency under merge") {
  // partitions of theta1+theta2 that refine the split are exactly the merges
  auto a2 = build_root_datum('A', 2);
  ParabolicData pd(a2, {});
  Theta t1{1, 1}, t2{1, 0}, tot{2, 1};
  std::set<std::vector<std::pair<Theta, Int>>> merged;
  for (auto& p1 : enumerate_coroot_partitions(pd, t1))
    for (auto& p2 : enumerate_coroot_partitions(pd, t2)) merged.insert(merge_partitions(p1, p2).parts);
  std::set<std::vector<std::pair<Theta, Int>>> all;
  for (auto& p : enumerate_coroot_partitions(pd, tot)) all.insert(p.parts);
  for (auto& m : merged) CHECK(all.count(m) == 1);
  // and the merge of the two one-part principals is the two-part partition
  auto pr1 = principal_partition(pd, t1), pr2 = principal_partition(pd, t2);
  REQUIRE((pr1 && pr2));
  CHECK(merge_partitions(*pr1, *pr2).size() == 2);
}

TEST_CASE("deterministic enumeration order") {
  auto a2 = build_root_datum('A', 2);
  ParabolicData pd(a2, {});
  auto d1 = enumerate_decompositions(pd, {2, 1});
  auto d2 = enumerate_decompositions(pd, {2, 1});
  CHECK(d1 == d2);
  CHECK(std::is_sorted(d1.begin(), d1.end()));
}

TEST_CASE("memoized counts agree with enumeration") {
  auto g2 = build_root_datum('G', 2);
  ParabolicData pd(g2, {});
  CHECK(count_coroot_partitions(pd, {2, 2}) == (Int)enumerate_coroot_partitions(pd, {2, 2}).size());
  CHECK(count_coroot_partitions(pd, {2, 2}) == (Int)enumerate_coroot_partitions(pd, {2, 2}).size());
}
