#include "doctest.h"
#include "zc/core.hpp"

#include <climits>
#include <random>

using namespace zc;

namespace {

ResidueMultiset ms(i64 N, std::vector<i64> vals) {
  ResidueMultiset m;
  m.modulus = N;
  for (i64 v : vals) m.counts[v]++;
  return m;
}

}  // namespace

TEST_CASE("delta") {
  CHECK(delta({1, -5, 4}) == 10);
  CHECK(delta({29, 41}) == -12);
  CHECK(delta({3, 3, 3, 3}) == 0);
  CHECK(delta({2, -4, 11, 8, -1}) == 8);
  CHECK(delta({-5, 7, -17, 19, 55}) == 7);
  CHECK(delta({31, -5, 7, -17, 19, 55}) == 24);
  CHECK(delta({-1, 5, 19, 20, 6, -1}) == 0);
  CHECK_THROWS_AS(delta({LLONG_MAX, -2}), OverflowError);
}

TEST_CASE("gcd_diff") {
  CHECK(gcd_diff({1, -5, 4}) == 3);
  CHECK(gcd_diff({7, 7, 7}) == 0);
  CHECK(gcd_diff({-2, 4, 10, -8, -14}) == 6);
  CHECK(gcd_diff({29, 41}) == 12);
  CHECK(gcd_diff({2, -4, 11, 8, -1}) == 3);
  CHECK(gcd_diff({-5, 7, -17, 19, 55}) == 12);
  CHECK(gcd_diff({31, -5, 7, -17, 19, 55}) == 12);
  CHECK(gcd_diff({8, 3, -7, -2, 13, 23}) == 5);
  CHECK(gcd_diff({-1, 2, 2}) == 3);
  CHECK(gcd_diff({0, 3, 2}) == 1);
  CHECK_THROWS_AS(gcd_diff({LLONG_MIN, 1}), OverflowError);
}

TEST_CASE("two_part") {
  CHECK(two_part({-5, 7, -17, 19, 55}) == 4);
  CHECK(two_part({9, 9}) == 0);
  CHECK(two_part({6, 10, 4}) == 2);
  CHECK(two_part({29, 41}) == 4);
  CHECK(two_part({-2, 4, 10, -8, -14}) == 2);
  CHECK(two_part({8, 3, -7, -2, 13, 23}) == 1);
  CHECK(two_part_of(12) == 4);
  CHECK(two_part_of(1) == 1);
  CHECK(two_part_of(64) == 64);
}

TEST_CASE("residues") {
  CHECK(residues_multiset({1, -5, 4}, 6) == ms(6, {1, 1, 4}));
  CHECK(residues_multiset({5, 11, -3}, 1) == ms(1, {0, 0, 0}));
  CHECK(residues_multiset({-5, 7, -17, 19, 55}, 24) == ms(24, {7, 7, 7, 19, 19}));
  CHECK(residues_multiset({-5, 7, -17, 19, 55}, 8) == ms(8, {3, 3, 7, 7, 7}));
  CHECK(residues_multiset({29, 41}, 24) == ms(24, {5, 17}));
  CHECK(residues_multiset({29, 41}, 8) == ms(8, {1, 5}));
  CHECK(residues_multiset({2, -4, 11, 8, -1}, 6) == ms(6, {2, 2, 2, 5, 5}));
  CHECK(residues_ordered({1, -5, 4}, 6).residues == std::vector<i64>{1, 1, 4});
  CHECK(residues_ordered({10, 7, 7}, 6).residues == std::vector<i64>{4, 1, 1});
  CHECK(residues_ordered({0, 0}, 0).residues == std::vector<i64>{0, 0});
  CHECK(residues_ordered({-7, 3}, 0).residues == std::vector<i64>{-7, 3});
}

TEST_CASE("profile assembles the right fields per relation") {
  ColorVector v = {1, -5, 4};
  auto pb = profile(v, Relation::Braid);
  REQUIRE(pb.delta.has_value());
  CHECK(*pb.delta == 10);
  REQUIRE(pb.gcd_part.has_value());
  CHECK(*pb.gcd_part == 3);
  REQUIRE(pb.multiset.has_value());
  CHECK(*pb.multiset == ms(6, {1, 1, 4}));
  CHECK(!pb.ordered.has_value());

  auto pv = profile({29, 41}, Relation::VTangle0);
  CHECK(!pv.delta.has_value());
  CHECK(*pv.gcd_part == 4);
  CHECK(*pv.multiset == ms(8, {1, 5}));

  auto pt = profile({5, 5, 5}, Relation::Braid);
  CHECK(*pt.delta == 5);
  CHECK(*pt.gcd_part == 0);
  CHECK(*pt.multiset == ms(0, {5, 5, 5}));

  auto pp = profile(v, Relation::Pure);
  REQUIRE(pp.ordered.has_value());
  CHECK(pp.ordered->modulus == 6);
  CHECK(pp.ordered->residues == std::vector<i64>{1, 1, 4});
  CHECK(!pp.multiset.has_value());

  auto ptg = profile(v, Relation::Tangle);
  CHECK(*ptg.delta == 10);
  CHECK(!ptg.gcd_part.has_value());
  CHECK(ptg.multiset->modulus == 2);

  CHECK_THROWS_AS(profile({1}, Relation::Braid), InputError);
}

TEST_CASE("congruence properties of delta and gcd_diff") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<i64> entry(-1000, 1000);
  std::uniform_int_distribution<int> mdist(2, 8);
  for (int iter = 0; iter < 10000; ++iter) {
    int m = mdist(rng);
    ColorVector v(m);
    for (auto& a : v) a = entry(rng);
    i64 d = gcd_diff(v);
    for (i64 a : v) CHECK(mod_reduce(a - v[0], d) == 0);
    i64 D = delta(v);
    if (m % 2 == 1)
      CHECK(mod_reduce(D - v[0], d) == 0);
    else
      CHECK(mod_reduce(D, d) == 0);
    i64 t = two_part(v);
    if (d > 0) {
      CHECK(d % t == 0);
      CHECK((d / t) % 2 != 0);
    } else {
      CHECK(t == 0);
    }
  }
}

TEST_CASE("vector text round-trip") {
  CHECK(parse_vector("1,-5,4") == ColorVector{1, -5, 4});
  CHECK(parse_vector(" 2, 3 ") == ColorVector{2, 3});
  CHECK(format_vector({1, -5, 4}) == "1,-5,4");
  CHECK_THROWS_AS(parse_vector("1,x"), InputError);
  CHECK_THROWS_AS(parse_vector("5"), InputError);
  CHECK_THROWS_AS(parse_vector("99999999999999999999,1"), OverflowError);
}

TEST_CASE("relation names") {
  for (Relation r : all_relations()) {
    auto back = parse_relation(relation_name(r));
    REQUIRE(back.has_value());
    CHECK(*back == r);
  }
  CHECK(!parse_relation("knot").has_value());
  CHECK(is_perm_constrained(Relation::Slink0));
  CHECK(!is_perm_constrained(Relation::Tangle0));
  CHECK(is_virtual(Relation::VPure));
  CHECK(!is_virtual(Relation::Pure));
}
