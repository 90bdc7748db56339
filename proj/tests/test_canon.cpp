#include "doctest.h"
#include "zc/canon.hpp"
#include "zc/decide.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace zc;

TEST_CASE("representative worked examples") {
  const ColorVector a{-5, 7, -17, 19, 55};
  CHECK(representative(a, Relation::Braid) == ColorVector{7, 7, 7, 19, 19});
  CHECK(representative(a, Relation::Tangle0) == ColorVector{7, 7, 7, 11, 11});
  CHECK(representative(a, Relation::Tangle) == ColorVector{7, 1, 1, 1, 1});

  const ColorVector b{31, -5, 7, -17, 19, 55};
  CHECK(representative(b, Relation::Braid) == ColorVector{7, 7, 7, -17, 19, 19});
  CHECK(representative(b, Relation::Tangle0) == ColorVector{3, -21, 7, 7, 7, 7});
  CHECK(representative(b, Relation::Tangle) == ColorVector{25, 1, 1, 1, 1, 1});

  const ColorVector c{-2, 4, 10, -8, -14};
  CHECK(representative(c, Relation::VBraid) == ColorVector{4, 4, 10, 10, 10});
  CHECK(representative(c, Relation::VTangle0) == ColorVector{0, 0, 2, 2, 2});
  CHECK(representative(c, Relation::VTangle) == ColorVector{0, 0, 0, 0, 0});

  const ColorVector e{8, 3, -7, -2, 13, 23};
  CHECK(representative(e, Relation::VBraid) == ColorVector{3, 3, 3, 3, 8, 8});
  CHECK(representative(e, Relation::VTangle0) == ColorVector{0, 0, 1, 1, 1, 1});

  const ColorVector f{29, 41};
  CHECK(representative(f, Relation::Braid) == ColorVector{5, 17});
  CHECK(representative(f, Relation::Tangle0) == ColorVector{1, 13});
  CHECK(representative(f, Relation::Tangle) == ColorVector{-11, 1});
  CHECK(representative(f, Relation::VBraid) == ColorVector{5, 17});
  CHECK(representative(f, Relation::VTangle0) == ColorVector{1, 5});
  CHECK(representative(f, Relation::VTangle) == ColorVector{1, 1});
}

TEST_CASE("representative trivial classes and errors") {
  // Relations whose profile pins the constant class to a singleton.
  for (Relation r : {Relation::Braid, Relation::Tangle0, Relation::Pure, Relation::Slink0,
                     Relation::VBraid, Relation::VTangle0, Relation::VPure, Relation::VSlink0}) {
    CHECK(representative({4, 4, 4}, r) == ColorVector{4, 4, 4});
  }
  // The coarsest relations fold constants into their parity families.
  CHECK(representative({4, 4, 4}, Relation::Tangle) == ColorVector{0, 0, 4});
  CHECK(representative({4, 4, 4}, Relation::VTangle) == ColorVector{0, 0, 0});
  CHECK(representative({4, 4, 4}, Relation::Slink) ==
        representative({4, 0, 0}, Relation::Slink));
  CHECK(representative({4, 4, 4}, Relation::VSlink) == ColorVector{0, 0, 0});
  for (Relation r : all_relations()) CHECK_THROWS_AS(representative({1}, r), InputError);
  CHECK(representative({-3, -3}, Relation::VBraid) == ColorVector{-3, -3});
}

TEST_CASE("representative idempotence and membership") {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<i64> entry(-20, 20);
  for (int iter = 0; iter < 400; ++iter) {
    int m = 2 + (int)(rng() % 5);
    ColorVector v((size_t)m);
    for (auto& x : v) x = entry(rng);
    for (Relation r : all_relations()) {
      ColorVector rep = representative(v, r);
      CAPTURE(format_vector(v));
      CAPTURE(relation_name(r));
      CHECK(equivalent(v, rep, r));
      CHECK(representative(rep, r) == rep);
    }
  }
  // The published collision case for the plain residue lift under `pure`.
  ColorVector g1{1, 2, 4};
  CHECK(equivalent(g1, representative(g1, Relation::Pure), Relation::Pure));
  ColorVector g2{10, 7, 7};
  CHECK(equivalent(g2, representative(g2, Relation::Pure), Relation::Pure));
  CHECK(representative(representative(g2, Relation::Pure), Relation::Pure) ==
        representative(g2, Relation::Pure));
}

TEST_CASE("representative soundness and completeness") {
  // Exhaustive over [0,3]^3 for all twelve relations.
  std::vector<ColorVector> grid;
  for (i64 a = 0; a <= 3; ++a)
    for (i64 b = 0; b <= 3; ++b)
      for (i64 c = 0; c <= 3; ++c) grid.push_back({a, b, c});
  for (Relation r : all_relations()) {
    std::vector<ColorVector> reps;
    for (const auto& v : grid) reps.push_back(representative(v, r));
    for (size_t i = 0; i < grid.size(); ++i)
      for (size_t j = 0; j < grid.size(); ++j) {
        CAPTURE(format_vector(grid[i]));
        CAPTURE(format_vector(grid[j]));
        CAPTURE(relation_name(r));
        REQUIRE(equivalent(grid[i], grid[j], r) == (reps[i] == reps[j]));
      }
  }
  // Randomized at lengths 2..6.
  std::mt19937_64 rng(987);
  std::uniform_int_distribution<i64> entry(-20, 20);
  for (int iter = 0; iter < 3000; ++iter) {
    int m = 2 + (int)(rng() % 5);
    ColorVector v((size_t)m), w((size_t)m);
    for (auto& x : v) x = entry(rng);
    // Bias half the pairs toward equivalence via residue-preserving noise.
    if (iter % 2 == 0) {
      for (int i = 0; i < m; ++i) w[(size_t)i] = v[(size_t)i] + 2 * (i64)(rng() % 5 - 2);
    } else {
      for (auto& x : w) x = entry(rng);
    }
    for (Relation r : all_relations()) {
      CAPTURE(format_vector(v));
      CAPTURE(format_vector(w));
      CAPTURE(relation_name(r));
      REQUIRE(equivalent(v, w, r) == (representative(v, r) == representative(w, r)));
    }
  }
}

TEST_CASE("triple_reduce") {
  auto [t1, w1] = triple_reduce({1, -5, 4});
  CHECK(t1 == ColorVector{10, 13, 13});  // (delta, delta+d, delta+d)
  auto rep1 = apply_word({1, -5, 4}, w1);
  CHECK(rep1.first == t1);

  auto [t2, w2] = triple_reduce({5, 5, 5});
  CHECK(t2 == ColorVector{5, 5, 5});
  CHECK(w2.empty());

  auto [t3, w3] = triple_reduce({0, 3, 3});
  CHECK(t3 == ColorVector{0, 3, 3});
  CHECK(w3.empty());

  CHECK_THROWS_AS(triple_reduce({1, 2}), InputError);

  for (i64 a = -5; a <= 5; ++a)
    for (i64 b = -5; b <= 5; ++b)
      for (i64 c = -5; c <= 5; ++c) {
        ColorVector v{a, b, c};
        auto [t, w] = triple_reduce(v);
        CAPTURE(format_vector(v));
        REQUIRE(t.size() == 3);
        REQUIRE(t[1] == t[2]);
        REQUIRE(t[0] <= t[1]);
        REQUIRE(apply_word(v, w).first == t);
        REQUIRE(equivalent(v, t, Relation::Braid));
        for (const Move& mv : w) REQUIRE(mv.kind == MoveKind::Sigma);
      }
}

static void check_normal_form(const ColorVector& v) {
  auto [nf, word] = normal_form_word(v);
  CAPTURE(format_vector(v));
  REQUIRE(nf == representative(v, Relation::Braid));
  for (const Move& mv : word) REQUIRE(mv.kind == MoveKind::Sigma);
  auto [res, perm] = apply_word(v, word);
  REQUIRE(res == nf);
  i64 N = 2 * gcd_diff(v);
  for (size_t k = 0; k < v.size(); ++k)
    REQUIRE(mod_reduce(res[(size_t)perm.images[k]] - v[k], N) == 0);
}

TEST_CASE("normal_form_word goldens") {
  auto [nf1, w1] = normal_form_word({2, -4, 11, 8, -1});
  CHECK(nf1 == ColorVector{8, 8, 8, 11, 11});
  CHECK(apply_word({2, -4, 11, 8, -1}, w1).first == nf1);

  auto [nf2, w2] = normal_form_word({-5, 7, -17, 19, 55});
  CHECK(nf2 == ColorVector{7, 7, 7, 19, 19});
  CHECK(apply_word({-5, 7, -17, 19, 55}, w2).first == nf2);

  auto [nf3, w3] = normal_form_word({31, -5, 7, -17, 19, 55});
  CHECK(nf3 == ColorVector{7, 7, 7, -17, 19, 19});
  CHECK(apply_word({31, -5, 7, -17, 19, 55}, w3).first == nf3);

  auto [nf4, w4] = normal_form_word({6, 6, 6});
  CHECK(nf4 == ColorVector{6, 6, 6});
  CHECK(w4.empty());

  check_normal_form({29, 41});
  check_normal_form({-4, 11, 8, -1});
  check_normal_form({0, 3, 3, 4});
  check_normal_form({0, 0, 0, 1});
}

TEST_CASE("normal_form_word randomized replay") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<i64> entry(-15, 15);
  for (int iter = 0; iter < 600; ++iter) {
    int m = 2 + (int)(rng() % 5);
    ColorVector v((size_t)m);
    for (auto& x : v) x = entry(rng);
    check_normal_form(v);
  }
  // Exhaustive small even-length sweep (the hardest construction path).
  for (i64 a = -2; a <= 2; ++a)
    for (i64 b = -2; b <= 2; ++b)
      for (i64 c = -2; c <= 2; ++c)
        for (i64 d = -2; d <= 2; ++d) check_normal_form({a, b, c, d});
}

TEST_CASE("enumerate_representatives examples") {
  auto vt = enumerate_representatives(Relation::VTangle, 4, 1);
  REQUIRE(vt.size() == 5);
  CHECK(vt[0] == ColorVector{1, 1, 1, 1});
  CHECK(vt[4] == ColorVector{0, 0, 0, 0});

  auto vb0 = enumerate_representatives(Relation::VTangle0, 2, 2);
  REQUIRE(vb0.size() == 7);
  CHECK(vb0[0] == ColorVector{0, 0});
  CHECK(vb0[1] == ColorVector{1, 1});
  CHECK(vb0[2] == ColorVector{2, 2});
  CHECK(vb0[3] == ColorVector{-1, -1});
  CHECK(vb0[4] == ColorVector{-2, -2});
  CHECK(vb0[5] == ColorVector{0, 1});
  CHECK(vb0[6] == ColorVector{0, 2});

  auto b0 = enumerate_representatives(Relation::Braid, 2, 0);
  REQUIRE(b0.size() == 1);
  CHECK(b0[0] == ColorVector{0, 0});

  CHECK_THROWS_AS(enumerate_representatives(Relation::Pure, 3, 2), InputError);
  CHECK_THROWS_AS(enumerate_representatives(Relation::Braid, 1, 2), InputError);
  CHECK_THROWS_AS(enumerate_representatives(Relation::Braid, 3, -1), InputError);
}

TEST_CASE("enumerate_representatives cross-check") {
  const std::vector<Relation> rels = {Relation::Braid,  Relation::Tangle0,  Relation::Tangle,
                                      Relation::VBraid, Relation::VTangle0, Relation::VTangle};
  const i64 B = 3;
  for (Relation r : rels)
    for (int m = 2; m <= 4; ++m) {
      auto reps = enumerate_representatives(r, m, B);
      std::set<ColorVector> repset;
      for (const auto& w : reps) {
        CAPTURE(relation_name(r));
        CAPTURE(format_vector(w));
        REQUIRE(representative(w, r) == w);  // each member is canonical
        for (i64 x : w) REQUIRE((x >= -B && x <= B));
        REQUIRE(repset.insert(w).second);  // no duplicates
      }
      // Every class meeting the box is hit: walk the whole box.
      ColorVector v((size_t)m, -B);
      while (true) {
        ColorVector rep = representative(v, r);
        bool inbox = std::all_of(rep.begin(), rep.end(),
                                 [&](i64 x) { return x >= -B && x <= B; });
        CAPTURE(relation_name(r));
        CAPTURE(format_vector(v));
        if (inbox) REQUIRE(repset.count(rep) == 1);
        int pos = m - 1;
        while (pos >= 0 && v[(size_t)pos] == B) v[(size_t)pos--] = -B;
        if (pos < 0) break;
        ++v[(size_t)pos];
      }
    }
}
