#include "zc/spatial.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "doctest.h"
#include "zc/core.hpp"

using namespace zc;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Diagram load_fixture(const std::string& name) {
  return parse_diagram(read_file(std::string(FIXTURE_DIR) + "/" + name));
}

// The hand-checkable essential coloring of the two-loop bouquet fixture at
// scale r: loop parameters a = 5r, x = 4r.
Coloring bouquet_coloring(i64 r) {
  Coloring c;
  c.values["P0"] = 0;
  c.values["A"] = 5 * r;
  c.values["PX"] = 9 * r;
  for (int j = 1; j <= 12; ++j) c.values["L" + std::to_string(j)] = 5 * r * (j + 1);
  for (int j = 1; j <= 15; ++j)
    if (j != 14) c.values["R" + std::to_string(j)] = 5 * r + 4 * r * (j + 1);
  return c;
}

Coloring shift(Coloring c, i64 w) {
  for (auto& [arc, val] : c.values) val = checked_add(val, w);
  return c;
}

}  // namespace

TEST_CASE("theta4 builder, closed forms, and solver agree") {
  std::mt19937 rng(20260825);
  std::uniform_int_distribution<i64> coord(-30, 30);
  for (i64 m = 1; m <= 3; ++m) {
    for (i64 n = 1; n <= 3; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      const Diagram d = theta4_build(m, n);
      CHECK(d.crossings.size() == static_cast<std::size_t>(2 * (2 * m + 2 * n)));
      CHECK(d.vertices.size() == 2);
      CHECK(is_connected(d));
      // serialization round trip
      CHECK(parse_diagram(diagram_json(d)) == d);

      const ColoringBasis b = coloring_basis(d);
      CHECK(b.rank == 3);
      CHECK(b.contains_trivial);
      for (const Coloring& g : b.generators) CHECK(valid_coloring(d, g));

      for (int trial = 0; trial < 20; ++trial) {
        const i64 x = coord(rng), y = coord(rng);
        CAPTURE(x);
        CAPTURE(y);
        const Coloring c = theta4_full_coloring(m, n, x, y);
        CHECK(valid_coloring(d, c));
        CHECK(basis_contains(b, d, c));
        const auto [vp, vq] = theta4_coloring(m, n, x, y);
        CHECK(vertex_vector(d, c, "p") == vp);
        CHECK(vertex_vector(d, c, "q") == vq);
        // shifting by a constant keeps validity (trivial direction)
        CHECK(valid_coloring(d, shift(c, 7)));
      }

      // Conversely each solver generator lies in the closed-form family
      // {constant + parametric(x, y)}, so the two descriptions of the
      // coloring module coincide.
      for (const Coloring& g : b.generators) {
        const i64 w = g.values.at("C1");
        const i64 x = checked_sub(g.values.at("B1"), w);
        const i64 y = checked_sub(g.values.at("A4"), w);
        CHECK(g == shift(theta4_full_coloring(m, n, x, y), w));
      }
    }
  }
}

TEST_CASE("theta4 essentiality and vertex gcd closed forms") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<i64> coord(-40, 40);
  std::uniform_int_distribution<i64> twist(1, 3);
  std::map<std::pair<i64, i64>, Diagram> cache;
  int coprime_seen = 0;
  for (int trial = 0; trial < 1200; ++trial) {
    const i64 m = twist(rng), n = twist(rng);
    const i64 x = coord(rng), y = coord(rng);
    if (x == 0 && y == 0) continue;
    CAPTURE(m);
    CAPTURE(n);
    CAPTURE(x);
    CAPTURE(y);
    auto it = cache.find({m, n});
    if (it == cache.end()) it = cache.emplace(std::pair{m, n}, theta4_build(m, n)).first;
    const Diagram& d = it->second;
    const Coloring c = theta4_full_coloring(m, n, x, y);
    const auto [vp, vq] = theta4_coloring(m, n, x, y);
    // the two vertex vectors always share their largest power-of-two part
    CHECK(two_part(vp) == two_part(vq));
    CHECK(is_essential(d, c) == (std::gcd(x, y) == 1));
    if (std::gcd(x, y) != 1) continue;
    ++coprime_seen;
    const i64 N = 4 * m * n + 1;
    CHECK(gcd_diff(vp) == std::gcd(checked_add(x, 2 * n * y), N));
    CHECK(gcd_diff(vq) == std::gcd(checked_add(2 * m * x, y), N));
    CHECK(std::gcd(gcd_diff(vp), gcd_diff(vq)) == 1);
  }
  CHECK(coprime_seen > 500);
}

TEST_CASE("observed pair sampling matches the closed-form invariant") {
  const std::pair<i64, i64> cases[] = {{1, 1}, {1, 2}, {2, 2}, {1, 5}};
  for (const auto& [m, n] : cases) {
    CAPTURE(m);
    CAPTURE(n);
    const Diagram d = theta4_build(m, n);
    const DStarSet obs = observed_d_star(d, 40);
    const DStarSet exact = theta4_dstar(m, n);
    CHECK(obs.observed);
    CHECK(obs.bound == 40);
    CHECK_FALSE(exact.observed);
    CHECK(obs.pairs == exact.pairs);
  }
  // the (1,5) invariant in full
  const std::set<std::pair<i64, i64>> expected15 = {
      {1, 1}, {1, 3}, {1, 7}, {1, 21}, {3, 1}, {3, 7}, {7, 1}, {7, 3}, {21, 1}};
  CHECK(theta4_dstar(1, 5).pairs == expected15);
}

TEST_CASE("closed-form invariant separates twist families") {
  std::vector<std::pair<std::pair<i64, i64>, DStarSet>> all;
  for (i64 m = 1; m <= 4; ++m)
    for (i64 n = m; n <= 4; ++n) all.push_back({{m, n}, theta4_dstar(m, n)});
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const auto& [pi, si] = all[i];
      const auto& [pj, sj] = all[j];
      CAPTURE(pi.first);
      CAPTURE(pi.second);
      CAPTURE(pj.first);
      CAPTURE(pj.second);
      if (pi.first * pi.second == pj.first * pj.second)
        CHECK(si.pairs == sj.pairs);  // the invariant only depends on the product
      else
        CHECK(si.pairs != sj.pairs);
    }
  }
}

TEST_CASE("scaling expansion of the invariant") {
  const DStarSet s = theta4_dstar(1, 1);
  CHECK(s.pairs == std::set<std::pair<i64, i64>>{{1, 1}, {1, 5}, {5, 1}});
  const std::set<std::pair<i64, i64>> expanded = d_from_dstar(s, 3);
  const std::set<std::pair<i64, i64>> expected = {{0, 0}, {1, 1}, {1, 5}, {5, 1}, {2, 2}, {2, 10},
                                                  {10, 2}, {3, 3}, {3, 15}, {15, 3}};
  CHECK(expanded == expected);
  CHECK(d_from_dstar(s, 0) == std::set<std::pair<i64, i64>>{{0, 0}});
  CHECK_THROWS_AS(d_from_dstar(s, -1), InputError);
}

TEST_CASE("two-loop bouquet fixture") {
  const Diagram d = load_fixture("bouquet2.json");
  CHECK(d.arcs.size() == 29);
  CHECK(d.crossings.size() == 27);
  CHECK(d.vertices.size() == 1);
  CHECK(is_connected(d));
  CHECK(parse_diagram(diagram_json(d)) == d);

  const ColoringBasis b = coloring_basis(d);
  CHECK(b.rank == 2);
  CHECK(b.contains_trivial);
  for (const Coloring& g : b.generators) CHECK(valid_coloring(d, g));

  const Coloring c1 = bouquet_coloring(1);
  CHECK(valid_coloring(d, c1));
  CHECK(basis_contains(b, d, c1));
  CHECK(is_essential(d, c1));
  CHECK(vertex_vector(d, c1, "p") == ColorVector{0, 60, 69, 9});
  CHECK(gcd_diff(vertex_vector(d, c1, "p")) == 3);

  const Coloring c3 = bouquet_coloring(3);
  CHECK(valid_coloring(d, c3));
  CHECK_FALSE(is_essential(d, c3));

  // every coloring has vertex gcd divisible by 3; 0, 3, 6 all occur
  const std::set<std::vector<i64>> tuples = observed_d_tuples(d, 4);
  CHECK(tuples.count({0}) == 1);
  CHECK(tuples.count({3}) == 1);
  CHECK(tuples.count({6}) == 1);
  for (const std::vector<i64>& t : tuples) {
    REQUIRE(t.size() == 1);
    CHECK(t[0] % 3 == 0);
  }
  // one vertex only: the pair-valued form refuses
  CHECK_THROWS_AS(observed_d_star(d, 2), InputError);
}

TEST_CASE("planar theta fixture") {
  const Diagram d = load_fixture("theta4_planar.json");
  CHECK(d.crossings.empty());
  CHECK(is_connected(d));
  const ColoringBasis b = coloring_basis(d);
  CHECK(b.rank == 3);
  CHECK(b.contains_trivial);
  const DStarSet obs = observed_d_star(d, 3);
  CHECK(obs.pairs == std::set<std::pair<i64, i64>>{{1, 1}});
}

TEST_CASE("vanishing vertex gcd forces constant colorings on connected diagrams") {
  for (const char* name : {"theta4_planar.json", "bouquet2.json", "theta4_1_1.json"}) {
    CAPTURE(name);
    const Diagram d = load_fixture(name);
    REQUIRE(is_connected(d));
    const ColoringBasis b = coloring_basis(d);
    std::vector<i64> coeffs(b.generators.size(), -2);
    while (true) {
      const Coloring c = combine(b, coeffs);
      CHECK(valid_coloring(d, c));
      bool all_zero = true;
      for (const VertexSpec& v : d.vertices)
        if (gcd_diff(vertex_vector(d, c, v.id)) != 0) all_zero = false;
      if (all_zero) {
        const i64 ref = c.values.at(d.arcs[0]);
        for (const std::string& a : d.arcs) CHECK(c.values.at(a) == ref);
      }
      std::size_t i = 0;
      while (i < coeffs.size() && coeffs[i] == 2) coeffs[i++] = -2;
      if (i == coeffs.size()) break;
      ++coeffs[i];
    }
  }
}

TEST_CASE("degenerate diagrams") {
  // crossingless loop: only constant colorings
  Diagram loop;
  loop.arcs = {"u"};
  const ColoringBasis b = coloring_basis(loop);
  CHECK(b.rank == 1);
  CHECK(b.contains_trivial);
  CHECK(is_connected(loop));

  Diagram two;
  two.arcs = {"u", "v"};
  CHECK_FALSE(is_connected(two));
  CHECK(coloring_basis(two).rank == 2);
  Coloring c;
  c.values = {{"u", 3}, {"v", 3}};
  CHECK(valid_coloring(two, c));
  c.values["v"] = 4;
  CHECK(valid_coloring(two, c));  // no equations relate the components
  CHECK(is_essential(two, c));
}

TEST_CASE("diagram validation and parse errors") {
  CHECK_THROWS_AS(parse_diagram("not json"), InputError);
  CHECK_THROWS_AS(parse_diagram("[]"), InputError);
  CHECK_THROWS_AS(parse_diagram(R"({"arcs":["a"],"crossings":[]})"), InputError);
  CHECK_THROWS_AS(parse_diagram(R"({"arcs":[],"crossings":[],"vertices":[]})"), InputError);
  CHECK_THROWS_AS(parse_diagram(R"({"arcs":["a","a"],"crossings":[],"vertices":[]})"), InputError);
  CHECK_THROWS_AS(
      parse_diagram(R"({"arcs":["a"],"crossings":[],"vertices":[],"extra":1})"), InputError);

  // dangling arc reference carries its location
  try {
    parse_diagram(
        R"({"arcs":["a"],"crossings":[{"over":"a","under_in":"a","under_out":"b"}],"vertices":[]})");
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("under_out") != std::string::npos);
    CHECK(std::string(e.what()).find("\"b\"") != std::string::npos);
  }

  // odd-degree vertex names the vertex
  try {
    parse_diagram(
        R"({"arcs":["a","b","c"],"crossings":[],"vertices":[{"id":"v","arcs_ccw":["a","b","c"]}]})");
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("\"v\"") != std::string::npos);
    CHECK(std::string(e.what()).find("odd degree") != std::string::npos);
  }

  CHECK_THROWS_AS(theta4_build(0, 1), InputError);
  CHECK_THROWS_AS(theta4_full_coloring(1, 0, 1, 1), InputError);
  CHECK_THROWS_AS(theta4_dstar(-1, 2), InputError);

  const Diagram d = theta4_build(1, 1);
  Coloring missing;
  missing.values["A1"] = 0;
  CHECK_FALSE(valid_coloring(d, missing));
  CHECK_THROWS_AS(vertex_vector(d, missing, "q"), InputError);
  CHECK_THROWS_AS(vertex_vector(d, theta4_full_coloring(1, 1, 1, 0), "r"), InputError);
  CHECK_THROWS_AS(is_essential(d, missing), InputError);
  const ColoringBasis b = coloring_basis(d);
  CHECK_THROWS_AS(combine(b, {1, 2}), InputError);
  CHECK_THROWS_AS(observed_d_star(d, -1), InputError);

  // invalid assignments are rejected by the checker and the lattice test
  Coloring bad = theta4_full_coloring(1, 1, 1, 0);
  bad.values["A1"] = checked_add(bad.values["A1"], 1);
  CHECK_FALSE(valid_coloring(d, bad));
  CHECK_FALSE(basis_contains(b, d, bad));
}
