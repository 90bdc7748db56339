#pragma once

#include "zc/core.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace zc {

// A diagram of a spatial Euler graph: arcs, crossings (each records the
// over-arc and the two halves of the under-strand), and even-degree vertices
// with their incident arcs in cyclic order.
struct Crossing {
  std::string over, under_in, under_out;
  bool operator==(const Crossing&) const = default;
};
struct VertexSpec {
  std::string id;
  std::vector<std::string> arcs_ccw;
  bool operator==(const VertexSpec&) const = default;
};
struct Diagram {
  std::vector<std::string> arcs;
  std::vector<Crossing> crossings;
  std::vector<VertexSpec> vertices;
  bool operator==(const Diagram&) const = default;
};

// Arc -> color assignment.
struct Coloring {
  std::map<std::string, i64> values;
  bool operator==(const Coloring&) const = default;
};

// Z-module basis of the coloring space, in deterministic Hermite normal form
// (rows echelonized over the arc order of the diagram, positive pivots).
struct ColoringBasis {
  int rank = 0;
  std::vector<Coloring> generators;
  bool contains_trivial = false;
};

// Pairs (d at first vertex, d at second vertex); `observed` marks bounded
// sampling output (a subset of the true invariant) as opposed to closed form.
struct DStarSet {
  std::set<std::pair<i64, i64>> pairs;
  bool observed = false;
  i64 bound = 0;
};

// Parse and validate the JSON diagram format:
// {"arcs":[...],"crossings":[{"over":..,"under_in":..,"under_out":..},...],
//  "vertices":[{"id":..,"arcs_ccw":[...]},...]}.
// Errors carry location info (malformed JSON, duplicate or dangling arc
// references, odd-degree vertex).
Diagram parse_diagram(const std::string& json_text);
std::string diagram_json(const Diagram& d);

// True when the diagram is connected (arcs joined through crossings or
// vertices); vacuously true for a single arc.
bool is_connected(const Diagram& d);

// True when c assigns a color to every arc, satisfies under_in + under_out =
// 2*over at every crossing, and has alternating sum zero around every vertex.
// (The alternating sum starts at the first listed incident arc; any other
// starting point gives the same equation up to sign.)
bool valid_coloring(const Diagram& d, const Coloring& c);

// Integer kernel of the coloring equations, computed with exact
// arbitrary-precision elimination; the generators form a Z-basis of the
// coloring module (not merely a Q-basis).
ColoringBasis coloring_basis(const Diagram& d);

// Whether c lies in the integer span of the basis (exact lattice membership).
bool basis_contains(const ColoringBasis& b, const Diagram& d, const Coloring& c);

// The colors around the vertex in its listed cyclic order.
ColorVector vertex_vector(const Diagram& d, const Coloring& c, const std::string& vertex_id);

// Essential colorings: nontrivial with gcd over arcs of (c(arc) - c(first
// arc)) equal to 1.  Equivalent to the negation of "trivial, or C = C0 +
// lambda*C' with lambda > 1, trivial C0, nontrivial coloring C'":  if the
// difference gcd is g > 1 then C0 = c(first arc) and C' = (C - C0)/g exhibit
// the factorization (C' is a coloring because the equations are linear and
// the all-equal coloring always satisfies them); conversely any such
// factorization forces lambda | every difference, so the gcd exceeds 1.
bool is_essential(const Diagram& d, const Coloring& c);

// The coloring sum_i coeffs[i] * generators[i].
Coloring combine(const ColoringBasis& b, const std::vector<i64>& coeffs);

// Sampled invariant for theta-shaped diagrams (exactly two vertices): runs
// coefficient vectors over [-bound, bound]^rank, reduces each nontrivial
// coloring to its essential representative (subtract the trivial part, divide
// by the difference gcd), and collects the pair of vertex gcd values.  The
// result is labeled observed at `bound`.
DStarSet observed_d_star(const Diagram& d, i64 bound);

// General form: the s-tuple (one entry per vertex, in listed order) of vertex
// gcd values over all sampled colorings, without essential reduction.
std::set<std::vector<i64>> observed_d_tuples(const Diagram& d, i64 bound);

// The standard four-twist-region theta_4 diagram with twist counts
// (2m, 2n, 2m, 2n), vertices "p" (arcs A1..A4) and "q" (arcs B1..B4).
Diagram theta4_build(i64 m, i64 n);

// The coloring of theta4_build(m,n) with boundary parameters (x, y) on every
// arc (chain entry arc C1 colored 0).
Coloring theta4_full_coloring(i64 m, i64 n, i64 x, i64 y);

// Closed-form vertex vectors of that coloring:
// v_p = (2mx, (2m+1)x+2ny, x+(2n+1)y, y),
// v_q = (x, (2m+1)x+y, 2mx+(2n+1)y, 2ny).
std::pair<ColorVector, ColorVector> theta4_coloring(i64 m, i64 n, i64 x, i64 y);

// Exact closed form: all coprime pairs of positive divisors of 4mn+1.
DStarSet theta4_dstar(i64 m, i64 n);

// Truncated scaling expansion {(lambda*a, lambda*b) : lambda in [0, lambda_max]}
// of a d* set; always contains (0,0).
std::set<std::pair<i64, i64>> d_from_dstar(const DStarSet& s, i64 lambda_max);

}  // namespace zc
