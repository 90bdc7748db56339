#include "zc/spatial.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"

namespace zc {

namespace {

using big = mpz_class;
using json = nlohmann::ordered_json;

[[noreturn]] void internal_error(const std::string& msg) {
  throw std::logic_error("internal invariant violated: " + msg);
}

std::unordered_map<std::string, int> arc_index(const Diagram& d) {
  std::unordered_map<std::string, int> idx;
  for (int i = 0; i < static_cast<int>(d.arcs.size()); ++i) idx.emplace(d.arcs[i], i);
  return idx;
}

void validate_diagram(const Diagram& d) {
  if (d.arcs.empty()) throw InputError("diagram: arcs must be a nonempty list");
  std::unordered_map<std::string, int> idx;
  for (std::size_t i = 0; i < d.arcs.size(); ++i) {
    if (d.arcs[i].empty()) throw InputError("diagram: arcs[" + std::to_string(i) + "] is empty");
    if (!idx.emplace(d.arcs[i], static_cast<int>(i)).second)
      throw InputError("diagram: duplicate arc name \"" + d.arcs[i] + "\"");
  }
  auto check_arc = [&](const std::string& name, const std::string& where) {
    if (!idx.count(name))
      throw InputError("diagram: " + where + " references undeclared arc \"" + name + "\"");
  };
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    const std::string loc = "crossings[" + std::to_string(i) + "]";
    check_arc(d.crossings[i].over, loc + ".over");
    check_arc(d.crossings[i].under_in, loc + ".under_in");
    check_arc(d.crossings[i].under_out, loc + ".under_out");
  }
  std::set<std::string> vertex_ids;
  for (const VertexSpec& v : d.vertices) {
    if (v.id.empty()) throw InputError("diagram: vertex with empty id");
    if (!vertex_ids.insert(v.id).second)
      throw InputError("diagram: duplicate vertex id \"" + v.id + "\"");
    if (v.arcs_ccw.empty() || v.arcs_ccw.size() % 2 != 0)
      throw InputError("diagram: vertex \"" + v.id + "\" has odd degree " +
                       std::to_string(v.arcs_ccw.size()) + " (degree must be even and positive)");
    for (std::size_t k = 0; k < v.arcs_ccw.size(); ++k)
      check_arc(v.arcs_ccw[k], "vertex \"" + v.id + "\" arcs_ccw[" + std::to_string(k) + "]");
  }
}

// Coefficient matrix of the coloring equations: one row per crossing
// (under_in + under_out - 2*over = 0), then one row per vertex (alternating
// sum of incident colors = 0).  Columns follow the declared arc order.
std::vector<std::vector<big>> equation_matrix(const Diagram& d) {
  const auto idx = arc_index(d);
  const std::size_t n = d.arcs.size();
  std::vector<std::vector<big>> rows;
  rows.reserve(d.crossings.size() + d.vertices.size());
  for (const Crossing& c : d.crossings) {
    std::vector<big> row(n, 0);
    row[idx.at(c.under_in)] += 1;
    row[idx.at(c.under_out)] += 1;
    row[idx.at(c.over)] -= 2;
    rows.push_back(std::move(row));
  }
  for (const VertexSpec& v : d.vertices) {
    std::vector<big> row(n, 0);
    for (std::size_t k = 0; k < v.arcs_ccw.size(); ++k)
      row[idx.at(v.arcs_ccw[k])] += (k % 2 == 0) ? 1 : -1;
    rows.push_back(std::move(row));
  }
  return rows;
}

// Integer kernel of the row system via unimodular column operations: reduce
// the matrix to column echelon form while mirroring every operation on an
// identity matrix U; the U-columns over fully-zeroed matrix columns form a
// Z-basis of the kernel.
std::vector<std::vector<big>> integer_kernel(std::vector<std::vector<big>> M, std::size_t n) {
  std::vector<std::vector<big>> U(n, std::vector<big>(n, 0));
  for (std::size_t j = 0; j < n; ++j) U[j][j] = 1;
  const std::size_t r = M.size();
  auto col_sub = [&](std::size_t dst, std::size_t src, const big& q) {
    for (std::size_t i = 0; i < r; ++i) M[i][dst] -= q * M[i][src];
    for (std::size_t i = 0; i < n; ++i) U[i][dst] -= q * U[i][src];
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < r; ++i) std::swap(M[i][a], M[i][b]);
    for (std::size_t i = 0; i < n; ++i) std::swap(U[i][a], U[i][b]);
  };
  std::size_t c = 0;  // number of pivot columns fixed so far
  for (std::size_t i = 0; i < r && c < n; ++i) {
    while (true) {
      std::size_t best = n;
      for (std::size_t j = c; j < n; ++j)
        if (M[i][j] != 0 &&
            (best == n || mpz_cmpabs(M[i][j].get_mpz_t(), M[i][best].get_mpz_t()) < 0))
          best = j;
      if (best == n) break;  // row is zero on the active columns
      bool lone = true;
      for (std::size_t j = c; j < n; ++j) {
        if (j == best || M[i][j] == 0) continue;
        big q = M[i][j] / M[i][best];  // truncated; the outer loop re-runs Euclid
        if (q != 0) col_sub(j, best, q);
        if (M[i][j] != 0) lone = false;
      }
      if (lone) {
        col_swap(best, c);
        ++c;
        break;
      }
    }
  }
  std::vector<std::vector<big>> kernel;
  for (std::size_t j = c; j < n; ++j) {
    std::vector<big> vec(n);
    for (std::size_t i = 0; i < n; ++i) vec[i] = U[i][j];
    kernel.push_back(std::move(vec));
  }
  return kernel;
}

// In-place row Hermite normal form (unimodular row operations): echelon with
// positive pivots and the entries above each pivot reduced into [0, pivot).
void row_hnf(std::vector<std::vector<big>>& K, std::size_t n) {
  const std::size_t k = K.size();
  std::size_t r0 = 0;
  for (std::size_t j = 0; j < n && r0 < k; ++j) {
    while (true) {
      std::size_t best = k;
      for (std::size_t i = r0; i < k; ++i)
        if (K[i][j] != 0 &&
            (best == k || mpz_cmpabs(K[i][j].get_mpz_t(), K[best][j].get_mpz_t()) < 0))
          best = i;
      if (best == k) break;
      bool lone = true;
      for (std::size_t i = r0; i < k; ++i) {
        if (i == best || K[i][j] == 0) continue;
        big q = K[i][j] / K[best][j];
        if (q != 0)
          for (std::size_t t = 0; t < n; ++t) K[i][t] -= q * K[best][t];
        if (K[i][j] != 0) lone = false;
      }
      if (!lone) continue;
      std::swap(K[best], K[r0]);
      if (K[r0][j] < 0)
        for (std::size_t t = 0; t < n; ++t) K[r0][t] = -K[r0][t];
      for (std::size_t i = 0; i < r0; ++i) {
        big q;
        mpz_fdiv_q(q.get_mpz_t(), K[i][j].get_mpz_t(), K[r0][j].get_mpz_t());
        if (q != 0)
          for (std::size_t t = 0; t < n; ++t) K[i][t] -= q * K[r0][t];
      }
      ++r0;
      break;
    }
  }
}

// Lattice membership against an HNF row basis: peel pivots in order with
// exact divisions; v is in the span iff it reduces to zero.
bool hnf_member(const std::vector<std::vector<big>>& H, std::vector<big> v, std::size_t n) {
  for (const std::vector<big>& row : H) {
    std::size_t p = 0;
    while (p < n && row[p] == 0) ++p;
    if (p == n) continue;
    if (v[p] == 0) continue;
    big q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), v[p].get_mpz_t(), row[p].get_mpz_t());
    if (rem != 0) return false;
    for (std::size_t t = p; t < n; ++t) v[t] -= q * row[t];
  }
  for (std::size_t t = 0; t < n; ++t)
    if (v[t] != 0) return false;
  return true;
}

i64 big_to_i64(const big& x, const std::string& what) {
  if (!x.fits_slong_p()) throw OverflowError(what + " exceeds 64-bit range");
  return static_cast<i64>(x.get_si());
}

std::vector<std::vector<big>> basis_rows(const ColoringBasis& b, const Diagram& d) {
  std::vector<std::vector<big>> rows;
  for (const Coloring& g : b.generators) {
    std::vector<big> row;
    row.reserve(d.arcs.size());
    for (const std::string& a : d.arcs) {
      auto it = g.values.find(a);
      if (it == g.values.end()) internal_error("basis generator misses arc " + a);
      row.emplace_back(static_cast<long>(it->second));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

i64 coloring_value(const Coloring& c, const std::string& arc) {
  auto it = c.values.find(arc);
  if (it == c.values.end()) throw InputError("coloring assigns no value to arc \"" + arc + "\"");
  return it->second;
}

i64 gcd_i64(i64 a, i64 b) { return std::gcd(a, b); }

// Shared odometer over coefficient vectors in [-bound, bound]^rank, invoking
// fn with the per-arc color values (declared arc order).
template <typename Fn>
void sample_colorings(const Diagram& d, const ColoringBasis& b, i64 bound, Fn fn) {
  if (bound < 0) throw InputError("sampling bound must be nonnegative");
  const std::size_t n = d.arcs.size();
  const std::size_t rank = b.generators.size();
  std::vector<std::vector<i64>> gens;
  for (const Coloring& g : b.generators) {
    std::vector<i64> row;
    row.reserve(n);
    for (const std::string& a : d.arcs) row.push_back(g.values.at(a));
    gens.push_back(std::move(row));
  }
  std::vector<i64> coeff(rank, -bound);
  std::vector<i64> vals(n, 0);
  for (std::size_t t = 0; t < n; ++t) {
    i64 s = 0;
    for (std::size_t i = 0; i < rank; ++i) s = checked_add(s, checked_mul(coeff[i], gens[i][t]));
    vals[t] = s;
  }
  // Odometer over the coefficient box, updating the arc values incrementally.
  const i64 span = checked_mul(2, bound);
  while (true) {
    fn(vals);
    std::size_t i = 0;
    while (i < rank && coeff[i] == bound) {
      coeff[i] = -bound;
      for (std::size_t t = 0; t < n; ++t)
        vals[t] = checked_sub(vals[t], checked_mul(span, gens[i][t]));
      ++i;
    }
    if (i == rank) break;
    ++coeff[i];
    for (std::size_t t = 0; t < n; ++t) vals[t] = checked_add(vals[t], gens[i][t]);
  }
}

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::string arc_name(const char* prefix, i64 i) { return prefix + std::to_string(i); }

// Walks the four twist regions of the standard theta_4 diagram, invoking
// emit(box, step, out_arc) for each crossing.  Within a box the
// strand state is (left, right); each crossing has the right strand over, the
// left strand passing under and re-emerging as `out`, after which the state
// advances to (right, out).  The last two crossings of box i emit the arcs
// A_{i+1} (up to vertex p) and C_{i+2} (on to the next box).
template <typename Emit>
void theta4_walk(i64 m, i64 n, Emit emit) {
  for (int box = 0; box < 4; ++box) {
    const i64 twists = (box % 2 == 0) ? 2 * m : 2 * n;
    for (i64 j = 1; j <= twists; ++j) {
      std::string out;
      if (j == twists - 1)
        out = arc_name("A", box + 1);
      else if (j == twists)
        out = arc_name("C", (box + 1) % 4 + 1);
      else
        out = "T" + std::to_string(box + 1) + "_" + std::to_string(j);
      emit(box, j, out);
    }
  }
}

void require_theta4_params(i64 m, i64 n) {
  if (m < 1 || n < 1) throw InputError("twist parameters must be positive");
}

std::vector<i64> positive_divisors(i64 N) {
  std::vector<i64> divs;
  for (i64 a = 1; a * a <= N; ++a) {
    if (N % a != 0) continue;
    divs.push_back(a);
    if (a != N / a) divs.push_back(N / a);
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

Diagram parse_diagram(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("diagram JSON: ") + e.what());
  }
  try {
    if (!j.is_object()) throw InputError("diagram JSON: top level must be an object");
    for (const auto& item : j.items())
      if (item.key() != "arcs" && item.key() != "crossings" && item.key() != "vertices")
        throw InputError("diagram JSON: unknown key \"" + item.key() + "\"");
    if (!j.contains("arcs") || !j.contains("crossings") || !j.contains("vertices"))
      throw InputError("diagram JSON: keys arcs, crossings, vertices are all required");
    Diagram d;
    d.arcs = j.at("arcs").get<std::vector<std::string>>();
    for (const auto& cj : j.at("crossings")) {
      for (const auto& item : cj.items())
        if (item.key() != "over" && item.key() != "under_in" && item.key() != "under_out")
          throw InputError("diagram JSON: unknown crossing key \"" + item.key() + "\"");
      Crossing c;
      c.over = cj.at("over").get<std::string>();
      c.under_in = cj.at("under_in").get<std::string>();
      c.under_out = cj.at("under_out").get<std::string>();
      d.crossings.push_back(std::move(c));
    }
    for (const auto& vj : j.at("vertices")) {
      for (const auto& item : vj.items())
        if (item.key() != "id" && item.key() != "arcs_ccw")
          throw InputError("diagram JSON: unknown vertex key \"" + item.key() + "\"");
      VertexSpec v;
      v.id = vj.at("id").get<std::string>();
      v.arcs_ccw = vj.at("arcs_ccw").get<std::vector<std::string>>();
      d.vertices.push_back(std::move(v));
    }
    validate_diagram(d);
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("diagram JSON: ") + e.what());
  }
}

std::string diagram_json(const Diagram& d) {
  validate_diagram(d);
  json j;
  j["arcs"] = d.arcs;
  j["crossings"] = json::array();
  for (const Crossing& c : d.crossings) {
    json cj;
    cj["over"] = c.over;
    cj["under_in"] = c.under_in;
    cj["under_out"] = c.under_out;
    j["crossings"].push_back(std::move(cj));
  }
  j["vertices"] = json::array();
  for (const VertexSpec& v : d.vertices) {
    json vj;
    vj["id"] = v.id;
    vj["arcs_ccw"] = v.arcs_ccw;
    j["vertices"].push_back(std::move(vj));
  }
  return j.dump(2) + "\n";
}

bool is_connected(const Diagram& d) {
  validate_diagram(d);
  const auto idx = arc_index(d);
  DisjointSet dsu(static_cast<int>(d.arcs.size()));
  for (const Crossing& c : d.crossings) {
    dsu.unite(idx.at(c.over), idx.at(c.under_in));
    dsu.unite(idx.at(c.over), idx.at(c.under_out));
  }
  for (const VertexSpec& v : d.vertices)
    for (const std::string& a : v.arcs_ccw) dsu.unite(idx.at(v.arcs_ccw[0]), idx.at(a));
  const int root = dsu.find(0);
  for (std::size_t i = 1; i < d.arcs.size(); ++i)
    if (dsu.find(static_cast<int>(i)) != root) return false;
  return true;
}

bool valid_coloring(const Diagram& d, const Coloring& c) {
  validate_diagram(d);
  for (const std::string& a : d.arcs)
    if (!c.values.count(a)) return false;
  using i128 = __int128;
  for (const Crossing& cr : d.crossings) {
    const i128 lhs = static_cast<i128>(c.values.at(cr.under_in)) + c.values.at(cr.under_out);
    if (lhs != static_cast<i128>(2) * c.values.at(cr.over)) return false;
  }
  for (const VertexSpec& v : d.vertices) {
    i128 sum = 0;
    for (std::size_t k = 0; k < v.arcs_ccw.size(); ++k) {
      const i128 val = c.values.at(v.arcs_ccw[k]);
      sum += (k % 2 == 0) ? val : -val;
    }
    if (sum != 0) return false;
  }
  return true;
}

ColoringBasis coloring_basis(const Diagram& d) {
  validate_diagram(d);
  const std::size_t n = d.arcs.size();
  std::vector<std::vector<big>> kernel = integer_kernel(equation_matrix(d), n);
  row_hnf(kernel, n);
  ColoringBasis b;
  b.rank = static_cast<int>(kernel.size());
  for (const std::vector<big>& row : kernel) {
    Coloring g;
    for (std::size_t t = 0; t < n; ++t)
      g.values[d.arcs[t]] = big_to_i64(row[t], "coloring basis entry");
    b.generators.push_back(std::move(g));
  }
  b.contains_trivial = hnf_member(kernel, std::vector<big>(n, 1), n);
  return b;
}

bool basis_contains(const ColoringBasis& b, const Diagram& d, const Coloring& c) {
  validate_diagram(d);
  std::vector<big> v;
  v.reserve(d.arcs.size());
  for (const std::string& a : d.arcs) v.emplace_back(static_cast<long>(coloring_value(c, a)));
  return hnf_member(basis_rows(b, d), std::move(v), d.arcs.size());
}

ColorVector vertex_vector(const Diagram& d, const Coloring& c, const std::string& vertex_id) {
  validate_diagram(d);
  for (const VertexSpec& v : d.vertices) {
    if (v.id != vertex_id) continue;
    ColorVector out;
    out.reserve(v.arcs_ccw.size());
    for (const std::string& a : v.arcs_ccw) out.push_back(coloring_value(c, a));
    return out;
  }
  throw InputError("diagram has no vertex \"" + vertex_id + "\"");
}

bool is_essential(const Diagram& d, const Coloring& c) {
  validate_diagram(d);
  const i64 ref = coloring_value(c, d.arcs[0]);
  i64 g = 0;
  for (const std::string& a : d.arcs) g = gcd_i64(g, checked_sub(coloring_value(c, a), ref));
  return g == 1;
}

Coloring combine(const ColoringBasis& b, const std::vector<i64>& coeffs) {
  if (coeffs.size() != b.generators.size())
    throw InputError("expected " + std::to_string(b.generators.size()) + " coefficients, got " +
                     std::to_string(coeffs.size()));
  Coloring out;
  if (b.generators.empty()) return out;
  for (const auto& [arc, _] : b.generators.front().values) out.values[arc] = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (const auto& [arc, val] : b.generators[i].values)
      out.values.at(arc) = checked_add(out.values.at(arc), checked_mul(coeffs[i], val));
  return out;
}

DStarSet observed_d_star(const Diagram& d, i64 bound) {
  validate_diagram(d);
  if (d.vertices.size() != 2)
    throw InputError("pair-valued sampling needs a diagram with exactly two vertices; got " +
                     std::to_string(d.vertices.size()));
  const auto idx = arc_index(d);
  std::vector<std::vector<std::size_t>> vertex_arcs(2);
  for (int s = 0; s < 2; ++s)
    for (const std::string& a : d.vertices[s].arcs_ccw)
      vertex_arcs[s].push_back(static_cast<std::size_t>(idx.at(a)));
  const ColoringBasis b = coloring_basis(d);
  DStarSet out;
  out.observed = true;
  out.bound = bound;
  sample_colorings(d, b, bound, [&](const std::vector<i64>& vals) {
    const i64 ref = vals[0];
    i64 g = 0;
    for (const i64 v : vals) g = gcd_i64(g, checked_sub(v, ref));
    if (g == 0) return;  // trivial coloring: no essential representative
    // The essential representative is (C - ref)/g; vertex gcd values scale
    // down by exactly g because g divides every arc difference.
    i64 dv[2];
    for (int s = 0; s < 2; ++s) {
      i64 gv = 0;
      for (const std::size_t t : vertex_arcs[s])
        gv = gcd_i64(gv, checked_sub(vals[t], vals[vertex_arcs[s][0]]));
      dv[s] = gv / g;
    }
    out.pairs.emplace(dv[0], dv[1]);
  });
  return out;
}

std::set<std::vector<i64>> observed_d_tuples(const Diagram& d, i64 bound) {
  validate_diagram(d);
  if (d.vertices.empty()) throw InputError("diagram has no vertices to sample at");
  const auto idx = arc_index(d);
  std::vector<std::vector<std::size_t>> vertex_arcs;
  for (const VertexSpec& v : d.vertices) {
    std::vector<std::size_t> arcs;
    for (const std::string& a : v.arcs_ccw) arcs.push_back(static_cast<std::size_t>(idx.at(a)));
    vertex_arcs.push_back(std::move(arcs));
  }
  const ColoringBasis b = coloring_basis(d);
  std::set<std::vector<i64>> out;
  sample_colorings(d, b, bound, [&](const std::vector<i64>& vals) {
    std::vector<i64> tuple;
    tuple.reserve(vertex_arcs.size());
    for (const auto& arcs : vertex_arcs) {
      i64 gv = 0;
      for (const std::size_t t : arcs) gv = gcd_i64(gv, checked_sub(vals[t], vals[arcs[0]]));
      tuple.push_back(gv);
    }
    out.insert(std::move(tuple));
  });
  return out;
}

Diagram theta4_build(i64 m, i64 n) {
  require_theta4_params(m, n);
  Diagram d;
  for (int i = 1; i <= 4; ++i) d.arcs.push_back(arc_name("A", i));
  for (int i = 1; i <= 4; ++i) d.arcs.push_back(arc_name("B", i));
  for (int i = 1; i <= 4; ++i) d.arcs.push_back(arc_name("C", i));
  std::vector<std::string> left(4), right(4);
  for (int box = 0; box < 4; ++box) {
    left[box] = arc_name("C", box + 1);
    right[box] = arc_name("B", box + 1);
  }
  theta4_walk(m, n, [&](int box, i64 /*j*/, const std::string& out) {
    if (out[0] == 'T') d.arcs.push_back(out);
    d.crossings.push_back({right[box], left[box], out});
    left[box] = right[box];
    right[box] = out;
  });
  d.vertices.push_back({"p", {"A1", "A2", "A3", "A4"}});
  d.vertices.push_back({"q", {"B1", "B2", "B3", "B4"}});
  validate_diagram(d);
  return d;
}

Coloring theta4_full_coloring(i64 m, i64 n, i64 x, i64 y) {
  require_theta4_params(m, n);
  const i64 b1 = x;
  const i64 b2 = checked_add(checked_mul(checked_add(checked_mul(2, m), 1), x), y);
  const i64 b3 = checked_add(checked_mul(checked_mul(2, m), x),
                             checked_mul(checked_add(checked_mul(2, n), 1), y));
  const i64 b4 = checked_mul(checked_mul(2, n), y);
  const i64 bvals[4] = {b1, b2, b3, b4};
  Coloring c;
  c.values["C1"] = 0;
  for (int i = 0; i < 4; ++i) c.values[arc_name("B", i + 1)] = bvals[i];
  i64 left = 0;  // color of the chain arc entering the current box
  i64 cl = 0, cr = 0;
  int cur_box = -1;
  theta4_walk(m, n, [&](int box, i64 j, const std::string& out) {
    if (box != cur_box) {
      cur_box = box;
      cl = left;
      cr = bvals[box];
    }
    const i64 oc = checked_sub(checked_mul(2, cr), cl);
    auto it = c.values.find(out);
    if (it != c.values.end()) {
      if (it->second != oc) internal_error("chain closure color mismatch");
    } else {
      c.values[out] = oc;
    }
    cl = cr;
    cr = oc;
    (void)j;
    if (out[0] == 'C') left = oc;  // color entering the next box
  });
  return c;
}

std::pair<ColorVector, ColorVector> theta4_coloring(i64 m, i64 n, i64 x, i64 y) {
  require_theta4_params(m, n);
  const i64 mx2 = checked_mul(checked_mul(2, m), x);
  const i64 ny2 = checked_mul(checked_mul(2, n), y);
  ColorVector vp = {mx2, checked_add(checked_add(mx2, x), ny2), checked_add(x, checked_add(ny2, y)),
                    y};
  ColorVector vq = {x, checked_add(checked_add(mx2, x), y), checked_add(mx2, checked_add(ny2, y)),
                    ny2};
  return {vp, vq};
}

DStarSet theta4_dstar(i64 m, i64 n) {
  require_theta4_params(m, n);
  const i64 N = checked_add(checked_mul(checked_mul(4, m), n), 1);
  DStarSet out;
  const std::vector<i64> divs = positive_divisors(N);
  for (const i64 a : divs)
    for (const i64 b : divs)
      if (gcd_i64(a, b) == 1) out.pairs.emplace(a, b);
  return out;
}

std::set<std::pair<i64, i64>> d_from_dstar(const DStarSet& s, i64 lambda_max) {
  if (lambda_max < 0) throw InputError("scaling bound must be nonnegative");
  std::set<std::pair<i64, i64>> out;
  out.emplace(0, 0);
  for (i64 lam = 1; lam <= lambda_max; ++lam)
    for (const auto& [a, b] : s.pairs) out.emplace(checked_mul(lam, a), checked_mul(lam, b));
  return out;
}

}  // namespace zc
