#include "zc/core.hpp"

#include <numeric>
#include <sstream>

namespace zc {

const std::vector<Relation>& all_relations() {
  static const std::vector<Relation> rs = {
      Relation::Braid,  Relation::Tangle0,  Relation::Tangle,  Relation::Pure,
      Relation::Slink0, Relation::Slink,    Relation::VBraid,  Relation::VTangle0,
      Relation::VTangle, Relation::VPure,   Relation::VSlink0, Relation::VSlink,
  };
  return rs;
}

std::string relation_name(Relation r) {
  switch (r) {
    case Relation::Braid: return "braid";
    case Relation::Tangle0: return "tangle0";
    case Relation::Tangle: return "tangle";
    case Relation::Pure: return "pure";
    case Relation::Slink0: return "slink0";
    case Relation::Slink: return "slink";
    case Relation::VBraid: return "vbraid";
    case Relation::VTangle0: return "vtangle0";
    case Relation::VTangle: return "vtangle";
    case Relation::VPure: return "vpure";
    case Relation::VSlink0: return "vslink0";
    case Relation::VSlink: return "vslink";
  }
  throw InputError("unknown relation tag");
}

std::optional<Relation> parse_relation(const std::string& name) {
  for (Relation r : all_relations())
    if (relation_name(r) == name) return r;
  return std::nullopt;
}

bool is_virtual(Relation r) {
  switch (r) {
    case Relation::VBraid:
    case Relation::VTangle0:
    case Relation::VTangle:
    case Relation::VPure:
    case Relation::VSlink0:
    case Relation::VSlink: return true;
    default: return false;
  }
}

bool is_perm_constrained(Relation r) {
  switch (r) {
    case Relation::Pure:
    case Relation::Slink0:
    case Relation::Slink:
    case Relation::VPure:
    case Relation::VSlink0:
    case Relation::VSlink: return true;
    default: return false;
  }
}

i64 mod_reduce(i64 a, i64 n) {
  if (n == 0) return a;
  if (n < 0) throw InputError("negative modulus");
  i64 r = a % n;
  if (r < 0) r += n;
  return r;
}

i64 delta(const ColorVector& v) {
  if (v.empty()) throw InputError("empty vector");
  i64 s = 0;
  for (size_t i = 0; i < v.size(); ++i)
    s = (i % 2 == 0) ? checked_add(s, v[i]) : checked_sub(s, v[i]);
  return s;
}

i64 gcd_diff(const ColorVector& v) {
  if (v.empty()) throw InputError("empty vector");
  i64 g = 0;
  for (size_t i = 1; i < v.size(); ++i) {
    i64 diff = checked_sub(v[i], v[0]);
    // std::gcd is undefined at INT64_MIN; checked_neg guards the abs.
    if (diff < 0) diff = checked_neg(diff);
    g = std::gcd(g, diff);
  }
  return g;
}

i64 two_part_of(i64 n) {
  if (n <= 0) throw InputError("two_part_of requires a positive argument");
  return n & -n;
}

i64 two_part(const ColorVector& v) {
  i64 d = gcd_diff(v);
  return d == 0 ? 0 : two_part_of(d);
}

ResidueMultiset residues_multiset(const ColorVector& v, i64 N) {
  ResidueMultiset m;
  m.modulus = N;
  for (i64 a : v) m.counts[mod_reduce(a, N)]++;
  return m;
}

ResidueVector residues_ordered(const ColorVector& v, i64 N) {
  ResidueVector r;
  r.modulus = N;
  r.residues.reserve(v.size());
  for (i64 a : v) r.residues.push_back(mod_reduce(a, N));
  return r;
}

InvariantProfile profile(const ColorVector& v, Relation r) {
  if (v.size() < 2) throw InputError("vectors must have length at least 2");
  InvariantProfile p;
  p.relation = r;
  bool ordered = is_perm_constrained(r);
  // Table rows: gcd part is d, d2, or fixed modulus-2 depending on the column.
  i64 gp = 0;
  bool has_gcd = true;
  switch (r) {
    case Relation::Braid:
    case Relation::Pure:
    case Relation::VBraid:
    case Relation::VPure: gp = gcd_diff(v); break;
    case Relation::Tangle0:
    case Relation::Slink0:
    case Relation::VTangle0:
    case Relation::VSlink0: gp = two_part(v); break;
    case Relation::Tangle:
    case Relation::Slink:
    case Relation::VTangle:
    case Relation::VSlink:
      gp = 1;
      has_gcd = false;
      break;
  }
  if (!is_virtual(r)) p.delta = delta(v);
  if (has_gcd) p.gcd_part = gp;
  i64 N = checked_mul(2, gp);
  if (ordered)
    p.ordered = residues_ordered(v, N);
  else
    p.multiset = residues_multiset(v, N);
  return p;
}

ColorVector parse_vector(const std::string& text) {
  ColorVector v;
  std::string tok;
  std::stringstream ss(text);
  while (std::getline(ss, tok, ',')) {
    size_t b = tok.find_first_not_of(" \t");
    size_t e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw InputError("empty vector component in '" + text + "'");
    tok = tok.substr(b, e - b + 1);
    try {
      size_t pos = 0;
      i64 val = std::stoll(tok, &pos);
      if (pos != tok.size()) throw InputError("bad integer '" + tok + "'");
      v.push_back(val);
    } catch (const std::invalid_argument&) {
      throw InputError("bad integer '" + tok + "'");
    } catch (const std::out_of_range&) {
      throw OverflowError("integer out of 64-bit range: '" + tok + "'");
    }
  }
  if (v.size() < 2) throw InputError("vectors must have length at least 2");
  return v;
}

std::string format_vector(const ColorVector& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace zc
