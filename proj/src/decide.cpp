#include "zc/decide.hpp"

namespace zc {

bool equivalent(const ColorVector& v, const ColorVector& w, Relation r) {
  if (v.size() != w.size()) throw InputError("vectors of different lengths are not comparable");
  if (v.size() < 2) throw InputError("vectors must have length at least 2");
  return profile(v, r) == profile(w, r);
}

std::optional<TwoBlockForm> two_block_form(const ColorVector& v) {
  if (v.size() % 2 != 0) throw InputError("two_block_form needs even length");
  i64 D = delta(v);
  i64 d = gcd_diff(v);
  if (d == 0) return TwoBlockForm{v[0], v[0], true};
  if (D != 0 && D != d && D != -d) return std::nullopt;
  i64 r = mod_reduce(v[0], d);
  TwoBlockForm f;
  if (D == 0) {
    f = {r, checked_add(r, d), true};
  } else if (D == d) {
    f = {checked_add(r, d), r, false};
  } else {
    f = {r, checked_add(r, d), false};
  }
  return f;
}

static void require_even(const ColorVector& v) {
  if (v.size() % 2 != 0) throw InputError("closability is defined for even-length vectors");
}

bool closable_classical(const ColorVector& v) {
  require_even(v);
  return delta(v) == 0;
}

bool closable_virtual_no_loops(const ColorVector& v) {
  require_even(v);
  i64 D = delta(v);
  i64 t2 = two_part(v);
  if (t2 == 0) return D == 0;  // mod-0 convention for trivial v
  return mod_reduce(D, 2 * t2) == 0;
}

bool closable_virtual_loops(const ColorVector& v) {
  require_even(v);
  return delta(v) % 2 == 0;
}

}  // namespace zc
