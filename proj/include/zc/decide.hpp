#pragma once

#include "zc/core.hpp"

namespace zc {

bool equivalent(const ColorVector& v, const ColorVector& w, Relation r);

struct TwoBlockForm {
  i64 x = 0;
  i64 y = 0;
  bool first_block_even = false;
};
// Some (x,..,x,y,..,y) is braid-equivalent to v iff delta(v) is 0 or +-gcd_diff(v);
// the even/even split exists iff delta(v) == 0. Even length only.
std::optional<TwoBlockForm> two_block_form(const ColorVector& v);

bool closable_classical(const ColorVector& v);
bool closable_virtual_no_loops(const ColorVector& v);
bool closable_virtual_loops(const ColorVector& v);

}  // namespace zc
