#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zc {

using i64 = long long;

// Raised when exact 64-bit arithmetic would wrap.
struct OverflowError : std::runtime_error {
  explicit OverflowError(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad user input or violated operation precondition.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}
inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}
inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}
inline i64 checked_neg(i64 a) { return checked_sub(0, a); }

using ColorVector = std::vector<i64>;

enum class Relation {
  Braid,
  Tangle0,
  Tangle,
  Pure,
  Slink0,
  Slink,
  VBraid,
  VTangle0,
  VTangle,
  VPure,
  VSlink0,
  VSlink,
};

const std::vector<Relation>& all_relations();
std::string relation_name(Relation r);
std::optional<Relation> parse_relation(const std::string& name);
bool is_virtual(Relation r);
// "Ordered" relations compare residues componentwise and constrain the strand
// permutation to the identity: pure, slink0, slink, vpure, vslink0, vslink.
bool is_perm_constrained(Relation r);

struct ResidueMultiset {
  i64 modulus = 0;  // 0 means raw integers
  std::map<i64, i64> counts;
  bool operator==(const ResidueMultiset&) const = default;
};

struct ResidueVector {
  i64 modulus = 0;
  std::vector<i64> residues;
  bool operator==(const ResidueVector&) const = default;
};

// Least nonnegative residue of a mod n (n >= 0); identity when n == 0.
i64 mod_reduce(i64 a, i64 n);

i64 delta(const ColorVector& v);
i64 gcd_diff(const ColorVector& v);
// Largest power of two dividing gcd_diff(v); 0 when gcd_diff(v) == 0.
i64 two_part(const ColorVector& v);
// Largest power of two dividing n > 0.
i64 two_part_of(i64 n);

ResidueMultiset residues_multiset(const ColorVector& v, i64 N);
ResidueVector residues_ordered(const ColorVector& v, i64 N);

struct InvariantProfile {
  Relation relation;
  std::optional<i64> delta;
  std::optional<i64> gcd_part;
  std::optional<ResidueMultiset> multiset;
  std::optional<ResidueVector> ordered;
  bool operator==(const InvariantProfile&) const = default;
};

InvariantProfile profile(const ColorVector& v, Relation r);

ColorVector parse_vector(const std::string& text);
std::string format_vector(const ColorVector& v);

}  // namespace zc
