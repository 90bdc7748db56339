#pragma once

#include "zc/action.hpp"
#include "zc/core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zc {

// Raised when a bounded search exceeds its internal state budget.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// A replayable proof that start and end are related under `relation`:
// every move lies in alphabet(relation), replaying `word` on `start` yields
// `end`, and for permutation-constrained relations the accumulated strand
// permutation is the identity.
struct Certificate {
  Relation relation = Relation::Braid;
  MoveWord word;
  ColorVector start;
  ColorVector end;
  bool operator==(const Certificate&) const = default;
};

struct SearchOutcome {
  enum class Kind { Found, NotEquivalent, Exhausted };
  Kind kind = Kind::NotEquivalent;
  std::optional<Certificate> certificate;  // set iff kind == Found
  int depth = 0;                           // set iff kind == Exhausted
  i64 bound = 0;                           // set iff kind == Exhausted
};

inline constexpr int kDefaultSearchDepth = 16;
inline constexpr i64 kDefaultCoordinateBound = 32;

// Produce a certificate that v and w are related under r.
//
// If the invariant profiles differ the result is NotEquivalent. Otherwise,
// for the braid, pure, virtual-braid and virtual-pure relations a certificate
// is built constructively (the limits are ignored and Exhausted never
// occurs): braid routes v and w through their shared normal form; pure
// appends a vector-stabilizing word so the net permutation is the identity;
// the two virtual relations splice in alternating-sum adjustment blocks
// (sigma/tau gadgets at a standard-form window, with a tau pre-swap at
// m == 2) around the classical certificate.  The remaining eight relations
// use breadth-first search over marked states with every intermediate
// coordinate in [-bound, bound] and word length <= depth, returning Found or
// Exhausted.
SearchOutcome certify(const ColorVector& v, const ColorVector& w, Relation r,
                      int depth = kDefaultSearchDepth, i64 bound = kDefaultCoordinateBound);

// Replay-check a certificate without trusting its producer.  Returns true on
// success; on failure returns false and, when `diagnostic` is non-null,
// stores a description of the first violated check (with the move index for
// per-move violations).
bool verify(const Certificate& c, std::string* diagnostic = nullptr);

// All vectors reachable from v by at most `depth` moves of alphabet(r) with
// every intermediate coordinate in [-bound, bound]; for permutation-
// constrained r only states whose accumulated permutation is the identity are
// emitted (intermediate states need not satisfy the constraint).  Output is
// sorted lexicographically.  Throws ResourceError when the state budget is
// exceeded.
std::vector<ColorVector> orbit(const ColorVector& v, Relation r,
                               int depth = kDefaultSearchDepth,
                               i64 bound = kDefaultCoordinateBound);

// For v of the standard form (x,...,x, x+lambda*d, x+d,...,x+d) with d =
// gcd_diff(v) > 0, return a sigma-word that fixes v and realizes the adjacent
// transposition (i i+1) of strand positions (1-based); i == 0 requests the
// identity and yields the empty word.  The transposition must stay within a
// residue class mod 2d (the allowed subgroup for v's shape): inside a
// constant block the word is a plain sigma; across the special position it is
// a conjugated word built from a triple reduction.  Throws InputError when v
// is not in standard form or the transposition is not allowed.
MoveWord stabilizer_word(const ColorVector& v, int i);

// Text form: "relation:", "start:", "end:" and "word:" lines, with vectors in
// parse_vector syntax and the word in the move-token syntax.
std::string certificate_text(const Certificate& c);
Certificate parse_certificate(const std::string& text);

}  // namespace zc
