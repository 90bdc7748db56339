#pragma once

#include "zc/action.hpp"
#include "zc/core.hpp"

#include <utility>
#include <vector>

namespace zc {

// Canonical representative of v's class under relation r.
// Guarantees: equivalent(v, representative(v,r), r) and
// equivalent(v,w,r) <=> representative(v,r) == representative(w,r).
//
// For the six multiset-profile relations the representative is the member of
// the published two/three-block families (braid/tangle0/tangle and their
// virtual versions; dedicated families at m == 2). For the six
// ordered-profile relations it is the componentwise least-nonnegative residue
// lift mod 2D (D = the relation's gcd-type invariant, D = 1 for the coarsest
// pair), with a first-coordinate delta correction for the classical three;
// for `pure` a deterministic minimal-coefficient search restores the
// difference gcd when the plain lift would change it.
ColorVector representative(const ColorVector& v, Relation r);

// All representatives of relation r on Z^m whose coordinates lie in
// [-box, box], each exactly once.  Only the six multiset-profile relations
// are supported; ordered relations throw InputError (their representative
// systems are residue lifts, not finite printed families).
//
// Deterministic order: the constant family first (value 0,1,...,box then
// -1,...,-box), then each block family lexicographically on its parameter
// tuple (gcd parameter ascending; delta-type parameter ascending; residue r
// ascending; block size p ascending), filtered by the coordinate box.
std::vector<ColorVector> enumerate_representatives(Relation r, int m, i64 box);

// Reduction of a length-3 vector to (x,y,y) with x <= y, with the
// sigma-word that realizes it.  Branch order inside the reduction loop is
// fixed (middle below first; strictly increasing; middle above last; mirrored
// when the ends are reversed), so the emitted word is deterministic.
std::pair<ColorVector, MoveWord> triple_reduce(const ColorVector& v);

// Constructive normal form for the braid relation: returns
// (representative(v, braid), word over sigma moves) with
// apply_word(v, word).vector == representative(v, braid).
std::pair<ColorVector, MoveWord> normal_form_word(const ColorVector& v);

}  // namespace zc
