#pragma once

#include "zc/core.hpp"

namespace zc {

enum class MoveKind { Sigma, Tau, H, HV, L2, P2, V1 };

struct Move {
  MoveKind kind;
  int index = 1;  // 1-based strand position
  int sign = +1;  // ignored for Tau
  bool operator==(const Move&) const = default;
};

using MoveWord = std::vector<Move>;

// images[k] is the 0-based final position of the strand starting at position k.
struct Permutation {
  std::vector<int> images;
  bool operator==(const Permutation&) const = default;
  static Permutation identity(int m);
  bool is_identity() const;
  Permutation inverse() const;
};

struct MarkedState {
  ColorVector vector;
  Permutation perm;
  bool operator==(const MarkedState&) const = default;
};

// Raised on invalid move index or violated gadget precondition.
struct MoveError : std::runtime_error {
  explicit MoveError(const std::string& msg) : std::runtime_error(msg) {}
};

bool move_swaps(MoveKind k);  // permutation effect: transposition vs identity
Move move_inverse(const Move& mv);
MoveWord word_inverse(const MoveWord& w);

MarkedState apply_move(const MarkedState& s, const Move& mv);
std::pair<ColorVector, Permutation> apply_word(const ColorVector& v, const MoveWord& w);

struct Alphabet {
  std::vector<MoveKind> kinds;
  bool perm_constrained = false;
};
Alphabet alphabet(Relation r);

// Conserved profile of a marked state. For permutation-constrained relations
// the ordered residues are read strand-wise (the entry for strand k is
// vector[perm[k]]), which is what every single alphabet move preserves; words
// whose net permutation is the identity then preserve the plain profile.
InvariantProfile state_profile(const MarkedState& s, Relation r);

// All moves from the alphabet applicable to the given vector (both signs).
std::vector<Move> applicable_moves(const ColorVector& v, const Alphabet& a);

// Token syntax: s<i>, s<i>' (sigma), t<i> (tau), H<i>+/-, W<i>+/- (HV),
// L<i>+/-, P<i>+/-, V<i>+/-; whitespace separated.
std::string move_token(const Move& mv);
std::string word_text(const MoveWord& w);
MoveWord parse_word(const std::string& text);

}  // namespace zc
