#include "zc/action.hpp"

#include <sstream>

namespace zc {

Permutation Permutation::identity(int m) {
  Permutation p;
  p.images.resize(m);
  for (int k = 0; k < m; ++k) p.images[k] = k;
  return p;
}

bool Permutation::is_identity() const {
  for (size_t k = 0; k < images.size(); ++k)
    if (images[k] != (int)k) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images.resize(images.size());
  for (size_t k = 0; k < images.size(); ++k) p.images[images[k]] = (int)k;
  return p;
}

bool move_swaps(MoveKind k) {
  switch (k) {
    case MoveKind::Sigma:
    case MoveKind::Tau:
    case MoveKind::H:
    case MoveKind::HV: return true;
    case MoveKind::L2:
    case MoveKind::P2:
    case MoveKind::V1: return false;
  }
  return false;
}

Move move_inverse(const Move& mv) {
  Move r = mv;
  if (mv.kind != MoveKind::Tau) r.sign = -mv.sign;
  return r;
}

MoveWord word_inverse(const MoveWord& w) {
  MoveWord r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(move_inverse(*it));
  return r;
}

MarkedState apply_move(const MarkedState& s, const Move& mv) {
  const int m = (int)s.vector.size();
  const int i = mv.index;
  const int maxi = mv.kind == MoveKind::V1 ? m : m - 1;
  if (i < 1 || i > maxi)
    throw MoveError("move index " + std::to_string(i) + " out of range for m=" + std::to_string(m));
  MarkedState out = s;
  ColorVector& v = out.vector;
  const int p = i - 1;
  switch (mv.kind) {
    case MoveKind::Sigma: {
      i64 a = v[p], b = v[p + 1];
      if (mv.sign > 0) {
        v[p] = b;
        v[p + 1] = checked_sub(checked_mul(2, b), a);
      } else {
        v[p] = checked_sub(checked_mul(2, a), b);
        v[p + 1] = a;
      }
      break;
    }
    case MoveKind::Tau:
      std::swap(v[p], v[p + 1]);
      break;
    case MoveKind::H: {
      i64 diff = checked_sub(v[p + 1], v[p]);
      if (diff == 0) throw MoveError("H move needs distinct entries");
      i64 t = two_part_of(diff < 0 ? checked_neg(diff) : diff);
      i64 shift = mv.sign > 0 ? t : checked_neg(t);
      v[p] = checked_add(v[p], shift);
      v[p + 1] = checked_add(v[p + 1], shift);
      break;
    }
    case MoveKind::HV: {
      i64 diff = checked_sub(v[p + 1], v[p]);
      if (diff == 0) throw MoveError("HV move needs distinct entries");
      i64 t = two_part_of(diff < 0 ? checked_neg(diff) : diff);
      i64 shift = mv.sign > 0 ? t : checked_neg(t);
      v[p] = checked_sub(v[p], shift);
      v[p + 1] = checked_add(v[p + 1], shift);
      break;
    }
    case MoveKind::L2:
      if (v[p] != v[p + 1]) throw MoveError("L2 move needs equal entries");
      v[p] = checked_add(v[p], 2 * (i64)mv.sign);
      v[p + 1] = checked_add(v[p + 1], 2 * (i64)mv.sign);
      break;
    case MoveKind::P2:
      v[p] = checked_add(v[p], 2 * (i64)mv.sign);
      v[p + 1] = checked_add(v[p + 1], 2 * (i64)mv.sign);
      break;
    case MoveKind::V1:
      v[p] = checked_add(v[p], 2 * (i64)mv.sign);
      break;
  }
  if (move_swaps(mv.kind)) {
    for (int& img : out.perm.images) {
      if (img == p) img = p + 1;
      else if (img == p + 1) img = p;
    }
  }
  return out;
}

std::pair<ColorVector, Permutation> apply_word(const ColorVector& v, const MoveWord& w) {
  MarkedState s{v, Permutation::identity((int)v.size())};
  for (const Move& mv : w) s = apply_move(s, mv);
  return {s.vector, s.perm};
}

Alphabet alphabet(Relation r) {
  using K = MoveKind;
  Alphabet a;
  a.perm_constrained = is_perm_constrained(r);
  switch (r) {
    case Relation::Braid:
    case Relation::Pure: a.kinds = {K::Sigma}; break;
    case Relation::Tangle0:
    case Relation::Slink0: a.kinds = {K::Sigma, K::H}; break;
    case Relation::Tangle:
    case Relation::Slink: a.kinds = {K::Sigma, K::H, K::L2, K::P2}; break;
    case Relation::VBraid:
    case Relation::VPure: a.kinds = {K::Sigma, K::Tau}; break;
    case Relation::VTangle0:
    case Relation::VSlink0: a.kinds = {K::Sigma, K::Tau, K::H, K::HV}; break;
    case Relation::VTangle:
    case Relation::VSlink: a.kinds = {K::Sigma, K::Tau, K::H, K::HV, K::V1}; break;
  }
  return a;
}

InvariantProfile state_profile(const MarkedState& s, Relation r) {
  InvariantProfile p = profile(s.vector, r);
  if (p.ordered) {
    for (size_t k = 0; k < s.vector.size(); ++k)
      p.ordered->residues[k] = mod_reduce(s.vector[s.perm.images[k]], p.ordered->modulus);
  }
  return p;
}

std::vector<Move> applicable_moves(const ColorVector& v, const Alphabet& a) {
  std::vector<Move> out;
  const int m = (int)v.size();
  for (MoveKind k : a.kinds) {
    const int maxi = k == MoveKind::V1 ? m : m - 1;
    for (int i = 1; i <= maxi; ++i) {
      bool pair_equal = k != MoveKind::V1 && v[i - 1] == v[i];
      if ((k == MoveKind::H || k == MoveKind::HV) && pair_equal) continue;
      if (k == MoveKind::L2 && !pair_equal) continue;
      if (k == MoveKind::Tau) {
        out.push_back({k, i, +1});
      } else {
        out.push_back({k, i, +1});
        out.push_back({k, i, -1});
      }
    }
  }
  return out;
}

std::string move_token(const Move& mv) {
  std::string suffix = mv.sign > 0 ? "+" : "-";
  switch (mv.kind) {
    case MoveKind::Sigma: return "s" + std::to_string(mv.index) + (mv.sign > 0 ? "" : "'");
    case MoveKind::Tau: return "t" + std::to_string(mv.index);
    case MoveKind::H: return "H" + std::to_string(mv.index) + suffix;
    case MoveKind::HV: return "W" + std::to_string(mv.index) + suffix;
    case MoveKind::L2: return "L" + std::to_string(mv.index) + suffix;
    case MoveKind::P2: return "P" + std::to_string(mv.index) + suffix;
    case MoveKind::V1: return "V" + std::to_string(mv.index) + suffix;
  }
  throw InputError("unknown move kind");
}

std::string word_text(const MoveWord& w) {
  std::string s;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) s += ' ';
    s += move_token(w[k]);
  }
  return s;
}

static Move parse_token(const std::string& tok) {
  if (tok.size() < 2) throw InputError("bad move token '" + tok + "'");
  char c = tok[0];
  MoveKind kind;
  bool sigma_style = false;  // sign from trailing apostrophe
  bool tau_style = false;    // no sign marker
  switch (c) {
    case 's': kind = MoveKind::Sigma; sigma_style = true; break;
    case 't': kind = MoveKind::Tau; tau_style = true; break;
    case 'H': kind = MoveKind::H; break;
    case 'W': kind = MoveKind::HV; break;
    case 'L': kind = MoveKind::L2; break;
    case 'P': kind = MoveKind::P2; break;
    case 'V': kind = MoveKind::V1; break;
    default: throw InputError("bad move token '" + tok + "'");
  }
  std::string body = tok.substr(1);
  int sign = +1;
  if (sigma_style) {
    if (body.back() == '\'') {
      sign = -1;
      body.pop_back();
    }
  } else if (!tau_style) {
    char last = body.empty() ? '\0' : body.back();
    if (last == '+') sign = +1;
    else if (last == '-') sign = -1;
    else throw InputError("move token '" + tok + "' needs a +/- suffix");
    body.pop_back();
  }
  if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
    throw InputError("bad move index in token '" + tok + "'");
  int index = std::stoi(body);
  if (index < 1) throw InputError("move index must be >= 1 in '" + tok + "'");
  return {kind, index, sign};
}

MoveWord parse_word(const std::string& text) {
  MoveWord w;
  std::stringstream ss(text);
  std::string tok;
  while (ss >> tok) w.push_back(parse_token(tok));
  return w;
}

}  // namespace zc
