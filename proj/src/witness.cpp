#include "zc/witness.hpp"

#include "zc/canon.hpp"
#include "zc/decide.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <unordered_map>

namespace zc {
namespace {

[[noreturn]] void internal_error(const std::string& msg) {
  throw std::logic_error("internal witness error: " + msg);
}

void append(MoveWord& w, const MoveWord& tail) { w.insert(w.end(), tail.begin(), tail.end()); }

// Re-index a word over a 3-entry window starting at 0-based position lo.
MoveWord offset_word(const MoveWord& w, int lo) {
  MoveWord out = w;
  for (Move& mv : out) mv.index += lo;
  return out;
}

bool is_adjacent_transposition(const Permutation& p, int j0) {
  const int m = (int)p.images.size();
  for (int k = 0; k < m; ++k) {
    int want = k == j0 ? j0 + 1 : k == j0 + 1 ? j0 : k;
    if (p.images[k] != want) return false;
  }
  return true;
}

// A sigma-word fixing `rep` whose permutation is the adjacent transposition of
// positions (j0, j0+1) (0-based).  For an equal pair this is a plain sigma;
// otherwise the two strands are routed onto the equal pair of a reduced
// 3-entry window, swapped there, and routed back.  The candidate windows are
// replay-verified, so a returned word is always correct.
MoveWord transposition_at(const ColorVector& rep, int j0, bool public_api) {
  const int m = (int)rep.size();
  if (rep[j0] == rep[j0 + 1]) return {Move{MoveKind::Sigma, j0 + 1, +1}};
  for (int lo : {j0 - 1, j0}) {
    if (lo < 0 || lo + 2 >= m) continue;
    ColorVector window = {rep[lo], rep[lo + 1], rep[lo + 2]};
    MoveWord reduce = offset_word(triple_reduce(window).second, lo);
    MoveWord cand = reduce;
    cand.push_back(Move{MoveKind::Sigma, lo + 2, +1});
    append(cand, word_inverse(reduce));
    auto [nv, np] = apply_word(rep, cand);
    if (nv == rep && is_adjacent_transposition(np, j0)) return cand;
  }
  if (public_api) throw InputError("no stabilizing word exists for this transposition");
  internal_error("no stabilizing window for transposition");
}

// A sigma-word fixing `rep` whose permutation sends position j to target[j].
// The target must permute each residue class of rep (mod 2*gcd_diff) within
// itself; for every representative shape those classes occupy contiguous
// position intervals, so a bubble sort touches only same-class pairs.
MoveWord realize_stabilizer_perm(const ColorVector& rep, std::vector<int> target) {
  const int m = (int)rep.size();
  MoveWord out;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j = 0; j + 1 < m; ++j)
      if (target[j] > target[j + 1]) {
        append(out, transposition_at(rep, j, false));
        std::swap(target[j], target[j + 1]);
        moved = true;
      }
  }
  return out;
}

MoveWord certify_braid(const ColorVector& v, const ColorVector& w) {
  auto [rv, wv] = normal_form_word(v);
  auto [rw, ww] = normal_form_word(w);
  if (rv != rw) internal_error("equivalent vectors reached distinct normal forms");
  MoveWord out = wv;
  append(out, word_inverse(ww));
  return out;
}

MoveWord certify_pure(const ColorVector& v, const ColorVector& w) {
  const int m = (int)v.size();
  auto [rv, wv] = normal_form_word(v);
  auto [rw, ww] = normal_form_word(w);
  if (rv != rw) internal_error("equivalent vectors reached distinct normal forms");
  MoveWord back = word_inverse(ww);
  Permutation p1 = apply_word(v, wv).second;
  Permutation p3 = apply_word(rv, back).second;
  Permutation p1i = p1.inverse(), p3i = p3.inverse();
  std::vector<int> target(m);
  for (int j = 0; j < m; ++j) target[j] = p3i.images[p1i.images[j]];
  MoveWord out = wv;
  append(out, realize_stabilizer_perm(rv, target));
  append(out, back);
  auto [end, perm] = apply_word(v, out);
  if (end != w || !perm.is_identity()) internal_error("pure certificate replay check failed");
  return out;
}

// 0-based start of a window (x, x + lambda*d, x + d) inside a nontrivial
// braid normal form; every representative shape provides one.
int standard_form_window(const ColorVector& rep, i64 d) {
  const int m = (int)rep.size();
  int t = 0;
  while (t < m && rep[t] == rep[0]) ++t;
  if (t >= m) internal_error("normal form lacks a standard adjustment window");
  // Window right at the end of the first run; when the special entry melts
  // into that run (two-block shape with a long first block), step back one so
  // the window reads (x, x, x + d).
  for (int lo : {t - 1, t - 2}) {
    if (lo < 0 || lo + 2 >= m) continue;
    if (rep[lo + 2] == rep[0] + d && (rep[lo + 1] - rep[0]) % d == 0) return lo;
  }
  internal_error("normal form lacks a standard adjustment window");
}

// Alternating-sum adjustment blocks at the window: each forward block sends
// the special entry x + lambda*d to x + (lambda+2)*d and has net identity
// permutation.
MoveWord delta_blocks(int lo, i64 n) {
  MoveWord block = {Move{MoveKind::Sigma, lo + 1, -1}, Move{MoveKind::Tau, lo + 1, +1},
                    Move{MoveKind::Sigma, lo + 2, +1}, Move{MoveKind::Tau, lo + 2, +1}};
  if (n < 0) {
    block = word_inverse(block);
    n = -n;
  }
  MoveWord out;
  for (i64 k = 0; k < n; ++k) append(out, block);
  return out;
}

// Number of forward blocks needed at window lo to move delta by `need`.
i64 block_count(int lo, i64 d, i64 need) {
  i64 step = (lo + 1) % 2 == 0 ? 2 * d : -2 * d;
  if (need % step != 0) internal_error("delta difference is not a multiple of the block step");
  return need / step;
}

MoveWord certify_vbraid(const ColorVector& v, const ColorVector& w) {
  if (delta(v) == delta(w)) return certify_braid(v, w);
  if (v.size() == 2) {
    MoveWord out = {Move{MoveKind::Tau, 1, +1}};
    append(out, certify_braid({v[1], v[0]}, w));
    return out;
  }
  auto [rep, wv] = normal_form_word(v);
  i64 d = gcd_diff(rep);
  int lo = standard_form_window(rep, d);
  MoveWord out = wv;
  append(out, delta_blocks(lo, block_count(lo, d, delta(w) - delta(v))));
  ColorVector shifted = apply_word(v, out).first;
  append(out, certify_braid(shifted, w));
  return out;
}

MoveWord certify_vpure(const ColorVector& v, const ColorVector& w) {
  if (delta(v) == delta(w)) return certify_pure(v, w);
  if (v.size() == 2) {
    // tau then sigma: flips the alternating sum, identity net permutation.
    MoveWord out = {Move{MoveKind::Tau, 1, +1}, Move{MoveKind::Sigma, 1, +1}};
    ColorVector flipped = apply_word(v, out).first;
    append(out, certify_pure(flipped, w));
    return out;
  }
  // Route v to its normal form, splice in identity-permutation adjustment
  // blocks there, normal-form again, and fold the whole permutation
  // correction into one stabilizer at the shared representative.
  const int m = (int)v.size();
  auto [rep, wv] = normal_form_word(v);
  i64 d = gcd_diff(rep);
  int lo = standard_form_window(rep, d);
  MoveWord out = wv;
  append(out, delta_blocks(lo, block_count(lo, d, delta(w) - delta(v))));
  ColorVector shifted = apply_word(v, out).first;
  auto [rep2, w2] = normal_form_word(shifted);
  auto [repw, ww] = normal_form_word(w);
  if (rep2 != repw) internal_error("equivalent vectors reached distinct normal forms");
  append(out, w2);
  MoveWord back = word_inverse(ww);
  Permutation p1 = apply_word(v, out).second;
  Permutation p3 = apply_word(rep2, back).second;
  Permutation p1i = p1.inverse(), p3i = p3.inverse();
  std::vector<int> target(m);
  for (int j = 0; j < m; ++j) target[j] = p3i.images[p1i.images[j]];
  append(out, realize_stabilizer_perm(rep2, target));
  append(out, back);
  auto [end, perm] = apply_word(v, out);
  if (end != w || !perm.is_identity()) internal_error("vpure certificate replay check failed");
  return out;
}

bool in_box(const ColorVector& v, i64 bound) {
  for (i64 x : v)
    if (x < -bound || x > bound) return false;
  return true;
}

struct VecHash {
  size_t operator()(const std::vector<i64>& v) const {
    size_t h = 1469598103934665603ull;
    for (i64 x : v) h = (h ^ (size_t)x) * 1099511628211ull;
    return h;
  }
};

struct Node {
  MarkedState state;
  int parent = -1;
  Move mv;
  int depth = 0;
};

std::vector<i64> state_key(const MarkedState& s, bool constrained) {
  std::vector<i64> key = s.vector;
  if (constrained)
    for (int img : s.perm.images) key.push_back(img);
  return key;
}

constexpr size_t kMaxSearchStates = 3'000'000;

// Breadth-first exploration shared by certify and orbit.  When `target` is
// non-null, stops at the first goal state and returns its word; otherwise
// explores everything within the bounds.  Sets *capped when the state budget
// stops the search early.
std::optional<MoveWord> bfs(const ColorVector& v, const ColorVector* target, Relation r,
                            int depth, i64 bound, bool* capped,
                            std::vector<ColorVector>* reached) {
  const bool constrained = is_perm_constrained(r);
  const Alphabet alpha = alphabet(r);
  if (capped) *capped = false;
  if (!in_box(v, bound) || (target && !in_box(*target, bound))) return std::nullopt;

  std::vector<Node> nodes;
  std::unordered_map<std::vector<i64>, int, VecHash> seen;
  auto emit = [&](const Node& n) {
    if (reached && (!constrained || n.state.perm.is_identity()))
      reached->push_back(n.state.vector);
  };
  auto is_goal = [&](const MarkedState& s) {
    return target && s.vector == *target && (!constrained || s.perm.is_identity());
  };
  auto word_to = [&](int idx) {
    MoveWord w;
    for (int k = idx; nodes[k].parent >= 0; k = nodes[k].parent) w.push_back(nodes[k].mv);
    std::reverse(w.begin(), w.end());
    return w;
  };

  nodes.push_back({MarkedState{v, Permutation::identity((int)v.size())}, -1, Move{}, 0});
  seen.emplace(state_key(nodes[0].state, constrained), 0);
  emit(nodes[0]);
  if (is_goal(nodes[0].state)) return MoveWord{};

  for (size_t head = 0; head < nodes.size(); ++head) {
    if (nodes[head].depth >= depth) continue;
    const MarkedState cur = nodes[head].state;  // copy: nodes may reallocate
    const int next_depth = nodes[head].depth + 1;
    for (const Move& mv : applicable_moves(cur.vector, alpha)) {
      MarkedState nxt;
      try {
        nxt = apply_move(cur, mv);
      } catch (const OverflowError&) {
        continue;
      } catch (const MoveError&) {
        continue;
      }
      if (!in_box(nxt.vector, bound)) continue;
      auto [it, inserted] = seen.emplace(state_key(nxt, constrained), (int)nodes.size());
      if (!inserted) continue;
      nodes.push_back({std::move(nxt), (int)head, mv, next_depth});
      emit(nodes.back());
      if (is_goal(nodes.back().state)) return word_to((int)nodes.size() - 1);
      if (nodes.size() >= kMaxSearchStates) {
        if (capped) *capped = true;
        return std::nullopt;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

SearchOutcome certify(const ColorVector& v, const ColorVector& w, Relation r, int depth,
                      i64 bound) {
  if (v.size() != w.size()) throw InputError("certify: vectors must have equal length");
  if (v.size() < 2) throw InputError("certify: vectors must have length >= 2");
  if (!equivalent(v, w, r)) return SearchOutcome{SearchOutcome::Kind::NotEquivalent, {}, 0, 0};

  auto found = [&](MoveWord word) {
    SearchOutcome out;
    out.kind = SearchOutcome::Kind::Found;
    out.certificate = Certificate{r, std::move(word), v, w};
    return out;
  };
  if (v == w) return found(MoveWord{});

  switch (r) {
    case Relation::Braid: return found(certify_braid(v, w));
    case Relation::Pure: return found(certify_pure(v, w));
    case Relation::VBraid: return found(certify_vbraid(v, w));
    case Relation::VPure: return found(certify_vpure(v, w));
    default: break;
  }
  bool capped = false;
  if (auto word = bfs(v, &w, r, depth, bound, &capped, nullptr)) return found(std::move(*word));
  return SearchOutcome{SearchOutcome::Kind::Exhausted, {}, depth, bound};
}

bool verify(const Certificate& c, std::string* diagnostic) {
  auto fail = [&](const std::string& msg) {
    if (diagnostic) *diagnostic = msg;
    return false;
  };
  if (c.start.size() != c.end.size()) return fail("start and end vectors differ in length");
  if (c.start.size() < 2) return fail("vectors must have length >= 2");
  const Alphabet alpha = alphabet(c.relation);
  for (size_t k = 0; k < c.word.size(); ++k)
    if (std::find(alpha.kinds.begin(), alpha.kinds.end(), c.word[k].kind) == alpha.kinds.end())
      return fail("move " + std::to_string(k) + ": alphabet violation: '" + move_token(c.word[k]) +
                  "' is not allowed under relation " + relation_name(c.relation));
  MarkedState s{c.start, Permutation::identity((int)c.start.size())};
  for (size_t k = 0; k < c.word.size(); ++k) {
    try {
      s = apply_move(s, c.word[k]);
    } catch (const std::runtime_error& e) {
      return fail("move " + std::to_string(k) + ": " + e.what());
    }
  }
  if (s.vector != c.end)
    return fail("end vector mismatch: replay reached " + format_vector(s.vector));
  if (alpha.perm_constrained && !s.perm.is_identity())
    return fail("net permutation is not the identity");
  if (diagnostic) diagnostic->clear();
  return true;
}

std::vector<ColorVector> orbit(const ColorVector& v, Relation r, int depth, i64 bound) {
  if (v.size() < 2) throw InputError("orbit: vector must have length >= 2");
  std::vector<ColorVector> reached;
  bool capped = false;
  bfs(v, nullptr, r, depth, bound, &capped, &reached);
  if (capped)
    throw ResourceError("orbit search exceeded the state budget of " +
                        std::to_string(kMaxSearchStates) + " states");
  std::sort(reached.begin(), reached.end());
  reached.erase(std::unique(reached.begin(), reached.end()), reached.end());
  return reached;
}

MoveWord stabilizer_word(const ColorVector& v, int i) {
  const int m = (int)v.size();
  if (m < 3) throw InputError("stabilizer_word: standard form needs length >= 3");
  const i64 d = gcd_diff(v);
  if (d <= 0) throw InputError("stabilizer_word: not in standard form (constant vector)");
  const i64 x = v[0];
  int t = 0;
  while (t < m && v[t] == x) ++t;
  auto bad = [](const std::string& msg) -> MoveWord { throw InputError("stabilizer_word: " + msg); };
  if (t == 0 || t >= m) return bad("not in standard form");
  if (v[t] == x + d) {
    // Two-block shape: the special entry equals x (lambda = 0, needs t >= 2)
    // or x + d (lambda = 1, needs t <= m - 2).
    if (t < 2 && t > m - 2) return bad("not in standard form (no valid block split)");
  } else {
    if (t > m - 2) return bad("not in standard form (special entry in last position)");
    if ((v[t] - x) % d != 0) return bad("not in standard form (special entry off the lattice)");
  }
  for (int j = t + 1; j < m; ++j)
    if (v[j] != x + d) return bad("not in standard form (tail not constant)");

  if (i == 0) return {};
  if (i < 1 || i >= m) return bad("transposition index out of range");
  if (mod_reduce(v[i - 1] - v[i], 2 * d) != 0)
    return bad("transposition outside the allowed subgroup");
  return transposition_at(v, i - 1, true);
}

std::string certificate_text(const Certificate& c) {
  std::string out;
  out += "relation: " + relation_name(c.relation) + "\n";
  out += "start: " + format_vector(c.start) + "\n";
  out += "end: " + format_vector(c.end) + "\n";
  out += "word: " + word_text(c.word) + "\n";
  return out;
}

Certificate parse_certificate(const std::string& text) {
  Certificate c;
  bool have_relation = false, have_start = false, have_end = false, have_word = false;
  std::istringstream ss(text);
  std::string line;
  auto trim = [](std::string s) {
    size_t a = s.find_first_not_of(" \t\r");
    size_t b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  while (std::getline(ss, line)) {
    line = trim(line);
    if (line.empty()) continue;
    size_t colon = line.find(':');
    if (colon == std::string::npos) throw InputError("certificate line without ':': " + line);
    std::string key = trim(line.substr(0, colon));
    std::string value = trim(line.substr(colon + 1));
    if (key == "relation") {
      auto r = parse_relation(value);
      if (!r) throw InputError("unknown relation '" + value + "'");
      c.relation = *r;
      have_relation = true;
    } else if (key == "start") {
      c.start = parse_vector(value);
      have_start = true;
    } else if (key == "end") {
      c.end = parse_vector(value);
      have_end = true;
    } else if (key == "word") {
      c.word = parse_word(value);
      have_word = true;
    } else {
      throw InputError("unknown certificate field '" + key + "'");
    }
  }
  if (!have_relation || !have_start || !have_end || !have_word)
    throw InputError("certificate needs relation, start, end and word lines");
  return c;
}

}  // namespace zc
