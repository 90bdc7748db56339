#include "zc/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zc/action.hpp"
#include "zc/canon.hpp"
#include "zc/core.hpp"
#include "zc/decide.hpp"
#include "zc/spatial.hpp"
#include "zc/witness.hpp"

namespace zc {

namespace {

using json = nlohmann::ordered_json;

Relation relation_arg(const std::string& name) {
  std::optional<Relation> r = parse_relation(name);
  if (!r) throw InputError("unknown relation \"" + name + "\"");
  return *r;
}

std::vector<i64> sorted_residues(const ResidueMultiset& m) {
  std::vector<i64> out;
  for (const auto& [res, count] : m.counts)
    for (i64 k = 0; k < count; ++k) out.push_back(res);
  return out;
}

std::string multiset_text(const ResidueMultiset& m) {
  std::string s = "{";
  bool first = true;
  for (const i64 r : sorted_residues(m)) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(r);
  }
  return s + "}";
}

json vector_json(const ColorVector& v) { return json(v); }

struct Ctx {
  bool json_out = false;
  std::ostream* out = nullptr;
  int exit_code = 0;
};

void emit(Ctx& ctx, const json& j, const std::string& text) {
  if (ctx.json_out)
    *ctx.out << j.dump() << "\n";
  else
    *ctx.out << text;
}

void cmd_invariants(Ctx& ctx, const std::string& vec_text) {
  const ColorVector v = parse_vector(vec_text);
  const i64 D = delta(v), d = gcd_diff(v), d2 = two_part(v);
  const ResidueMultiset m2 = residues_multiset(v, 2);
  const ResidueMultiset m2d = residues_multiset(v, checked_mul(2, d));
  const ResidueMultiset m2d2 = residues_multiset(v, checked_mul(2, d2));
  std::ostringstream text;
  text << "delta=" << D << "\n"
       << "d=" << d << "\n"
       << "d2=" << d2 << "\n"
       << "M[2]=" << multiset_text(m2) << "\n"
       << "M[" << 2 * d << "]=" << multiset_text(m2d) << "\n"
       << "M[" << 2 * d2 << "]=" << multiset_text(m2d2) << "\n";
  json j;
  j["vector"] = vector_json(v);
  j["delta"] = D;
  j["d"] = d;
  j["d2"] = d2;
  j["m_mod_2"] = sorted_residues(m2);
  j["m_mod_2d"] = sorted_residues(m2d);
  j["m_mod_2d2"] = sorted_residues(m2d2);
  emit(ctx, j, text.str());
}

void cmd_decide(Ctx& ctx, const std::string& rel, const std::string& vt, const std::string& wt) {
  const Relation r = relation_arg(rel);
  const ColorVector v = parse_vector(vt), w = parse_vector(wt);
  const bool eq = equivalent(v, w, r);
  ctx.exit_code = eq ? 0 : 1;
  json j;
  j["relation"] = relation_name(r);
  j["v"] = vector_json(v);
  j["w"] = vector_json(w);
  j["equivalent"] = eq;
  emit(ctx, j, std::string(eq ? "equivalent" : "not equivalent") + "\n");
}

void cmd_normal_form(Ctx& ctx, const std::string& rel, const std::string& vt) {
  const Relation r = relation_arg(rel);
  const ColorVector v = parse_vector(vt);
  const ColorVector rep = representative(v, r);
  json j;
  j["relation"] = relation_name(r);
  j["input"] = vector_json(v);
  j["representative"] = vector_json(rep);
  emit(ctx, j, format_vector(rep) + "\n");
}

void cmd_reps(Ctx& ctx, const std::string& rel, int m, i64 box) {
  const Relation r = relation_arg(rel);
  const std::vector<ColorVector> reps = enumerate_representatives(r, m, box);
  json j;
  j["relation"] = relation_name(r);
  j["m"] = m;
  j["bound"] = box;
  j["representatives"] = json::array();
  std::ostringstream text;
  for (const ColorVector& v : reps) {
    j["representatives"].push_back(vector_json(v));
    text << format_vector(v) << "\n";
  }
  emit(ctx, j, text.str());
}

json certificate_json(const Certificate& c) {
  json j;
  j["relation"] = relation_name(c.relation);
  j["start"] = vector_json(c.start);
  j["end"] = vector_json(c.end);
  j["word"] = word_text(c.word);
  return j;
}

void cmd_witness(Ctx& ctx, const std::string& rel, const std::string& vt, const std::string& wt,
                 int depth, i64 bound) {
  const Relation r = relation_arg(rel);
  const ColorVector v = parse_vector(vt), w = parse_vector(wt);
  const SearchOutcome outcome = certify(v, w, r, depth, bound);
  json j;
  switch (outcome.kind) {
    case SearchOutcome::Kind::Found:
      j["kind"] = "found";
      j["certificate"] = certificate_json(*outcome.certificate);
      emit(ctx, j, certificate_text(*outcome.certificate));
      break;
    case SearchOutcome::Kind::NotEquivalent:
      ctx.exit_code = 1;
      j["kind"] = "not_equivalent";
      emit(ctx, j, "not equivalent\n");
      break;
    case SearchOutcome::Kind::Exhausted:
      ctx.exit_code = 1;
      j["kind"] = "exhausted";
      j["depth"] = outcome.depth;
      j["bound"] = outcome.bound;
      emit(ctx, j,
           "search exhausted (depth " + std::to_string(outcome.depth) + ", bound " +
               std::to_string(outcome.bound) + ")\n");
      break;
  }
}

void cmd_verify(Ctx& ctx, const std::string& rel, const std::string& word_tokens,
                const std::string& vt, const std::string& wt) {
  Certificate cert;
  cert.relation = relation_arg(rel);
  cert.word = parse_word(word_tokens);
  cert.start = parse_vector(vt);
  cert.end = parse_vector(wt);
  std::string diag;
  const bool ok = verify(cert, &diag);
  ctx.exit_code = ok ? 0 : 1;
  json j;
  j["valid"] = ok;
  if (!ok) j["reason"] = diag;
  emit(ctx, j, ok ? "valid\n" : "invalid: " + diag + "\n");
}

void cmd_orbit(Ctx& ctx, const std::string& rel, const std::string& vt, int depth, i64 bound) {
  const Relation r = relation_arg(rel);
  const ColorVector v = parse_vector(vt);
  const std::vector<ColorVector> elems = orbit(v, r, depth, bound);
  json j;
  j["relation"] = relation_name(r);
  j["depth"] = depth;
  j["bound"] = bound;
  j["orbit"] = json::array();
  std::ostringstream text;
  for (const ColorVector& e : elems) {
    j["orbit"].push_back(vector_json(e));
    text << format_vector(e) << "\n";
  }
  emit(ctx, j, text.str());
}

void cmd_closable(Ctx& ctx, const std::string& vt, bool virt, bool loops) {
  if (loops && !virt) throw InputError("--loops requires --virtual");
  const ColorVector v = parse_vector(vt);
  const bool ok = virt ? (loops ? closable_virtual_loops(v) : closable_virtual_no_loops(v))
                       : closable_classical(v);
  ctx.exit_code = ok ? 0 : 1;
  json j;
  j["virtual"] = virt;
  j["loops"] = loops;
  j["closable"] = ok;
  emit(ctx, j, ok ? "closable\n" : "not closable\n");
}

json pairs_json(const std::set<std::pair<i64, i64>>& pairs) {
  json arr = json::array();
  for (const auto& [a, b] : pairs) arr.push_back(json::array({a, b}));
  return arr;
}

std::string pairs_text(const std::set<std::pair<i64, i64>>& pairs) {
  std::ostringstream text;
  for (const auto& [a, b] : pairs) text << a << "," << b << "\n";
  return text.str();
}

void cmd_theta4(Ctx& ctx, i64 m, i64 n, std::optional<i64> observe) {
  DStarSet s;
  if (observe)
    s = observed_d_star(theta4_build(m, n), *observe);
  else
    s = theta4_dstar(m, n);
  json j;
  j["m"] = m;
  j["n"] = n;
  j["observed"] = s.observed;
  if (s.observed) j["bound"] = s.bound;
  j["pairs"] = pairs_json(s.pairs);
  emit(ctx, j, pairs_text(s.pairs));
}

void cmd_diagram_solve(Ctx& ctx, const std::string& file, bool dstar, i64 samples) {
  std::ifstream f(file);
  if (!f.good()) throw InputError("cannot read file \"" + file + "\"");
  std::ostringstream buf;
  buf << f.rdbuf();
  const Diagram d = parse_diagram(buf.str());
  const ColoringBasis b = coloring_basis(d);
  json j;
  j["arcs"] = d.arcs.size();
  j["crossings"] = d.crossings.size();
  j["vertices"] = d.vertices.size();
  j["rank"] = b.rank;
  j["contains_trivial"] = b.contains_trivial;
  j["generators"] = json::array();
  std::ostringstream text;
  text << "arcs=" << d.arcs.size() << "\n"
       << "crossings=" << d.crossings.size() << "\n"
       << "vertices=" << d.vertices.size() << "\n"
       << "rank=" << b.rank << "\n"
       << "contains_trivial=" << (b.contains_trivial ? "true" : "false") << "\n";
  for (std::size_t i = 0; i < b.generators.size(); ++i) {
    json gj;
    text << "generator " << (i + 1) << ":";
    for (const std::string& a : d.arcs) {
      const i64 val = b.generators[i].values.at(a);
      gj[a] = val;
      text << " " << a << "=" << val;
    }
    text << "\n";
    j["generators"].push_back(std::move(gj));
  }
  if (dstar) {
    const DStarSet s = observed_d_star(d, samples);
    j["dstar"] = json::object();
    j["dstar"]["observed"] = true;
    j["dstar"]["bound"] = s.bound;
    j["dstar"]["pairs"] = pairs_json(s.pairs);
    text << "observed dstar (bound " << s.bound << "):\n" << pairs_text(s.pairs);
  }
  emit(ctx, j, text.str());
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Ctx ctx;
  ctx.out = &out;

  CLI::App app{"Z-coloring equivalence toolkit"};
  app.require_subcommand(1);
  app.add_flag("--json", ctx.json_out, "emit JSON instead of plain text");

  std::string rel, vt, wt, word_tokens, file;
  int m_arg = 2, depth = kDefaultSearchDepth;
  i64 box = 0, bound = kDefaultCoordinateBound, tm = 1, tn = 1, samples = 10;
  bool virt = false, loops = false, dstar = false;
  std::optional<i64> observe;

  CLI::App* inv = app.add_subcommand("invariants", "numeric invariants of a vector");
  inv->add_option("vector", vt)->required();
  inv->callback([&] { cmd_invariants(ctx, vt); });

  CLI::App* dec = app.add_subcommand("decide", "decide equivalence of two vectors");
  dec->add_option("--relation", rel)->required();
  dec->add_option("v", vt)->required();
  dec->add_option("w", wt)->required();
  dec->callback([&] { cmd_decide(ctx, rel, vt, wt); });

  CLI::App* nf = app.add_subcommand("normal-form", "canonical representative of a vector");
  nf->add_option("--relation", rel)->required();
  nf->add_option("vector", vt)->required();
  nf->callback([&] { cmd_normal_form(ctx, rel, vt); });

  CLI::App* reps = app.add_subcommand("reps", "enumerate representatives in a coordinate box");
  reps->add_option("--relation", rel)->required();
  reps->add_option("--m", m_arg)->required();
  reps->add_option("--bound", box)->required();
  reps->callback([&] { cmd_reps(ctx, rel, m_arg, box); });

  CLI::App* wit = app.add_subcommand("witness", "produce a verified move-word certificate");
  wit->add_option("--relation", rel)->required();
  wit->add_option("--depth", depth);
  wit->add_option("--bound", bound);
  wit->add_option("v", vt)->required();
  wit->add_option("w", wt)->required();
  wit->callback([&] { cmd_witness(ctx, rel, vt, wt, depth, bound); });

  CLI::App* ver = app.add_subcommand("verify", "replay and check a move-word certificate");
  ver->add_option("--relation", rel)->required();
  ver->add_option("--word", word_tokens)->required();
  ver->add_option("v", vt)->required();
  ver->add_option("w", wt)->required();
  ver->callback([&] { cmd_verify(ctx, rel, word_tokens, vt, wt); });

  CLI::App* orb = app.add_subcommand("orbit", "enumerate the bounded orbit of a vector");
  orb->add_option("--relation", rel)->required();
  orb->add_option("--depth", depth);
  orb->add_option("--bound", bound);
  orb->add_option("vector", vt)->required();
  orb->callback([&] { cmd_orbit(ctx, rel, vt, depth, bound); });

  CLI::App* clo = app.add_subcommand("closable", "test closability of a coloring vector");
  clo->add_flag("--virtual", virt);
  clo->add_flag("--loops", loops);
  clo->add_option("vector", vt)->required();
  clo->callback([&] { cmd_closable(ctx, vt, virt, loops); });

  CLI::App* th = app.add_subcommand("theta4", "invariant pairs of the four-twist theta curve");
  th->add_option("--m", tm)->required();
  th->add_option("--n", tn)->required();
  th->add_option("--observe", observe, "sample the built diagram at this bound instead");
  th->callback([&] { cmd_theta4(ctx, tm, tn, observe); });

  CLI::App* dia = app.add_subcommand("diagram", "spatial diagram operations");
  dia->require_subcommand(1);
  CLI::App* solve = dia->add_subcommand("solve", "solve the coloring equations of a diagram");
  solve->add_option("file", file)->required();
  solve->add_flag("--dstar", dstar, "also sample the vertex-pair invariant");
  solve->add_option("--samples", samples, "sampling bound for --dstar");
  solve->callback([&] { cmd_diagram_solve(ctx, file, dstar, samples); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help and friends
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return ctx.exit_code;
}

}  // namespace zc
