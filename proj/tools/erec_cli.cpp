// erec: command-line front end for the evaluator, the type universe, the
// realizability checker and the fixed-point oracles.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "erec/kernel/analysis.hpp"
#include "erec/kernel/library.hpp"
#include "erec/kernel/machine.hpp"
#include "erec/kernel/program.hpp"
#include "erec/lfp/comp_oracle.hpp"
#include "erec/lfp/universe_oracle.hpp"
#include "erec/realize/lpo.hpp"
#include "erec/realize/realize.hpp"
#include "erec/syntax.hpp"
#include "erec/universe/universe.hpp"
#include "erec/universe/vset.hpp"

using json = nlohmann::ordered_json;
using namespace erec;

namespace {

enum Exit { kDefinite = 0, kError = 1, kUnknown = 2, kMismatch = 3 };

struct Report {
  json inputs = json::object();
  json result = json::object();
  json bounds = json::object();
  std::vector<std::string> trace;
  std::vector<std::string> lines;
  int exit = kDefinite;

  void say(std::string s) { lines.push_back(std::move(s)); }
};

struct Flags {
  std::uint64_t fuel = 10'000;
  std::optional<std::uint64_t> bound;
  bool trace = false;
  bool json_out = false;
  bool literal_sg = false;
  bool no_jets = false;
  std::vector<std::string> certs;
  std::vector<std::string> lets;
  std::string report_file;
  std::string replay_file;
};

std::string code_text(const Nat& v) { return format_code(v); }

// Reads `arg` from a file when it names one.
std::string text_or_file(const std::string& arg) {
  std::ifstream in(arg);
  if (!in) return arg;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json outcome_json(const Outcome& o) {
  json j;
  switch (o.kind) {
    case Outcome::Kind::converged:
      j["status"] = "Converged";
      j["value"] = code_text(o.value);
      break;
    case Outcome::Kind::stuck:
      j["status"] = "Stuck";
      j["reason"] = std::string(stuck_reason_name(o.stuck));
      break;
    case Outcome::Kind::unknown:
      j["status"] = "Unknown";
      j["reason"] = std::string(unknown_reason_name(o.unknown));
      break;
  }
  j["fuel_spent"] = o.fuel_spent;
  return j;
}

json verdict_json(const Verdict& v) {
  json j;
  j["verdict"] = std::string(verdict_name(v.kind));
  if (!v.evidence.empty()) j["evidence"] = v.evidence;
  if (v.is_unknown()) j["bound"] = v.bound;
  return j;
}

int verdict_exit(const Verdict& v) { return v.definite() ? kDefinite : kUnknown; }

std::string verdict_line(const Verdict& v) {
  std::string s(verdict_name(v.kind));
  if (v.is_unknown()) s += " (bound " + std::to_string(v.bound) + ")";
  if (!v.evidence.empty()) s += ": " + v.evidence;
  return s;
}

std::vector<Nat> parse_codes(const std::vector<std::string>& xs) {
  std::vector<Nat> out;
  for (const auto& x : xs) out.push_back(parse_code(x));
  return out;
}

Environment parse_lets(const Flags& f, Report& rep) {
  Environment env;
  for (const auto& l : f.lets) {
    auto eq = l.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("--let expects NAME=TERM, got '" + l + "'");
    SetTerm t = parse_set_term(l.substr(eq + 1));
    if (t.is_var()) throw std::invalid_argument("--let needs a closed term for " + l.substr(0, eq));
    env[l.substr(0, eq)] = t.value;
    rep.inputs["let"][l.substr(0, eq)] = t.text;
  }
  return env;
}

void load_certificates(const Flags& f, Report& rep) {
  for (const auto& path : f.certs) {
    TotalityCertificate c = parse_certificate(text_or_file(path));
    Machine vm(MachineOptions{}, &global_certificates());
    global_certificates().add(c, vm, f.fuel);
    rep.inputs["certificates"].push_back(path);
  }
}

void report_outcome(Report& rep, const Outcome& o) {
  rep.result = outcome_json(o);
  std::string line = rep.result["status"].get<std::string>();
  if (o.converged()) line += " " + code_text(o.value);
  if (!o.converged()) line += " " + rep.result["reason"].get<std::string>();
  rep.say(line + "  (fuel " + std::to_string(o.fuel_spent) + ")");
  rep.exit = o.definite() ? kDefinite : kUnknown;
}

Outcome run_machine(const Flags& f, const Nat& code, const std::vector<Nat>& args, Report* rep) {
  MachineOptions mo;
  mo.accelerate = !f.no_jets;
  mo.trace = f.trace && rep;
  Machine vm(mo);
  Outcome o = vm.apply(code, args, f.fuel);
  if (mo.trace) {
    for (const auto& e : vm.trace()) rep->trace.push_back(format_trace_entry(e));
    if (vm.trace_truncated()) rep->trace.push_back("... trace truncated");
  }
  return o;
}

// ---------------------------------------------------------------------------

void cmd_eval(const Flags& f, const std::string& code, const std::vector<std::string>& args, Report& rep) {
  Nat c = parse_code(code);
  auto a = parse_codes(args);
  rep.inputs["code"] = code_text(c);
  for (const auto& x : a) rep.inputs["args"].push_back(code_text(x));
  rep.bounds["fuel"] = f.fuel;
  rep.bounds["jets"] = !f.no_jets;
  report_outcome(rep, run_machine(f, c, a, &rep));
}

// Compares two evaluations that the laws say must agree.
void compare_pair(const Flags& f, const std::string& law, const Nat& lhs, const std::vector<Nat>& lhs_args,
                  const Nat& rhs, const std::vector<Nat>& rhs_args, Report& rep) {
  Outcome a = run_machine(f, lhs, lhs_args, &rep);
  Outcome b = run_machine(f, rhs, rhs_args, nullptr);
  rep.result["lhs"] = outcome_json(a);
  rep.result["rhs"] = outcome_json(b);
  bool agree = a.same_answer(b);
  rep.result["agree"] = agree;
  rep.say("lhs " + a.to_string());
  rep.say("rhs " + b.to_string());
  if (!a.definite() || !b.definite()) {
    rep.say(law + ": undecided at fuel " + std::to_string(f.fuel));
    rep.exit = kUnknown;
  } else if (agree) {
    rep.say(law + ": agree");
  } else {
    rep.say(law + ": DISAGREE");
    rep.exit = kMismatch;
  }
}

void cmd_smn(const Flags& f, const std::string& p, const std::string& q, const std::vector<std::string>& args,
             Report& rep) {
  Nat pc = parse_code(p), qc = parse_code(q);
  Nat s = smn(pc, qc);
  rep.inputs["p"] = code_text(pc);
  rep.inputs["q"] = code_text(qc);
  rep.result["code"] = code_text(s);
  rep.say("smn = " + code_text(s));
  if (args.empty()) return;
  auto a = parse_codes(args);
  std::vector<Nat> full{qc};
  full.insert(full.end(), a.begin(), a.end());
  rep.bounds["fuel"] = f.fuel;
  compare_pair(f, "{smn(p,q)}(m) = {p}(q,m)", s, a, pc, full, rep);
}

void cmd_fix(const Flags& f, const std::string& fn, const std::vector<std::string>& args, Report& rep) {
  Nat fc = parse_code(fn);
  Nat e = fix(fc);
  rep.inputs["f"] = code_text(fc);
  rep.result["code"] = code_text(e);
  rep.say("fix = " + code_text(e));
  if (args.empty()) return;
  auto a = parse_codes(args);
  std::vector<Nat> full{e};
  full.insert(full.end(), a.begin(), a.end());
  rep.bounds["fuel"] = f.fuel;
  compare_pair(f, "{e}(m) = {f}(e,m)", e, a, fc, full, rep);
}

UniverseBounds universe_bounds(const Flags& f) {
  UniverseBounds b;
  b.fuel = f.fuel;
  b.probe = f.bound.value_or(64);
  return b;
}

void cmd_member(const Flags& f, const std::string& x, const std::string& type, Report& rep) {
  Nat xc = parse_code(x), t = parse_type(type);
  Universe u(universe_bounds(f));
  rep.inputs["x"] = code_text(xc);
  rep.inputs["type"] = type_to_string(t);
  rep.bounds["fuel"] = f.fuel;
  rep.bounds["probe"] = u.bounds().probe;
  Verdict v = u.member(xc, t);
  rep.result = verdict_json(v);
  rep.say(verdict_line(v));
  rep.exit = verdict_exit(v);
}

void cmd_in_universe(const Flags& f, const std::string& type, Report& rep) {
  Nat t = parse_type(type);
  Universe u(universe_bounds(f));
  rep.inputs["type"] = type_to_string(t);
  rep.bounds["fuel"] = f.fuel;
  rep.bounds["probe"] = u.bounds().probe;
  Verdict v = u.in_universe(t);
  rep.result = verdict_json(v);
  rep.say(verdict_line(v));
  rep.exit = verdict_exit(v);
}

void cmd_mkset(const Flags& f, const std::string& lit, Report& rep) {
  HfSet s = parse_hf(lit);
  Nat v = hf_to_v(s);
  Universe u(universe_bounds(f));
  Verdict inv = u.in_v(v);
  rep.inputs["set"] = to_string(s);
  rep.result["code"] = code_text(v);
  rep.result["rank"] = rank(s);
  rep.result["in_v"] = verdict_json(inv);
  rep.say("code " + code_text(v));
  rep.say("rank " + std::to_string(rank(s)) + ", in V: " + verdict_line(inv));
  rep.exit = verdict_exit(inv);
}

RealizeOptions realize_options(const Flags& f, bool bound_is_candidates) {
  RealizeOptions o;
  o.fuel = f.fuel;
  if (f.bound) {
    if (bound_is_candidates) {
      o.candidate_bound = *f.bound;
    } else {
      o.probe = *f.bound;
    }
  }
  return o;
}

void attach_log(const Flags& f, const std::vector<RealizeStep>& log, Report& rep) {
  if (!f.trace) return;
  for (const auto& s : log) {
    rep.trace.push_back(std::string(s.depth * 2, ' ') + std::string(formula_kind_name(s.kind)) + " " +
                        code_text(s.realizer) + " -> " + verdict_line(s.verdict));
  }
}

void search_into(const Flags& f, const Formula& phi, const Environment& env, Report& rep) {
  Realizer r(realize_options(f, true));
  std::vector<RealizeStep> log;
  if (f.trace) r.set_log(&log);
  rep.bounds["fuel"] = f.fuel;
  rep.bounds["candidates"] = r.options().candidate_bound;
  rep.bounds["probe"] = r.options().probe;
  SearchResult s = r.search(phi, env);
  attach_log(f, log, rep);
  rep.result["found"] = s.realizer.has_value();
  if (s.realizer) rep.result["realizer"] = code_text(*s.realizer);
  rep.result["numeric_checked"] = s.numeric_checked;
  rep.result["synthesized"] = s.synthesized;
  rep.result["check"] = verdict_json(s.verdict);
  if (s.realizer) {
    rep.say("realizer " + code_text(*s.realizer) + (s.synthesized ? " (synthesized)" : " (numeric)"));
    rep.say("check: " + verdict_line(s.verdict));
    rep.exit = verdict_exit(s.verdict);
  } else {
    rep.say("no realizer: " + verdict_line(s.verdict));
    rep.exit = s.verdict.is_no() ? kDefinite : kUnknown;
  }
}

void cmd_eq(const Flags& f, const std::string& a, const std::string& b, Report& rep) {
  SetTerm ta = parse_set_term(a), tb = parse_set_term(b);
  Formula phi = Formula::eq(ta, tb);
  rep.inputs["formula"] = to_string(phi);
  search_into(f, phi, parse_lets(f, rep), rep);
  if (rep.exit == kDefinite) rep.say(rep.result["found"].get<bool>() ? "equal" : "not equal");
}

void cmd_realize(const Flags& f, const std::string& formula, const std::string& index, Report& rep) {
  Formula phi = parse_formula(text_or_file(formula));
  Nat e = parse_code(index);
  Environment env = parse_lets(f, rep);
  rep.inputs["formula"] = to_string(phi);
  rep.inputs["index"] = code_text(e);
  Realizer r(realize_options(f, false));
  std::vector<RealizeStep> log;
  if (f.trace) r.set_log(&log);
  rep.bounds["fuel"] = f.fuel;
  rep.bounds["probe"] = r.options().probe;
  Verdict v = r.realizes(e, phi, env);
  attach_log(f, log, rep);
  rep.result = verdict_json(v);
  rep.say(verdict_line(v));
  rep.exit = verdict_exit(v);
}

void cmd_search(const Flags& f, const std::string& formula, Report& rep) {
  Formula phi = parse_formula(text_or_file(formula));
  rep.inputs["formula"] = to_string(phi);
  search_into(f, phi, parse_lets(f, rep), rep);
}

struct LpoArgs {
  std::string pred, p, r, var = "x";
};

void cmd_lpo_demo(const Flags& f, const LpoArgs& a, Report& rep) {
  Predicate pred = parse_predicate(a.pred);
  Formula p = parse_formula(text_or_file(a.p));
  Formula r = parse_formula(text_or_file(a.r));
  rep.inputs["pred"] = pred.text();
  rep.inputs["var"] = a.var;
  Environment lets = parse_lets(f, rep);
  for (const auto& [name, value] : lets) {
    SetTerm t = SetTerm::literal(*value, rep.inputs["let"][name].get<std::string>());
    p = substitute(p, name, t);
    r = substitute(r, name, t);
  }
  // Remaining parameters default to the set of ordinals where the predicate holds.
  std::set<std::string> params;
  for (const auto& v : p.free_variables()) params.insert(v);
  for (const auto& v : r.free_variables()) params.insert(v);
  params.erase(a.var);
  bool finite = pred.kind != Predicate::Kind::always && pred.kind != Predicate::Kind::ge;
  for (const auto& name : params) {
    if (!finite) throw std::invalid_argument("bind " + name + " with --let; the predicate holds infinitely often");
    HfSet s;
    for (std::uint64_t n = 0; n < pred.tail_start(); ++n)
      if (pred.holds(n)) s.elems.push_back(von_neumann(n));
    SetTerm t = SetTerm::literal(hf_to_v(s), "(hf " + to_string(s) + ")");
    p = substitute(p, name, t);
    r = substitute(r, name, t);
    rep.inputs["default_binding"][name] = t.text;
    rep.say("binding " + name + " = " + t.text);
  }
  rep.inputs["P"] = to_string(p);
  rep.inputs["R"] = to_string(r);
  rep.inputs["literal_sg"] = f.literal_sg;

  Realizer realizer(realize_options(f, false));
  rep.bounds["fuel"] = f.fuel;
  rep.bounds["probe"] = realizer.options().probe;
  DisjunctionFamily fam = build_disjunction_family(pred, a.var, p, r, realizer);
  rep.result["family"] = code_text(fam.code);
  rep.result["certified"] = fam.certified;
  std::uint64_t lpo_fuel = std::max<std::uint64_t>(f.fuel, 100'000);
  Outcome o = lpo_transform(fam.code, f.literal_sg, lpo_fuel);
  rep.result["transform"] = outcome_json(o);
  if (!o.converged()) {
    rep.say("transform did not converge: " + o.to_string());
    rep.exit = o.definite() ? kDefinite : kUnknown;
    return;
  }
  Nat tag = apply(library().fst, {o.value}, f.fuel).value;
  Nat content = apply(library().snd, {o.value}, f.fuel).value;
  bool exists = tag.is_zero();
  rep.result["tag"] = code_text(tag);
  rep.result["branch"] = exists ? "exists" : "forall";
  rep.say(std::string("branch ") + (exists ? "exists" : "forall") + " (tag " + code_text(tag) + ")");

  Formula target = lpo_target(a.var, p, r);
  rep.inputs["target"] = to_string(target);
  Verdict v = realizer.realizes(o.value, target, {});
  if (exists) {
    Nat witness = apply(library().fst, {content}, f.fuel).value;
    rep.result["witness"] = code_text(witness);
    std::optional<std::uint64_t> least;
    for (std::uint64_t n = 0; n <= pred.tail_start() && !least; ++n)
      if (pred.holds(n)) least = n;
    if (least) rep.result["least_index"] = *least;
    rep.say("witness " + code_text(witness) + (least ? ", least index " + std::to_string(*least) : ""));
  } else {
    std::size_t passed = 0;
    for (std::uint64_t n = 0; n <= 20; ++n) {
      Outcome rn = apply(content, {Nat(n)}, lpo_fuel);
      if (!rn.converged()) continue;
      Formula inst = substitute(r, a.var, SetTerm::literal(vnat(n), "(vnat " + std::to_string(n) + ")"));
      if (realizer.realizes(rn.value, inst, {}).is_yes()) ++passed;
    }
    rep.result["spot_checks"] = {{"passed", passed}, {"of", 21}};
    rep.say("spot checks n <= 20: " + std::to_string(passed) + "/21");
  }
  rep.result["verification"] = verdict_json(v);
  rep.say("verification: " + verdict_line(v));
  rep.exit = verdict_exit(v);
}

struct OracleArgs {
  std::size_t depth = 6;
  std::uint64_t values = 5;
  std::uint64_t seed = 1;
  std::string stages_file;
};

void cmd_oracle_compare(const Flags& f, const OracleArgs& a, Report& rep) {
  CompCarrierSpec spec;
  spec.codes = f.bound.value_or(200);
  spec.depth = a.depth;
  spec.values = a.values;
  spec.seed = a.seed;
  std::uint64_t fuel = std::max<std::uint64_t>(f.fuel, 100'000);
  rep.inputs = {{"codes", spec.codes}, {"depth", spec.depth}, {"values", spec.values}, {"seed", spec.seed}};
  rep.bounds["fuel"] = fuel;
  CompOracle oracle(spec);
  FixpointResult r = iterate(oracle.op());
  OracleComparison c = oracle.compare(r, fuel);
  rep.result["comp"] = {{"carrier", oracle.carrier_size()}, {"queries", oracle.query_count()},
                        {"domain", oracle.domain_size()},   {"closure_stage", r.closure_stage},
                        {"lfp", c.lfp_atoms},               {"agreed", c.agreed},
                        {"both_silent", c.both_silent},     {"outside_carrier", c.outside_carrier},
                        {"multi_valued", c.multi_valued},   {"mismatches", c.mismatches}};
  rep.say("comp: carrier " + std::to_string(oracle.carrier_size()) + ", closure stage " +
          std::to_string(r.closure_stage) + ", lfp " + std::to_string(c.lfp_atoms) + ", agreed " +
          std::to_string(c.agreed) + ", silent " + std::to_string(c.both_silent) + ", outside carrier " +
          std::to_string(c.outside_carrier) + ", mismatches " + std::to_string(c.mismatches.size()));
  for (const auto& m : c.mismatches) rep.say("  " + m);

  UniverseOracle uo;
  FixpointResult ur = iterate(uo.op());
  Universe u;
  UniverseComparison uc = uo.compare(ur, u);
  rep.result["universe"] = {{"carrier", uo.op().bound}, {"types", uc.types},
                            {"exact_types", uc.exact_types}, {"closure_stage", ur.closure_stage},
                            {"checked", uc.checked}, {"agreed", uc.agreed},
                            {"gaps", uc.gaps}, {"overlaps", uc.overlaps},
                            {"mismatches", uc.mismatches}};
  rep.say("universe: carrier " + std::to_string(uo.op().bound) + ", closure stage " +
          std::to_string(ur.closure_stage) + ", checked " + std::to_string(uc.checked) + ", agreed " +
          std::to_string(uc.agreed) + ", relativized gaps " + std::to_string(uc.gaps) + ", overlaps " +
          std::to_string(uc.overlaps) + ", mismatches " + std::to_string(uc.mismatches.size()));
  for (const auto& m : uc.mismatches) rep.say("  " + m);

  if (!a.stages_file.empty()) {
    std::ofstream out(a.stages_file);
    out << dump_stages(oracle.op(), r) << dump_stages(uo.op(), ur);
  }
  bool ok = c.ok() && uc.ok();
  rep.say(ok ? "agree, 0 mismatches" : "DISAGREE");
  rep.exit = ok ? kDefinite : kMismatch;
}

void cmd_certify(const Flags& f, const std::string& file, const std::string& out_file, Report& rep) {
  TotalityCertificate c = parse_certificate(text_or_file(file));
  Machine vm(MachineOptions{}, &global_certificates());
  global_certificates().add(c, vm, f.fuel);
  std::string text = format_certificate(c);
  rep.inputs["certificate"] = file;
  rep.result["valid"] = true;
  rep.result["certificate"] = text;
  rep.say("certificate accepted");
  rep.say(text);
  if (!out_file.empty()) std::ofstream(out_file) << text;
}

// ---------------------------------------------------------------------------

json report_json(const std::vector<std::string>& argv, const Report& rep) {
  json j;
  j["command"] = argv;
  j["inputs"] = rep.inputs;
  j["bounds"] = rep.bounds;
  j["result"] = rep.result;
  if (!rep.trace.empty()) j["trace"] = rep.trace;
  j["exit"] = rep.exit;
  return j;
}

// Parses and runs one command line; argv excludes the program name.
int run(const std::vector<std::string>& argv, Report& rep, Flags& f) {
  CLI::App app{"E-recursion evaluator, type universe and realizability checker"};
  app.require_subcommand(0, 1);
  app.add_option("--fuel", f.fuel, "fuel per evaluation")->capture_default_str();
  app.add_option("--bound", f.bound, "probe, candidate or carrier bound, depending on the command");
  app.add_flag("--trace", f.trace, "include a derivation trace");
  app.add_flag("--json", f.json_out, "print the report as JSON");
  app.add_flag("--literal-sg", f.literal_sg, "use the uninverted tag in lpo-demo");
  app.add_flag("--no-jets", f.no_jets, "evaluate library codes clause by clause");
  app.add_option("--cert", f.certs, "load and validate a certificate file before running");
  app.add_option("--let", f.lets, "bind NAME=TERM for free set variables");
  app.add_option("--report", f.report_file, "write the JSON report to this file");
  app.add_option("--replay", f.replay_file, "re-run the command recorded in a report and compare");

  std::string code, p, q, x, type, lit, a, b, formula, index, cert_file, cert_out;
  std::vector<std::string> args;
  LpoArgs lpo;
  OracleArgs oracle;

  auto* eval = app.add_subcommand("eval", "apply a code to arguments");
  eval->add_option("code", code)->required();
  eval->add_option("args", args);
  auto* smn_cmd = app.add_subcommand("smn", "S-m-n index of p with q fixed; with args, check the law");
  smn_cmd->add_option("p", p)->required();
  smn_cmd->add_option("q", q)->required();
  smn_cmd->add_option("args", args);
  auto* fix_cmd = app.add_subcommand("fix", "recursion-theorem fixed point; with args, check the law");
  fix_cmd->add_option("f", p)->required();
  fix_cmd->add_option("args", args);
  auto* member = app.add_subcommand("member", "decide x E T / x NE T");
  member->add_option("x", x)->required();
  member->add_option("type", type)->required();
  auto* in_u = app.add_subcommand("in-universe", "decide T in U");
  in_u->add_option("type", type)->required();
  auto* mkset = app.add_subcommand("mkset", "code of a hereditarily finite set");
  mkset->add_option("set", lit)->required();
  auto* eq = app.add_subcommand("eq", "search a realizer of a = b");
  eq->add_option("a", a)->required();
  eq->add_option("b", b)->required();
  auto* realize = app.add_subcommand("realize", "check that an index realizes a formula");
  realize->add_option("formula", formula, "formula text or file")->required();
  realize->add_option("index", index)->required();
  auto* search = app.add_subcommand("search", "search a realizer of a formula");
  search->add_option("formula", formula, "formula text or file")->required();
  auto* lpo_cmd = app.add_subcommand("lpo-demo", "realize (ex-in x omega P) or (all-in x omega R)");
  lpo_cmd->add_option("--pred", lpo.pred, "never, always, n==K, n<K, n>=K or n in {..}")->required();
  lpo_cmd->add_option("--P", lpo.p, "formula text or file")->required();
  lpo_cmd->add_option("--R", lpo.r, "formula text or file")->required();
  lpo_cmd->add_option("--var", lpo.var)->capture_default_str();
  auto* oc = app.add_subcommand("oracle-compare", "least fixed points against the evaluator and the checker");
  oc->add_option("--depth", oracle.depth)->capture_default_str();
  oc->add_option("--values", oracle.values)->capture_default_str();
  oc->add_option("--seed", oracle.seed)->capture_default_str();
  oc->add_option("--stages", oracle.stages_file, "write the stage traces to this file");
  auto* certify = app.add_subcommand("certify", "validate and register a totality certificate");
  certify->add_option("file", cert_file)->required();
  certify->add_option("--out", cert_out, "write the normalized certificate here");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? -2 : kError;
  }

  if (!f.replay_file.empty()) return -1;
  load_certificates(f, rep);
  if (eval->parsed()) {
    cmd_eval(f, code, args, rep);
  } else if (smn_cmd->parsed()) {
    cmd_smn(f, p, q, args, rep);
  } else if (fix_cmd->parsed()) {
    cmd_fix(f, p, args, rep);
  } else if (member->parsed()) {
    cmd_member(f, x, type, rep);
  } else if (in_u->parsed()) {
    cmd_in_universe(f, type, rep);
  } else if (mkset->parsed()) {
    cmd_mkset(f, lit, rep);
  } else if (eq->parsed()) {
    cmd_eq(f, a, b, rep);
  } else if (realize->parsed()) {
    cmd_realize(f, formula, index, rep);
  } else if (search->parsed()) {
    cmd_search(f, formula, rep);
  } else if (lpo_cmd->parsed()) {
    cmd_lpo_demo(f, lpo, rep);
  } else if (oc->parsed()) {
    cmd_oracle_compare(f, oracle, rep);
  } else if (certify->parsed()) {
    cmd_certify(f, cert_file, cert_out, rep);
  } else {
    std::cout << app.help();
    return kError;
  }
  return rep.exit;
}

void emit(const Flags& f, const std::vector<std::string>& argv, const Report& rep, double wall_ms) {
  json j = report_json(argv, rep);
  j["wall_ms"] = wall_ms;
  if (f.json_out) {
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& l : rep.lines) std::cout << l << "\n";
    if (!rep.trace.empty()) {
      std::cout << "trace:\n";
      for (const auto& t : rep.trace) std::cout << "  " << t << "\n";
    }
  }
  if (!f.report_file.empty()) std::ofstream(f.report_file) << j.dump(2) << "\n";
}

int replay(const std::string& file) {
  std::ifstream in(file);
  if (!in) {
    std::cerr << "cannot read " << file << "\n";
    return kError;
  }
  json recorded = json::parse(in);
  recorded.erase("wall_ms");
  auto argv = recorded.at("command").get<std::vector<std::string>>();
  Report rep;
  Flags f;
  int code = run(argv, rep, f);
  json again = report_json(argv, rep);
  if (again == recorded) {
    std::cout << "replay: identical (exit " << code << ")\n";
    return code;
  }
  std::cout << "replay: DIFFERENT\n" << json::diff(recorded, again).dump(2) << "\n";
  return kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  Report rep;
  Flags f;
  auto start = std::chrono::steady_clock::now();
  try {
    int code = run(args, rep, f);
    if (code == -1) return replay(f.replay_file);
    if (code == -2) return kDefinite;
    if (code == kError && rep.lines.empty()) return kError;
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    emit(f, args, rep, ms);
    return code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
}
