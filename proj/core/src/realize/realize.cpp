#include "erec/realize/realize.hpp"

#include <string>

#include "erec/kernel/analysis.hpp"
#include "erec/kernel/code.hpp"
#include "erec/universe/vset.hpp"

namespace erec {

namespace {

// Binds a variable for the lifetime of the guard, restoring any outer binding.
class Bind {
 public:
  Bind(Environment& env, const std::string& var, std::optional<Nat> value) : env_(env), var_(var) {
    if (auto it = env.find(var); it != env.end()) saved_ = it->second;
    env[var] = std::move(value);
  }
  ~Bind() {
    if (saved_) {
      env_[var_] = *saved_;
    } else {
      env_.erase(var_);
    }
  }
  Bind(const Bind&) = delete;
  Bind& operator=(const Bind&) = delete;

 private:
  Environment& env_;
  std::string var_;
  std::optional<std::optional<Nat>> saved_;
};

Verdict both(const Verdict& a, const Verdict& b, const char* yes) {
  if (a.is_no()) return a;
  if (b.is_no()) return b;
  if (a.is_yes() && b.is_yes()) return Verdict::yes(yes);
  const Verdict& u = a.is_yes() ? b : a;
  return Verdict::unknown(u.evidence, std::max(a.bound, b.bound));
}

Verdict generic() { return Verdict::unknown("depends on a variable ranging over all of V"); }

std::string show(const Nat& n) {
  std::string s = n.to_string();
  return s.size() > 40 ? "#" + std::to_string(n.hash() % 1000000) : s;
}

}  // namespace

Realizer::Realizer(RealizeOptions opts, CertificateStore* certs)
    : opts_(std::move(opts)), u_(UniverseBounds{opts_.fuel}, certs) {
  u_.bounds().probe = opts_.probe;
}

std::optional<Nat> Realizer::resolve(const SetTerm& t, const Environment& env) const {
  if (!t.is_var()) return t.value;
  auto it = env.find(t.var);
  if (it == env.end()) throw UnboundVariable(t.var);
  return it->second;
}

const std::vector<Nat>& Realizer::spot_family() {
  if (!opts_.spot_family.empty()) return opts_.spot_family;
  if (default_family_.empty()) {
    for (const char* s : {"{}", "{{}}", "{{{}}}", "{{},{{}}}"}) default_family_.push_back(hf_to_v(parse_hf(s)));
    for (std::uint64_t n = 0; n <= 3; ++n) default_family_.push_back(vnat(n));
  }
  return default_family_;
}

Verdict Realizer::realizes(const Nat& e, const Formula& phi, const Environment& env) {
  for (const auto& v : phi.free_variables()) {
    if (!env.count(v)) throw UnboundVariable(v);
  }
  Environment local = env;
  return check(e, phi, local);
}

Verdict Realizer::check(const Nat& e, const Formula& phi, Environment& env) {
  ++depth_;
  Verdict v = check_clause(e, phi, env);
  --depth_;
  if (log_) log_->push_back({phi.kind(), e, v, depth_});
  return v;
}

Verdict Realizer::check_clause(const Nat& e, const Formula& phi, Environment& env) {
  using K = Formula::Kind;
  switch (phi.kind()) {
    case K::eq: {
      auto a = resolve(phi.lhs(), env);
      auto b = resolve(phi.rhs(), env);
      if (!a || !b) return generic();
      return u_.member(e, gl(*a, *b));
    }

    case K::in: {
      auto b = resolve(phi.rhs(), env);
      if (!b) return generic();
      auto d = try_unpair(e);
      if (d.status != PairDecode::Status::ok) return Verdict::no("realizer is not a pair");
      Verdict mk = u_.member(d.first, bar(*b));
      if (mk.is_no()) return Verdict::no("(e)0 NE the branching type: " + mk.evidence);
      Outcome y = u_.apply(tilde(*b), {d.first});
      if (y.is_stuck()) return Verdict::no("selector has no value at (e)0");
      if (!y.converged()) return Verdict::unknown("selector: " + y.to_string(), opts_.fuel);
      auto a = resolve(phi.lhs(), env);
      if (!a) return both(mk, generic(), "");
      Verdict eq = u_.member(d.second, gl(*a, y.value));
      return both(mk, eq, "index and equality realizer check");
    }

    case K::and_: {
      auto d = try_unpair(e);
      if (d.status != PairDecode::Status::ok) return Verdict::no("realizer is not a pair");
      Verdict l = check(d.first, phi.left(), env);
      if (l.is_no()) return l;
      return both(l, check(d.second, phi.right(), env), "both components realize");
    }

    case K::or_: {
      auto d = try_unpair(e);
      if (d.status != PairDecode::Status::ok) return Verdict::no("realizer is not a pair");
      if (d.first == Nat(0)) return check(d.second, phi.left(), env);
      if (d.first == Nat(1)) return check(d.second, phi.right(), env);
      return Verdict::no("tag " + show(d.first) + " is neither 0 nor 1");
    }

    case K::not_: {
      Verdict r = refute_in(phi.body(), env);
      if (r.is_yes()) return Verdict::yes("no realizer of the negated formula exists: " + r.evidence);
      if (r.is_no()) return Verdict::no("the negated formula has a realizer");
      return r;
    }

    case K::implies: {
      Verdict hyp = refute_in(phi.left(), env);
      if (hyp.is_yes()) return Verdict::yes("vacuous: hypothesis has no realizer");
      if (ignores_argument(e, 0)) {
        Outcome r = u_.apply(e, {Nat(0)});
        if (r.converged()) {
          Verdict c = check(r.value, phi.right(), env);
          if (c.is_yes()) return Verdict::yes("constant function into realizers of the conclusion");
          if (c.is_no() && hyp.is_no()) return Verdict::no("constant value does not realize the conclusion");
        } else if (r.is_stuck() && hyp.is_no()) {
          return Verdict::no("function has no value anywhere");
        }
      }
      if (hyp.is_no()) {
        if (auto d = build(phi.left(), env)) {
          Outcome r = u_.apply(e, {*d});
          if (r.is_stuck()) return Verdict::no("no value at a realizer of the hypothesis");
          if (r.converged()) {
            Verdict c = check(r.value, phi.right(), env);
            if (c.is_no()) return Verdict::no("value at " + show(*d) + " does not realize the conclusion");
          }
        }
      }
      return Verdict::unknown("no vacuity, uniformity or counterexample found");
    }

    case K::all_in: {
      auto alpha = resolve(phi.bound(), env);
      if (!alpha) return generic();
      Nat base = bar(*alpha);
      if (auto elems = u_.elements(base)) {
        bool unsettled = false;
        std::string note;
        for (const auto& i : *elems) {
          Outcome r = u_.apply(e, {i});
          if (r.is_stuck()) return Verdict::no("no value at " + show(i));
          Outcome y = u_.apply(tilde(*alpha), {i});
          if (!r.converged() || !y.converged()) {
            unsettled = true;
            note = "evaluation at " + show(i) + " did not finish";
            continue;
          }
          Bind bind(env, phi.variable(), y.value);
          Verdict c = check(r.value, phi.body(), env);
          if (c.is_no()) return Verdict::no("instance " + show(i) + ": " + c.evidence);
          if (!c.is_yes()) {
            unsettled = true;
            note = c.evidence;
          }
        }
        if (unsettled) return Verdict::unknown(note, opts_.fuel);
        return Verdict::yes("all " + std::to_string(elems->size()) + " instances realized");
      }
      if (ignores_argument(e, 0)) {
        Outcome r = u_.apply(e, {Nat(0)});
        if (r.converged()) {
          Bind bind(env, phi.variable(), std::nullopt);
          if (check(r.value, phi.body(), env).is_yes()) return Verdict::yes("constant realizer, valid for any instance");
        }
      }
      for (std::uint64_t k = 0; k < opts_.probe; ++k) {
        if (!u_.member(k, base).is_yes()) continue;
        Outcome r = u_.apply(e, {Nat(k)});
        if (r.is_stuck()) return Verdict::no("no value at " + std::to_string(k));
        Outcome y = u_.apply(tilde(*alpha), {Nat(k)});
        if (!r.converged() || !y.converged()) continue;
        Bind bind(env, phi.variable(), y.value);
        if (check(r.value, phi.body(), env).is_no()) {
          return Verdict::no("instance " + std::to_string(k) + " not realized");
        }
      }
      return Verdict::unknown("instances k < " + std::to_string(opts_.probe) + " realized, base is infinite",
                              opts_.probe);
    }

    case K::ex_in: {
      auto alpha = resolve(phi.bound(), env);
      if (!alpha) return generic();
      auto d = try_unpair(e);
      if (d.status != PairDecode::Status::ok) return Verdict::no("realizer is not a pair");
      Verdict mk = u_.member(d.first, bar(*alpha));
      if (mk.is_no()) return Verdict::no("(e)0 NE the branching type");
      Outcome y = u_.apply(tilde(*alpha), {d.first});
      if (y.is_stuck()) return Verdict::no("selector has no value at (e)0");
      if (!y.converged()) return Verdict::unknown("selector: " + y.to_string(), opts_.fuel);
      Bind bind(env, phi.variable(), y.value);
      return both(mk, check(d.second, phi.body(), env), "witness index and instance realizer check");
    }

    case K::all: {
      if (ignores_argument(e, 0)) {
        Outcome r = u_.apply(e, {Nat(0)});
        if (r.converged()) {
          Bind bind(env, phi.variable(), std::nullopt);
          if (check(r.value, phi.body(), env).is_yes()) return Verdict::yes("constant realizer, valid for any set");
        }
      }
      const auto& family = spot_family();
      for (const auto& alpha : family) {
        if (!u_.in_v(alpha).is_yes()) continue;
        Outcome r = u_.apply(e, {alpha});
        if (r.is_stuck()) return Verdict::no("no value at a set in V");
        if (!r.converged()) continue;
        Bind bind(env, phi.variable(), alpha);
        if (check(r.value, phi.body(), env).is_no()) return Verdict::no("instance not realized");
      }
      return Verdict::unknown("spot-checked " + std::to_string(family.size()) + " sets", family.size());
    }

    case K::ex: {
      auto d = try_unpair(e);
      if (d.status != PairDecode::Status::ok) return Verdict::no("realizer is not a pair");
      Verdict inv = u_.in_v(d.first);
      if (inv.is_no()) return Verdict::no("(e)0 is not in V: " + inv.evidence);
      Bind bind(env, phi.variable(), d.first);
      return both(inv, check(d.second, phi.body(), env), "witness in V and instance realized");
    }
  }
  return Verdict::unknown();
}

// ---------------------------------------------------------------------------

Verdict Realizer::refute(const Formula& phi, const Environment& env) {
  for (const auto& v : phi.free_variables()) {
    if (!env.count(v)) throw UnboundVariable(v);
  }
  Environment local = env;
  return refute_in(phi, local);
}

Verdict Realizer::refute_in(const Formula& phi, Environment& env) {
  using K = Formula::Kind;
  auto negate = [](const Verdict& v) {
    if (v.is_yes()) return Verdict::no(v.evidence);
    if (v.is_no()) return Verdict::yes(v.evidence);
    return v;
  };
  switch (phi.kind()) {
    case K::eq: {
      auto a = resolve(phi.lhs(), env);
      auto b = resolve(phi.rhs(), env);
      if (!a || !b) return generic();
      Inhabitant w = u_.inhabit(gl(*a, *b));
      return negate(w.verdict);
    }

    case K::in: {
      auto b = resolve(phi.rhs(), env);
      if (!b) return generic();
      auto elems = u_.elements(bar(*b));
      if (!elems) return Verdict::unknown("branching type cannot be listed");
      if (elems->empty()) return Verdict::yes("branching type is empty");
      auto a = resolve(phi.lhs(), env);
      if (!a) return generic();
      bool unsettled = false;
      for (const auto& i : *elems) {
        Outcome y = u_.apply(tilde(*b), {i});
        if (!y.converged()) {
          unsettled = true;
          continue;
        }
        Inhabitant w = u_.inhabit(gl(*a, y.value));
        if (w.verdict.is_yes()) return Verdict::no("equal to the element at " + show(i));
        if (!w.verdict.is_no()) unsettled = true;
      }
      if (unsettled) return Verdict::unknown("some element comparison undecided");
      return Verdict::yes("equal to no element");
    }

    case K::and_: {
      Verdict l = refute_in(phi.left(), env);
      if (l.is_yes()) return l;
      Verdict r = refute_in(phi.right(), env);
      if (r.is_yes()) return r;
      if (l.is_no() && r.is_no()) return Verdict::no("both conjuncts realizable");
      return Verdict::unknown(l.is_no() ? r.evidence : l.evidence);
    }

    case K::or_: {
      Verdict l = refute_in(phi.left(), env);
      if (l.is_no()) return l;
      Verdict r = refute_in(phi.right(), env);
      if (r.is_no()) return r;
      if (l.is_yes() && r.is_yes()) return Verdict::yes("neither disjunct realizable");
      return Verdict::unknown(l.is_yes() ? r.evidence : l.evidence);
    }

    case K::not_:
      return negate(refute_in(phi.body(), env));

    case K::implies: {
      Verdict h = refute_in(phi.left(), env);
      if (h.is_yes()) return Verdict::no("hypothesis has no realizer");
      Verdict c = refute_in(phi.right(), env);
      if (c.is_no()) return Verdict::no("conclusion has a realizer");
      if (h.is_no() && c.is_yes()) return Verdict::yes("hypothesis realizable, conclusion not");
      return Verdict::unknown("implication undecided");
    }

    case K::all_in:
    case K::ex_in: {
      bool universal = phi.kind() == K::all_in;
      auto alpha = resolve(phi.bound(), env);
      if (!alpha) return generic();
      auto elems = u_.elements(bar(*alpha));
      bool listed = elems.has_value();
      std::vector<Nat> points;
      if (listed) {
        points = *elems;
      } else if (view_type(bar(*alpha)).tag == TypeTag::nat) {
        for (std::uint64_t k = 0; k < opts_.probe; ++k) points.emplace_back(k);
      } else {
        return Verdict::unknown("branching type cannot be listed");
      }
      bool unsettled = false;
      for (const auto& i : points) {
        Outcome y = u_.apply(tilde(*alpha), {i});
        if (!y.converged()) {
          unsettled = true;
          continue;
        }
        Bind bind(env, phi.variable(), y.value);
        Verdict r = refute_in(phi.body(), env);
        if (universal && r.is_yes()) return Verdict::yes("instance " + show(i) + " has no realizer");
        if (!universal && r.is_no()) return Verdict::no("instance " + show(i) + " realizable");
        if (!r.definite()) unsettled = true;
      }
      if (!listed || unsettled) return Verdict::unknown("instances undecided", opts_.probe);
      if (universal) return Verdict::no("every instance realizable");
      return Verdict::yes("no instance realizable");
    }

    case K::all: {
      for (const auto& alpha : spot_family()) {
        if (!u_.in_v(alpha).is_yes()) continue;
        Bind bind(env, phi.variable(), alpha);
        if (refute_in(phi.body(), env).is_yes()) return Verdict::yes("an instance has no realizer");
      }
      return Verdict::unknown("universal over V");
    }

    case K::ex: {
      for (const auto& alpha : spot_family()) {
        if (!u_.in_v(alpha).is_yes()) continue;
        Bind bind(env, phi.variable(), alpha);
        if (refute_in(phi.body(), env).is_no()) return Verdict::no("an instance is realizable");
      }
      return Verdict::unknown("existential over V");
    }
  }
  return Verdict::unknown();
}

// ---------------------------------------------------------------------------

std::optional<Nat> Realizer::synthesize(const Formula& phi, const Environment& env) {
  for (const auto& v : phi.free_variables()) {
    if (!env.count(v)) throw UnboundVariable(v);
  }
  Environment local = env;
  return build(phi, local);
}

std::optional<Nat> Realizer::build(const Formula& phi, Environment& env) {
  using K = Formula::Kind;
  switch (phi.kind()) {
    case K::eq: {
      auto a = resolve(phi.lhs(), env);
      auto b = resolve(phi.rhs(), env);
      if (!a || !b) return std::nullopt;
      Inhabitant w = u_.inhabit(gl(*a, *b));
      if (!w.verdict.is_yes()) return std::nullopt;
      return w.witness;
    }

    case K::in: {
      auto a = resolve(phi.lhs(), env);
      auto b = resolve(phi.rhs(), env);
      if (!a || !b) return std::nullopt;
      auto elems = u_.elements(bar(*b));
      if (!elems) return std::nullopt;
      for (const auto& i : *elems) {
        Outcome y = u_.apply(tilde(*b), {i});
        if (!y.converged()) continue;
        Inhabitant w = u_.inhabit(gl(*a, y.value));
        if (w.verdict.is_yes()) return Nat::pair(i, w.witness);
      }
      return std::nullopt;
    }

    case K::and_: {
      auto l = build(phi.left(), env);
      if (!l) return std::nullopt;
      auto r = build(phi.right(), env);
      if (!r) return std::nullopt;
      return Nat::pair(*l, *r);
    }

    case K::or_: {
      if (auto l = build(phi.left(), env)) return Nat::pair(0, *l);
      if (auto r = build(phi.right(), env)) return Nat::pair(1, *r);
      return std::nullopt;
    }

    case K::not_:
      if (refute_in(phi.body(), env).is_yes()) return Nat(0);
      return std::nullopt;

    case K::implies: {
      if (refute_in(phi.left(), env).is_yes()) return Nat(0);
      if (auto r = build(phi.right(), env)) return const_code(1, *r);
      return std::nullopt;
    }

    case K::all_in: {
      auto alpha = resolve(phi.bound(), env);
      if (!alpha) return std::nullopt;
      if (auto elems = u_.elements(bar(*alpha))) {
        std::vector<Nat> values;
        for (const auto& i : *elems) {
          Outcome y = u_.apply(tilde(*alpha), {i});
          if (!y.converged()) return std::nullopt;
          Bind bind(env, phi.variable(), y.value);
          auto r = build(phi.body(), env);
          if (!r) return std::nullopt;
          values.push_back(*r);
        }
        return table_code(*elems, values);
      }
      Bind bind(env, phi.variable(), std::nullopt);
      if (auto r = build(phi.body(), env)) return const_code(1, *r);
      return std::nullopt;
    }

    case K::ex_in: {
      auto alpha = resolve(phi.bound(), env);
      if (!alpha) return std::nullopt;
      std::vector<Nat> points;
      if (auto elems = u_.elements(bar(*alpha))) {
        points = *elems;
      } else if (view_type(bar(*alpha)).tag == TypeTag::nat) {
        for (std::uint64_t k = 0; k < opts_.probe; ++k) points.emplace_back(k);
      }
      for (const auto& i : points) {
        Outcome y = u_.apply(tilde(*alpha), {i});
        if (!y.converged()) continue;
        Bind bind(env, phi.variable(), y.value);
        if (auto r = build(phi.body(), env)) return Nat::pair(i, *r);
      }
      return std::nullopt;
    }

    case K::all: {
      Bind bind(env, phi.variable(), std::nullopt);
      if (auto r = build(phi.body(), env)) return const_code(1, *r);
      return std::nullopt;
    }

    case K::ex: {
      for (const auto& alpha : spot_family()) {
        if (!u_.in_v(alpha).is_yes()) continue;
        Bind bind(env, phi.variable(), alpha);
        if (auto r = build(phi.body(), env)) return Nat::pair(alpha, *r);
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

SearchResult Realizer::search(const Formula& phi, const Environment& env) {
  SearchResult out;
  Verdict none = refute(phi, env);
  if (none.is_yes()) {
    out.verdict = Verdict::no("no realizer exists: " + none.evidence);
    return out;
  }
  for (std::size_t e = 0; e < opts_.candidate_bound; ++e) {
    ++out.numeric_checked;
    Verdict v = realizes(Nat(e), phi, env);
    if (v.is_yes()) {
      out.realizer = Nat(e);
      out.verdict = v;
      return out;
    }
  }
  if (auto r = synthesize(phi, env)) {
    Verdict v = realizes(*r, phi, env);
    if (v.is_yes()) {
      out.realizer = *r;
      out.synthesized = true;
      out.verdict = v;
      return out;
    }
    out.verdict = Verdict::unknown("synthesized candidate not confirmed: " + v.evidence, v.bound);
    return out;
  }
  out.verdict = Verdict::unknown("no candidate below " + std::to_string(opts_.candidate_bound) +
                                     " and no construction found",
                                 opts_.candidate_bound);
  return out;
}

}  // namespace erec
