#include "erec/realize/lpo.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>

#include "erec/kernel/analysis.hpp"
#include "erec/kernel/code.hpp"
#include "erec/kernel/library.hpp"
#include "erec/kernel/machine.hpp"
#include "erec/kernel/program.hpp"
#include "erec/universe/vset.hpp"

namespace erec {

bool Predicate::holds(std::uint64_t n) const {
  switch (kind) {
    case Kind::never: return false;
    case Kind::always: return true;
    case Kind::eq: return n == k;
    case Kind::lt: return n < k;
    case Kind::ge: return n >= k;
    case Kind::in_set: return members.count(n) > 0;
  }
  return false;
}

std::uint64_t Predicate::tail_start() const {
  switch (kind) {
    case Kind::never:
    case Kind::always: return 0;
    case Kind::eq: return k + 1;
    case Kind::lt:
    case Kind::ge: return k;
    case Kind::in_set: return members.empty() ? 0 : *members.rbegin() + 1;
  }
  return 0;
}

std::string Predicate::text() const {
  switch (kind) {
    case Kind::never: return "never";
    case Kind::always: return "always";
    case Kind::eq: return "n==" + std::to_string(k);
    case Kind::lt: return "n<" + std::to_string(k);
    case Kind::ge: return "n>=" + std::to_string(k);
    case Kind::in_set: {
      std::string s = "n in {";
      bool first = true;
      for (auto m : members) {
        if (!first) s += ",";
        s += std::to_string(m);
        first = false;
      }
      return s + "}";
    }
  }
  return "?";
}

namespace {

std::uint64_t number(std::string_view s) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
    throw PredicateParseError("predicate: expected a number, got '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Predicate parse_predicate(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  Predicate p;
  if (s == "never") return p;
  if (s == "always") {
    p.kind = Predicate::Kind::always;
    return p;
  }
  std::string_view v = s;
  if (v.starts_with("n==")) {
    p.kind = Predicate::Kind::eq;
    p.k = number(v.substr(3));
  } else if (v.starts_with("n>=")) {
    p.kind = Predicate::Kind::ge;
    p.k = number(v.substr(3));
  } else if (v.starts_with("n<")) {
    p.kind = Predicate::Kind::lt;
    p.k = number(v.substr(2));
  } else if (v.starts_with("nin{") && v.ends_with("}")) {
    p.kind = Predicate::Kind::in_set;
    std::string_view body = v.substr(4, v.size() - 5);
    while (!body.empty()) {
      auto comma = body.find(',');
      p.members.insert(number(body.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
  } else {
    throw PredicateParseError("predicate: cannot read '" + std::string(text) + "'");
  }
  return p;
}

// ---------------------------------------------------------------------------

namespace {

struct LpoCodes {
  Nat tag;      // (p, f, x) -> (f(p))0
  Nat search;   // E-functional over tag
  Nat sndf;     // (x, f) -> (f(x))1
  Nat bstar[2]; // (f, v) -> (tag(v), c(f, v)); index 1 is the literal variant
  Nat lpo[2];   // f -> bstar(f, E(f, 0))
};

const LpoCodes& lpo_codes() {
  static const LpoCodes codes = [] {
    using T = Term;
    const Library& lib = library();
    LpoCodes c;
    c.tag = compile(T::call(lib.fst, {T::apply(T::arg(1), {T::arg(0)})}), 3);
    c.search = efun_code(2, c.tag);
    c.sndf = compile(T::call(lib.snd, {T::apply(T::arg(1), {T::arg(0)})}), 2);
    T pred_k = T::call(lib.pred, {T::arg(1)});
    T content = T::if_eq(T::arg(1), T::lit(0), T::close(c.sndf, {T::arg(0)}),
                         T::call(lib.pair, {pred_k, T::call(lib.snd, {T::apply(T::arg(0), {pred_k})})}));
    for (int literal = 0; literal < 2; ++literal) {
      T tag = literal ? T::if_eq(T::arg(1), T::lit(0), T::lit(0), T::lit(1))
                      : T::if_eq(T::arg(1), T::lit(0), T::lit(1), T::lit(0));
      c.bstar[literal] = compile(T::call(lib.pair, {tag, content}), 2);
      c.lpo[literal] =
          compile(T::call(c.bstar[literal], {T::arg(0), T::call(c.search, {T::arg(0), T::lit(0)})}), 1);
    }
    register_name("LPO", c.lpo[0]);
    return c;
  }();
  return codes;
}

}  // namespace

const Nat& lpo_tag_code() { return lpo_codes().tag; }

const Nat& lpo_code(bool literal_sg) { return lpo_codes().lpo[literal_sg ? 1 : 0]; }

Outcome lpo_transform(const Nat& f, bool literal_sg, std::uint64_t fuel) {
  return apply(lpo_code(literal_sg), {f}, fuel);
}

Formula lpo_target(const std::string& var, const Formula& p, const Formula& r) {
  SetTerm w = SetTerm::literal(omega(), "omega");
  return Formula::disj(Formula::ex_in(var, w, p), Formula::all_in(var, w, r));
}

namespace {

bool mentions(const Formula& f, const std::string& v) {
  auto fv = f.free_variables();
  return std::find(fv.begin(), fv.end(), v) != fv.end();
}

bool is_omega(const SetTerm& t) { return !t.is_var() && t.value == omega(); }

// Realizers as terms in the index n of the instance vnat(n) of `var`.
class Uniform {
 public:
  Uniform(std::string var, Realizer& realizer, std::uint64_t sample)
      : var_(std::move(var)), realizer_(realizer), sample_(sample) {}

  std::optional<Term> realizer(const Formula& phi) { return build(phi, var_); }

 private:
  // The set denoted by `t` when `idx` names vnat(arg 0).
  std::optional<Term> set_term(const SetTerm& t, const std::string& idx) {
    if (!t.is_var()) return Term::lit(t.value);
    if (t.var == idx) return Term::call(vnat_code(), {Term::arg(0)});
    return std::nullopt;
  }

  static Term refl(Term a) { return Term::call(refl_code(), {std::move(a)}); }
  static Term pair(Term a, Term b) { return Term::call(library().pair, {std::move(a), std::move(b)}); }

  std::optional<Term> build(const Formula& phi, const std::string& idx) {
    using K = Formula::Kind;
    if (!mentions(phi, idx)) {
      if (!phi.free_variables().empty()) return std::nullopt;
      SearchResult s = realizer_.search(phi);
      if (!s.realizer) return std::nullopt;
      return Term::lit(*s.realizer);
    }
    switch (phi.kind()) {
      case K::eq: {
        if (phi.lhs().is_var() != phi.rhs().is_var()) return std::nullopt;
        if (phi.lhs().is_var() ? phi.lhs().var != phi.rhs().var : phi.lhs().value != phi.rhs().value)
          return std::nullopt;
        auto a = set_term(phi.lhs(), idx);
        if (!a) return std::nullopt;
        return refl(*a);
      }
      case K::in: {
        if (!is_omega(phi.rhs()) || !phi.lhs().is_var() || phi.lhs().var != idx) return std::nullopt;
        return pair(Term::arg(0), refl(*set_term(phi.lhs(), idx)));
      }
      case K::and_: {
        auto l = build(phi.left(), idx);
        auto r = l ? build(phi.right(), idx) : std::nullopt;
        if (!r) return std::nullopt;
        return pair(*l, *r);
      }
      case K::or_: {
        Environment at{{idx, vnat(sample_)}};
        if (realizer_.synthesize(phi.left(), at)) {
          if (auto l = build(phi.left(), idx)) return pair(Term::lit(0), *l);
        }
        if (auto r = build(phi.right(), idx)) return pair(Term::lit(1), *r);
        return std::nullopt;
      }
      case K::not_:
        return Term::lit(0);
      case K::ex_in: {
        // (ex-in y omega (= y idx)): witness index n
        const Formula& b = phi.body();
        const std::string& y = phi.variable();
        if (!is_omega(phi.bound()) || b.kind() != K::eq) return std::nullopt;
        bool shape = b.lhs().is_var() && b.rhs().is_var() &&
                     ((b.lhs().var == y && b.rhs().var == idx) || (b.lhs().var == idx && b.rhs().var == y));
        if (!shape) return std::nullopt;
        return pair(Term::arg(0), refl(Term::call(vnat_code(), {Term::arg(0)})));
      }
      case K::all_in: {
        // Elements of vnat(n) and of omega are vnat(i) at index i.
        const SetTerm& t = phi.bound();
        bool over_idx = t.is_var() && t.var == idx;
        if (!(over_idx || is_omega(t)) || mentions(phi.body(), idx)) return std::nullopt;
        auto h = build(phi.body(), phi.variable());
        if (!h) return std::nullopt;
        return Term::lit(compile(*h, 1));
      }
      default:
        return std::nullopt;
    }
  }

  std::string var_;
  Realizer& realizer_;
  std::uint64_t sample_;
};

}  // namespace

DisjunctionFamily build_disjunction_family(const Predicate& pred, const std::string& var, const Formula& p,
                                           const Formula& r, Realizer& realizer, CertificateStore& certs,
                                           std::uint64_t tail_checks) {
  DisjunctionFamily fam;
  fam.tail_from = pred.tail_start();
  auto instance = [&](std::uint64_t n) -> std::pair<std::uint64_t, Nat> {
    std::uint64_t tag = pred.holds(n) ? 0 : 1;
    const Formula& phi = tag == 0 ? p : r;
    SearchResult s = realizer.search(phi, {{var, vnat(n)}});
    if (!s.realizer) {
      throw NoInstanceRealizer("no realizer for " + to_string(phi) + " at n = " + std::to_string(n) + ": " +
                               s.verdict.evidence);
    }
    return {tag, *s.realizer};
  };

  std::vector<Nat> keys, values;
  for (std::uint64_t n = 0; n < fam.tail_from; ++n) {
    auto [tag, rn] = instance(n);
    fam.tags.push_back(tag);
    keys.emplace_back(n);
    values.push_back(Nat::pair(tag, rn));
  }
  auto [tail_tag, tail_r] = instance(fam.tail_from);
  fam.tail_tag = tail_tag;
  const Formula& tail_phi = tail_tag == 0 ? p : r;
  std::string failure;
  for (std::uint64_t n = fam.tail_from + 1; failure.empty() && n <= fam.tail_from + tail_checks; ++n) {
    Verdict v = realizer.realizes(tail_r, tail_phi, {{var, vnat(n)}});
    if (!v.is_yes()) failure = "n = " + std::to_string(n) + ": " + v.evidence;
  }
  if (failure.empty()) {
    fam.code = table_code(keys, values, Nat::pair(tail_tag, tail_r));
  } else {
    // The realizer depends on n: build it uniformly and check the same points.
    auto g = Uniform(var, realizer, fam.tail_from).realizer(tail_phi);
    if (!g) throw NoInstanceRealizer("tail realizer does not carry over to " + failure);
    Nat gc = compile(*g, 1);
    for (std::uint64_t n = fam.tail_from; n <= fam.tail_from + tail_checks; ++n) {
      Outcome rn = apply(gc, {Nat(n)}, realizer.options().fuel);
      Verdict v = rn.converged() ? realizer.realizes(rn.value, tail_phi, {{var, vnat(n)}})
                                 : Verdict::no(rn.to_string());
      if (!v.is_yes()) {
        throw NoInstanceRealizer("uniform tail realizer fails at n = " + std::to_string(n) + ": " + v.evidence);
      }
    }
    Term body = Term::call(library().pair, {Term::lit(tail_tag), Term::call(gc, {Term::arg(0)})});
    for (std::size_t i = keys.size(); i-- > 0;)
      body = Term::if_eq(Term::arg(0), Term::lit(keys[i]), Term::lit(values[i]), body);
    fam.code = compile(body, 1);
    fam.uniform_tail = true;
  }

  bool all_r = tail_tag == 1 && std::all_of(fam.tags.begin(), fam.tags.end(), [](auto t) { return t == 1; });
  if (all_r) {
    TotalityCertificate cert;
    cert.code = lpo_tag_code();
    cert.arg_position = 0;
    cert.context = {fam.code, Nat(0)};
    for (auto t : fam.tags) cert.prefix.emplace_back(t);
    cert.tail_from = fam.tail_from;
    cert.tail_value = 1;
    Machine vm(MachineOptions{}, &certs);
    certs.add(cert, vm, realizer.options().fuel);
    fam.certified = true;
  }
  return fam;
}

}  // namespace erec
