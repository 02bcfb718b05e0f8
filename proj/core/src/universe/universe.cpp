#include "erec/universe/universe.hpp"

#include "erec/kernel/analysis.hpp"

namespace erec {

namespace {

struct DepthGuard {
  std::size_t& depth;
  explicit DepthGuard(std::size_t& d) : depth(d) { ++depth; }
  ~DepthGuard() { --depth; }
  DepthGuard(const DepthGuard&) = delete;
  DepthGuard& operator=(const DepthGuard&) = delete;
};

Verdict from_tri(Tri t, const char* yes, const char* no) {
  if (t == Tri::yes) return Verdict::yes(yes);
  if (t == Tri::no) return Verdict::no(no);
  return Verdict::unknown("comparison undecided at this representation size");
}

std::string show(const Nat& n) {
  std::string s = n.to_string();
  if (s.size() > 40) return "#" + std::to_string(n.hash() % 1000000);
  return s;
}

}  // namespace

Universe::Universe(UniverseBounds bounds, CertificateStore* certs)
    : bounds_(bounds), vm_(MachineOptions{}, certs) {}

Outcome Universe::apply(const Nat& code, std::initializer_list<Nat> args) {
  return vm_.apply(code, args, bounds_.fuel);
}

Outcome Universe::apply(const Nat& code, std::span<const Nat> args) {
  return vm_.apply(code, args, bounds_.fuel);
}

Verdict Universe::member(const Nat& x, const Nat& t) {
  auto key = std::make_pair(x, t);
  if (auto it = member_memo_.find(key); it != member_memo_.end()) return it->second;
  if (depth_ >= bounds_.depth) return Verdict::unknown("type nesting deeper than the depth bound", bounds_.depth);
  DepthGuard guard(depth_);
  Verdict v = member_impl(x, t);
  if (v.definite()) member_memo_.emplace(key, v);
  return v;
}

Verdict Universe::in_universe(const Nat& t) {
  if (auto it = universe_memo_.find(t); it != universe_memo_.end()) return it->second;
  if (depth_ >= bounds_.depth) return Verdict::unknown("type nesting deeper than the depth bound", bounds_.depth);
  DepthGuard guard(depth_);
  Verdict v = in_universe_impl(t);
  if (v.definite()) universe_memo_.emplace(t, v);
  return v;
}

Verdict Universe::in_v(const Nat& alpha) {
  if (auto it = v_memo_.find(alpha); it != v_memo_.end()) return it->second;
  if (depth_ >= bounds_.depth) return Verdict::unknown("tree deeper than the depth bound", bounds_.depth);
  DepthGuard guard(depth_);
  Verdict v = in_v_impl(alpha);
  if (v.definite()) v_memo_.emplace(alpha, v);
  return v;
}

Inhabitant Universe::inhabit(const Nat& t) {
  if (auto it = inhabit_memo_.find(t); it != inhabit_memo_.end()) return it->second;
  if (depth_ >= bounds_.depth) {
    return {Verdict::unknown("type nesting deeper than the depth bound", bounds_.depth), Nat()};
  }
  DepthGuard guard(depth_);
  Inhabitant r = inhabit_impl(t);
  if (r.verdict.definite()) inhabit_memo_.emplace(t, r);
  return r;
}

// ---------------------------------------------------------------------------

Verdict Universe::member_impl(const Nat& x, const Nat& t) {
  TypeView v = view_type(t);
  switch (v.tag) {
    case TypeTag::fin:
      return from_tri(x.less(v.first), "k < n", "k >= n");
    case TypeTag::nat:
      return Verdict::yes("every n is an element of nat");
    case TypeTag::undetermined:
      return Verdict::unknown("type code too large to classify");
    case TypeTag::sup:
    case TypeTag::foreign:
      return Verdict::unknown("no membership clause applies to " + std::string(type_tag_name(v.tag)) +
                              " codes");
    default:
      break;
  }

  Verdict u = in_universe(t);
  if (u.is_no()) return Verdict::unknown("type is not in U: " + u.evidence);

  Verdict r;
  if (v.tag == TypeTag::pl) {
    auto d = try_unpair(x);
    if (d.status == PairDecode::Status::undetermined) return Verdict::unknown("cannot unpair");
    if (d.status == PairDecode::Status::not_a_pair) {
      r = Verdict::no("neither of the form (0,k) nor (1,k)");
    } else if (d.first == Nat(0)) {
      r = member(d.second, v.first);
    } else if (d.first == Nat(1)) {
      r = member(d.second, v.second);
    } else {
      r = Verdict::no("neither of the form (0,k) nor (1,k)");
    }
  } else if (v.tag == TypeTag::sigma) {
    auto d = try_unpair(x);
    if (d.status == PairDecode::Status::undetermined) return Verdict::unknown("cannot unpair");
    if (d.status == PairDecode::Status::not_a_pair) {
      r = Verdict::no("not a pair");
    } else {
      Verdict mk = member(d.first, v.first);
      if (mk.is_no()) {
        r = Verdict::no("first component NE base (" + mk.evidence + ")");
      } else {
        Outcome ek = apply(v.second, {d.first});
        if (!ek.converged()) {
          r = Verdict::unknown("family at " + show(d.first) + ": " + ek.to_string(), bounds_.fuel);
        } else {
          Verdict mu = member(d.second, ek.value);
          if (mu.is_no()) {
            r = Verdict::no("second component NE fiber (" + mu.evidence + ")");
          } else if (mu.is_yes() && mk.is_yes()) {
            r = Verdict::yes("pair with both components in place");
          } else {
            r = Verdict::unknown(mk.is_yes() ? mu.evidence : mk.evidence,
                                 std::max(mk.bound, mu.bound));
          }
        }
      }
    }
  } else {
    r = pi_member(x, v.first, v.second);
  }

  if (r.definite() && !u.is_yes()) {
    return Verdict::unknown("clause gives " + std::string(verdict_name(r.kind)) +
                                " but the type is not yet shown to be in U: " + u.evidence,
                            u.bound);
  }
  return r;
}

Verdict Universe::pi_member(const Nat& d, const Nat& base, const Nat& family) {
  if (auto elems = elements(base)) {
    bool unsettled = false;
    std::string note;
    for (const auto& k : *elems) {
      Outcome dk = apply(d, {k});
      if (dk.is_stuck()) return Verdict::no("{d}(" + show(k) + ") has no value, " + dk.to_string());
      if (!dk.converged()) {
        unsettled = true;
        note = "{d}(" + show(k) + "): " + dk.to_string();
        continue;
      }
      Outcome ek = apply(family, {k});
      if (!ek.converged()) {
        unsettled = true;
        note = "family at " + show(k) + ": " + ek.to_string();
        continue;
      }
      Verdict m = member(dk.value, ek.value);
      if (m.is_no()) return Verdict::no("value at " + show(k) + " NE fiber (" + m.evidence + ")");
      if (!m.is_yes()) {
        unsettled = true;
        note = m.evidence;
      }
    }
    if (unsettled) return Verdict::unknown(note, bounds_.fuel);
    return Verdict::yes("checked all " + std::to_string(elems->size()) + " base elements");
  }

  if (ignores_argument(d, 0) && ignores_argument(family, 0)) {
    Outcome dk = apply(d, {Nat(0)});
    Outcome ek = apply(family, {Nat(0)});
    Inhabitant nonempty = inhabit(base);
    if (nonempty.verdict.is_no()) return Verdict::yes("empty base");
    if (dk.converged() && ek.converged()) {
      Verdict m = member(dk.value, ek.value);
      if (m.is_yes()) return Verdict::yes("constant function into a constant fiber");
      if (m.is_no() && nonempty.verdict.is_yes()) return Verdict::no("constant value NE fiber");
    }
    if (dk.is_stuck() && nonempty.verdict.is_yes()) return Verdict::no("{d} has no value anywhere");
  }

  if (view_type(base).tag != TypeTag::nat) {
    return Verdict::unknown("base cannot be listed and the function is not uniform");
  }

  if (auto cert = vm_.certificates().find(d, {}); cert && ignores_argument(family, 0)) {
    Outcome ek = apply(family, {Nat(0)});
    if (ek.converged()) {
      bool all = true;
      for (std::size_t k = 0; k < cert->prefix.size() && all; ++k) {
        Verdict m = member(cert->prefix[k], ek.value);
        if (m.is_no()) return Verdict::no("certified value at " + std::to_string(k) + " NE fiber");
        all = m.is_yes();
      }
      if (all) {
        Verdict m = member(cert->tail_value, ek.value);
        if (m.is_yes()) return Verdict::yes("certificate covers every k");
        if (m.is_no()) return Verdict::no("certified tail value NE fiber");
      }
    }
  }

  for (std::uint64_t k = 0; k < bounds_.probe; ++k) {
    Outcome dk = apply(d, {Nat(k)});
    if (dk.is_stuck()) return Verdict::no("{d}(" + std::to_string(k) + ") has no value");
    if (!dk.converged()) continue;
    Outcome ek = apply(family, {Nat(k)});
    if (!ek.converged()) continue;
    if (member(dk.value, ek.value).is_no()) {
      return Verdict::no("value at " + std::to_string(k) + " NE fiber");
    }
  }
  return Verdict::unknown("no counterexample among k < " + std::to_string(bounds_.probe), bounds_.probe);
}

Verdict Universe::for_all_in_family(const Nat& base, const Nat& family,
                                    const std::function<Verdict(const Nat&)>& pred, const char* what) {
  if (ignores_argument(family, 0)) {
    Outcome r = apply(family, {Nat(0)});
    if (r.converged()) {
      Verdict v = pred(r.value);
      if (v.is_yes()) return Verdict::yes(std::string("constant family ") + what);
      if (!v.is_no()) return v;
    } else if (r.is_unknown()) {
      return Verdict::unknown("family: " + r.to_string(), bounds_.fuel);
    }
    Inhabitant nonempty = inhabit(base);
    if (nonempty.verdict.is_no()) return Verdict::yes("empty base");
    if (nonempty.verdict.is_yes()) return Verdict::no(std::string("constant family not ") + what);
    return Verdict::unknown("cannot tell whether the base is empty");
  }

  auto check = [&](const Nat& k, bool& unsettled, std::string& note) -> std::optional<Verdict> {
    Outcome r = apply(family, {k});
    if (r.is_stuck()) return Verdict::no("family has no value at " + show(k));
    if (!r.converged()) {
      unsettled = true;
      note = "family at " + show(k) + ": " + r.to_string();
      return std::nullopt;
    }
    Verdict v = pred(r.value);
    if (v.is_no()) return Verdict::no("family value at " + show(k) + " not " + what + " (" + v.evidence + ")");
    if (!v.is_yes()) {
      unsettled = true;
      note = v.evidence;
    }
    return std::nullopt;
  };

  bool unsettled = false;
  std::string note;
  if (auto elems = elements(base)) {
    for (const auto& k : *elems) {
      if (auto bad = check(k, unsettled, note)) return *bad;
    }
    if (unsettled) return Verdict::unknown(note, bounds_.fuel);
    return Verdict::yes("checked all " + std::to_string(elems->size()) + " base elements");
  }
  if (view_type(base).tag == TypeTag::nat) {
    for (std::uint64_t k = 0; k < bounds_.probe; ++k) {
      if (auto bad = check(Nat(k), unsettled, note)) return *bad;
    }
    return Verdict::unknown("holds for k < " + std::to_string(bounds_.probe) + " over an infinite base",
                            bounds_.probe);
  }
  return Verdict::unknown("base cannot be listed and the family is not uniform");
}

Verdict Universe::in_universe_impl(const Nat& t) {
  TypeView v = view_type(t);
  switch (v.tag) {
    case TypeTag::fin:
    case TypeTag::nat:
      return Verdict::yes(std::string(type_tag_name(v.tag)) + " is in U");
    case TypeTag::pl: {
      Verdict a = in_universe(v.first);
      if (a.is_no()) return Verdict::no("left summand: " + a.evidence);
      Verdict b = in_universe(v.second);
      if (b.is_no()) return Verdict::no("right summand: " + b.evidence);
      if (a.is_yes() && b.is_yes()) return Verdict::yes("both summands in U");
      return Verdict::unknown(a.is_yes() ? b.evidence : a.evidence, std::max(a.bound, b.bound));
    }
    case TypeTag::sigma:
    case TypeTag::pi: {
      Verdict b = in_universe(v.first);
      if (!b.is_yes()) {
        if (b.is_no()) return Verdict::no("base: " + b.evidence);
        return b;
      }
      return for_all_in_family(v.first, v.second, [this](const Nat& y) { return in_universe(y); }, "in U");
    }
    case TypeTag::sup:
      return Verdict::no("sup codes denote trees in V, not types in U");
    case TypeTag::foreign:
      return Verdict::no("not a type code");
    case TypeTag::undetermined:
      return Verdict::unknown("type code too large to classify");
  }
  return Verdict::unknown();
}

Verdict Universe::in_v_impl(const Nat& alpha) {
  TypeView v = view_type(alpha);
  if (v.tag == TypeTag::undetermined) return Verdict::unknown("code too large to classify");
  if (v.tag != TypeTag::sup) return Verdict::no("not of the form sup(n,e)");
  Verdict b = in_universe(v.first);
  if (!b.is_yes()) {
    if (b.is_no()) return Verdict::no("branching type: " + b.evidence);
    return b;
  }
  return for_all_in_family(v.first, v.second, [this](const Nat& y) { return in_v(y); }, "in V");
}

std::optional<std::vector<Nat>> Universe::elements(const Nat& t) {
  TypeView v = view_type(t);
  std::vector<Nat> out;
  switch (v.tag) {
    case TypeTag::fin: {
      auto n = v.first.as_u64();
      if (!n || *n > bounds_.enumerate_limit) return std::nullopt;
      for (std::uint64_t k = 0; k < *n; ++k) out.emplace_back(k);
      return out;
    }
    case TypeTag::pl: {
      auto l = elements(v.first);
      if (!l) return std::nullopt;
      auto r = elements(v.second);
      if (!r || l->size() + r->size() > bounds_.enumerate_limit) return std::nullopt;
      for (const auto& k : *l) out.push_back(Nat::pair(0, k));
      for (const auto& k : *r) out.push_back(Nat::pair(1, k));
      return out;
    }
    case TypeTag::sigma: {
      auto base = elements(v.first);
      if (!base) return std::nullopt;
      for (const auto& k : *base) {
        Outcome y = apply(v.second, {k});
        if (!y.converged()) return std::nullopt;
        auto fiber = elements(y.value);
        if (!fiber || out.size() + fiber->size() > bounds_.enumerate_limit) return std::nullopt;
        for (const auto& u : *fiber) out.push_back(Nat::pair(k, u));
      }
      return out;
    }
    default:
      return std::nullopt;
  }
}

Inhabitant Universe::inhabit_impl(const Nat& t) {
  TypeView v = view_type(t);
  switch (v.tag) {
    case TypeTag::fin:
      if (v.first.is_zero()) return {Verdict::no("fin 0 is empty"), Nat()};
      return {Verdict::yes("0 E fin n"), Nat(0)};
    case TypeTag::nat:
      return {Verdict::yes("0 E nat"), Nat(0)};
    case TypeTag::pl: {
      Inhabitant a = inhabit(v.first);
      if (a.verdict.is_yes()) return {Verdict::yes("left"), Nat::pair(0, a.witness)};
      Inhabitant b = inhabit(v.second);
      if (b.verdict.is_yes()) return {Verdict::yes("right"), Nat::pair(1, b.witness)};
      if (a.verdict.is_no() && b.verdict.is_no()) return {Verdict::no("both summands empty"), Nat()};
      return {Verdict::unknown("summand undecided"), Nat()};
    }
    case TypeTag::sigma: {
      if (auto base = elements(v.first)) {
        bool unsettled = false;
        for (const auto& k : *base) {
          Outcome y = apply(v.second, {k});
          if (!y.converged()) {
            unsettled = true;
            continue;
          }
          Inhabitant f = inhabit(y.value);
          if (f.verdict.is_yes()) return {Verdict::yes("pair"), Nat::pair(k, f.witness)};
          if (!f.verdict.is_no()) unsettled = true;
        }
        if (unsettled) return {Verdict::unknown("some fiber undecided", bounds_.fuel), Nat()};
        return {Verdict::no("every fiber over the base is empty"), Nat()};
      }
      Inhabitant b = inhabit(v.first);
      if (b.verdict.is_no()) return {Verdict::no("empty base"), Nat()};
      if (!b.verdict.is_yes()) return {b.verdict, Nat()};
      if (ignores_argument(v.second, 0)) {
        Outcome y = apply(v.second, {b.witness});
        if (!y.converged()) return {Verdict::unknown("fiber: " + y.to_string()), Nat()};
        Inhabitant f = inhabit(y.value);
        if (f.verdict.is_yes()) return {Verdict::yes("pair"), Nat::pair(b.witness, f.witness)};
        if (f.verdict.is_no()) return {Verdict::no("constant fiber is empty"), Nat()};
        return {f.verdict, Nat()};
      }
      Outcome y = apply(v.second, {b.witness});
      if (y.converged()) {
        Inhabitant f = inhabit(y.value);
        if (f.verdict.is_yes()) return {Verdict::yes("pair"), Nat::pair(b.witness, f.witness)};
      }
      return {Verdict::unknown("base cannot be listed"), Nat()};
    }
    case TypeTag::pi: {
      if (auto base = elements(v.first)) {
        std::vector<Nat> values;
        values.reserve(base->size());
        for (const auto& k : *base) {
          Outcome y = apply(v.second, {k});
          if (!y.converged()) return {Verdict::unknown("fiber at " + show(k) + ": " + y.to_string()), Nat()};
          Inhabitant f = inhabit(y.value);
          if (f.verdict.is_no()) return {Verdict::no("fiber at " + show(k) + " is empty"), Nat()};
          if (!f.verdict.is_yes()) return {f.verdict, Nat()};
          values.push_back(f.witness);
        }
        if (base->empty()) return {Verdict::yes("empty base"), Nat(0)};
        return {Verdict::yes("table"), table_code(*base, values)};
      }
      if (ignores_argument(v.second, 0)) {
        Outcome y = apply(v.second, {Nat(0)});
        if (y.converged()) {
          Inhabitant f = inhabit(y.value);
          if (f.verdict.is_yes()) return {Verdict::yes("constant function"), const_code(1, f.witness)};
          if (f.verdict.is_no()) {
            Inhabitant b = inhabit(v.first);
            if (b.verdict.is_no()) return {Verdict::yes("empty base"), Nat(0)};
            if (b.verdict.is_yes()) return {Verdict::no("constant fiber is empty"), Nat()};
          }
        }
      }
      return {Verdict::unknown("base cannot be listed"), Nat()};
    }
    default:
      return {Verdict::unknown("not a type in U"), Nat()};
  }
}

// ---------------------------------------------------------------------------

Verdict member(const Nat& x, const Nat& t, std::uint64_t bound) {
  thread_local Universe u;
  u.bounds().probe = bound;
  return u.member(x, t);
}

Verdict in_universe(const Nat& t, std::uint64_t bound) {
  thread_local Universe u;
  u.bounds().probe = bound;
  return u.in_universe(t);
}

}  // namespace erec
