#include "erec/lfp/universe_oracle.hpp"

#include <functional>
#include <unordered_map>

#include "erec/kernel/analysis.hpp"
#include "erec/kernel/code.hpp"
#include "erec/kernel/library.hpp"
#include "erec/kernel/machine.hpp"
#include "erec/syntax.hpp"
#include "erec/universe/typecode.hpp"
#include "erec/universe/vset.hpp"

namespace erec {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

struct TShape {
  enum Tag { none, fin, nat, pl, sigma, pi, sup } tag = none;
  Nat n;           // fin size
  Nat left, right;  // pl components, or base and family
};

std::optional<std::pair<Nat, Nat>> split_pair(const Nat& x) {
  auto p = try_unpair(x);
  if (p.status != PairDecode::Status::ok) return std::nullopt;
  return std::make_pair(p.first, p.second);
}

TShape tshape(const Nat& t) {
  TShape s;
  auto outer = split_pair(t);
  if (!outer) return s;
  auto tag = outer->first.as_u64();
  if (!tag) return s;
  if (*tag == 0) {
    s.tag = TShape::fin;
    s.n = outer->second;
    return s;
  }
  if (*tag == 1) {
    if (outer->second.is_zero()) s.tag = TShape::nat;
    return s;
  }
  if (*tag > 5) return s;
  auto inner = split_pair(outer->second);
  if (!inner) return s;
  s.tag = static_cast<TShape::Tag>(*tag + 1);
  s.left = inner->first;
  s.right = inner->second;
  return s;
}

bool pair_undetermined(const Nat& x) { return try_unpair(x).status == PairDecode::Status::undetermined; }

// Result of {code}(k) for the fixed computation relation.
struct Call {
  enum { converged, stuck, unknown } kind = unknown;
  Nat value;
};

}  // namespace

UniverseCarrierSpec default_universe_carrier() {
  const Library& lib = library();
  auto cf = [](const Nat& v) { return const_code(1, v); };
  Nat f0 = fin_type(0), f1 = fin_type(1), f2 = fin_type(2), f3 = fin_type(3);
  UniverseCarrierSpec s;
  s.types = {
      f0,
      f1,
      f2,
      f3,
      fin_type(5),
      nat_type(),
      pl_type(f1, f2),
      pl_type(f2, pl_type(f1, f1)),
      pl_type(nat_type(), f1),
      sigma_type(f2, table_code({0, 1}, {f1, f3})),
      sigma_type(f3, cf(f2)),
      sigma_type(f2, cf(0)),
      sigma_type(nat_type(), cf(f1)),
      pi_type(f2, cf(f2)),
      pi_type(f3, table_code({0, 1, 2}, {f1, f2, nat_type()})),
      pi_type(f0, cf(f0)),
      pi_type(f2, lib.id),
      pi_type(nat_type(), cf(f2)),
      sup_type(f0, lib.id),
      sup_type(f2, cf(sup_type(f0, lib.id))),
      sup_type(f1, cf(0)),
      hf_to_v(parse_hf("{{},{{}}}")),
      vnat(2),
      vnat(3),
      Nat(0),
      Nat::pair(6, 0),
      Nat::pair(1, 4),
  };
  s.extra_elements = {cf(0), cf(1), cf(2), cf(3), cf(7), proj_code(1, 0), succ_code(1, 0),
                      table_code({0, 1}, {1, 0}), table_code({0, 1, 2}, {0, 1, 5})};
  return s;
}

struct UniverseOracle::State {
  UniverseCarrierSpec spec;
  std::vector<Nat> types;
  std::unordered_map<Nat, std::size_t> type_index;
  std::vector<TShape> shapes;
  std::vector<std::size_t> left, right;  // component type indices
  std::vector<Nat> elems;
  std::unordered_map<Nat, std::size_t> elem_index;
  // family[i][k]: {family of type i}(elems[k]); only for sigma, pi, sup.
  std::vector<std::vector<Call>> family;
  // apply[d][k]: {elems[d]}(elems[k]).
  std::vector<std::vector<Call>> apply;
  std::vector<int> exact_memo;

  std::size_t nt() const { return types.size(); }
  std::size_t nx() const { return elems.size(); }
  std::size_t u_atom(std::size_t i) const { return i; }
  std::size_t v_atom(std::size_t i) const { return nt() + i; }
  std::size_t e_atom(std::size_t j, std::size_t i) const { return 2 * nt() + i * nx() + j; }
  std::size_t ne_atom(std::size_t j, std::size_t i) const { return 2 * nt() + nt() * nx() + i * nx() + j; }
  std::size_t bound() const { return 2 * nt() + 2 * nt() * nx(); }

  std::size_t find_type(const Nat& t) const {
    auto it = type_index.find(t);
    return it == type_index.end() ? npos : it->second;
  }
  std::size_t find_elem(const Nat& x) const {
    auto it = elem_index.find(x);
    return it == elem_index.end() ? npos : it->second;
  }

  Call call(Machine& vm, const Nat& code, const Nat& k) const {
    Outcome o = vm.apply(code, {k}, spec.fuel);
    Call c;
    if (o.converged()) {
      c.kind = Call::converged;
      c.value = o.value;
    } else if (o.is_stuck()) {
      c.kind = Call::stuck;
    }
    return c;
  }

  void build() {
    for (std::uint64_t n = 0; n < spec.numerals; ++n) {
      elem_index.emplace(Nat(n), elems.size());
      elems.emplace_back(n);
    }
    for (const auto& x : spec.extra_elements) {
      if (find_elem(x) != npos) continue;
      elem_index.emplace(x, elems.size());
      elems.push_back(x);
    }
    Machine vm;
    std::vector<Nat> work(spec.types.rbegin(), spec.types.rend());
    while (!work.empty()) {
      Nat t = work.back();
      work.pop_back();
      if (find_type(t) != npos || types.size() >= spec.max_types) continue;
      type_index.emplace(t, types.size());
      types.push_back(t);
      TShape s = tshape(t);
      shapes.push_back(s);
      family.emplace_back();
      if (s.tag == TShape::pl) {
        work.push_back(s.right);
        work.push_back(s.left);
      } else if (s.tag == TShape::sigma || s.tag == TShape::pi || s.tag == TShape::sup) {
        work.push_back(s.left);
        auto& row = family.back();
        for (const auto& k : elems) {
          row.push_back(call(vm, s.right, k));
          if (row.back().kind == Call::converged && tshape(row.back().value).tag != TShape::none)
            work.push_back(row.back().value);
        }
      }
    }
    for (std::size_t i = 0; i < nt(); ++i) {
      const TShape& s = shapes[i];
      bool two = s.tag == TShape::pl || s.tag == TShape::sigma || s.tag == TShape::pi || s.tag == TShape::sup;
      left.push_back(two ? find_type(s.left) : npos);
      right.push_back(s.tag == TShape::pl ? find_type(s.right) : npos);
    }
    for (const auto& d : elems) {
      apply.emplace_back();
      for (const auto& k : elems) apply.back().push_back(call(vm, d, k));
    }
    exact_memo.assign(nt(), -1);
  }

  bool has(const AtomSet& x, std::size_t a) const { return a != npos && x.test(a); }

  // Type index of a converged family value, npos otherwise.
  std::size_t family_type(std::size_t i, std::size_t k) const {
    const Call& c = family[i][k];
    return c.kind == Call::converged ? find_type(c.value) : npos;
  }

  AtomSet step(const AtomSet& x) const {
    AtomSet y(bound());
    auto U = [&](std::size_t i) { return i != npos && x.test(u_atom(i)); };
    auto V = [&](std::size_t i) { return i != npos && x.test(v_atom(i)); };
    auto E = [&](std::size_t j, std::size_t i) { return i != npos && j != npos && x.test(e_atom(j, i)); };
    auto NE = [&](std::size_t j, std::size_t i) { return i != npos && j != npos && x.test(ne_atom(j, i)); };
    // For every k: k NE base, or the family value at k satisfies `ok`.
    auto every = [&](std::size_t i, const std::function<bool(std::size_t)>& ok) {
      std::size_t a = left[i];
      for (std::size_t k = 0; k < nx(); ++k) {
        if (NE(k, a)) continue;
        std::size_t ft = family_type(i, k);
        if (ft == npos || !ok(ft)) return false;
      }
      return true;
    };
    for (std::size_t i = 0; i < nt(); ++i) {
      const TShape& s = shapes[i];
      switch (s.tag) {
        case TShape::fin:
          y.set(u_atom(i));
          for (std::size_t j = 0; j < nx(); ++j) {
            Tri lt = elems[j].less(s.n);
            if (lt == Tri::yes) y.set(e_atom(j, i));
            if (lt == Tri::no) y.set(ne_atom(j, i));
          }
          break;
        case TShape::nat:
          y.set(u_atom(i));
          for (std::size_t j = 0; j < nx(); ++j) y.set(e_atom(j, i));
          break;
        case TShape::pl:
          if (U(left[i]) && U(right[i])) y.set(u_atom(i));
          if (!U(i)) break;
          for (std::size_t j = 0; j < nx(); ++j) {
            if (pair_undetermined(elems[j])) continue;
            auto p = split_pair(elems[j]);
            auto side = p ? p->first.as_u64() : std::nullopt;
            if (!side || *side > 1) {
              y.set(ne_atom(j, i));
              continue;
            }
            std::size_t k = find_elem(p->second);
            std::size_t c = *side == 0 ? left[i] : right[i];
            if (E(k, c)) y.set(e_atom(j, i));
            if (NE(k, c)) y.set(ne_atom(j, i));
          }
          break;
        case TShape::sigma:
          if (U(left[i]) && every(i, U)) y.set(u_atom(i));
          if (!U(i)) break;
          for (std::size_t j = 0; j < nx(); ++j) {
            if (pair_undetermined(elems[j])) continue;
            auto p = split_pair(elems[j]);
            if (!p) {
              y.set(ne_atom(j, i));
              continue;
            }
            std::size_t k = find_elem(p->first), w = find_elem(p->second);
            if (k == npos || w == npos) continue;
            std::size_t ft = family_type(i, k);
            if (E(k, left[i]) && E(w, ft)) y.set(e_atom(j, i));
            if (NE(k, left[i]) || NE(w, ft)) y.set(ne_atom(j, i));
          }
          break;
        case TShape::pi:
          if (U(left[i]) && every(i, U)) y.set(u_atom(i));
          if (!U(i)) break;
          for (std::size_t d = 0; d < nx(); ++d) {
            bool member = true;
            bool refuted = false;
            for (std::size_t k = 0; k < nx(); ++k) {
              const Call& dk = apply[d][k];
              std::size_t ft = family_type(i, k);
              std::size_t z = dk.kind == Call::converged ? find_elem(dk.value) : npos;
              if (!NE(k, left[i]) && !E(z, ft)) member = false;
              if (E(k, left[i]) && (dk.kind == Call::stuck || NE(z, ft))) refuted = true;
            }
            if (member) y.set(e_atom(d, i));
            if (refuted) y.set(ne_atom(d, i));
          }
          break;
        case TShape::sup:
          if (U(left[i]) && every(i, V)) y.set(v_atom(i));
          break;
        case TShape::none:
          break;
      }
    }
    return y;
  }

  // True elements of a finite base when all of them are carrier elements.
  std::optional<std::vector<std::size_t>> base_elements(std::size_t i) const {
    if (i == npos) return std::nullopt;
    const TShape& s = shapes[i];
    std::vector<std::size_t> out;
    if (s.tag == TShape::fin) {
      auto n = s.n.as_u64();
      if (!n || *n > spec.numerals) return std::nullopt;
      for (std::uint64_t k = 0; k < *n; ++k) out.push_back(find_elem(Nat(k)));
      return out;
    }
    if (s.tag == TShape::pl) {
      auto l = base_elements(left[i]), r = base_elements(right[i]);
      if (!l || !r) return std::nullopt;
      for (int side = 0; side < 2; ++side) {
        for (auto k : side == 0 ? *l : *r) {
          std::size_t e = find_elem(Nat::pair(side, elems[k]));
          if (e == npos) return std::nullopt;
          out.push_back(e);
        }
      }
      return out;
    }
    if (s.tag == TShape::sigma) {
      auto b = base_elements(left[i]);
      if (!b) return std::nullopt;
      for (auto k : *b) {
        auto fib = base_elements(family_type(i, k));
        if (!fib) return std::nullopt;
        for (auto u : *fib) {
          std::size_t e = find_elem(Nat::pair(elems[k], elems[u]));
          if (e == npos) return std::nullopt;
          out.push_back(e);
        }
      }
      return out;
    }
    return std::nullopt;
  }

  bool exact(std::size_t i) {
    if (i == npos) return false;
    if (exact_memo[i] >= 0) return exact_memo[i] == 1;
    exact_memo[i] = 0;
    const TShape& s = shapes[i];
    bool ok = true;
    if (s.tag == TShape::pl) {
      ok = exact(left[i]) && exact(right[i]);
    } else if (s.tag == TShape::sigma || s.tag == TShape::pi || s.tag == TShape::sup) {
      auto b = base_elements(left[i]);
      ok = b && exact(left[i]);
      if (ok) {
        for (auto k : *b) {
          const Call& c = family[i][k];
          if (c.kind == Call::unknown) ok = false;
          if (c.kind == Call::converged) {
            std::size_t ft = find_type(c.value);
            if (tshape(c.value).tag != TShape::none && !exact(ft)) ok = false;
          }
        }
      }
    }
    exact_memo[i] = ok ? 1 : 0;
    return ok;
  }

  // The clauses for (x, type i) only consult atoms inside the carrier.
  bool element_exact(std::size_t j, std::size_t i) const {
    const TShape& s = shapes[i];
    if (s.tag == TShape::pl || s.tag == TShape::sigma) {
      if (pair_undetermined(elems[j])) return false;
      auto p = split_pair(elems[j]);
      if (!p) return true;
      if (s.tag == TShape::pl) {
        auto side = p->first.as_u64();
        return !side || *side > 1 || find_elem(p->second) != npos;
      }
      return find_elem(p->first) != npos && find_elem(p->second) != npos;
    }
    if (s.tag == TShape::pi) {
      auto b = base_elements(left[i]);
      if (!b) return false;
      for (auto k : *b) {
        const Call& c = apply[j][k];
        if (c.kind == Call::unknown) return false;
        if (c.kind == Call::converged && find_elem(c.value) == npos) return false;
      }
    }
    return true;
  }

  std::string describe(std::size_t a) const {
    if (a < nt()) return "U(" + type_to_string(types[a], 2) + ")";
    if (a < 2 * nt()) return "V(" + type_to_string(types[a - nt()], 2) + ")";
    std::size_t r = a - 2 * nt();
    bool ne = r >= nt() * nx();
    if (ne) r -= nt() * nx();
    return format_code(elems[r % nx()]) + (ne ? " NE " : " E ") + type_to_string(types[r / nx()], 2);
  }
};

UniverseOracle::UniverseOracle(UniverseCarrierSpec spec) : s_(std::make_shared<State>()) {
  s_->spec = std::move(spec);
  s_->build();
  op_.bound = s_->bound();
  op_.name = "universe";
  std::shared_ptr<const State> st = s_;
  op_.step = [st](const AtomSet& x) { return st->step(x); };
  op_.describe = [st](std::size_t a) { return st->describe(a); };
}

const MonotoneOperator& UniverseOracle::op() const { return op_; }
std::size_t UniverseOracle::type_count() const { return s_->nt(); }
std::size_t UniverseOracle::element_count() const { return s_->nx(); }
const std::vector<Nat>& UniverseOracle::types() const { return s_->types; }

UAtom UniverseOracle::atom_info(std::size_t a) const {
  const State& s = *s_;
  if (a < s.nt()) return {UAtomKind::u, Nat(0), s.types[a]};
  if (a < 2 * s.nt()) return {UAtomKind::v, Nat(0), s.types[a - s.nt()]};
  std::size_t r = a - 2 * s.nt();
  bool ne = r >= s.nt() * s.nx();
  if (ne) r -= s.nt() * s.nx();
  return {ne ? UAtomKind::ne : UAtomKind::e, s.elems[r % s.nx()], s.types[r / s.nx()]};
}

std::optional<std::size_t> UniverseOracle::atom(UAtomKind kind, const Nat& element, const Nat& type) const {
  const State& s = *s_;
  std::size_t i = s.find_type(type);
  if (i == npos) return std::nullopt;
  if (kind == UAtomKind::u) return s.u_atom(i);
  if (kind == UAtomKind::v) return s.v_atom(i);
  std::size_t j = s.find_elem(element);
  if (j == npos) return std::nullopt;
  return kind == UAtomKind::e ? s.e_atom(j, i) : s.ne_atom(j, i);
}

bool UniverseOracle::exact(const Nat& type) const { return s_->exact(s_->find_type(type)); }

UniverseComparison UniverseOracle::compare(const FixpointResult& r, Universe& u) const {
  State& s = *s_;
  UniverseComparison out;
  out.types = s.nt();
  const AtomSet& x = r.lfp;
  for (std::size_t i = 0; i < s.nt(); ++i) {
    for (std::size_t j = 0; j < s.nx(); ++j)
      if (x.test(s.e_atom(j, i)) && x.test(s.ne_atom(j, i))) ++out.overlaps;
  }
  auto text = [&](std::size_t i) { return type_to_string(s.types[i], 3); };
  for (std::size_t i = 0; i < s.nt(); ++i) {
    bool ex = s.exact(i);
    if (ex) ++out.exact_types;
    const Nat& t = s.types[i];
    struct Check {
      bool oracle;
      Verdict got;
      const char* what;
    };
    Check checks[] = {{x.test(s.u_atom(i)), u.in_universe(t), "U"}, {x.test(s.v_atom(i)), u.in_v(t), "V"}};
    for (const auto& c : checks) {
      ++out.checked;
      if (c.got.definite() && c.got.is_yes() == c.oracle) {
        ++out.agreed;
      } else if (ex) {
        out.mismatches.push_back(std::string(c.what) + "(" + text(i) + "): oracle " + (c.oracle ? "yes" : "no") +
                                 ", checker " + std::string(verdict_name(c.got.kind)));
      } else {
        ++out.gaps;
      }
    }
    if (!x.test(s.u_atom(i))) continue;
    for (std::size_t j = 0; j < s.nx(); ++j) {
      bool e = x.test(s.e_atom(j, i)), ne = x.test(s.ne_atom(j, i));
      Verdict m = u.member(s.elems[j], t);
      ++out.checked;
      bool agree = (e && m.is_yes()) || (ne && m.is_no());
      if (agree) {
        ++out.agreed;
        continue;
      }
      bool conflict = (e && m.is_no()) || (ne && m.is_yes());
      if (ex && (conflict || s.element_exact(j, i))) {
        out.mismatches.push_back(format_code(s.elems[j]) + " in " + text(i) + ": oracle " +
                                 (e ? "E" : ne ? "NE" : "silent") + ", checker " +
                                 std::string(verdict_name(m.kind)));
      } else {
        ++out.gaps;
      }
    }
  }
  return out;
}

UniverseOracle universe_operator(UniverseCarrierSpec spec) { return UniverseOracle(std::move(spec)); }

}  // namespace erec
