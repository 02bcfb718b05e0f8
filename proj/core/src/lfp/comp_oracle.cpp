#include "erec/lfp/comp_oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "erec/kernel/code.hpp"
#include "erec/kernel/machine.hpp"
#include "erec/syntax.hpp"

namespace erec {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

// Clause shape read straight off the tuple code. Kept apart from the
// kernel's decoder so the two can disagree.
struct Shape {
  enum Kind { malformed, constant, proj, succ, cases, smn, comp, univ, efun } kind = malformed;
  std::size_t arity = 0;
  Nat value;
  std::size_t index = 0;
  Nat base;
  std::vector<Nat> parts;
};

std::optional<std::uint64_t> field(const Nat& n, std::uint64_t limit = 1U << 16) {
  auto v = n.as_u64();
  if (!v || *v > limit) return std::nullopt;
  return v;
}

Shape shape_of(const Nat& code) {
  Shape s;
  auto t = try_decode_tuple(code);
  if (t.status != TupleDecode::Status::ok || t.elems.size() < 2) return s;
  const auto& e = t.elems;
  auto fam = field(e[0], 3);
  auto k = field(e[1]);
  if (!fam || !k) return s;
  s.arity = *k;
  switch (*fam) {
    case 0: {
      if (e.size() < 3) return {};
      auto tag = field(e[2], 8);
      if (!tag) return {};
      if (*tag == 0 && e.size() == 4) {
        s.kind = Shape::constant;
        s.value = e[3];
      } else if ((*tag == 1 || *tag == 2) && e.size() == 4) {
        auto i = field(e[3]);
        if (!i || *i >= *k) return {};
        s.kind = *tag == 1 ? Shape::proj : Shape::succ;
        s.index = *i;
      } else if (*tag == 4 && e.size() == 3 && *k >= 3) {
        s.kind = Shape::cases;
        s.arity = *k + 1;
      } else if (*tag == 5 && e.size() == 3 && *k >= 2) {
        s.kind = Shape::smn;
      } else {
        return {};
      }
      return s;
    }
    case 1:
      if (e.size() < 3) return {};
      s.kind = Shape::comp;
      s.base = e[2];
      s.parts.assign(e.begin() + 3, e.end());
      return s;
    case 2:
      if (e.size() != 2 || *k < 1) return {};
      s.kind = Shape::univ;
      return s;
    default:
      if (e.size() != 3) return {};
      s.kind = Shape::efun;
      s.base = e[2];
      return s;
  }
}

// {smn}(p, q) = <1, k, p, <0,k,0,q>, <0,k,1,0>, .., <0,k,1,k-1>> with k = arity(p) - 1.
Nat smn_value(const Shape& p_shape, const Nat& p, const Nat& q) {
  std::uint64_t k = p_shape.arity == 0 ? 0 : p_shape.arity - 1;
  if (p_shape.kind == Shape::malformed) k = 0;
  std::vector<Nat> e{Nat(1), Nat(k), p, Nat::tuple({0, k, 0, q})};
  for (std::uint64_t i = 0; i < k; ++i) e.push_back(Nat::tuple({0, k, 1, i}));
  return Nat::tuple(e);
}

struct PoolEntry {
  Nat code;
  std::size_t arity;
};

class PoolBuilder {
 public:
  PoolBuilder(const CompCarrierSpec& spec) : spec_(spec), rng_(spec.seed) {}

  std::vector<PoolEntry> build() {
    const std::uint64_t v = spec_.values;
    for (std::size_t k = 0; k <= 2; ++k) {
      for (std::uint64_t n = 0; n < v; ++n) add(const_code(k, n), k);
      for (std::size_t i = 0; i < k; ++i) {
        add(proj_code(k, i), k);
        add(succ_code(k, i), k);
      }
    }
    add(cases_code(0), 4);
    add(smn_code(0), 2);
    add(univ_code(1), 2);
    add(univ_code(2), 3);
    for (const auto& c : spec_.extra) add(c, shape_of(c).arity);
    std::size_t level_start = 0;
    std::size_t remaining = spec_.codes > pool_.size() ? spec_.codes - pool_.size() : 0;
    for (std::size_t level = 1; level <= spec_.depth && remaining > 0; ++level) {
      std::size_t prev_begin = level_start;
      std::size_t prev_end = pool_.size();
      level_start = prev_end;
      std::size_t want = remaining / (spec_.depth - level + 1);
      if (want == 0) want = 1;
      std::size_t made = 0;
      for (std::size_t tries = 0; made < want && tries < want * 50; ++tries) {
        if (construct(prev_begin, prev_end)) ++made;
      }
      remaining -= std::min(remaining, made);
    }
    return pool_;
  }

 private:
  bool add(const Nat& c, std::size_t arity) {
    if (!seen_.insert(c).second) return false;
    pool_.push_back({c, arity});
    return true;
  }

  std::size_t uniform(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  std::optional<Nat> pick(std::size_t arity, std::size_t begin = 0, std::size_t end = npos) {
    if (end == npos) end = pool_.size();
    std::vector<std::size_t> c;
    for (std::size_t i = begin; i < end; ++i)
      if (pool_[i].arity == arity) c.push_back(i);
    if (c.empty()) return std::nullopt;
    return pool_[c[uniform(c.size())]].code;
  }

  std::optional<std::vector<Nat>> parts(std::size_t count, std::size_t arity) {
    std::vector<Nat> out;
    for (std::size_t i = 0; i < count; ++i) {
      auto p = pick(arity);
      if (!p) return std::nullopt;
      out.push_back(*p);
    }
    return out;
  }

  // One new code using at least one code of the previous level when possible.
  bool construct(std::size_t prev_begin, std::size_t prev_end) {
    std::size_t k = uniform(3);
    std::size_t rule = uniform(20);
    if (rule < 9) {
      std::size_t r = uniform(3);
      auto b = pick(r, prev_begin, prev_end);
      if (!b) b = pick(r);
      auto ps = parts(r, k);
      if (!b || !ps) return false;
      return add(comp_code(k, *b, *ps), k);
    }
    if (rule < 13) {
      std::size_t j = 1 + uniform(2);
      auto target = pick(j, prev_begin, prev_end);
      auto ps = parts(j, k);
      if (!target || !ps) return false;
      ps->insert(ps->begin(), const_code(k, *target));
      return add(comp_code(k, univ_code(j), *ps), k);
    }
    if (rule < 17) {
      std::size_t ek = uniform(2);
      Nat base;
      if (uniform(2) == 0) {
        auto t = pick(ek + 1, prev_begin, prev_end);
        if (!t) t = pick(ek + 1);
        if (!t) return false;
        base = comp_code(ek + 1, cases_code(0),
                         {const_code(ek + 1, 0), const_code(ek + 1, 1), proj_code(ek + 1, 0), *t});
      } else {
        auto t = pick(ek + 1, prev_begin, prev_end);
        if (!t) return false;
        base = *t;
      }
      return add(efun_code(ek, base), ek);
    }
    auto ps = parts(4, k);
    if (!ps) return false;
    (*ps)[uniform(4)] = pick(k, prev_begin, prev_end).value_or((*ps)[0]);
    return add(comp_code(k, cases_code(0), *ps), k);
  }

  const CompCarrierSpec& spec_;
  std::mt19937_64 rng_;
  std::vector<PoolEntry> pool_;
  std::unordered_set<Nat> seen_;
};

}  // namespace

struct CompOracle::State {
  CompCarrierSpec spec;
  CertificateStore* certs = nullptr;
  std::vector<Nat> pool;
  std::size_t top_level = 0;
  std::vector<Nat> dom;
  std::unordered_map<Nat, std::size_t> dom_index;
  std::vector<Shape> shapes;  // per domain element
  struct Query {
    std::size_t code;
    std::vector<std::size_t> args;
  };
  std::vector<Query> queries;
  std::map<std::vector<std::size_t>, std::size_t> query_index;
  std::unordered_map<std::size_t, std::vector<std::size_t>> queries_of;  // code -> queries
  std::size_t rounds = 0;

  std::size_t d() const { return dom.size(); }

  std::size_t find_dom(const Nat& v) const {
    auto it = dom_index.find(v);
    return it == dom_index.end() ? npos : it->second;
  }

  std::size_t add_dom(const Nat& v) {
    if (auto i = find_dom(v); i != npos) return i;
    dom_index.emplace(v, dom.size());
    dom.push_back(v);
    shapes.push_back(shape_of(v));
    return dom.size() - 1;
  }

  void add_subcodes(const Nat& c) {
    std::vector<Nat> work{c};
    while (!work.empty()) {
      Nat x = work.back();
      work.pop_back();
      if (find_dom(x) != npos) continue;
      std::size_t i = add_dom(x);
      const Shape& s = shapes[i];
      if (s.kind == Shape::comp || s.kind == Shape::efun) work.push_back(s.base);
      if (s.kind == Shape::comp)
        for (const auto& p : s.parts) work.push_back(p);
      if (s.kind == Shape::constant) work.push_back(s.value);
    }
  }

  std::size_t find_query(std::size_t code, const std::vector<std::size_t>& args) const {
    std::vector<std::size_t> key{code};
    key.insert(key.end(), args.begin(), args.end());
    auto it = query_index.find(key);
    return it == query_index.end() ? npos : it->second;
  }

  // Adds a query with the sub-queries its clause fixes statically.
  bool add_query(std::size_t code, std::vector<std::size_t> args) {
    std::vector<Query> work{{code, std::move(args)}};
    bool added = false;
    while (!work.empty()) {
      Query q = std::move(work.back());
      work.pop_back();
      std::vector<std::size_t> key{q.code};
      key.insert(key.end(), q.args.begin(), q.args.end());
      if (query_index.count(key)) continue;
      query_index.emplace(std::move(key), queries.size());
      queries_of[q.code].push_back(queries.size());
      queries.push_back(q);
      added = true;
      const Shape& s = shapes[q.code];
      if (q.args.size() != s.arity) continue;
      if (s.kind == Shape::comp) {
        for (const auto& p : s.parts) work.push_back({find_dom(p), q.args});
      } else if (s.kind == Shape::univ) {
        const Shape& t = shapes[q.args[0]];
        if (t.kind != Shape::malformed && t.arity + 1 == q.args.size())
          work.push_back({q.args[0], std::vector<std::size_t>(q.args.begin() + 1, q.args.end())});
      } else if (s.kind == Shape::efun) {
        std::size_t b = find_dom(s.base);
        for (std::uint64_t p = 0; p < spec.values; ++p) {
          std::vector<std::size_t> probe{find_dom(Nat(p))};
          probe.insert(probe.end(), q.args.begin(), q.args.end());
          work.push_back({b, std::move(probe)});
        }
      }
    }
    return added;
  }

  std::vector<std::size_t> values(const AtomSet& x, std::size_t q) const {
    std::vector<std::size_t> out;
    std::size_t base = q * d();
    auto a = base == 0 ? x.find_first() : x.find_next(base - 1);
    for (; a != AtomSet::npos && a < base + d(); a = x.find_next(a)) out.push_back(a - base);
    return out;
  }

  std::vector<Nat> nats(const std::vector<std::size_t>& idx) const {
    std::vector<Nat> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(dom[i]);
    return out;
  }

  // One clause application for query q. `demand` collects base calls of
  // compositions that are not yet queries.
  void derive(const AtomSet& x, std::size_t q, AtomSet& out, std::vector<Query>* demand) const {
    const Query& qu = queries[q];
    const Shape& s = shapes[qu.code];
    const auto& a = qu.args;
    if (s.kind == Shape::malformed || a.size() != s.arity) return;
    auto emit = [&](std::size_t v) {
      if (v != npos) out.set(q * d() + v);
    };
    switch (s.kind) {
      case Shape::constant: emit(find_dom(s.value)); return;
      case Shape::proj: emit(a[s.index]); return;
      case Shape::succ: emit(find_dom(dom[a[s.index]].succ())); return;
      case Shape::cases: emit(a[2] == a[3] ? a[0] : a[1]); return;
      case Shape::smn: emit(find_dom(smn_value(shapes[a[0]], dom[a[0]], dom[a[1]]))); return;
      case Shape::univ: {
        std::size_t sub = find_query(a[0], std::vector<std::size_t>(a.begin() + 1, a.end()));
        if (sub == npos) return;
        for (auto v : values(x, sub)) emit(v);
        return;
      }
      case Shape::comp: {
        std::vector<std::vector<std::size_t>> vals;
        for (const auto& p : s.parts) {
          std::size_t sub = find_query(find_dom(p), a);
          if (sub == npos) return;
          vals.push_back(values(x, sub));
          if (vals.back().empty()) return;
        }
        std::size_t b = find_dom(s.base);
        if (!demand) {
          // Scan the base's queries rather than every combination of values.
          auto it = queries_of.find(b);
          if (it == queries_of.end()) return;
          for (auto sub : it->second) {
            const auto& inner = queries[sub].args;
            if (inner.size() != vals.size()) continue;
            bool match = true;
            for (std::size_t i = 0; i < vals.size() && match; ++i)
              match = std::find(vals[i].begin(), vals[i].end(), inner[i]) != vals[i].end();
            if (match)
              for (auto v : values(x, sub)) emit(v);
          }
          return;
        }
        std::vector<std::size_t> pick(vals.size(), 0);
        for (;;) {
          std::vector<std::size_t> inner(vals.size());
          for (std::size_t i = 0; i < vals.size(); ++i) inner[i] = vals[i][pick[i]];
          std::size_t sub = find_query(b, inner);
          if (sub != npos) {
            for (auto v : values(x, sub)) emit(v);
          } else {
            demand->push_back({b, inner});
          }
          std::size_t i = 0;
          while (i < pick.size() && ++pick[i] == vals[i].size()) pick[i++] = 0;
          if (i == pick.size()) return;
        }
      }
      case Shape::efun: {
        if (certs) {
          auto cert = certs->find(s.base, nats(a));
          if (cert && cert->all_positive()) emit(find_dom(Nat(0)));
        }
        std::size_t b = find_dom(s.base);
        for (std::uint64_t p = 0; p < spec.values; ++p) {
          std::vector<std::size_t> probe{find_dom(Nat(p))};
          probe.insert(probe.end(), a.begin(), a.end());
          std::size_t sub = find_query(b, probe);
          if (sub == npos) return;
          bool zero = false, positive = false;
          for (auto v : values(x, sub)) (dom[v].is_zero() ? zero : positive) = true;
          if (zero) emit(find_dom(Nat(p + 1)));
          if (!positive) return;
        }
        return;
      }
      default: return;
    }
  }

  AtomSet step(const AtomSet& x, std::vector<Query>* demand = nullptr) const {
    AtomSet out(queries.size() * d());
    for (std::size_t q = 0; q < queries.size(); ++q) derive(x, q, out, demand);
    return out;
  }

  std::string describe_query(std::size_t q) const {
    const Query& qu = queries[q];
    std::string s = format_code(dom[qu.code]) + "(";
    for (std::size_t i = 0; i < qu.args.size(); ++i) s += (i ? "," : "") + format_code(dom[qu.args[i]]);
    return s + ")";
  }

  std::string describe(std::size_t atom) const { return describe_query(atom / d()) + "=" + format_code(dom[atom % d()]); }
};

CompOracle::CompOracle(CompCarrierSpec spec, CertificateStore* certs) : s_(std::make_shared<State>()) {
  if (spec.values < 2) throw std::invalid_argument("comp carrier: need at least two numerals");
  State& s = *s_;
  s.spec = spec;
  s.certs = certs;
  for (std::uint64_t n = 0; n < spec.values; ++n) s.add_dom(Nat(n));
  for (const auto& e : PoolBuilder(spec).build()) {
    s.pool.push_back(e.code);
    s.add_subcodes(e.code);
  }
  for (const auto& c : s.pool) {
    std::size_t ci = s.find_dom(c);
    std::size_t arity = s.shapes[ci].arity;
    if (arity > 2) continue;
    std::size_t combos = 1;
    for (std::size_t i = 0; i < arity; ++i) combos *= spec.values;
    for (std::size_t m = 0; m < combos; ++m) {
      std::vector<std::size_t> args;
      for (std::size_t i = 0, r = m; i < arity; ++i, r /= spec.values) args.push_back(r % spec.values);
      s.add_query(ci, args);
      ++s.top_level;
    }
  }
  // Close under demanded base calls, reading values off the current least
  // fixed point until nothing new is demanded.
  for (;;) {
    ++s.rounds;
    AtomSet x(s.queries.size() * s.d());
    for (;;) {
      AtomSet next = s.step(x);
      if (next == x) break;
      x = std::move(next);
    }
    std::vector<State::Query> demand;
    s.step(x, &demand);
    bool grew = false;
    for (auto& q : demand) grew = s.add_query(q.code, std::move(q.args)) || grew;
    if (!grew) break;
  }
  op_.bound = s.queries.size() * s.d();
  op_.name = "comp";
  std::shared_ptr<const State> st = s_;
  op_.step = [st](const AtomSet& x) { return st->step(x); };
  op_.describe = [st](std::size_t a) { return st->describe(a); };
}

const MonotoneOperator& CompOracle::op() const { return op_; }
std::size_t CompOracle::carrier_size() const { return op_.bound; }
std::size_t CompOracle::query_count() const { return s_->queries.size(); }
std::size_t CompOracle::domain_size() const { return s_->d(); }
std::size_t CompOracle::demand_rounds() const { return s_->rounds; }
const std::vector<Nat>& CompOracle::pool() const { return s_->pool; }
std::size_t CompOracle::top_level_queries() const { return s_->top_level; }

CompTriple CompOracle::triple(std::size_t atom) const {
  const auto& s = *s_;
  const auto& q = s.queries.at(atom / s.d());
  return {s.dom[q.code], s.nats(q.args), s.dom[atom % s.d()]};
}

std::optional<std::size_t> CompOracle::atom(const Nat& code, std::span<const Nat> args, const Nat& value) const {
  const auto& s = *s_;
  std::size_t c = s.find_dom(code), v = s.find_dom(value);
  if (c == npos || v == npos) return std::nullopt;
  std::vector<std::size_t> a;
  for (const auto& x : args) {
    std::size_t i = s.find_dom(x);
    if (i == npos) return std::nullopt;
    a.push_back(i);
  }
  std::size_t q = s.find_query(c, a);
  if (q == npos) return std::nullopt;
  return q * s.d() + v;
}

OracleComparison CompOracle::compare(const FixpointResult& r, std::uint64_t fuel) const {
  const auto& s = *s_;
  OracleComparison out;
  out.lfp_atoms = r.lfp.count();
  out.queries = s.queries.size();
  MachineOptions mo;
  mo.accelerate = false;
  mo.trace = true;
  Machine vm(mo, s.certs);
  for (std::size_t q = 0; q < s.queries.size(); ++q) {
    auto vals = s.values(r.lfp, q);
    if (vals.size() > 1) {
      ++out.multi_valued;
      out.mismatches.push_back("several values for " + s.describe(q * s.d() + vals[0]));
      continue;
    }
    Outcome o = vm.apply(s.dom[s.queries[q].code], s.nats(s.queries[q].args), fuel);
    if (!vals.empty()) {
      if (o.converged() && o.value == s.dom[vals[0]]) {
        ++out.agreed;
      } else {
        out.mismatches.push_back("oracle has " + s.describe(q * s.d() + vals[0]) + ", VM gives " +
                                 (o.converged() ? format_code(o.value) : o.to_string()));
      }
      continue;
    }
    if (!o.converged()) {
      ++out.both_silent;
      continue;
    }
    bool inside = !vm.trace_truncated();
    for (const auto& e : vm.trace()) {
      if (!inside) break;
      std::size_t c = s.find_dom(e.code), v = e.returned ? s.find_dom(e.result) : npos;
      std::vector<std::size_t> a;
      for (const auto& x : e.args) a.push_back(s.find_dom(x));
      bool args_ok = std::find(a.begin(), a.end(), npos) == a.end();
      inside = c != npos && v != npos && args_ok && s.find_query(c, a) != npos;
    }
    if (inside) {
      out.mismatches.push_back("VM derives " + s.describe_query(q) + " = " + format_code(o.value) +
                               " inside the carrier, oracle has nothing");
    } else {
      ++out.outside_carrier;
    }
  }
  return out;
}

CompOracle comp_operator(CompCarrierSpec spec) { return CompOracle(spec); }

}  // namespace erec
