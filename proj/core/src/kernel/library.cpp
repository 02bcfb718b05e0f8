#include "erec/kernel/library.hpp"

#include <limits>
#include <mutex>
#include <unordered_map>

#include "erec/kernel/code.hpp"
#include "erec/kernel/program.hpp"

namespace erec {

namespace {

using T = Term;

T a(std::size_t i) { return T::arg(i); }
T lit(std::uint64_t v) { return T::lit(Nat(v)); }

Library build_library() {
  Library lib;
  lib.id = proj_code(1, 0);

  // pred by counting up from 0
  Nat pred_loop = compile_recursive(
      T::if_eq(a(0), lit(0), lit(0),
               T::if_eq(T::succ(a(1)), a(0), a(1), T::self({a(0), T::succ(a(1))}))),
      2);
  lib.pred = compile(T::call(pred_loop, {a(0), lit(0)}), 1);

  // add(a, b): step a counter c up to b, bumping the accumulator
  Nat add_loop = compile_recursive(
      T::if_eq(a(2), a(1), a(3), T::self({a(0), a(1), T::succ(a(2)), T::succ(a(3))})), 4);
  lib.add = compile(T::call(add_loop, {a(0), a(1), lit(0), a(0)}), 2);

  Nat mul_loop = compile_recursive(
      T::if_eq(a(2), a(1), a(3),
               T::self({a(0), a(1), T::succ(a(2)), T::call(lib.add, {a(3), a(0)})})),
      4);
  lib.mul = compile(T::call(mul_loop, {a(0), a(1), lit(0), lit(0)}), 2);

  // leq(a, b): count t up until it meets a (1) or b (0)
  Nat leq_loop = compile_recursive(
      T::if_eq(a(2), a(0), lit(1),
               T::if_eq(a(2), a(1), lit(0), T::self({a(0), a(1), T::succ(a(2))}))),
      3);
  lib.leq = compile(T::call(leq_loop, {a(0), a(1), lit(0)}), 2);

  // pair(a, b) = succ(add(mul(s, s), a)) with s = a + b
  Nat pair_tail = compile(T::succ(T::call(lib.add, {T::call(lib.mul, {a(0), a(0)}), a(1)})), 2);
  lib.pair = compile(T::call(pair_tail, {T::call(lib.add, {a(0), a(1)}), a(0)}), 2);

  // Walk pairs (a, b) in increasing code order v = pair(a, b) until v = x,
  // or until x falls in the gap after a diagonal.
  // args: x, a, b, v, sel
  T v_plus_a = T::call(lib.add, {a(3), a(1)});
  Nat unpair_loop = compile_recursive(
      T::if_eq(
          a(3), a(0), T::if_eq(a(4), lit(0), a(1), a(2)),
          T::if_eq(a(2), lit(0),
                   T::if_eq(T::call(lib.leq, {a(0), v_plus_a}), lit(1), lit(0),
                            T::self({a(0), lit(0), T::succ(a(1)), T::succ(v_plus_a), a(4)})),
                   T::self({a(0), T::succ(a(1)), T::call(lib.pred, {a(2)}), T::succ(a(3)), a(4)}))),
      5);
  lib.fst = compile(T::if_eq(a(0), lit(0), lit(0),
                             T::call(unpair_loop, {a(0), lit(0), lit(0), lit(1), lit(0)})),
                    1);
  lib.snd = compile(T::if_eq(a(0), lit(0), lit(0),
                             T::call(unpair_loop, {a(0), lit(0), lit(0), lit(1), lit(1)})),
                    1);

  lib.b2 = comp_code(2, cases_code(0),
                     {const_code(2, 0), const_code(2, 1), proj_code(2, 0), const_code(2, 2)});
  return lib;
}

std::optional<Nat> host_add(const Nat& x, const Nat& y) {
  if (auto s = y.as_u64(); s && *s <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    return x.plus(static_cast<std::int64_t>(*s));
  }
  if (auto s = x.as_u64(); s && *s <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    return y.plus(static_cast<std::int64_t>(*s));
  }
  auto bx = x.as_big();
  auto by = y.as_big();
  if (bx && by) return Nat(BigInt(*bx + *by));
  return std::nullopt;
}

std::optional<Nat> host_mul(const Nat& x, const Nat& y) {
  if (x.is_zero() || y.is_zero()) return Nat(0);
  if (x == Nat(1)) return y;
  if (y == Nat(1)) return x;
  auto bx = x.as_big();
  auto by = y.as_big();
  if (bx && by && x.log2() + y.log2() < 1'000'000.0) return Nat(BigInt(*bx * *by));
  return std::nullopt;
}

std::optional<Nat> host_unpair(const Nat& x, bool second) {
  if (x.is_zero()) return Nat(0);
  auto d = try_unpair(x);
  if (d.status == PairDecode::Status::undetermined) return std::nullopt;
  if (d.status == PairDecode::Status::not_a_pair) return Nat(0);
  return second ? d.second : d.first;
}

struct Registry {
  std::unordered_map<Nat, Jet> jets;
  std::mutex names_mu;
  std::unordered_map<Nat, std::string> names;
  std::unordered_map<std::string, Nat> codes;

  void name(const std::string& n, const Nat& code) {
    std::lock_guard<std::mutex> lock(names_mu);
    names[code] = n;
    codes[n] = code;
  }
};

Registry& registry() {
  static Registry* reg = [] {
    auto* r = new Registry;
    const Library& lib = library();
    auto jet = [&](const std::string& name, const Nat& code, std::size_t arity, JetFn fn) {
      r->jets.emplace(code, Jet{name, arity, std::move(fn)});
      r->name(name, code);
    };
    jet("PRED", lib.pred, 1, [](std::span<const Nat> x) -> std::optional<Nat> { return x[0].pred(); });
    jet("ADD", lib.add, 2, [](std::span<const Nat> x) { return host_add(x[0], x[1]); });
    jet("MUL", lib.mul, 2, [](std::span<const Nat> x) { return host_mul(x[0], x[1]); });
    jet("LEQ", lib.leq, 2, [](std::span<const Nat> x) -> std::optional<Nat> {
      Tri t = x[0].less_equal(x[1]);
      if (t == Tri::unknown) return std::nullopt;
      return Nat(t == Tri::yes ? 1U : 0U);
    });
    jet("PAIR", lib.pair, 2,
        [](std::span<const Nat> x) -> std::optional<Nat> { return Nat::pair(x[0], x[1]); });
    jet("FST", lib.fst, 1, [](std::span<const Nat> x) { return host_unpair(x[0], false); });
    jet("SND", lib.snd, 1, [](std::span<const Nat> x) { return host_unpair(x[0], true); });
    r->name("ID", lib.id);
    r->name("B2", lib.b2);
    return r;
  }();
  return *reg;
}

}  // namespace

const Library& library() {
  static const Library lib = build_library();
  return lib;
}

const Jet* find_jet(const Nat& code) {
  if (code.is_small()) return nullptr;
  auto& jets = registry().jets;
  auto it = jets.find(code);
  return it == jets.end() ? nullptr : &it->second;
}

std::string_view library_name(const Nat& code) {
  auto& r = registry();
  std::lock_guard<std::mutex> lock(r.names_mu);
  auto it = r.names.find(code);
  return it == r.names.end() ? std::string_view{} : std::string_view(it->second);
}

void register_name(const std::string& name, const Nat& code) { registry().name(name, code); }

std::optional<Nat> lookup_name(std::string_view name) {
  auto& r = registry();
  std::lock_guard<std::mutex> lock(r.names_mu);
  auto it = r.codes.find(std::string(name));
  if (it == r.codes.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> registered_names() {
  auto& r = registry();
  std::lock_guard<std::mutex> lock(r.names_mu);
  std::vector<std::string> out;
  out.reserve(r.codes.size());
  for (const auto& [k, v] : r.codes) out.push_back(k);
  return out;
}

}  // namespace erec
