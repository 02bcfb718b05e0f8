#include <gtest/gtest.h>

#include "erec/kernel/code.hpp"
#include "erec/kernel/library.hpp"
#include "erec/kernel/machine.hpp"
#include "erec/kernel/program.hpp"

using namespace erec;

namespace {

Outcome run(const Nat& code, std::initializer_list<Nat> args, std::uint64_t fuel = 10'000) {
  Machine vm;
  return vm.apply(code, args, fuel);
}

Outcome run_honest(const Nat& code, std::initializer_list<Nat> args, std::uint64_t fuel) {
  MachineOptions opts;
  opts.accelerate = false;
  Machine vm(opts);
  return vm.apply(code, args, fuel);
}

void expect_value(const Outcome& o, std::uint64_t v) {
  ASSERT_TRUE(o.converged()) << o.to_string();
  EXPECT_EQ(o.value, Nat(v));
}

}  // namespace

TEST(Clauses, Constant) {
  expect_value(run(Nat::tuple({0, 1, 0, 7}), {9}, 1), 7);
  expect_value(run(const_code(0, 3), {}, 1), 3);
  expect_value(run(const_code(3, 0), {1, 2, 3}, 1), 0);
}

TEST(Clauses, ProjectionAndSuccessor) {
  expect_value(run(proj_code(3, 0), {4, 5, 6}, 1), 4);
  expect_value(run(proj_code(3, 2), {4, 5, 6}, 1), 6);
  expect_value(run(Nat::tuple({0, 2, 2, 0}), {4, 9}, 1), 5);
  expect_value(run(succ_code(2, 1), {4, 9}, 1), 10);
}

TEST(Clauses, MalformedAndArgCount) {
  Outcome o = run(Nat::tuple({0, 1, 0, 7}), {9, 9});
  ASSERT_TRUE(o.is_stuck());
  EXPECT_EQ(o.stuck, StuckReason::arg_count);
  EXPECT_EQ(run(Nat(10), {}).stuck, StuckReason::malformed);
  EXPECT_EQ(run(proj_code(2, 2), {1, 2}).stuck, StuckReason::malformed);
  EXPECT_EQ(run(Nat::tuple({4, 1}), {1}).stuck, StuckReason::malformed);
}

TEST(Clauses, CasesAndUniv) {
  expect_value(run(cases_code(0), {10, 20, 3, 3}, 1), 10);
  expect_value(run(cases_code(0), {10, 20, 3, 4}, 1), 20);
  expect_value(run(cases_code(2), {10, 20, 0, 0, 7, 8}, 1), 10);
  expect_value(run(Nat::tuple({2, 2}), {Nat::tuple({0, 1, 0, 7}), 9}, 2), 7);
  EXPECT_TRUE(run(Nat::tuple({2, 2}), {Nat::tuple({0, 1, 0, 7}), 9}, 1).is_unknown());
}

TEST(Clauses, SmnClauseReturnsBuilderValue) {
  Nat p = proj_code(2, 0);
  Outcome o = run(Nat::tuple({0, 3, 5}), {p, 5, 4}, 1);
  ASSERT_TRUE(o.converged());
  EXPECT_EQ(o.value, smn(p, 5));
}

TEST(Clauses, Composition) {
  // x -> (x+1)+1
  Nat two = comp_code(1, succ_code(1, 0), {comp_code(1, succ_code(1, 0), {proj_code(1, 0)})});
  expect_value(run(two, {5}), 7);
  Nat nullary = comp_code(2, const_code(0, 42), {});
  expect_value(run(nullary, {1, 2}), 42);
}

TEST(Clauses, EfunLeastZero) {
  Nat e = efun_code(1, library().b2);
  Outcome o = run(e, {0}, 100);
  expect_value(o, 3);
  // 1 for the efun node, then 3 probes of 7 units each
  EXPECT_EQ(o.fuel_spent, 22U);
  EXPECT_TRUE(run(e, {0}, 21).is_unknown());
}

TEST(Clauses, EfunWithoutZeroNeedsCertificate) {
  CertificateStore store;
  Nat b_plus = const_code(2, 1);
  Nat e = efun_code(1, b_plus);
  Machine vm({}, &store);
  Outcome o = vm.apply(e, {0}, 500);
  ASSERT_TRUE(o.is_unknown());
  EXPECT_EQ(o.fuel_spent, 500U);

  TotalityCertificate cert;
  cert.code = b_plus;
  cert.context = {Nat(0)};
  cert.tail_from = 0;
  cert.tail_value = 1;
  store.add(cert, vm, 100);
  expect_value(vm.apply(e, {0}, 500), 0);
  // a certificate for another context does not apply
  EXPECT_TRUE(vm.apply(e, {1}, 500).is_unknown());
}

TEST(Certificates, RejectWrongPrefixOrTail) {
  CertificateStore store;
  Machine vm({}, &store);
  TotalityCertificate cert;
  cert.code = library().b2;
  cert.context = {Nat(0)};
  cert.tail_from = 0;
  cert.tail_value = 1;
  EXPECT_THROW(store.add(cert, vm, 1000), InvalidCertificate);
  cert.prefix = {1, 1, 0};
  cert.tail_from = 3;
  EXPECT_NO_THROW(store.add(cert, vm, 1000));
  EXPECT_FALSE(cert.all_positive());
}

TEST(Builders, SmnLaw) {
  expect_value(run(smn(Nat::tuple({0, 2, 1, 0}), 5), {9}), 5);
  expect_value(run(smn(Nat::tuple({0, 2, 1, 1}), 5), {9}), 9);
}

TEST(Builders, CloseOver) {
  Nat succ_first = succ_code(2, 0);
  expect_value(run(close_over(succ_first, {7}), {3}), 4);
  expect_value(run(close_over(Nat::tuple({0, 2, 1, 1}), {7}), {3}), 7);
  Nat p = succ_code(1, 0);
  EXPECT_EQ(close_over(p, {}), p);
  Nat three = proj_code(4, 3);
  expect_value(run(close_over(three, {10, 11, 12}), {3}), 12);
}

TEST(Builders, FixIgnoringSelf) {
  Nat f = succ_code(2, 1);  // (e, x) -> x + 1
  expect_value(run(fix(f), {3}), 4);
}

TEST(Builders, FixPureSelfCallDiverges) {
  Nat f = compile_recursive(Term::self({Term::arg(0)}), 1);
  for (std::uint64_t fuel : {10ULL, 1000ULL, 20000ULL}) {
    Outcome o = run(f, {3}, fuel);
    EXPECT_TRUE(o.is_unknown());
    EXPECT_EQ(o.fuel_spent, fuel);
  }
}

TEST(Builders, FixCountdown) {
  Nat f = compile_recursive(
      Term::if_eq(Term::arg(0), Term::lit(0), Term::lit(0),
                  Term::self({Term::call(library().pred, {Term::arg(0)})})),
      1);
  expect_value(run(f, {0}), 0);
  expect_value(run(f, {6}), 0);
}

TEST(Builders, FixedPointEquation) {
  // f(e, x) = x + 1 if x = 0, else {e}(x - 1) + 1
  Nat body = compile(Term::if_eq(Term::arg(1), Term::lit(0), Term::succ(Term::arg(1)),
                                 Term::succ(Term::apply(Term::arg(0),
                                                        {Term::call(library().pred, {Term::arg(1)})}))),
                     2);
  Nat e = fix(body);
  for (std::uint64_t x = 0; x < 6; ++x) {
    Outcome direct = run(e, {x});
    Outcome unfolded = run(body, {e, x});
    ASSERT_TRUE(direct.converged());
    EXPECT_TRUE(direct.same_answer(unfolded));
    EXPECT_EQ(direct.value, Nat(x + 1));
  }
}

TEST(Library, HonestCodesAgreeWithHostArithmetic) {
  const Library& lib = library();
  for (std::uint64_t a = 0; a < 6; ++a) {
    expect_value(run_honest(lib.pred, {a}, 100'000), a == 0 ? 0 : a - 1);
    for (std::uint64_t b = 0; b < 6; ++b) {
      expect_value(run_honest(lib.add, {a, b}, 100'000), a + b);
      expect_value(run_honest(lib.mul, {a, b}, 200'000), a * b);
      expect_value(run_honest(lib.leq, {a, b}, 100'000), a <= b ? 1 : 0);
      expect_value(run_honest(lib.pair, {a, b}, 2'000'000), (a + b) * (a + b) + a + 1);
    }
  }
  for (std::uint64_t x = 0; x < 40; ++x) {
    auto d = try_unpair(Nat(x));
    std::uint64_t f = 0;
    std::uint64_t s = 0;
    if (d.status == PairDecode::Status::ok) {
      f = *d.first.as_u64();
      s = *d.second.as_u64();
    }
    expect_value(run_honest(lib.fst, {x}, 2'000'000), f);
    expect_value(run_honest(lib.snd, {x}, 2'000'000), s);
  }
}

TEST(Library, AcceleratedCodesCostOneUnit) {
  const Library& lib = library();
  Outcome o = run(lib.pair, {3, 4}, 1);
  expect_value(o, 53);
  EXPECT_EQ(o.fuel_spent, 1U);
  expect_value(run(lib.fst, {53}, 1), 3);
  expect_value(run(lib.snd, {12}, 1), 1);
  expect_value(run(lib.snd, {7}, 1), 0);
}

TEST(Trace, OneEntryPerClauseApplication) {
  MachineOptions opts;
  opts.trace = true;
  Machine vm(opts);
  Nat code = Nat::tuple({2, 2});
  Outcome o = vm.apply(code, {Nat::tuple({0, 1, 0, 7}), 9}, 10);
  ASSERT_TRUE(o.converged());
  ASSERT_EQ(vm.trace().size(), 2U);
  EXPECT_EQ(vm.trace()[0].head, Head::univ);
  EXPECT_EQ(vm.trace()[1].head, Head::constant);
  EXPECT_EQ(vm.trace()[0].result, Nat(7));
}
