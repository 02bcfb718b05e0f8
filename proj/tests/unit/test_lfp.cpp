#include <gtest/gtest.h>

#include <random>
#include <set>

#include "erec/kernel/code.hpp"
#include "erec/kernel/machine.hpp"
#include "erec/lfp/comp_oracle.hpp"
#include "erec/lfp/fixpoint.hpp"
#include "erec/lfp/universe_oracle.hpp"
#include "erec/universe/typecode.hpp"

using namespace erec;

namespace {

MonotoneOperator successor_op(std::size_t bound) {
  MonotoneOperator op;
  op.bound = bound;
  op.name = "succ";
  op.step = [bound](const AtomSet& x) {
    AtomSet y(bound);
    y.set(0);
    for (auto a : atoms_of(x))
      if (a + 1 < bound) y.set(a + 1);
    return y;
  };
  return op;
}

struct Rule {
  std::vector<std::size_t> premises;
  std::size_t head;
};

MonotoneOperator horn_op(std::size_t bound, std::vector<Rule> rules) {
  MonotoneOperator op;
  op.bound = bound;
  op.name = "horn";
  op.step = [bound, rules](const AtomSet& x) {
    AtomSet y(bound);
    for (const auto& r : rules) {
      bool fire = true;
      for (auto p : r.premises) fire = fire && x.test(p);
      if (fire) y.set(r.head);
    }
    return y;
  };
  return op;
}

std::vector<Rule> random_rules(std::mt19937_64& rng, std::size_t bound, std::size_t count) {
  std::uniform_int_distribution<std::size_t> atom(0, bound - 1), arity(0, 3);
  std::vector<Rule> rules;
  for (std::size_t i = 0; i < count; ++i) {
    Rule r;
    std::size_t n = i < 2 ? 0 : arity(rng);
    for (std::size_t k = 0; k < n; ++k) r.premises.push_back(atom(rng));
    r.head = atom(rng);
    rules.push_back(r);
  }
  return rules;
}

// Forward chaining to saturation, kept separate from iterate().
std::set<std::size_t> saturate(const std::vector<Rule>& rules) {
  std::set<std::size_t> s;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& r : rules) {
      bool fire = true;
      for (auto p : r.premises) fire = fire && s.count(p);
      if (fire && s.insert(r.head).second) grew = true;
    }
  }
  return s;
}

std::size_t first_stage(const FixpointResult& r, std::size_t atom) {
  for (std::size_t i = 0; i < r.stages.size(); ++i)
    if (r.stages[i].test(atom)) return i;
  return r.stages.size();
}

}  // namespace

TEST(Iterate, SuccessorClosure) {
  auto r = iterate(successor_op(10));
  EXPECT_EQ(r.lfp.count(), 10U);
  EXPECT_EQ(r.closure_stage, 10U);
  EXPECT_LE(r.closure_stage, 10U);
  for (std::size_t i = 1; i < r.stages.size(); ++i) EXPECT_TRUE(r.stages[i - 1].is_subset_of(r.stages[i]));
}

TEST(Iterate, ConstantOperatorClosesAtStageOne) {
  MonotoneOperator op;
  op.bound = 17;
  op.name = "evens";
  op.step = [](const AtomSet&) {
    AtomSet y(17);
    for (std::size_t a = 0; a < 17; a += 2) y.set(a);
    return y;
  };
  auto r = iterate(op);
  EXPECT_EQ(r.closure_stage, 1U);
  EXPECT_EQ(atoms_of(r.lfp), (std::vector<std::size_t>{0, 2, 4, 6, 8, 10, 12, 14, 16}));
}

TEST(Iterate, NonMonotoneDetected) {
  MonotoneOperator op;
  op.bound = 4;
  op.name = "flip";
  op.step = [](const AtomSet& x) { return x.none() ? atom_set(4, {0}) : AtomSet(4); };
  EXPECT_THROW(iterate(op), NonMonotoneDetected);
  EXPECT_THROW(iterate(op, {.probes = 0}), NonMonotoneDetected);
}

TEST(Iterate, RandomHornOperators) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t bound = 10;
    auto rules = random_rules(rng, bound, 14);
    auto op = horn_op(bound, rules);
    auto r = iterate(op);
    auto expect = saturate(rules);
    auto got = atoms_of(r.lfp);
    EXPECT_EQ(std::set<std::size_t>(got.begin(), got.end()), expect);
    // Closure and inversion: the fixed point is reproduced by one step.
    EXPECT_EQ(op.step(r.lfp), r.lfp);
    EXPECT_LE(r.closure_stage, bound);
    // Minimality against every prefixed point of the carrier.
    for (unsigned long m = 0; m < (1UL << bound); ++m) {
      AtomSet f(bound, m);
      if (is_prefixed(op, f)) EXPECT_TRUE(r.lfp.is_subset_of(f));
    }
  }
}

TEST(Iterate, DumpStagesListsNewAtoms) {
  auto op = successor_op(3);
  auto text = dump_stages(op, iterate(op));
  EXPECT_NE(text.find("closure-stage 3"), std::string::npos);
  EXPECT_NE(text.find("stage 2 +1: 1"), std::string::npos);
}

TEST(CompOracle, SmallCarrierAgreesWithMachine) {
  CompOracle oracle(CompCarrierSpec{.codes = 40, .depth = 2, .values = 4, .seed = 3});
  auto r = iterate(oracle.op(), {.probes = 3});
  EXPECT_LE(r.closure_stage, oracle.carrier_size());
  auto cmp = oracle.compare(r, 100'000);
  for (const auto& m : cmp.mismatches) ADD_FAILURE() << m;
  EXPECT_EQ(cmp.multi_valued, 0U);
  EXPECT_GT(cmp.agreed, 100U);
  EXPECT_EQ(r.lfp, oracle.op().step(r.lfp));
}

TEST(CompOracle, ConstantTriplesAtStageOne) {
  CompOracle oracle(CompCarrierSpec{.codes = 30, .depth = 1, .values = 4, .seed = 5});
  auto r = iterate(oracle.op(), {.probes = 0});
  for (std::uint64_t n = 0; n < 4; ++n) {
    for (std::uint64_t m = 0; m < 4; ++m) {
      auto a = oracle.atom(const_code(1, n), std::vector<Nat>{Nat(m)}, Nat(n));
      ASSERT_TRUE(a.has_value());
      EXPECT_EQ(first_stage(r, *a), 1U);
    }
  }
}

TEST(CompOracle, CompositionsFollowTheirPremises) {
  CompOracle oracle(CompCarrierSpec{.codes = 40, .depth = 3, .values = 4, .seed = 11});
  auto r = iterate(oracle.op(), {.probes = 0});
  std::size_t seen = 0;
  for (auto a : atoms_of(r.lfp)) {
    CompTriple t = oracle.triple(a);
    CodeView v = view_code(t.code);
    if (v.head != Head::comp) continue;
    std::vector<Nat> inner;
    for (const auto& p : v.parts) {
      Outcome o = apply(p, t.args, 100'000);
      ASSERT_TRUE(o.converged());
      auto pa = oracle.atom(p, t.args, o.value);
      ASSERT_TRUE(pa.has_value());
      EXPECT_LT(first_stage(r, *pa), first_stage(r, a));
      inner.push_back(o.value);
    }
    auto ba = oracle.atom(v.base, inner, t.value);
    ASSERT_TRUE(ba.has_value());
    EXPECT_LT(first_stage(r, *ba), first_stage(r, a));
    ++seen;
  }
  EXPECT_GT(seen, 10U);
}

TEST(CompOracle, SearchClauses) {
  // b(p) = 0 iff p == 2; c(p) = 1 everywhere, certified.
  Nat b = comp_code(1, cases_code(0), {const_code(1, 0), const_code(1, 1), proj_code(1, 0), const_code(1, 2)});
  Nat c = const_code(1, 1);
  CertificateStore certs;
  TotalityCertificate cert;
  cert.code = c;
  cert.tail_from = 0;
  certs.add_unchecked(cert);
  CompCarrierSpec spec{.codes = 0, .depth = 0, .values = 5, .seed = 1, .extra = {efun_code(0, b), efun_code(0, c)}};
  CompOracle oracle(spec, &certs);
  auto r = iterate(oracle.op(), {.probes = 0});
  auto found = oracle.atom(efun_code(0, b), std::vector<Nat>{}, Nat(3));
  auto zero = oracle.atom(efun_code(0, c), std::vector<Nat>{}, Nat(0));
  ASSERT_TRUE(found && zero);
  EXPECT_TRUE(r.lfp.test(*found));
  EXPECT_TRUE(r.lfp.test(*zero));
  EXPECT_TRUE(oracle.compare(r, 10'000).ok());
}

TEST(UniverseOracle, DefaultCarrier) {
  UniverseOracle oracle;
  auto r = iterate(oracle.op(), {.probes = 4});
  EXPECT_LE(r.closure_stage, oracle.op().bound);
  Universe u;
  auto cmp = oracle.compare(r, u);
  for (const auto& m : cmp.mismatches) ADD_FAILURE() << m;
  EXPECT_EQ(cmp.overlaps, 0U);
  EXPECT_GT(cmp.exact_types, 10U);
  EXPECT_EQ(oracle.op().step(r.lfp), r.lfp);
}

TEST(UniverseOracle, FiniteTypesAtStageOne) {
  UniverseOracle oracle;
  auto r = iterate(oracle.op(), {.probes = 0});
  for (std::uint64_t n = 0; n <= 3; ++n) {
    auto ua = oracle.atom(UAtomKind::u, Nat(0), fin_type(n));
    ASSERT_TRUE(ua.has_value());
    EXPECT_EQ(first_stage(r, *ua), 1U);
    for (std::uint64_t k = 0; k < 6; ++k) {
      auto a = oracle.atom(k < n ? UAtomKind::e : UAtomKind::ne, Nat(k), fin_type(n));
      ASSERT_TRUE(a.has_value());
      EXPECT_EQ(first_stage(r, *a), 1U);
    }
  }
}

TEST(UniverseOracle, InfiniteBaseIsRelativized) {
  UniverseOracle oracle;
  EXPECT_FALSE(oracle.exact(sigma_type(nat_type(), const_code(1, fin_type(1)))));
  EXPECT_TRUE(oracle.exact(pi_type(fin_type(2), const_code(1, fin_type(2)))));
}
