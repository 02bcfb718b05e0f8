#include <gtest/gtest.h>

#include <random>

#include "erec/kernel/analysis.hpp"
#include "erec/kernel/code.hpp"
#include "erec/kernel/library.hpp"
#include "erec/kernel/machine.hpp"
#include "erec/kernel/program.hpp"
#include "erec/universe/universe.hpp"
#include "erec/universe/vset.hpp"
#include "hf_oracle.hpp"

using namespace erec;
using namespace erec::testing;

namespace {

Nat constant_family(const Nat& t) { return const_code(1, t); }

}  // namespace

TEST(Pairing, Examples) {
  EXPECT_EQ(Nat::pair(0, 0), Nat(1));
  EXPECT_EQ(Nat::pair(1, 2), Nat(11));
  auto d = try_unpair(Nat(12));
  ASSERT_EQ(d.status, PairDecode::Status::ok);
  EXPECT_EQ(d.first, Nat(2));
  EXPECT_EQ(d.second, Nat(1));
}

TEST(TypeCodes, Layout) {
  EXPECT_EQ(fin_type(3), Nat::pair(0, 3));
  EXPECT_EQ(nat_type(), Nat::pair(1, 0));
  EXPECT_EQ(view_type(fin_type(3)).tag, TypeTag::fin);
  EXPECT_EQ(view_type(Nat::pair(1, 4)).tag, TypeTag::foreign);
  EXPECT_EQ(view_type(Nat(0)).tag, TypeTag::foreign);
  EXPECT_EQ(view_type(Nat::pair(6, 0)).tag, TypeTag::foreign);
  TypeView v = view_type(pi_type(7, 9));
  EXPECT_EQ(v.tag, TypeTag::pi);
  EXPECT_EQ(v.first, Nat(7));
  EXPECT_EQ(v.second, Nat(9));
}

TEST(Member, FiniteAndNat) {
  Universe u;
  EXPECT_TRUE(u.member(2, fin_type(3)).is_yes());
  EXPECT_TRUE(u.member(3, fin_type(3)).is_no());
  EXPECT_TRUE(u.member(Nat(BigInt(1) << 5000), nat_type()).is_yes());
}

TEST(Member, Sums) {
  Universe u;
  Nat t = pl_type(fin_type(1), fin_type(3));
  EXPECT_TRUE(u.member(Nat::pair(1, 2), t).is_yes());
  EXPECT_TRUE(u.member(Nat::pair(1, 1), t).is_yes());
  EXPECT_TRUE(u.member(Nat::pair(0, 0), t).is_yes());
  EXPECT_TRUE(u.member(Nat::pair(0, 1), t).is_no());
  EXPECT_TRUE(u.member(Nat::pair(2, 0), t).is_no());
  EXPECT_TRUE(u.member(Nat(0), t).is_no());
  EXPECT_TRUE(u.member(Nat(2), t).is_no());  // not in the range of the pairing
  // 5 = (0,2): left summand with 2 NE fin 1
  EXPECT_TRUE(u.member(Nat(5), t).is_no());
}

TEST(Member, Sigma) {
  Universe u;
  Nat e = table_code({0, 1}, {fin_type(1), nat_type()});
  Nat t = sigma_type(fin_type(2), e);
  EXPECT_TRUE(u.in_universe(t).is_yes());
  EXPECT_TRUE(u.member(Nat::pair(0, 2), t).is_no());
  EXPECT_TRUE(u.member(Nat::pair(0, 0), t).is_yes());
  EXPECT_TRUE(u.member(Nat::pair(1, 99), t).is_yes());
  EXPECT_TRUE(u.member(Nat::pair(2, 0), t).is_no());
}

TEST(Member, Pi) {
  Universe u;
  EXPECT_TRUE(u.member(12345, pi_type(fin_type(0), 7)).is_yes());
  Nat t = pi_type(fin_type(2), constant_family(fin_type(3)));
  EXPECT_TRUE(u.member(table_code({0, 1}, {2, 1}), t).is_yes());
  EXPECT_TRUE(u.member(table_code({0, 1}, {2, 3}), t).is_no());
  EXPECT_TRUE(u.member(Nat(10), t).is_no());  // malformed code: no value at 0
}

TEST(Member, PiOverNat) {
  Universe u;
  Nat t = pi_type(nat_type(), constant_family(fin_type(2)));
  EXPECT_TRUE(u.member(const_code(1, 1), t).is_yes());
  EXPECT_TRUE(u.member(const_code(1, 2), t).is_no());
  // identity: agrees on 0 and 1, refuted at 2
  EXPECT_TRUE(u.member(library().id, t).is_no());
  Nat t2 = pi_type(nat_type(), constant_family(nat_type()));
  Verdict v = u.member(library().id, t2);
  EXPECT_TRUE(v.is_unknown()) << v.evidence;
  EXPECT_EQ(v.bound, u.bounds().probe);
}

TEST(Member, PiOverNatWithCertificate) {
  CertificateStore store;
  Universe u({}, &store);
  Nat f = table_code({0, 1, 2}, {1, 0, 1}, 1);
  Nat t = pi_type(nat_type(), constant_family(fin_type(2)));
  EXPECT_TRUE(u.member(f, t).is_unknown());
  TotalityCertificate c;
  c.code = f;
  c.prefix = {1, 0, 1};
  c.tail_from = 3;
  c.tail_value = 1;
  store.add(c, u.machine(), 10'000);
  Universe fresh({}, &store);
  EXPECT_TRUE(fresh.member(f, t).is_yes());
}

TEST(Member, RequiresTypeInUniverse) {
  Universe u;
  // family value 7 is not a type
  Nat t = sigma_type(fin_type(1), constant_family(7));
  EXPECT_TRUE(u.in_universe(t).is_no());
  EXPECT_TRUE(u.member(Nat::pair(0, 0), t).is_unknown());
  EXPECT_TRUE(u.member(0, Nat::pair(1, 3)).is_unknown());
}

TEST(InUniverse, Examples) {
  Universe u;
  EXPECT_TRUE(u.in_universe(nat_type()).is_yes());
  EXPECT_TRUE(u.in_universe(fin_type(0)).is_yes());
  EXPECT_TRUE(u.in_universe(pl_type(nat_type(), fin_type(2))).is_yes());
  EXPECT_TRUE(u.in_universe(sup_type(fin_type(0), library().id)).is_no());
  Nat id_family = library().id;  // k -> k is not a type for k = 0
  Verdict v = u.in_universe(sigma_type(nat_type(), id_family));
  EXPECT_TRUE(v.is_no()) << v.evidence;
  Nat types = compile(Term::call(library().pair, {Term::lit(0), Term::arg(0)}), 1);  // k -> fin k
  Verdict w = u.in_universe(sigma_type(nat_type(), types));
  EXPECT_TRUE(w.is_unknown());
  EXPECT_EQ(w.bound, u.bounds().probe);
  EXPECT_TRUE(u.in_universe(pi_type(fin_type(3), types)).is_yes());
  EXPECT_TRUE(u.in_universe(pi_type(nat_type(), constant_family(fin_type(2)))).is_yes());
}

TEST(Inhabit, Witnesses) {
  Universe u;
  EXPECT_TRUE(u.inhabit(fin_type(0)).verdict.is_no());
  auto s = u.inhabit(sigma_type(fin_type(2), table_code({0, 1}, {fin_type(0), fin_type(4)})));
  ASSERT_TRUE(s.verdict.is_yes());
  EXPECT_EQ(s.witness, Nat::pair(1, 0));
  Nat p = pi_type(fin_type(2), table_code({0, 1}, {fin_type(1), pl_type(fin_type(0), fin_type(1))}));
  auto w = u.inhabit(p);
  ASSERT_TRUE(w.verdict.is_yes());
  EXPECT_TRUE(u.member(w.witness, p).is_yes());
  EXPECT_TRUE(u.inhabit(pi_type(fin_type(2), constant_family(fin_type(0)))).verdict.is_no());
  EXPECT_TRUE(u.inhabit(pi_type(fin_type(0), constant_family(fin_type(0)))).verdict.is_yes());
}

TEST(Member, AgreesWithDenotationOnFiniteTypes) {
  Universe u;
  std::vector<FiniteType> types = {fin_ty(0), fin_ty(1), fin_ty(3)};
  types.push_back(pl_ty(fin_ty(1), fin_ty(2)));
  types.push_back(pl_ty(fin_ty(0), pl_ty(fin_ty(2), fin_ty(0))));
  types.push_back(sigma_ty(fin_ty(2), {fin_ty(0), fin_ty(3)}));
  types.push_back(sigma_ty(fin_ty(3), {pl_ty(fin_ty(1), fin_ty(1)), fin_ty(1), fin_ty(2)}));
  for (const auto& t : types) {
    for (std::uint64_t x = 0; x <= 64; ++x) {
      Verdict v = u.member(x, t.code);
      ASSERT_TRUE(v.definite()) << t.text << " " << x << ": " << v.evidence;
      EXPECT_EQ(v.is_yes(), t.elements.count(Nat(x)) == 1) << t.text << " " << x;
    }
    auto listed = u.elements(t.code);
    ASSERT_TRUE(listed.has_value());
    EXPECT_EQ(std::unordered_set<Nat>(listed->begin(), listed->end()), t.elements) << t.text;
  }
}

TEST(Member, NeverBothUnderDifferentBounds) {
  std::mt19937_64 rng(7);
  Nat fam = compile(Term::call(library().pair, {Term::lit(0), Term::arg(0)}), 1);
  std::vector<Nat> types = {nat_type(), pi_type(nat_type(), fam), sigma_type(nat_type(), fam),
                            pi_type(nat_type(), constant_family(fin_type(3)))};
  for (int round = 0; round < 200; ++round) {
    Nat x = table_code({0, 1}, {rng() % 4, rng() % 4}, rng() % 4);
    const Nat& t = types[rng() % types.size()];
    UniverseBounds small;
    small.probe = 4;
    small.fuel = 50;
    Universe a(small), b;
    Verdict va = a.member(x, t), vb = b.member(x, t);
    EXPECT_FALSE((va.is_yes() && vb.is_no()) || (va.is_no() && vb.is_yes()));
  }
}

TEST(Ignores, ClosuresOfTypeFormers) {
  EXPECT_TRUE(ignores_argument(const_code(2, 5), 0));
  EXPECT_FALSE(ignores_argument(library().id, 0));
  Nat f = close_over(proj_code(2, 1), {Nat(5)});
  EXPECT_TRUE(ignores_argument(f, 0));
  Nat g = close_over(proj_code(2, 0), {Nat(5)});
  EXPECT_FALSE(ignores_argument(g, 0));
  // second component of gl does not look at its argument
  Nat t = gl(hf_to_v(parse_hf("{}")), hf_to_v(parse_hf("{{}}")));
  EXPECT_TRUE(ignores_argument(view_type(t).second, 0));
}

TEST(Hf, ParseAndPrint) {
  HfSet s = parse_hf(" { {} , {{}} } ");
  EXPECT_EQ(to_string(s), "{{},{{}}}");
  EXPECT_EQ(rank(s), 2u);
  EXPECT_EQ(occurrences(s), 3u);
  EXPECT_EQ(parse_hf("2"), s);
  EXPECT_EQ(parse_hf("{3}"), parse_hf("{{{},{{}},{{},{{}}}}}"));
  EXPECT_THROW(parse_hf("{"), HfParseError);
  EXPECT_THROW(parse_hf("{}}"), HfParseError);
  EXPECT_THROW(parse_hf("{,}"), HfParseError);
}

TEST(Hf, ToV) {
  Nat empty = hf_to_v(parse_hf("{}"));
  EXPECT_EQ(empty, sup_type(fin_type(0), library().id));
  EXPECT_EQ(empty, vnat(0));
  Nat one = hf_to_v(parse_hf("{{}}"));
  EXPECT_EQ(bar(one), fin_type(1));
  Outcome o = tilde_at(one, 0);
  ASSERT_TRUE(o.converged());
  EXPECT_EQ(o.value, empty);
  Nat two = hf_to_v(parse_hf("{{},{{}}}"));
  EXPECT_EQ(bar(two), fin_type(2));
  EXPECT_EQ(tilde_at(two, 1).value, one);
  Universe u;
  EXPECT_TRUE(u.in_v(two).is_yes());
  EXPECT_TRUE(u.in_v(fin_type(2)).is_no());
  EXPECT_TRUE(u.in_v(sup_type(fin_type(1), const_code(1, 7))).is_no());
}

TEST(Vnat, HostMatchesMachine) {
  for (std::uint64_t n = 0; n <= 20; ++n) {
    Outcome o = apply(vnat_code(), {Nat(n)}, 10'000);
    ASSERT_TRUE(o.converged()) << n;
    EXPECT_EQ(o.value, vnat(n)) << n;
    Outcome t = tilde_at(omega(), n);
    ASSERT_TRUE(t.converged());
    EXPECT_EQ(t.value, vnat(n));
  }
  EXPECT_EQ(bar(vnat(2)), fin_type(2));
  EXPECT_EQ(apply(vnat_selector(2), {Nat(5)}, 10'000).value, Nat(0));
  EXPECT_EQ(apply(vnat_selector(2), {Nat(2)}, 10'000).value, vnat(2));
  EXPECT_EQ(bar(omega()), nat_type());
}

TEST(Vnat, InV) {
  Universe u;
  for (std::uint64_t n = 0; n <= 8; ++n) EXPECT_TRUE(u.in_v(vnat(n)).is_yes()) << n;
  Verdict w = u.in_v(omega());
  EXPECT_TRUE(w.is_unknown());
  EXPECT_EQ(w.bound, u.bounds().probe);
}

TEST(Gl, HostMatchesMachine) {
  std::vector<Nat> trees = {hf_to_v(parse_hf("{}")), hf_to_v(parse_hf("{{},{{}}}")), vnat(3), omega()};
  for (const auto& a : trees) {
    for (const auto& b : trees) {
      Outcome o = apply(gl_code(), {a, b}, 10'000);
      ASSERT_TRUE(o.converged());
      EXPECT_EQ(o.value, gl(a, b));
    }
  }
}

TEST(Gl, Examples) {
  Universe u;
  Nat e = hf_to_v(parse_hf("{}"));
  Nat s = hf_to_v(parse_hf("{{}}"));
  Nat t = gl(e, e);
  EXPECT_TRUE(u.in_universe(t).is_yes());
  EXPECT_TRUE(u.member(Nat::pair(0, 0), t).is_yes());
  EXPECT_TRUE(u.inhabit(gl(e, s)).verdict.is_no());
  EXPECT_TRUE(u.inhabit(gl(s, e)).verdict.is_no());
  auto w = u.inhabit(gl(vnat(2), vnat(2)));
  ASSERT_TRUE(w.verdict.is_yes());
  EXPECT_TRUE(u.member(w.witness, gl(vnat(2), vnat(2))).is_yes());
  auto x = u.inhabit(gl(vnat(2), hf_to_v(parse_hf("{{{}},{},{}}"))));
  ASSERT_TRUE(x.verdict.is_yes());
  EXPECT_TRUE(u.inhabit(gl(vnat(2), vnat(3))).verdict.is_no());
}

TEST(Gl, AgreesWithExtensionalEquality) {
  Universe u;
  auto lits = hf_literals(2, 3);
  for (const auto& a : lits) {
    for (const auto& b : lits) {
      auto r = u.inhabit(gl(hf_to_v(a), hf_to_v(b)));
      ASSERT_TRUE(r.verdict.definite()) << to_string(a) << " " << to_string(b);
      EXPECT_EQ(r.verdict.is_yes(), ext_equal(a, b)) << to_string(a) << " " << to_string(b);
    }
  }
}

TEST(Gl, ReflexivityCode) {
  Universe u;
  std::vector<Nat> sets;
  for (std::uint64_t n = 0; n <= 5; ++n) sets.push_back(vnat(n));
  for (const auto& l : hf_literals(2, 3)) sets.push_back(hf_to_v(l));
  for (const auto& a : sets) {
    Outcome r = u.apply(refl_code(), {a});
    ASSERT_TRUE(r.converged());
    EXPECT_TRUE(u.member(r.value, gl(a, a)).is_yes()) << type_to_string(a);
  }
}
