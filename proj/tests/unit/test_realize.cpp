#include <gtest/gtest.h>

#include "erec/kernel/analysis.hpp"
#include "erec/kernel/code.hpp"
#include "erec/kernel/library.hpp"
#include "erec/realize/lpo.hpp"
#include "erec/realize/realize.hpp"
#include "erec/syntax.hpp"
#include "erec/universe/vset.hpp"
#include "hf_oracle.hpp"

using namespace erec;

namespace {

SetTerm hf(const char* s) { return SetTerm::literal(hf_to_v(parse_hf(s)), s); }
SetTerm var(const char* x) { return SetTerm::variable(x); }

}  // namespace

TEST(Formula, ScopeAndPrinting) {
  Formula f = Formula::all_in("x", hf("{{}}"), Formula::in(var("x"), var("y")));
  EXPECT_EQ(f.free_variables(), std::vector<std::string>{"y"});
  EXPECT_TRUE(f.well_scoped());
  EXPECT_FALSE(Formula::ex("x", Formula::all("x", Formula::eq(var("x"), var("x")))).well_scoped());
  EXPECT_EQ(to_string(Formula::neg(Formula::eq(var("a"), var("b")))), "(not (= a b))");
}

TEST(Formula, SubstitutionSkipsBoundOccurrences) {
  Formula f = Formula::conj(Formula::in(var("x"), var("y")),
                            Formula::all_in("x", var("x"), Formula::eq(var("x"), var("y"))));
  Formula g = substitute(f, "x", hf("{}"));
  EXPECT_EQ(to_string(g), "(and (in {} y) (all-in x {} (= x y)))");
  EXPECT_EQ(g.free_variables(), std::vector<std::string>{"y"});
}

TEST(Realize, Equality) {
  Realizer r;
  Formula f = Formula::eq(hf("{}"), hf("{}"));
  EXPECT_TRUE(r.realizes(Nat::pair(0, 0), f).is_yes());
  EXPECT_TRUE(r.realizes(Nat(0), f).is_no());
  auto s = r.search(f);
  ASSERT_TRUE(s.realizer.has_value());
  EXPECT_EQ(*s.realizer, Nat::pair(0, 0));
  EXPECT_FALSE(s.synthesized);
}

TEST(Realize, Membership) {
  Realizer r;
  Formula empty_in_empty = Formula::in(hf("{}"), hf("{}"));
  for (std::uint64_t e = 0; e < 40; ++e) EXPECT_TRUE(r.realizes(e, empty_in_empty).is_no()) << e;
  EXPECT_TRUE(r.refute(empty_in_empty).is_yes());
  EXPECT_FALSE(r.search(empty_in_empty).realizer.has_value());

  Formula f = Formula::in(hf("{}"), hf("{{}}"));
  auto s = r.search(f);
  ASSERT_TRUE(s.realizer.has_value());
  EXPECT_EQ(try_unpair(*s.realizer).first, Nat(0));
  EXPECT_TRUE(r.realizes(*s.realizer, f).is_yes());
}

TEST(Realize, Conjunction) {
  Realizer r;
  Formula p = Formula::eq(hf("{}"), hf("{}"));
  Formula q = Formula::in(hf("{}"), hf("{{}}"));
  Formula f = Formula::conj(p, q);
  auto rq = r.synthesize(q);
  ASSERT_TRUE(rq);
  Nat e = Nat::pair(Nat::pair(0, 0), *rq);
  EXPECT_TRUE(r.realizes(e, f).is_yes());
  EXPECT_EQ(r.realizes(e, f).is_yes(),
            r.realizes(Nat::pair(0, 0), p).is_yes() && r.realizes(*rq, q).is_yes());
  EXPECT_TRUE(r.realizes(Nat::pair(*rq, Nat::pair(0, 0)), f).is_no());
}

TEST(Realize, Disjunction) {
  Realizer r;
  Formula p = Formula::eq(hf("{}"), hf("{{}}"));
  Formula q = Formula::eq(hf("{}"), hf("{}"));
  Formula f = Formula::disj(p, q);
  EXPECT_TRUE(r.realizes(Nat::pair(1, Nat::pair(0, 0)), f).is_yes());
  EXPECT_TRUE(r.realizes(Nat::pair(0, Nat::pair(0, 0)), f).is_no());
  EXPECT_TRUE(r.realizes(Nat::pair(2, Nat::pair(0, 0)), f).is_no());
}

TEST(Realize, NegationByVacuity) {
  Realizer r;
  Formula f = Formula::neg(Formula::in(var("x"), hf("{}")));
  Environment env{{"x", vnat(1)}};
  EXPECT_TRUE(r.realizes(0, f, env).is_yes());
  EXPECT_TRUE(r.realizes(12345, f, env).is_yes());
  Formula g = Formula::neg(Formula::in(hf("{}"), hf("{{}}")));
  EXPECT_TRUE(r.realizes(0, g).is_no());
}

TEST(Realize, Implication) {
  Realizer r;
  Formula truth = Formula::eq(hf("{}"), hf("{}"));
  Formula falsity = Formula::in(hf("{}"), hf("{}"));
  EXPECT_TRUE(r.realizes(77, Formula::implies(falsity, truth)).is_yes());
  EXPECT_TRUE(r.realizes(const_code(1, Nat::pair(0, 0)), Formula::implies(truth, truth)).is_yes());
  EXPECT_TRUE(r.realizes(const_code(1, 0), Formula::implies(truth, truth)).is_no());
  // 5 = (0,2) realizes {} = {}: both function components range over fin 0
  EXPECT_TRUE(r.realizes(const_code(1, 5), Formula::implies(truth, truth)).is_yes());
  EXPECT_TRUE(r.realizes(library().id, Formula::implies(truth, truth)).is_unknown());
  EXPECT_TRUE(r.realizes(Nat(10), Formula::implies(truth, truth)).is_no());
}

TEST(Realize, BoundedQuantifiers) {
  Realizer r;
  SetTerm two = SetTerm::literal(vnat(2), "(vnat 2)");
  // every element of 2 is in 3
  Formula all = Formula::all_in("x", two, Formula::in(var("x"), SetTerm::literal(vnat(3))));
  auto e = r.synthesize(all);
  ASSERT_TRUE(e);
  EXPECT_TRUE(r.realizes(*e, all).is_yes());
  Formula some = Formula::ex_in("x", two, Formula::eq(var("x"), hf("{{}}")));
  auto w = r.synthesize(some);
  ASSERT_TRUE(w);
  EXPECT_EQ(try_unpair(*w).first, Nat(1));
  EXPECT_TRUE(r.realizes(*w, some).is_yes());
  EXPECT_TRUE(r.realizes(Nat::pair(0, try_unpair(*w).second), some).is_no());
}

TEST(Realize, OmegaWitness) {
  Realizer r;
  SetTerm w = SetTerm::literal(omega(), "omega");
  Formula f = Formula::ex_in("x", w, Formula::eq(var("x"), SetTerm::literal(vnat(3))));
  auto inner = r.synthesize(Formula::eq(SetTerm::literal(vnat(3)), SetTerm::literal(vnat(3))));
  ASSERT_TRUE(inner);
  EXPECT_TRUE(r.realizes(Nat::pair(3, *inner), f).is_yes());
  EXPECT_TRUE(r.realizes(Nat::pair(2, *inner), f).is_no());
}

TEST(Realize, UnboundedQuantifiers) {
  Realizer r;
  Formula vac = Formula::all("x", Formula::neg(Formula::in(var("x"), hf("{}"))));
  EXPECT_TRUE(r.realizes(const_code(1, 0), vac).is_yes());
  EXPECT_TRUE(r.realizes(Nat(10), vac).is_no());
  Formula refl = Formula::all("x", Formula::eq(var("x"), var("x")));
  EXPECT_TRUE(r.realizes(const_code(1, 0), refl).is_no());
  Formula ex = Formula::ex("x", Formula::eq(var("x"), hf("{{}}")));
  auto e = r.synthesize(ex);
  ASSERT_TRUE(e);
  EXPECT_TRUE(r.realizes(*e, ex).is_yes());
  EXPECT_TRUE(r.realizes(Nat::pair(fin_type(2), 0), ex).is_no());
}

TEST(Realize, UnboundVariable) {
  Realizer r;
  EXPECT_THROW(r.realizes(0, Formula::eq(var("x"), hf("{}"))), UnboundVariable);
}

TEST(Realize, StructuralLog) {
  Realizer r;
  std::vector<RealizeStep> log;
  r.set_log(&log);
  Formula f = Formula::conj(Formula::eq(hf("{}"), hf("{}")),
                            Formula::disj(Formula::in(hf("{}"), hf("{}")), Formula::eq(hf("{}"), hf("{}"))));
  Nat e = Nat::pair(Nat::pair(0, 0), Nat::pair(1, Nat::pair(0, 0)));
  ASSERT_TRUE(r.realizes(e, f).is_yes());
  ASSERT_GE(log.size(), 3u);
  for (const auto& s : log) EXPECT_TRUE(s.verdict.is_yes());
  EXPECT_EQ(log.back().kind, Formula::Kind::and_);
}

TEST(Predicate, Parse) {
  EXPECT_TRUE(parse_predicate("n==3").holds(3));
  EXPECT_FALSE(parse_predicate("n == 3").holds(4));
  EXPECT_EQ(parse_predicate("n==3").tail_start(), 4u);
  EXPECT_TRUE(parse_predicate("n<2").holds(1));
  EXPECT_TRUE(parse_predicate("n>=5").holds(9));
  Predicate s = parse_predicate("n in {2,0}");
  EXPECT_TRUE(s.holds(0));
  EXPECT_FALSE(s.holds(1));
  EXPECT_EQ(s.tail_start(), 3u);
  EXPECT_EQ(s.text(), "n in {0,2}");
  EXPECT_THROW(parse_predicate("n!=2"), PredicateParseError);
}

TEST(Lpo, ExistentialBranch) {
  Realizer r;
  SetTerm b = SetTerm::literal(hf_to_v(parse_hf("{3}")), "B");
  Formula p = Formula::in(var("x"), b);
  Formula q = Formula::neg(Formula::in(var("x"), b));
  DisjunctionFamily fam = build_disjunction_family(parse_predicate("n==3"), "x", p, q, r);
  EXPECT_FALSE(fam.certified);
  EXPECT_EQ(try_unpair(apply(fam.code, {Nat(3)}, 10'000).value).first, Nat(0));
  EXPECT_EQ(try_unpair(apply(fam.code, {Nat(5)}, 10'000).value).first, Nat(1));

  Outcome o = lpo_transform(fam.code);
  ASSERT_TRUE(o.converged()) << o.to_string();
  auto top = try_unpair(o.value);
  EXPECT_EQ(top.first, Nat(0));
  EXPECT_EQ(try_unpair(top.second).first, Nat(3));
  EXPECT_TRUE(r.realizes(o.value, lpo_target("x", p, q)).is_yes());

  Outcome lit = lpo_transform(fam.code, true);
  ASSERT_TRUE(lit.converged());
  EXPECT_TRUE(r.realizes(lit.value, lpo_target("x", p, q)).is_no());
}

TEST(Lpo, UniversalBranch) {
  CertificateStore certs;
  Realizer r({}, &certs);
  SetTerm b = SetTerm::literal(hf_to_v(parse_hf("{}")), "B");
  Formula p = Formula::in(var("x"), b);
  Formula q = Formula::neg(Formula::in(var("x"), b));

  DisjunctionFamily fam = build_disjunction_family(parse_predicate("never"), "x", p, q, r, certs);
  EXPECT_TRUE(fam.certified);
  for (std::uint64_t n = 0; n < 10; ++n) {
    EXPECT_EQ(try_unpair(apply(fam.code, {Nat(n)}, 10'000).value).first, Nat(1));
  }
  Machine vm(MachineOptions{}, &certs);
  Outcome o = vm.apply(lpo_code(), {fam.code}, 100'000);
  ASSERT_TRUE(o.converged()) << o.to_string();
  auto top = try_unpair(o.value);
  EXPECT_EQ(top.first, Nat(1));
  for (std::uint64_t n = 0; n <= 20; ++n) {
    Outcome rn = vm.apply(top.second, {Nat(n)}, 10'000);
    ASSERT_TRUE(rn.converged());
    EXPECT_TRUE(r.realizes(rn.value, q, {{"x", vnat(n)}}).is_yes()) << n;
  }
  Verdict v = r.realizes(o.value, lpo_target("x", p, q));
  EXPECT_TRUE(v.is_unknown()) << v.evidence;

  CertificateStore empty;
  Machine uncertified(MachineOptions{}, &empty);
  EXPECT_TRUE(uncertified.apply(lpo_code(), {fam.code}, 5'000).is_unknown());
}

TEST(Syntax, Codes) {
  EXPECT_EQ(parse_code("<0,1,0,7>"), Nat::tuple({0, 1, 0, 7}));
  EXPECT_EQ(parse_code("<3,1,B2>"), Nat::tuple({3, 1, library().b2}));
  EXPECT_EQ(parse_code("(2,1)"), Nat(12));
  EXPECT_EQ(parse_code(format_code(library().pair)), library().pair);
  EXPECT_EQ(parse_code(format_code(gl_code())), gl_code());
  EXPECT_EQ(parse_code(format_code(vnat(4))), vnat(4));
  EXPECT_THROW(parse_code("<1,2"), SyntaxError);
  EXPECT_THROW(parse_code("NOPE"), SyntaxError);
}

TEST(Syntax, Types) {
  EXPECT_EQ(parse_type("fin 3"), Nat(10));
  EXPECT_EQ(parse_type("nat"), nat_type());
  EXPECT_EQ(parse_type("pl(fin 1, fin 3)"), pl_type(fin_type(1), fin_type(3)));
  EXPECT_EQ(parse_type("pi(nat, <0,1,0,5>)"), pi_type(nat_type(), Nat::tuple({0, 1, 0, 5})));
}

TEST(Syntax, Formulas) {
  Formula f = parse_formula("(all-in x (vnat 2) (-> (in x (hf {{},{{}}})) (not (= x omega))))");
  EXPECT_EQ(to_string(f), "(all-in x (vnat 2) (-> (in x (hf {{},{{}}})) (not (= x omega))))");
  EXPECT_EQ(to_string(parse_formula("(ex y (and (= y y) (or (= y (hf 2)) (in y y))))")),
            "(ex y (and (= y y) (or (= y (hf {{},{{}}})) (in y y))))");
  EXPECT_THROW(parse_formula("(all x (ex x (= x x)))"), SyntaxError);
  EXPECT_THROW(parse_formula("(nand a b)"), SyntaxError);
}

TEST(Syntax, Certificates) {
  TotalityCertificate c;
  c.code = library().b2;
  c.context = {5};
  c.prefix = {1, 0, 2};
  c.tail_from = 3;
  c.tail_value = 1;
  TotalityCertificate d = parse_certificate(format_certificate(c));
  EXPECT_EQ(d.code, c.code);
  EXPECT_EQ(d.context, c.context);
  EXPECT_EQ(d.prefix, c.prefix);
  EXPECT_EQ(d.tail_from, 3u);
  EXPECT_EQ(d.tail_value, Nat(1));
}
