#include <gtest/gtest.h>

#include <map>
#include <random>

#include "erec/nat.hpp"

using erec::BigInt;
using erec::Nat;
using erec::Tri;

namespace {

// Independent oracle: p^e mod m by detecting the cycle of the power sequence.
std::uint64_t cycle_pow(std::uint64_t p, const BigInt& e, std::uint64_t m) {
  std::map<std::uint64_t, std::uint64_t> first_seen;
  std::vector<std::uint64_t> seq;
  std::uint64_t x = 1 % m;
  for (std::uint64_t i = 0;; ++i) {
    auto [it, fresh] = first_seen.emplace(x, i);
    if (!fresh) {
      std::uint64_t start = it->second;
      std::uint64_t period = i - start;
      if (e < start) return seq[e.convert_to<std::size_t>()];
      BigInt off = (e - start) % period;
      return seq[start + off.convert_to<std::size_t>()];
    }
    seq.push_back(x);
    x = x * (p % m) % m;
  }
}

BigInt brute_encode(const std::vector<std::uint64_t>& t) {
  static const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  BigInt v = 1;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::uint64_t j = 0; j <= t[i]; ++j) v *= primes[i];
  }
  return v;
}

}  // namespace

TEST(TupleCode, SmallExamples) {
  EXPECT_EQ(Nat::tuple({}), Nat(1));
  EXPECT_EQ(Nat::tuple({0}), Nat(2));
  EXPECT_EQ(Nat::tuple({1, 2}), Nat(108));
}

TEST(TupleCode, DecodeExamples) {
  EXPECT_TRUE(erec::decode_tuple(Nat(1)).empty());
  auto t = erec::decode_tuple(Nat(108));
  ASSERT_EQ(t.size(), 2U);
  EXPECT_EQ(t[0], Nat(1));
  EXPECT_EQ(t[1], Nat(2));
  EXPECT_THROW(erec::decode_tuple(Nat(10)), erec::NotATupleCode);
  EXPECT_THROW(erec::decode_tuple(Nat(0)), erec::NotATupleCode);
  EXPECT_THROW(erec::decode_tuple(Nat(5)), erec::NotATupleCode);
}

TEST(TupleCode, MatchesBruteForceProduct) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::uint64_t> t(rng() % 6);
    for (auto& x : t) x = rng() % 40;
    std::vector<Nat> elems(t.begin(), t.end());
    Nat code = Nat::tuple(elems);
    BigInt expected = brute_encode(t);
    ASSERT_EQ(*code.as_big(), expected);
    auto back = erec::decode_tuple(code);
    ASSERT_EQ(back.size(), t.size());
    for (std::size_t i = 0; i < t.size(); ++i) EXPECT_EQ(back[i], Nat(t[i]));
  }
}

TEST(TupleCode, DecodeRejectsEverythingOutsideTheImage) {
  // every n below 5000 that decodes must re-encode to itself
  for (std::uint64_t n = 0; n < 5000; ++n) {
    auto d = erec::try_decode_tuple(Nat(n));
    if (d.status == erec::TupleDecode::Status::ok) {
      EXPECT_EQ(Nat::tuple(d.elems), Nat(n)) << n;
    } else {
      EXPECT_EQ(d.status, erec::TupleDecode::Status::not_a_tuple) << n;
    }
  }
}

TEST(Pairing, Examples) {
  EXPECT_EQ(Nat::pair(0, 0), Nat(1));
  EXPECT_EQ(Nat::pair(1, 2), Nat(11));
  auto [a, b] = erec::unpair(Nat(12));
  EXPECT_EQ(a, Nat(2));
  EXPECT_EQ(b, Nat(1));
  EXPECT_THROW(erec::unpair(Nat(0)), erec::NotAPair);
}

TEST(Pairing, ExhaustiveInverseBelowTenThousand) {
  std::map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> image;
  for (std::uint64_t s = 0; s * s < 10000; ++s) {
    for (std::uint64_t a = 0; a <= s; ++a) {
      std::uint64_t v = s * s + a + 1;
      if (v < 10000) image[v] = {a, s - a};
    }
  }
  for (std::uint64_t x = 0; x < 10000; ++x) {
    auto d = erec::try_unpair(Nat(x));
    auto it = image.find(x);
    if (it == image.end()) {
      EXPECT_EQ(d.status, erec::PairDecode::Status::not_a_pair) << x;
    } else {
      ASSERT_EQ(d.status, erec::PairDecode::Status::ok) << x;
      EXPECT_EQ(d.first, Nat(it->second.first));
      EXPECT_EQ(d.second, Nat(it->second.second));
      EXPECT_EQ(Nat::pair(d.first, d.second), Nat(x));
    }
  }
}

TEST(SymbolicNat, LiteralsStayExactBelowTheLimit) {
  Nat big = Nat::tuple({1000});  // 2^1001
  EXPECT_TRUE(big.has_exact());
  EXPECT_EQ(*big.as_big(), BigInt(1) << 1001);
  EXPECT_EQ(big.kind(), Nat::Kind::big);
}

TEST(SymbolicNat, ResidueOfLargeTupleMatchesPowm) {
  Nat t = Nat::tuple({5000, 3});  // 2^5001 * 3^4
  EXPECT_FALSE(t.has_exact());
  for (std::uint64_t m : {2ULL, 7ULL, 1000ULL, 65537ULL, 999999937ULL, (1ULL << 61) - 1}) {
    BigInt expected = BigInt(boost::multiprecision::powm(BigInt(2), BigInt(5001), BigInt(m))) * 81 % m;
    EXPECT_EQ(t.residue(m), expected.convert_to<std::uint64_t>()) << m;
  }
}

TEST(SymbolicNat, ResidueOfTowerMatchesCycleOracle) {
  Nat inner = Nat::tuple({3000});  // 2^3001
  Nat tower = Nat::tuple({inner});  // 2^(2^3001 + 1)
  BigInt e = (BigInt(1) << 3001) + 1;
  for (std::uint64_t m : {3ULL, 100ULL, 1000ULL, 4096ULL, 99991ULL, 360360ULL}) {
    EXPECT_EQ(tower.residue(m), cycle_pow(2, e, m)) << m;
  }
}

TEST(SymbolicNat, PairAndOffsetResidues) {
  Nat h = Nat::tuple({5000});
  BigInt hv = BigInt(1) << 5001;
  Nat p = Nat::pair(h, 7);
  Nat q = h.plus(-3);
  for (std::uint64_t m : {5ULL, 1009ULL, 1000003ULL}) {
    BigInt pv = (hv + 7) * (hv + 7) + hv + 1;
    EXPECT_EQ(p.residue(m), (pv % m).convert_to<std::uint64_t>());
    EXPECT_EQ(q.residue(m), ((hv - 3) % m).convert_to<std::uint64_t>());
  }
}

TEST(SymbolicNat, StructuralEqualityAndHashConsing) {
  Nat inner = Nat::tuple({3000});
  Nat a = Nat::tuple({inner, 4});
  Nat b = Nat::tuple({inner, 4});
  Nat c = Nat::tuple({inner, 5});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.node(), b.node());
  EXPECT_EQ(a.equals(c), Tri::no);
  EXPECT_EQ(a.equals(Nat(12)), Tri::no);
  EXPECT_EQ(a.less_equal(a.succ()), Tri::yes);
  EXPECT_EQ(a.succ().pred(), a);
  EXPECT_EQ(Nat(12).less(a), Tri::yes);
}

TEST(SymbolicNat, CrossShapeComparisonUsesFingerprints) {
  Nat t = Nat::tuple({5000});
  Nat p = Nat::pair(Nat::tuple({2600}), 0);
  EXPECT_EQ(t.equals(p), Tri::no);
  EXPECT_EQ(p.equals(t), Tri::no);
}

TEST(SymbolicNat, DecodeOfLargeNonTupleIsRefuted) {
  Nat t = Nat::tuple({5000});
  EXPECT_EQ(erec::try_decode_tuple(t.succ()).status, erec::TupleDecode::Status::not_a_tuple);
  Nat p = Nat::pair(t, 0);  // (2^5001)^2 + 2^5001 + 1 is odd
  EXPECT_EQ(erec::try_decode_tuple(p).status, erec::TupleDecode::Status::not_a_tuple);
  auto d = erec::try_unpair(p);
  ASSERT_EQ(d.status, erec::PairDecode::Status::ok);
  EXPECT_EQ(d.first, t);
}

TEST(SymbolicNat, PredSuccRoundTripAtTheLiteralBoundary) {
  BigInt limit = BigInt(1) << Nat::kLiteralBits;
  Nat x(limit);
  EXPECT_EQ(*x.pred().succ().as_big(), limit);
  EXPECT_EQ(Nat(0).pred(), Nat(0));
  Nat m(std::numeric_limits<std::uint64_t>::max());
  EXPECT_EQ(*m.succ().as_big(), BigInt(std::numeric_limits<std::uint64_t>::max()) + 1);
  EXPECT_EQ(m.succ().pred(), m);
}

TEST(Primes, SieveAndMillerRabinAgree) {
  for (std::size_t i = 0; i < 2000; ++i) EXPECT_TRUE(erec::is_prime_u64(erec::prime(i)));
  EXPECT_EQ(erec::prime(0), 2U);
  EXPECT_EQ(erec::prime(9), 29U);
  EXPECT_FALSE(erec::is_prime_u64(3215031751ULL));  // strong pseudoprime to bases 2,3,5,7
  EXPECT_TRUE(erec::is_prime_u64((1ULL << 61) - 1));
}

TEST(Primes, TotientMatchesCounting) {
  for (std::uint64_t m = 1; m < 400; ++m) {
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k <= m; ++k) count += std::gcd(k, m) == 1 ? 1 : 0;
    EXPECT_EQ(erec::totient(m), count) << m;
  }
}
