#ifndef EREC_TESTS_RANDOM_CODES_HPP
#define EREC_TESTS_RANDOM_CODES_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "erec/kernel/code.hpp"
#include "erec/kernel/library.hpp"
#include "erec/nat.hpp"

namespace erec::testing {

// Random well-formed codes of a requested arity over every head, with a
// sprinkling of raw numerals standing in for malformed codes.
class CodeGen {
 public:
  explicit CodeGen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  Nat small_value() { return Nat(below(8)); }

  std::vector<Nat> args(std::size_t k) {
    std::vector<Nat> a;
    for (std::size_t i = 0; i < k; ++i) a.push_back(small_value());
    return a;
  }

  Nat code(std::size_t k, int depth) {
    if (depth <= 0) return leaf(k);
    switch (below(9)) {
      case 0:
      case 1:
        return leaf(k);
      case 2: {
        std::size_t j = below(3);
        std::vector<Nat> parts;
        for (std::size_t i = 0; i < j; ++i) parts.push_back(code(k, depth - 1));
        return comp_code(k, code(j, depth - 1), parts);
      }
      case 3:
        return comp_code(k, cases_code(0),
                         {code(k, depth - 1), code(k, depth - 1), code(k, depth - 1), code(k, depth - 1)});
      case 4: {
        std::size_t j = below(3);
        std::vector<Nat> parts{chance(0.8) ? const_code(k, code(j, depth - 1)) : code(k, depth - 1)};
        for (std::size_t i = 0; i < j; ++i) parts.push_back(code(k, depth - 1));
        return comp_code(k, univ_code(j), parts);
      }
      case 5:
        return efun_code(k, search_base(k + 1, depth - 1));
      case 6: {
        Nat p = code(1 + below(2), depth - 1);
        return comp_code(k, smn_code(0), {const_code(k, p), code(k, depth - 1)});
      }
      case 7:
        return comp_code(k, library().pair, {code(k, depth - 1), code(k, depth - 1)});
      default:
        return comp_code(k, code(1, depth - 1), {code(k, depth - 1)});
    }
  }

  // Often has a zero: compares the search variable with something small.
  Nat search_base(std::size_t k, int depth) {
    if (chance(0.6)) {
      Nat rhs = k > 1 && chance(0.5) ? proj_code(k, 1 + below(k - 1)) : const_code(k, small_value());
      return comp_code(k, cases_code(0), {const_code(k, 0), const_code(k, 1 + below(3)), proj_code(k, 0), rhs});
    }
    return code(k, depth);
  }

  Nat leaf(std::size_t k) {
    switch (below(k == 0 ? 2 : 5)) {
      case 0:
        return const_code(k, small_value());
      case 1:
        return chance(0.15) ? Nat(below(200)) : const_code(k, Nat(below(40)));
      case 2:
      case 3:
        return proj_code(k, below(k));
      default:
        return succ_code(k, below(k));
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace erec::testing

#endif  // EREC_TESTS_RANDOM_CODES_HPP
