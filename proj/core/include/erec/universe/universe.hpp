#ifndef EREC_UNIVERSE_UNIVERSE_HPP
#define EREC_UNIVERSE_UNIVERSE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "erec/kernel/machine.hpp"
#include "erec/universe/typecode.hpp"

namespace erec {

struct UniverseBounds {
  std::uint64_t fuel = 10'000;           // per code application
  std::uint64_t probe = 64;              // arguments probed over an infinite base
  std::size_t enumerate_limit = 4096;    // largest finite type listed element by element
  std::size_t depth = 512;               // nesting of type codes followed
};

struct Inhabitant {
  Verdict verdict;
  Nat witness;
};

/// Membership (E / NE), universe and V checks over coded types. Yes means a
/// derivation of x E T was found, No a derivation of x NE T.
///
/// Definite verdicts are cached; they depend only on the certificate store,
/// which may only grow, so cached answers stay valid.
class Universe {
 public:
  explicit Universe(UniverseBounds bounds = {}, CertificateStore* certs = &global_certificates());

  Verdict member(const Nat& x, const Nat& t);
  Verdict in_universe(const Nat& t);
  Verdict in_v(const Nat& alpha);

  /// Every k with k E t, for types listable without search.
  std::optional<std::vector<Nat>> elements(const Nat& t);
  /// Whether some k E t exists, with a witness.
  Inhabitant inhabit(const Nat& t);

  Outcome apply(const Nat& code, std::initializer_list<Nat> args);
  Outcome apply(const Nat& code, std::span<const Nat> args);

  UniverseBounds& bounds() noexcept { return bounds_; }
  Machine& machine() noexcept { return vm_; }

 private:
  struct PairKeyHash {
    std::size_t operator()(const std::pair<Nat, Nat>& k) const noexcept {
      return k.first.hash() * 1000003U ^ k.second.hash();
    }
  };

  Verdict member_impl(const Nat& x, const Nat& t);
  Verdict in_universe_impl(const Nat& t);
  Verdict in_v_impl(const Nat& alpha);
  Inhabitant inhabit_impl(const Nat& t);
  Verdict for_all_in_family(const Nat& base, const Nat& family,
                            const std::function<Verdict(const Nat&)>& pred, const char* what);
  Verdict pi_member(const Nat& d, const Nat& base, const Nat& family);

  UniverseBounds bounds_;
  Machine vm_;
  std::size_t depth_ = 0;
  std::unordered_map<std::pair<Nat, Nat>, Verdict, PairKeyHash> member_memo_;
  std::unordered_map<Nat, Verdict> universe_memo_;
  std::unordered_map<Nat, Verdict> v_memo_;
  std::unordered_map<Nat, Inhabitant> inhabit_memo_;
};

/// Evaluates on a thread-local Universe with the given probe bound.
Verdict member(const Nat& x, const Nat& t, std::uint64_t bound = 64);
Verdict in_universe(const Nat& t, std::uint64_t bound = 64);

}  // namespace erec

#endif  // EREC_UNIVERSE_UNIVERSE_HPP
