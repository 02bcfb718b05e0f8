#ifndef EREC_REALIZE_LPO_HPP
#define EREC_REALIZE_LPO_HPP

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "erec/kernel/machine.hpp"
#include "erec/realize/realize.hpp"

namespace erec {

/// Which disjunct holds at n: never, always, n==K, n<K, n>=K, n in {a,b,..}.
/// Every such predicate is constant from tail_start() on.
struct Predicate {
  enum class Kind { never, always, eq, lt, ge, in_set };
  Kind kind = Kind::never;
  std::uint64_t k = 0;
  std::set<std::uint64_t> members;

  bool holds(std::uint64_t n) const;
  std::uint64_t tail_start() const;
  std::string text() const;
};

class PredicateParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Predicate parse_predicate(std::string_view text);

class NoInstanceRealizer : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Index f with {f}(n) = (tag_n, r_n): tag 0 and r_n realizing P(vnat n)
/// where the predicate holds, tag 1 and r_n realizing R(vnat n) elsewhere.
struct DisjunctionFamily {
  Nat code;
  std::vector<std::uint64_t> tags;  // below tail_from
  std::uint64_t tail_from = 0;
  std::uint64_t tail_tag = 1;
  bool certified = false;  // tag function certificate registered
  bool uniform_tail = false;  // tail realizers computed from n rather than reused
};

/// Per-instance realizers come from `realizer.search`; the tail instance is
/// reused for every n >= tail_from after checking `tail_checks` further
/// points. When reuse fails the tail realizer is built as a function of n
/// for a fragment (closed parts, negations, x = x, x in omega, connectives)
/// and checked at the same points. Registers the certificate on the tag search when every tag is 1.
DisjunctionFamily build_disjunction_family(const Predicate& pred, const std::string& var, const Formula& p,
                                           const Formula& r, Realizer& realizer,
                                           CertificateStore& certs = global_certificates(),
                                           std::uint64_t tail_checks = 8);

/// Code of (p, f, x) -> (f(p))0, whose least zero in p the E-functional finds.
const Nat& lpo_tag_code();
/// Code b* with {b*}(f) = (tag, content). The literal variant uses sg of the
/// E-result as the tag; the default uses 1 - sg.
const Nat& lpo_code(bool literal_sg = false);
Outcome lpo_transform(const Nat& f, bool literal_sg = false, std::uint64_t fuel = 100'000);

/// (or (ex-in x omega P) (all-in x omega R))
Formula lpo_target(const std::string& var, const Formula& p, const Formula& r);

}  // namespace erec

#endif  // EREC_REALIZE_LPO_HPP
