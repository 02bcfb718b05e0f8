#ifndef EREC_REALIZE_REALIZE_HPP
#define EREC_REALIZE_REALIZE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "erec/realize/formula.hpp"
#include "erec/universe/universe.hpp"

namespace erec {

struct RealizeOptions {
  std::uint64_t fuel = 10'000;
  std::uint64_t probe = 21;           // instances checked over an infinite base
  std::size_t candidate_bound = 512;  // numeric candidates tried by search
  /// V-codes used to spot-check unbounded quantifiers. Empty selects the
  /// literals of rank <= 2 and vnat(0..3).
  std::vector<Nat> spot_family;
};

/// One clause decision, recorded when a log is attached.
struct RealizeStep {
  Formula::Kind kind;
  Nat realizer;
  Verdict verdict;
  std::size_t depth = 0;
};

struct SearchResult {
  std::optional<Nat> realizer;
  std::size_t numeric_checked = 0;
  bool synthesized = false;
  Verdict verdict;  // of the returned realizer, or why none was found
};

class Realizer {
 public:
  explicit Realizer(RealizeOptions opts = {}, CertificateStore* certs = &global_certificates());

  /// e realizes phi under env. Throws UnboundVariable for a free variable
  /// missing from env.
  Verdict realizes(const Nat& e, const Formula& phi, const Environment& env = {});
  /// Yes when phi has no realizer, No when it has one.
  Verdict refute(const Formula& phi, const Environment& env = {});
  /// Builds a realizer from witnesses of the types involved.
  std::optional<Nat> synthesize(const Formula& phi, const Environment& env = {});
  /// Least e below the candidate bound that realizes phi; past the bound a
  /// synthesized realizer, checked with realizes.
  SearchResult search(const Formula& phi, const Environment& env = {});

  void set_log(std::vector<RealizeStep>* log) noexcept { log_ = log; }
  RealizeOptions& options() noexcept { return opts_; }
  Universe& universe() noexcept { return u_; }

 private:
  Verdict check(const Nat& e, const Formula& phi, Environment& env);
  Verdict check_clause(const Nat& e, const Formula& phi, Environment& env);
  Verdict refute_in(const Formula& phi, Environment& env);
  std::optional<Nat> build(const Formula& phi, Environment& env);
  /// Value of a term; nullopt for a generic variable.
  std::optional<Nat> resolve(const SetTerm& t, const Environment& env) const;
  const std::vector<Nat>& spot_family();

  RealizeOptions opts_;
  Universe u_;
  std::vector<RealizeStep>* log_ = nullptr;
  std::size_t depth_ = 0;
  std::vector<Nat> default_family_;
};

}  // namespace erec

#endif  // EREC_REALIZE_REALIZE_HPP
