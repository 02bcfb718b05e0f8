#ifndef EREC_LFP_COMP_ORACLE_HPP
#define EREC_LFP_COMP_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "erec/kernel/certificate.hpp"
#include "erec/lfp/fixpoint.hpp"
#include "erec/nat.hpp"

namespace erec {

/// Finite carrier for the computation relation. The value domain is the
/// numerals below `values` together with a generated pool of `codes` codes
/// (and their sub-codes) nested up to `depth`. Atoms are triples (a, m, n)
/// with (a, m) a query reachable from the pool and n in the domain.
struct CompCarrierSpec {
  std::size_t codes = 48;
  std::size_t depth = 3;
  std::uint64_t values = 6;
  std::uint64_t seed = 1;
  /// Added to the pool ahead of the generated codes.
  std::vector<Nat> extra;
};

struct CompTriple {
  Nat code;
  std::vector<Nat> args;
  Nat value;
};

struct OracleComparison {
  std::size_t lfp_atoms = 0;
  std::size_t queries = 0;
  std::size_t agreed = 0;             // oracle value equals the VM value
  std::size_t both_silent = 0;        // neither side has a value
  std::size_t outside_carrier = 0;    // VM converged through atoms outside the carrier
  std::size_t multi_valued = 0;
  std::vector<std::string> mismatches;

  bool ok() const { return multi_valued == 0 && mismatches.empty(); }
};

class CompOracle {
 public:
  /// Builds the carrier, closing the query set under the base calls that
  /// compositions demand on their least fixed point.
  explicit CompOracle(CompCarrierSpec spec = {}, CertificateStore* certs = &global_certificates());

  const MonotoneOperator& op() const;
  std::size_t carrier_size() const;
  std::size_t query_count() const;
  std::size_t domain_size() const;
  std::size_t demand_rounds() const;
  const std::vector<Nat>& pool() const;
  /// Pool codes with arity <= 2 whose argument vectors range over numerals.
  std::size_t top_level_queries() const;

  CompTriple triple(std::size_t atom) const;
  std::optional<std::size_t> atom(const Nat& code, std::span<const Nat> args, const Nat& value) const;

  /// Single-valuedness of `r.lfp` and agreement with the VM (jets off) on
  /// every query of the carrier.
  OracleComparison compare(const FixpointResult& r, std::uint64_t fuel) const;

  struct State;

 private:
  std::shared_ptr<State> s_;
  MonotoneOperator op_;
};

CompOracle comp_operator(CompCarrierSpec spec = {});

}  // namespace erec

#endif  // EREC_LFP_COMP_ORACLE_HPP
