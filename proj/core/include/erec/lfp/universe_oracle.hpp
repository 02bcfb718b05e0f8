#ifndef EREC_LFP_UNIVERSE_ORACLE_HPP
#define EREC_LFP_UNIVERSE_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "erec/lfp/fixpoint.hpp"
#include "erec/nat.hpp"
#include "erec/universe/universe.hpp"

namespace erec {

/// Types are the seeds closed under components and family values; elements
/// are the numerals below `numerals` plus `extra_elements`. Quantifiers over
/// all k range over the elements.
struct UniverseCarrierSpec {
  std::vector<Nat> types;
  std::uint64_t numerals = 33;
  std::vector<Nat> extra_elements;
  std::uint64_t fuel = 10'000;
  std::size_t max_types = 256;
};

/// Finite, infinite-base and ill-formed seeds with a few function codes as
/// extra elements.
UniverseCarrierSpec default_universe_carrier();

enum class UAtomKind { u, v, e, ne };

struct UAtom {
  UAtomKind kind;
  Nat element;  // unused for u and v
  Nat type;
};

struct UniverseComparison {
  std::size_t types = 0;
  std::size_t exact_types = 0;
  std::size_t checked = 0;
  std::size_t agreed = 0;
  std::size_t gaps = 0;       // member definite, oracle silent, outside the exact part
  std::size_t overlaps = 0;   // both E and NE in the fixed point
  std::vector<std::string> mismatches;

  bool ok() const { return overlaps == 0 && mismatches.empty(); }
};

class UniverseOracle {
 public:
  explicit UniverseOracle(UniverseCarrierSpec spec = default_universe_carrier());

  const MonotoneOperator& op() const;
  std::size_t type_count() const;
  std::size_t element_count() const;
  const std::vector<Nat>& types() const;

  UAtom atom_info(std::size_t atom) const;
  std::optional<std::size_t> atom(UAtomKind kind, const Nat& element, const Nat& type) const;

  /// Every quantifier the clauses place on this type ranges over a finite
  /// base lying inside the carrier, so the relativized fixed point is exact.
  bool exact(const Nat& type) const;

  UniverseComparison compare(const FixpointResult& r, Universe& u) const;

  struct State;

 private:
  std::shared_ptr<State> s_;
  MonotoneOperator op_;
};

UniverseOracle universe_operator(UniverseCarrierSpec spec = default_universe_carrier());

}  // namespace erec

#endif  // EREC_LFP_UNIVERSE_ORACLE_HPP
