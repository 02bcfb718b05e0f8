#ifndef EREC_LFP_FIXPOINT_HPP
#define EREC_LFP_FIXPOINT_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace erec {

/// Subset of the carrier [0, bound).
using AtomSet = boost::dynamic_bitset<>;

/// Operator on subsets of [0, bound). `step` must return a set of size
/// `bound`; `describe` renders one atom for traces.
struct MonotoneOperator {
  std::size_t bound = 0;
  std::function<AtomSet(const AtomSet&)> step;
  std::string name;
  std::function<std::string(std::size_t)> describe;
};

/// stages[i] = step^i(empty); stages.back() is the least fixed point, first
/// reached at closure_stage.
struct FixpointResult {
  std::vector<AtomSet> stages;
  AtomSet lfp;
  std::size_t closure_stage = 0;
};

class NonMonotoneDetected : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct IterateOptions {
  /// Random pairs X <= Y checked for step(X) <= step(Y) before iterating.
  std::size_t probes = 8;
  std::uint64_t seed = 0x5eed;
};

FixpointResult iterate(const MonotoneOperator& op, IterateOptions opts = {});

/// step(F) <= F.
bool is_prefixed(const MonotoneOperator& op, const AtomSet& f);
/// First sampled pair violating monotonicity, as text; empty when none.
std::string probe_monotone(const MonotoneOperator& op, std::size_t probes, std::uint64_t seed);

AtomSet atom_set(std::size_t bound, std::initializer_list<std::size_t> atoms);
std::vector<std::size_t> atoms_of(const AtomSet& s);

/// One line per stage listing the atoms new at that stage.
std::string dump_stages(const MonotoneOperator& op, const FixpointResult& r, std::size_t per_stage_limit = 64);

}  // namespace erec

#endif  // EREC_LFP_FIXPOINT_HPP
