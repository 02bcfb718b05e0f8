#ifndef EREC_KERNEL_ANALYSIS_HPP
#define EREC_KERNEL_ANALYSIS_HPP

#include <cstddef>
#include <vector>

#include "erec/nat.hpp"

namespace erec {

/// Conservative static check that the behaviour of `code` (convergence and
/// value) does not depend on argument i. False means "not shown".
bool ignores_argument(const Nat& code, std::size_t i);

/// Arity-1 code returning values[j] on keys[j] and `fallback` elsewhere.
/// Every entry is a literal, so evaluation is a chain of Cases steps.
Nat table_code(const std::vector<Nat>& keys, const std::vector<Nat>& values, const Nat& fallback = 0);

}  // namespace erec

#endif  // EREC_KERNEL_ANALYSIS_HPP
