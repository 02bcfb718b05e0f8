#ifndef EREC_KERNEL_LIBRARY_HPP
#define EREC_KERNEL_LIBRARY_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "erec/nat.hpp"

namespace erec {

/// Host implementation of a library code. nullopt means the answer depends
/// on a value too large to decide.
using JetFn = std::function<std::optional<Nat>(std::span<const Nat>)>;

struct Jet {
  std::string name;
  std::size_t arity = 0;
  JetFn fn;
};

/// Arithmetic on codes, written as ordinary programs out of the clause heads.
/// FST and SND answer 0 outside the range of the pairing function.
struct Library {
  Nat id;    // x -> x
  Nat pred;  // n -> n-1, pred 0 = 0
  Nat add;
  Nat mul;
  Nat leq;   // 1 if a <= b else 0
  Nat pair;
  Nat fst;
  Nat snd;
  Nat b2;    // (p, x) -> 0 iff p = 2
};

const Library& library();

/// Jet registered for `code`, if any.
const Jet* find_jet(const Nat& code);

/// Name of a library code, or empty.
std::string_view library_name(const Nat& code);

/// Registers an additional named code (without a jet) for printing and
/// literal parsing.
void register_name(const std::string& name, const Nat& code);
std::optional<Nat> lookup_name(std::string_view name);
std::vector<std::string> registered_names();

}  // namespace erec

#endif  // EREC_KERNEL_LIBRARY_HPP
