#ifndef EREC_KERNEL_CODE_HPP
#define EREC_KERNEL_CODE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "erec/nat.hpp"

namespace erec {

enum class Head : std::uint8_t {
  constant,
  projection,
  successor,
  cases,
  smn,
  comp,
  univ,
  efun,
  malformed,
  undetermined,  // value too large to decide whether it has a clause shape
};

std::string_view head_name(Head h) noexcept;

/// Decoded shape of a code. `arity` is the argument count the clause accepts.
struct CodeView {
  Head head = Head::malformed;
  std::size_t arity = 0;
  Nat value;                 // constant
  std::size_t index = 0;     // projection, successor
  Nat base;                  // comp, efun
  std::vector<Nat> parts;    // comp components
};

/// Largest arity field accepted as well formed.
inline constexpr std::uint64_t kMaxArity = 1U << 16;

CodeView view_code(const Nat& code);

// Clause heads. Indices are 0-based.
Nat const_code(std::size_t k, const Nat& n);
Nat proj_code(std::size_t k, std::size_t i);
Nat succ_code(std::size_t k, std::size_t i);
/// Cases head taking p, q, r, s followed by `extra` further arguments.
Nat cases_code(std::size_t extra = 0);
/// Smn head taking p, q followed by `extra` further arguments.
Nat smn_code(std::size_t extra = 0);
Nat comp_code(std::size_t k, const Nat& b, std::span<const Nat> parts);
Nat comp_code(std::size_t k, const Nat& b, std::initializer_list<Nat> parts);
/// Universal head applying its first argument to the `k` remaining ones.
Nat univ_code(std::size_t k);
Nat efun_code(std::size_t k, const Nat& b);

}  // namespace erec

#endif  // EREC_KERNEL_CODE_HPP
