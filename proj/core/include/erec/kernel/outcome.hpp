#ifndef EREC_KERNEL_OUTCOME_HPP
#define EREC_KERNEL_OUTCOME_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "erec/nat.hpp"

namespace erec {

enum class StuckReason : std::uint8_t { malformed, arg_count };
enum class UnknownReason : std::uint8_t { fuel, representation };

std::string_view stuck_reason_name(StuckReason r) noexcept;
std::string_view unknown_reason_name(UnknownReason r) noexcept;

/// Result of a fuel-bounded evaluation. Converged and Stuck are final.
struct Outcome {
  enum class Kind : std::uint8_t { converged, stuck, unknown };

  Kind kind = Kind::unknown;
  Nat value;
  StuckReason stuck = StuckReason::malformed;
  UnknownReason unknown = UnknownReason::fuel;
  std::uint64_t fuel_spent = 0;

  static Outcome converged_with(Nat v, std::uint64_t spent) {
    Outcome o;
    o.kind = Kind::converged;
    o.value = std::move(v);
    o.fuel_spent = spent;
    return o;
  }
  static Outcome stuck_with(StuckReason r, std::uint64_t spent) {
    Outcome o;
    o.kind = Kind::stuck;
    o.stuck = r;
    o.fuel_spent = spent;
    return o;
  }
  static Outcome unknown_with(UnknownReason r, std::uint64_t spent) {
    Outcome o;
    o.kind = Kind::unknown;
    o.unknown = r;
    o.fuel_spent = spent;
    return o;
  }

  bool converged() const noexcept { return kind == Kind::converged; }
  bool is_stuck() const noexcept { return kind == Kind::stuck; }
  bool is_unknown() const noexcept { return kind == Kind::unknown; }
  bool definite() const noexcept { return kind != Kind::unknown; }

  /// Same final answer; fuel spent is not compared.
  bool same_answer(const Outcome& other) const;

  std::string to_string() const;
};

}  // namespace erec

#endif  // EREC_KERNEL_OUTCOME_HPP
