#ifndef EREC_UNIVERSE_TYPECODE_HPP
#define EREC_UNIVERSE_TYPECODE_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "erec/nat.hpp"

namespace erec {

enum class TypeTag : std::uint8_t { fin, nat, pl, sigma, pi, sup, foreign, undetermined };

std::string_view type_tag_name(TypeTag t) noexcept;

/// fin: first = n. pl: first, second = the summands. sigma, pi, sup: first =
/// base type, second = family code.
struct TypeView {
  TypeTag tag = TypeTag::foreign;
  Nat first;
  Nat second;
};

TypeView view_type(const Nat& t);

Nat fin_type(const Nat& n);
Nat nat_type();
Nat pl_type(const Nat& left, const Nat& right);
Nat sigma_type(const Nat& base, const Nat& family);
Nat pi_type(const Nat& base, const Nat& family);
Nat sup_type(const Nat& base, const Nat& family);

/// Readable rendering; family codes are shown by name or abbreviated.
std::string type_to_string(const Nat& t, std::size_t depth = 4);

/// Three-valued answer. Yes and No are final; Unknown records the bound at
/// which the search stopped.
struct Verdict {
  enum class Kind : std::uint8_t { yes, no, unknown };

  Kind kind = Kind::unknown;
  std::string evidence;
  std::uint64_t bound = 0;

  static Verdict yes(std::string ev = {}) { return {Kind::yes, std::move(ev), 0}; }
  static Verdict no(std::string ev = {}) { return {Kind::no, std::move(ev), 0}; }
  static Verdict unknown(std::string ev = {}, std::uint64_t b = 0) {
    return {Kind::unknown, std::move(ev), b};
  }

  bool is_yes() const noexcept { return kind == Kind::yes; }
  bool is_no() const noexcept { return kind == Kind::no; }
  bool is_unknown() const noexcept { return kind == Kind::unknown; }
  bool definite() const noexcept { return kind != Kind::unknown; }
};

std::string_view verdict_name(Verdict::Kind k) noexcept;

}  // namespace erec

#endif  // EREC_UNIVERSE_TYPECODE_HPP
