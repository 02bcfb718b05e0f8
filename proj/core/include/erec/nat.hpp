#ifndef EREC_NAT_HPP
#define EREC_NAT_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace erec {

using BigInt = boost::multiprecision::cpp_int;

/// Three-valued answer for questions about naturals that may be too large to
/// settle exactly. `unknown` is only produced for values beyond the exact
/// arithmetic limit whose structure does not decide the question.
enum class Tri : std::uint8_t { no, yes, unknown };

constexpr Tri tri(bool b) noexcept { return b ? Tri::yes : Tri::no; }

namespace detail {
struct NatNode;
}

/// A natural number.
///
/// Values below 2^kLiteralBits are held exactly (inline when they fit 64
/// bits). Larger values are kept structurally: as the prime-power code of a
/// tuple, as a value of the pairing function (a+b)^2+a+1, or as a small offset
/// from one of those. Structural nodes are hash-consed, so two values built
/// the same way share one node. Codes of composite programs are tuples whose
/// exponents are themselves codes, so this is the only way to hold them.
///
/// `operator==` compares representations. Use `equals` for value equality;
/// it may answer Tri::unknown only for two huge values of different shapes
/// that agree on every fingerprint residue.
class Nat {
 public:
  enum class Kind : std::uint8_t { small, big, tuple, pair, offset };

  static constexpr unsigned kLiteralBits = 1024;

  Nat() noexcept = default;
  Nat(std::uint64_t v) noexcept : small_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Nat(const BigInt& v);

  static Nat tuple(std::span<const Nat> elems);
  static Nat tuple(std::initializer_list<Nat> elems) {
    return tuple(std::span<const Nat>(elems.begin(), elems.size()));
  }
  static Nat pair(const Nat& a, const Nat& b);

  Nat succ() const { return plus(1); }
  /// Predecessor, with pred(0) = 0.
  Nat pred() const { return plus(-1); }
  /// Adds a signed offset, clamping at zero.
  Nat plus(std::int64_t delta) const;

  Kind kind() const noexcept;
  bool is_small() const noexcept { return node_ == nullptr; }
  bool is_literal() const noexcept;
  bool is_zero() const noexcept { return node_ == nullptr && small_ == 0; }
  /// True when the exact value is held (literals and moderately sized nodes).
  bool has_exact() const noexcept;

  std::optional<std::uint64_t> as_u64() const;
  std::optional<BigInt> as_big() const;

  const std::vector<Nat>& tuple_elements() const;
  const Nat& pair_first() const;
  const Nat& pair_second() const;
  const Nat& offset_base() const;
  std::int64_t offset_delta() const;

  /// Estimated log2 of the value; +inf when it does not fit a double.
  double log2() const;

  /// Value modulo m (m >= 1), exact for every representation.
  std::uint64_t residue(std::uint64_t m) const;

  Tri equals(const Nat& other) const;
  Tri less_equal(const Nat& other) const;
  Tri less(const Nat& other) const;

  std::size_t hash() const noexcept;
  std::string to_string() const;

  friend bool operator==(const Nat& a, const Nat& b) noexcept;
  friend bool operator!=(const Nat& a, const Nat& b) noexcept { return !(a == b); }

  const detail::NatNode* node() const noexcept { return node_.get(); }

 private:
  explicit Nat(std::shared_ptr<const detail::NatNode> n) : node_(std::move(n)) {}
  static Nat from_exact(BigInt v);

  std::uint64_t small_ = 0;
  std::shared_ptr<const detail::NatNode> node_;

  friend struct detail::NatNode;
  friend class NatFactory;
};

struct TupleDecode {
  enum class Status : std::uint8_t { ok, not_a_tuple, undetermined };
  Status status = Status::not_a_tuple;
  std::vector<Nat> elems;
};

struct PairDecode {
  enum class Status : std::uint8_t { ok, not_a_pair, undetermined };
  Status status = Status::not_a_pair;
  Nat first;
  Nat second;
};

class NotATupleCode : public std::domain_error {
 public:
  explicit NotATupleCode(const std::string& what) : std::domain_error(what) {}
};

class NotAPair : public std::domain_error {
 public:
  explicit NotAPair(const std::string& what) : std::domain_error(what) {}
};

/// Thrown when a question about a huge value cannot be settled.
class RepresentationLimit : public std::runtime_error {
 public:
  explicit RepresentationLimit(const std::string& what) : std::runtime_error(what) {}
};

/// Prime-power tuple code: <> = 1, <m1..mk> = p1^(m1+1) * ... * pk^(mk+1).
Nat encode_tuple(std::span<const Nat> elems);
TupleDecode try_decode_tuple(const Nat& n);
/// Throws NotATupleCode, or RepresentationLimit when undecidable.
std::vector<Nat> decode_tuple(const Nat& n);

/// The pairing function j(n,m) = (n+m)^2 + n + 1 and its inverse.
Nat pair(const Nat& a, const Nat& b);
PairDecode try_unpair(const Nat& x);
/// Throws NotAPair, or RepresentationLimit when undecidable.
std::pair<Nat, Nat> unpair(const Nat& x);

/// i-th prime, 0-based (prime(0) == 2).
std::uint64_t prime(std::size_t i);

/// Euler's totient for 64-bit moduli (cached).
std::uint64_t totient(std::uint64_t m);
bool is_prime_u64(std::uint64_t n);

}  // namespace erec

template <>
struct std::hash<erec::Nat> {
  std::size_t operator()(const erec::Nat& n) const noexcept { return n.hash(); }
};

#endif  // EREC_NAT_HPP
