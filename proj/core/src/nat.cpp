#include "erec/nat.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace erec {

namespace {

constexpr unsigned kExactBits = Nat::kLiteralBits + 200;
constexpr unsigned kHugeMargin = Nat::kLiteralBits + 190;

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if ((exp & 1U) != 0) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

const std::vector<std::uint64_t>& prime_table() {
  static const std::vector<std::uint64_t> table = [] {
    constexpr std::size_t limit = 2'000'000;
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint64_t> out;
    out.reserve(150'000);
    for (std::size_t i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::size_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
  }();
  return table;
}

std::uint64_t pollard_rho(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t x = 2;
    std::uint64_t y = 2;
    std::uint64_t d = 1;
    auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  }
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  std::uint64_t d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

std::uint64_t fingerprint_prime(int which) {
  static const std::array<std::uint64_t, 2> primes = [] {
    std::array<std::uint64_t, 2> out{};
    std::uint64_t start[2] = {(1ULL << 61) - 1, 1'000'000'000'000'000'000ULL};
    for (int i = 0; i < 2; ++i) {
      std::uint64_t p = start[i];
      while (!is_prime_u64(p)) ++p;
      out[i] = p;
    }
    return out;
  }();
  return primes[static_cast<std::size_t>(which)];
}

unsigned bit_length(const BigInt& v) {
  if (v.is_zero()) return 0;
  return static_cast<unsigned>(boost::multiprecision::msb(v)) + 1;
}

double log2_of(const BigInt& v) {
  if (v.is_zero()) return 0.0;
  unsigned bits = bit_length(v);
  if (bits <= 1000) return std::log2(v.convert_to<double>());
  BigInt top = v >> (bits - 64);
  return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 64);
}

}  // namespace

namespace detail {

struct NatNode {
  Nat::Kind kind = Nat::Kind::big;
  std::vector<Nat> elems;
  std::int64_t delta = 0;
  std::optional<BigInt> exact;
  double log2v = 0.0;
  std::size_t hash = 0;

  mutable std::mutex mu;
  mutable std::unordered_map<std::uint64_t, std::uint64_t> residues;

  std::uint64_t residue(std::uint64_t m) const;
};

}  // namespace detail

using detail::NatNode;

namespace {

std::size_t combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6U) + (seed >> 2U));
}

struct InternHash {
  std::size_t operator()(const std::shared_ptr<const NatNode>& n) const noexcept { return n->hash; }
};

struct InternEq {
  bool operator()(const std::shared_ptr<const NatNode>& a,
                  const std::shared_ptr<const NatNode>& b) const noexcept {
    return a->kind == b->kind && a->delta == b->delta && a->elems == b->elems;
  }
};

struct InternTable {
  std::mutex mu;
  std::unordered_set<std::shared_ptr<const NatNode>, InternHash, InternEq> nodes;
};

InternTable& intern_table() {
  static InternTable table;
  return table;
}

std::size_t structural_hash(Nat::Kind kind, const std::vector<Nat>& elems, std::int64_t delta) {
  std::size_t h = std::hash<int>{}(static_cast<int>(kind));
  for (const auto& e : elems) h = combine(h, e.hash());
  return combine(h, std::hash<std::int64_t>{}(delta));
}

}  // namespace

class NatFactory {
 public:
  static Nat make_node(Nat::Kind kind, std::vector<Nat> elems, std::int64_t delta,
                       std::optional<BigInt> exact, double log2v) {
    auto node = std::make_shared<NatNode>();
    node->kind = kind;
    node->elems = std::move(elems);
    node->delta = delta;
    node->exact = std::move(exact);
    node->log2v = log2v;
    node->hash = structural_hash(kind, node->elems, delta);
    auto& table = intern_table();
    std::lock_guard<std::mutex> lock(table.mu);
    auto [it, inserted] = table.nodes.insert(node);
    return Nat(*it);
  }

  static Nat make_big(BigInt v) {
    auto node = std::make_shared<NatNode>();
    node->kind = Nat::Kind::big;
    node->log2v = log2_of(v);
    node->hash = std::hash<std::string>{}(v.str());
    node->exact = std::move(v);
    return Nat(std::shared_ptr<const NatNode>(std::move(node)));
  }
};

Nat Nat::from_exact(BigInt v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return Nat(v.convert_to<std::uint64_t>());
  return NatFactory::make_big(std::move(v));
}

Nat::Nat(const BigInt& v) { *this = from_exact(v < 0 ? BigInt(0) : v); }

Nat::Kind Nat::kind() const noexcept { return node_ ? node_->kind : Kind::small; }

bool Nat::is_literal() const noexcept {
  if (!node_) return true;
  return node_->kind == Kind::big && node_->exact && bit_length(*node_->exact) <= kLiteralBits;
}

bool Nat::has_exact() const noexcept { return !node_ || node_->exact.has_value(); }

std::optional<std::uint64_t> Nat::as_u64() const {
  if (!node_) return small_;
  return std::nullopt;
}

std::optional<BigInt> Nat::as_big() const {
  if (!node_) return BigInt(small_);
  if (node_->exact) return *node_->exact;
  return std::nullopt;
}

const std::vector<Nat>& Nat::tuple_elements() const {
  if (kind() != Kind::tuple) throw std::logic_error("Nat::tuple_elements on non-tuple node");
  return node_->elems;
}

const Nat& Nat::pair_first() const {
  if (kind() != Kind::pair) throw std::logic_error("Nat::pair_first on non-pair node");
  return node_->elems[0];
}

const Nat& Nat::pair_second() const {
  if (kind() != Kind::pair) throw std::logic_error("Nat::pair_second on non-pair node");
  return node_->elems[1];
}

const Nat& Nat::offset_base() const {
  if (kind() != Kind::offset) throw std::logic_error("Nat::offset_base on non-offset node");
  return node_->elems[0];
}

std::int64_t Nat::offset_delta() const {
  if (kind() != Kind::offset) throw std::logic_error("Nat::offset_delta on non-offset node");
  return node_->delta;
}

double Nat::log2() const {
  if (!node_) return small_ == 0 ? 0.0 : std::log2(static_cast<double>(small_));
  return node_->log2v;
}

Nat Nat::tuple(std::span<const Nat> elems) {
  bool all_exact = std::all_of(elems.begin(), elems.end(), [](const Nat& e) { return e.has_exact(); });
  double est = 0.0;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    double weight = std::log2(static_cast<double>(prime(i)));
    double term = std::numeric_limits<double>::infinity();
    if (auto small = elems[i].as_u64(); small && *small < (1ULL << 52)) {
      term = (static_cast<double>(*small) + 1.0) * weight;
    }
    est += term;
  }
  if (all_exact && est < kExactBits) {
    BigInt value = 1;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      auto e = *elems[i].as_big();
      value *= boost::multiprecision::pow(BigInt(prime(i)), e.convert_to<unsigned>() + 1);
    }
    if (bit_length(value) <= kLiteralBits) return from_exact(std::move(value));
    double lg = log2_of(value);
    return NatFactory::make_node(Kind::tuple, std::vector<Nat>(elems.begin(), elems.end()), 0,
                                 std::move(value), lg);
  }
  return NatFactory::make_node(Kind::tuple, std::vector<Nat>(elems.begin(), elems.end()), 0,
                               std::nullopt, est);
}

Nat Nat::pair(const Nat& a, const Nat& b) {
  double est = 2.0 * std::max(a.log2(), b.log2()) + 2.0;
  if (a.has_exact() && b.has_exact() && est < kExactBits) {
    BigInt x = *a.as_big();
    BigInt y = *b.as_big();
    BigInt s = x + y;
    BigInt value = s * s + x + 1;
    if (bit_length(value) <= kLiteralBits) return from_exact(std::move(value));
    double lg = log2_of(value);
    return NatFactory::make_node(Kind::pair, {a, b}, 0, std::move(value), lg);
  }
  return NatFactory::make_node(Kind::pair, {a, b}, 0, std::nullopt, est);
}

Nat Nat::plus(std::int64_t delta) const {
  if (delta == 0) return *this;
  if (!node_) {
    if (delta > 0) {
      auto d = static_cast<std::uint64_t>(delta);
      if (small_ <= std::numeric_limits<std::uint64_t>::max() - d) return Nat(small_ + d);
      return from_exact(BigInt(small_) + d);
    }
    auto d = static_cast<std::uint64_t>(-(delta + 1)) + 1;
    return Nat(small_ >= d ? small_ - d : 0);
  }
  if (node_->exact) {
    BigInt v = *node_->exact + delta;
    if (v < 0) v = 0;
    return from_exact(std::move(v));
  }
  if (node_->kind == Kind::offset) {
    const Nat& base = node_->elems[0];
    std::int64_t combined = 0;
    if (__builtin_add_overflow(node_->delta, delta, &combined)) {
      throw RepresentationLimit("offset overflow on symbolic natural");
    }
    if (combined == 0) return base;
    return NatFactory::make_node(Kind::offset, {base}, combined, std::nullopt, node_->log2v);
  }
  return NatFactory::make_node(Kind::offset, {*this}, delta, std::nullopt, node_->log2v);
}

std::uint64_t NatNode::residue(std::uint64_t m) const {
  if (m == 1) return 0;
  if (exact) return static_cast<std::uint64_t>(*exact % m);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = residues.find(m);
    if (it != residues.end()) return it->second;
  }
  std::uint64_t r = 0;
  switch (kind) {
    case Nat::Kind::tuple: {
      r = 1 % m;
      for (std::size_t i = 0; i < elems.size(); ++i) {
        const Nat& e = elems[i];
        std::uint64_t p = prime(i);
        std::uint64_t term = 0;
        if (auto ex = e.as_big()) {
          BigInt t = boost::multiprecision::powm(BigInt(p), *ex + 1, BigInt(m));
          term = t.convert_to<std::uint64_t>();
        } else {
          // Exponent exceeds log2(m), so p^E = p^(E mod phi + phi) mod m.
          std::uint64_t phi = totient(m);
          std::uint64_t k = (e.residue(phi) + 1) % phi;
          term = powmod(p, k + phi, m);
        }
        r = mulmod(r, term, m);
      }
      break;
    }
    case Nat::Kind::pair: {
      std::uint64_t a = elems[0].residue(m);
      std::uint64_t b = elems[1].residue(m);
      std::uint64_t s = static_cast<std::uint64_t>((static_cast<u128>(a) + b) % m);
      r = static_cast<std::uint64_t>((static_cast<u128>(mulmod(s, s, m)) + a + 1) % m);
      break;
    }
    case Nat::Kind::offset: {
      std::uint64_t b = elems[0].residue(m);
      std::int64_t d = delta % static_cast<std::int64_t>(m > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) ? std::numeric_limits<std::int64_t>::max() : m);
      u128 dm = d >= 0 ? static_cast<u128>(d) : static_cast<u128>(m) - static_cast<u128>(-d);
      r = static_cast<std::uint64_t>((static_cast<u128>(b) + dm) % m);
      break;
    }
    default:
      break;
  }
  std::lock_guard<std::mutex> lock(mu);
  residues.emplace(m, r);
  return r;
}

std::uint64_t Nat::residue(std::uint64_t m) const {
  if (m == 0) throw std::invalid_argument("residue modulo zero");
  if (!node_) return small_ % m;
  return node_->residue(m);
}

namespace {

Tri fingerprint_equal(const Nat& a, const Nat& b) {
  for (int i = 0; i < 2; ++i) {
    std::uint64_t p = fingerprint_prime(i);
    if (a.residue(p) != b.residue(p)) return Tri::no;
  }
  return Tri::unknown;
}

}  // namespace

Tri Nat::equals(const Nat& other) const {
  if (*this == other) return Tri::yes;
  if (has_exact() && other.has_exact()) return tri(*as_big() == *other.as_big());
  if (has_exact() != other.has_exact()) {
    const Nat& ex = has_exact() ? *this : other;
    if (bit_length(*ex.as_big()) < kHugeMargin) return Tri::no;
    return fingerprint_equal(*this, other);
  }
  // both huge
  Kind ka = kind();
  Kind kb = other.kind();
  if (ka == kb && (ka == Kind::tuple || ka == Kind::pair)) {
    const auto& ea = node_->elems;
    const auto& eb = other.node_->elems;
    if (ea.size() != eb.size()) return Tri::no;
    bool all_yes = true;
    for (std::size_t i = 0; i < ea.size(); ++i) {
      Tri t = ea[i].equals(eb[i]);
      if (t == Tri::no) return Tri::no;
      if (t != Tri::yes) all_yes = false;
    }
    if (all_yes) return Tri::yes;
    return fingerprint_equal(*this, other);
  }
  if (ka == Kind::offset && kb == Kind::offset) {
    if (node_->elems[0] == other.node_->elems[0]) return tri(node_->delta == other.node_->delta);
  }
  if (ka == Kind::offset && node_->elems[0] == other) return Tri::no;
  if (kb == Kind::offset && other.node_->elems[0] == *this) return Tri::no;
  return fingerprint_equal(*this, other);
}

Tri Nat::less_equal(const Nat& other) const {
  if (*this == other) return Tri::yes;
  if (has_exact() && other.has_exact()) return tri(*as_big() <= *other.as_big());
  if (has_exact() != other.has_exact()) {
    const Nat& ex = has_exact() ? *this : other;
    if (bit_length(*ex.as_big()) < kHugeMargin) return tri(has_exact());
    Tri eq = equals(other);
    if (eq == Tri::yes) return Tri::yes;
    return Tri::unknown;
  }
  Tri eq = equals(other);
  if (eq == Tri::yes) return Tri::yes;
  auto base_delta = [](const Nat& n) -> std::pair<Nat, std::int64_t> {
    if (n.kind() == Kind::offset) return {n.offset_base(), n.offset_delta()};
    return {n, 0};
  };
  auto [ba, da] = base_delta(*this);
  auto [bb, db] = base_delta(other);
  if (ba == bb) return tri(da <= db);
  double la = log2();
  double lb = other.log2();
  if (std::isfinite(la) && std::isfinite(lb) && std::abs(la - lb) > 4.0) return tri(la < lb);
  return Tri::unknown;
}

Tri Nat::less(const Nat& other) const {
  Tri le = less_equal(other);
  if (le != Tri::yes) return le == Tri::no ? Tri::no : Tri::unknown;
  Tri eq = equals(other);
  if (eq == Tri::yes) return Tri::no;
  if (eq == Tri::no) return Tri::yes;
  return Tri::unknown;
}

std::size_t Nat::hash() const noexcept {
  if (!node_) return std::hash<std::uint64_t>{}(small_);
  return node_->hash;
}

bool operator==(const Nat& a, const Nat& b) noexcept {
  if (!a.node_ || !b.node_) return !a.node_ && !b.node_ && a.small_ == b.small_;
  if (a.node_ == b.node_) return true;
  if (a.node_->kind == Nat::Kind::big && b.node_->kind == Nat::Kind::big) {
    return *a.node_->exact == *b.node_->exact;
  }
  return false;
}

std::string Nat::to_string() const {
  if (!node_) return std::to_string(small_);
  switch (node_->kind) {
    case Kind::big:
      return node_->exact->str();
    case Kind::tuple: {
      std::string out = "<";
      for (std::size_t i = 0; i < node_->elems.size(); ++i) {
        if (i != 0) out += ',';
        out += node_->elems[i].to_string();
      }
      return out + ">";
    }
    case Kind::pair:
      return "(" + node_->elems[0].to_string() + "," + node_->elems[1].to_string() + ")";
    case Kind::offset: {
      std::string sign = node_->delta >= 0 ? "+" : "-";
      std::int64_t mag = node_->delta >= 0 ? node_->delta : -node_->delta;
      return "[" + node_->elems[0].to_string() + sign + std::to_string(mag) + "]";
    }
    default:
      return "?";
  }
}

// ---------------------------------------------------------------------------

std::uint64_t prime(std::size_t i) {
  const auto& table = prime_table();
  if (i >= table.size()) throw std::out_of_range("prime index beyond sieve");
  return table[i];
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t totient(std::uint64_t m) {
  static std::mutex mu;
  static std::unordered_map<std::uint64_t, std::uint64_t> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  std::vector<std::uint64_t> factors;
  factor_into(m, factors);
  std::sort(factors.begin(), factors.end());
  factors.erase(std::unique(factors.begin(), factors.end()), factors.end());
  std::uint64_t phi = m;
  for (std::uint64_t p : factors) phi = phi / p * (p - 1);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(m, phi);
  return phi;
}

Nat encode_tuple(std::span<const Nat> elems) { return Nat::tuple(elems); }

Nat pair(const Nat& a, const Nat& b) { return Nat::pair(a, b); }

namespace {

TupleDecode factor_exact(BigInt v) {
  TupleDecode out;
  if (v.is_zero()) return out;
  std::size_t i = 0;
  while (v != 1) {
    std::uint64_t p = prime(i);
    std::uint64_t count = 0;
    if (v <= std::numeric_limits<std::uint64_t>::max()) {
      auto s = v.convert_to<std::uint64_t>();
      while (s % p == 0) {
        s /= p;
        ++count;
      }
      v = s;
    } else {
      BigInt q;
      BigInt r;
      for (;;) {
        boost::multiprecision::divide_qr(v, BigInt(p), q, r);
        if (!r.is_zero()) break;
        v = q;
        ++count;
      }
    }
    if (count == 0) {
      out.elems.clear();
      out.status = TupleDecode::Status::not_a_tuple;
      return out;
    }
    out.elems.emplace_back(count - 1);
    ++i;
  }
  out.status = TupleDecode::Status::ok;
  return out;
}

// Residue of v modulo q must lie in the multiplicative subgroup generated by
// the leading primes if v is a product of exactly those primes.
bool in_generated_subgroup(std::uint64_t value, std::uint64_t q, std::size_t generators) {
  std::vector<bool> seen(q, false);
  std::vector<std::uint64_t> frontier{1};
  seen[1] = true;
  while (!frontier.empty()) {
    std::uint64_t x = frontier.back();
    frontier.pop_back();
    for (std::size_t g = 0; g < generators; ++g) {
      std::uint64_t y = x * (prime(g) % q) % q;
      if (!seen[y]) {
        seen[y] = true;
        frontier.push_back(y);
      }
    }
  }
  return seen[value];
}

TupleDecode refute_tuple_shape(const Nat& n) {
  TupleDecode out;
  out.status = TupleDecode::Status::undetermined;
  constexpr std::size_t kLead = 25;
  constexpr std::size_t kProbe = 300;
  if (n.residue(2) != 0) {
    out.status = TupleDecode::Status::not_a_tuple;
    return out;
  }
  std::size_t lead = 0;
  while (lead < kLead && n.residue(prime(lead)) == 0) ++lead;
  if (lead == kLead) return out;
  for (std::size_t i = lead + 1; i < kProbe; ++i) {
    std::uint64_t q = prime(i);
    std::uint64_t r = n.residue(q);
    if (r == 0 || !in_generated_subgroup(r, q, lead)) {
      out.status = TupleDecode::Status::not_a_tuple;
      return out;
    }
  }
  return out;
}

std::uint64_t isqrt_u64(std::uint64_t v) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && static_cast<u128>(r) * r > v) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace

TupleDecode try_decode_tuple(const Nat& n) {
  if (n.kind() == Nat::Kind::tuple) {
    TupleDecode out;
    out.status = TupleDecode::Status::ok;
    out.elems = n.tuple_elements();
    return out;
  }
  if (auto v = n.as_big()) return factor_exact(std::move(*v));
  return refute_tuple_shape(n);
}

std::vector<Nat> decode_tuple(const Nat& n) {
  auto d = try_decode_tuple(n);
  switch (d.status) {
    case TupleDecode::Status::ok:
      return std::move(d.elems);
    case TupleDecode::Status::not_a_tuple:
      throw NotATupleCode(n.to_string() + " is not a tuple code");
    default:
      throw RepresentationLimit("cannot decide whether " + n.to_string() + " is a tuple code");
  }
}

PairDecode try_unpair(const Nat& x) {
  PairDecode out;
  if (x.kind() == Nat::Kind::pair) {
    out.status = PairDecode::Status::ok;
    out.first = x.pair_first();
    out.second = x.pair_second();
    return out;
  }
  if (auto small = x.as_u64()) {
    std::uint64_t v = *small;
    if (v == 0) return out;
    std::uint64_t s = isqrt_u64(v - 1);
    std::uint64_t a = v - 1 - s * s;
    if (a > s) return out;
    out.status = PairDecode::Status::ok;
    out.first = Nat(a);
    out.second = Nat(s - a);
    return out;
  }
  if (auto big = x.as_big()) {
    BigInt v = *big - 1;
    BigInt s = boost::multiprecision::sqrt(v);
    BigInt a = v - s * s;
    if (a > s) return out;
    out.status = PairDecode::Status::ok;
    out.first = Nat(a);
    out.second = Nat(BigInt(s - a));
    return out;
  }
  out.status = PairDecode::Status::undetermined;
  return out;
}

std::pair<Nat, Nat> unpair(const Nat& x) {
  auto d = try_unpair(x);
  switch (d.status) {
    case PairDecode::Status::ok:
      return {d.first, d.second};
    case PairDecode::Status::not_a_pair:
      throw NotAPair(x.to_string() + " is not in the range of the pairing function");
    default:
      throw RepresentationLimit("cannot decide whether " + x.to_string() + " is a pair");
  }
}

}  // namespace erec
