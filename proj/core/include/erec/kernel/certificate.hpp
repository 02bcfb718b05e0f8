#ifndef EREC_KERNEL_CERTIFICATE_HPP
#define EREC_KERNEL_CERTIFICATE_HPP

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "erec/nat.hpp"

namespace erec {

class Machine;

/// Attests that `code`, with argument `arg_position` varying over p and the
/// remaining arguments fixed to `context`, yields prefix[p] for p < tail_from
/// and tail_value for every p >= tail_from.
struct TotalityCertificate {
  Nat code;
  std::size_t arg_position = 0;
  std::vector<Nat> context;
  std::vector<Nat> prefix;
  std::uint64_t tail_from = 0;
  Nat tail_value = 1;

  /// Argument vector with p placed at arg_position.
  std::vector<Nat> arguments(const Nat& p) const;
  bool all_positive() const;
};

class InvalidCertificate : public std::invalid_argument {
 public:
  explicit InvalidCertificate(const std::string& what) : std::invalid_argument(what) {}
};

/// Internally synchronized; lookups take a shared lock.
class CertificateStore {
 public:
  /// Checks the prefix table and `tail_samples` tail points on `vm`, then
  /// stores the certificate. Throws InvalidCertificate on any disagreement.
  void add(const TotalityCertificate& cert, Machine& vm, std::uint64_t fuel,
           std::size_t tail_samples = 16);
  /// Stores without validation. Intended for tests of the store itself.
  void add_unchecked(const TotalityCertificate& cert);

  /// Certificate covering the search variable at position 0 of `code` with
  /// the remaining arguments equal to `context`.
  std::optional<TotalityCertificate> find(const Nat& code, std::span<const Nat> context) const;

  std::size_t size() const;
  void clear();

 private:
  mutable std::shared_mutex mu_;
  std::vector<TotalityCertificate> certs_;
};

CertificateStore& global_certificates();

}  // namespace erec

#endif  // EREC_KERNEL_CERTIFICATE_HPP
