#ifndef EREC_KERNEL_MACHINE_HPP
#define EREC_KERNEL_MACHINE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "erec/kernel/certificate.hpp"
#include "erec/kernel/code.hpp"
#include "erec/kernel/outcome.hpp"
#include "erec/nat.hpp"

namespace erec {

/// One clause application. `result` is filled when the application returns.
struct TraceEntry {
  std::size_t depth = 0;
  Head head = Head::malformed;
  Nat code;
  std::vector<Nat> args;
  bool returned = false;
  bool accelerated = false;
  Nat result;
};

struct MachineOptions {
  /// Short-circuit the arithmetic library codes with host arithmetic.
  bool accelerate = true;
  bool trace = false;
  std::size_t trace_limit = 1'000'000;
};

/// Explicit-stack evaluator for the computation relation. One fuel unit per
/// clause application, plus one per probe of the E-functional search.
class Machine {
 public:
  explicit Machine(MachineOptions opts = {}, CertificateStore* certs = &global_certificates());

  Outcome apply(const Nat& code, std::span<const Nat> args, std::uint64_t fuel);
  Outcome apply(const Nat& code, std::initializer_list<Nat> args, std::uint64_t fuel) {
    return apply(code, std::span<const Nat>(args.begin(), args.size()), fuel);
  }

  const std::vector<TraceEntry>& trace() const noexcept { return trace_; }
  bool trace_truncated() const noexcept { return trace_truncated_; }
  MachineOptions& options() noexcept { return opts_; }
  CertificateStore& certificates() noexcept { return *certs_; }

 private:
  const CodeView& view(const Nat& code);

  MachineOptions opts_;
  CertificateStore* certs_;
  std::unordered_map<Nat, CodeView> views_;
  std::vector<TraceEntry> trace_;
  bool trace_truncated_ = false;
};

/// Evaluates on a thread-local machine using the global certificate store.
Outcome apply(const Nat& code, std::span<const Nat> args, std::uint64_t fuel);
Outcome apply(const Nat& code, std::initializer_list<Nat> args, std::uint64_t fuel);

std::string format_trace_entry(const TraceEntry& e);

}  // namespace erec

#endif  // EREC_KERNEL_MACHINE_HPP
