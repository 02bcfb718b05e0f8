#include "erec/kernel/machine.hpp"

#include <algorithm>

#include "erec/kernel/library.hpp"
#include "erec/kernel/program.hpp"

namespace erec {

std::string_view stuck_reason_name(StuckReason r) noexcept {
  return r == StuckReason::malformed ? "Malformed" : "ArgCount";
}

std::string_view unknown_reason_name(UnknownReason r) noexcept {
  return r == UnknownReason::fuel ? "fuel" : "representation";
}

bool Outcome::same_answer(const Outcome& other) const {
  if (kind != other.kind) return false;
  switch (kind) {
    case Kind::converged: return value.equals(other.value) == Tri::yes;
    case Kind::stuck: return stuck == other.stuck;
    case Kind::unknown: return true;
  }
  return false;
}

std::string Outcome::to_string() const {
  switch (kind) {
    case Kind::converged: return "Converged " + value.to_string();
    case Kind::stuck: return "Stuck " + std::string(stuck_reason_name(stuck));
    case Kind::unknown:
      return "Unknown " + std::to_string(fuel_spent) + " (" +
             std::string(unknown_reason_name(unknown)) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------

std::vector<Nat> TotalityCertificate::arguments(const Nat& p) const {
  std::vector<Nat> args = context;
  auto pos = std::min(arg_position, args.size());
  args.insert(args.begin() + static_cast<std::ptrdiff_t>(pos), p);
  return args;
}

bool TotalityCertificate::all_positive() const {
  if (tail_value.is_zero()) return false;
  return std::none_of(prefix.begin(), prefix.end(), [](const Nat& v) { return v.is_zero(); });
}

void CertificateStore::add(const TotalityCertificate& cert, Machine& vm, std::uint64_t fuel,
                           std::size_t tail_samples) {
  if (cert.arg_position > cert.context.size()) {
    throw InvalidCertificate("argument position beyond the context");
  }
  if (cert.prefix.size() != cert.tail_from) {
    throw InvalidCertificate("prefix table must cover every p below tail-from");
  }
  if (cert.tail_value.is_zero()) throw InvalidCertificate("tail value must be positive");
  auto check = [&](std::uint64_t p, const Nat& expected) {
    auto args = cert.arguments(Nat(p));
    Outcome o = vm.apply(cert.code, args, fuel);
    if (!o.converged()) {
      throw InvalidCertificate("evaluation at p = " + std::to_string(p) + " gave " + o.to_string());
    }
    if (o.value.equals(expected) != Tri::yes) {
      throw InvalidCertificate("value at p = " + std::to_string(p) + " is " + o.value.to_string() +
                               ", certificate says " + expected.to_string());
    }
  };
  for (std::uint64_t p = 0; p < cert.tail_from; ++p) check(p, cert.prefix[p]);
  for (std::uint64_t i = 0; i < tail_samples; ++i) check(cert.tail_from + i, cert.tail_value);
  add_unchecked(cert);
}

void CertificateStore::add_unchecked(const TotalityCertificate& cert) {
  std::unique_lock lock(mu_);
  certs_.push_back(cert);
}

std::optional<TotalityCertificate> CertificateStore::find(const Nat& code,
                                                          std::span<const Nat> context) const {
  std::shared_lock lock(mu_);
  for (const auto& c : certs_) {
    if (c.arg_position != 0 || c.code != code || c.context.size() != context.size()) continue;
    bool match = true;
    for (std::size_t i = 0; i < context.size() && match; ++i) {
      match = c.context[i].equals(context[i]) == Tri::yes;
    }
    if (match) return c;
  }
  return std::nullopt;
}

std::size_t CertificateStore::size() const {
  std::shared_lock lock(mu_);
  return certs_.size();
}

void CertificateStore::clear() {
  std::unique_lock lock(mu_);
  certs_.clear();
}

CertificateStore& global_certificates() {
  static CertificateStore store;
  return store;
}

// ---------------------------------------------------------------------------

Machine::Machine(MachineOptions opts, CertificateStore* certs) : opts_(opts), certs_(certs) {}

const CodeView& Machine::view(const Nat& code) {
  auto it = views_.find(code);
  if (it != views_.end()) return it->second;
  return views_.emplace(code, view_code(code)).first->second;
}

namespace {

struct Frame {
  const CodeView* view = nullptr;
  std::vector<Nat> args;
  std::vector<Nat> results;  // comp: component values so far
  std::size_t next = 0;      // comp: next component to evaluate; efun: probe p
  bool finishing = false;    // comp: base code dispatched
  std::size_t trace_index = SIZE_MAX;
};

struct Call {
  Nat code;
  std::vector<Nat> args;
};

}  // namespace

Outcome Machine::apply(const Nat& code, std::span<const Nat> args, std::uint64_t fuel) {
  trace_.clear();
  trace_truncated_ = false;
  if (views_.size() > 200'000) views_.clear();
  std::uint64_t spent = 0;
  std::vector<Frame> stack;
  std::optional<Call> pending = Call{code, std::vector<Nat>(args.begin(), args.end())};
  Nat ret;

  auto record = [&](Head head, const Nat& c, const std::vector<Nat>& a, bool jet) -> std::size_t {
    if (!opts_.trace) return SIZE_MAX;
    if (trace_.size() >= opts_.trace_limit) {
      trace_truncated_ = true;
      return SIZE_MAX;
    }
    TraceEntry e;
    e.depth = stack.size();
    e.head = head;
    e.code = c;
    e.args = a;
    e.accelerated = jet;
    trace_.push_back(std::move(e));
    return trace_.size() - 1;
  };
  auto resolve = [&](std::size_t idx, const Nat& v) {
    if (idx == SIZE_MAX) return;
    trace_[idx].returned = true;
    trace_[idx].result = v;
  };

  for (;;) {
    if (pending) {
      Call call = std::move(*pending);
      pending.reset();
      if (spent >= fuel) return Outcome::unknown_with(UnknownReason::fuel, spent);
      ++spent;

      if (opts_.accelerate) {
        if (const Jet* jet = find_jet(call.code)) {
          if (call.args.size() != jet->arity) {
            return Outcome::stuck_with(StuckReason::arg_count, spent);
          }
          std::size_t idx = record(Head::comp, call.code, call.args, true);
          auto r = jet->fn(call.args);
          if (!r) return Outcome::unknown_with(UnknownReason::representation, spent);
          ret = *r;
          resolve(idx, ret);
          goto returned;
        }
      }

      {
        const CodeView& v = view(call.code);
        if (v.head == Head::undetermined) {
          return Outcome::unknown_with(UnknownReason::representation, spent);
        }
        std::size_t idx = record(v.head, call.code, call.args, false);
        if (v.head == Head::malformed) return Outcome::stuck_with(StuckReason::malformed, spent);
        if (call.args.size() != v.arity) return Outcome::stuck_with(StuckReason::arg_count, spent);
        const auto& a = call.args;
        switch (v.head) {
          case Head::constant:
            ret = v.value;
            break;
          case Head::projection:
            ret = a[v.index];
            break;
          case Head::successor:
            ret = a[v.index].succ();
            break;
          case Head::cases: {
            Tri eq = a[2].equals(a[3]);
            if (eq == Tri::unknown) return Outcome::unknown_with(UnknownReason::representation, spent);
            ret = eq == Tri::yes ? a[0] : a[1];
            break;
          }
          case Head::smn:
            ret = smn(a[0], a[1]);
            break;
          case Head::univ: {
            Frame f;
            f.view = &v;
            f.trace_index = idx;
            stack.push_back(std::move(f));
            pending = Call{a[0], std::vector<Nat>(a.begin() + 1, a.end())};
            continue;
          }
          case Head::comp: {
            Frame f;
            f.view = &v;
            f.trace_index = idx;
            f.args = a;
            if (v.parts.empty()) {
              f.finishing = true;
              pending = Call{v.base, {}};
            } else {
              f.next = 1;
              pending = Call{v.parts[0], a};
            }
            stack.push_back(std::move(f));
            continue;
          }
          case Head::efun: {
            if (auto cert = certs_->find(v.base, a); cert && cert->all_positive()) {
              ret = Nat(0);
              break;
            }
            if (spent >= fuel) return Outcome::unknown_with(UnknownReason::fuel, spent);
            ++spent;
            Frame f;
            f.view = &v;
            f.trace_index = idx;
            f.args = a;
            f.next = 0;
            std::vector<Nat> probe;
            probe.reserve(a.size() + 1);
            probe.emplace_back(0);
            probe.insert(probe.end(), a.begin(), a.end());
            pending = Call{v.base, std::move(probe)};
            stack.push_back(std::move(f));
            continue;
          }
          default:
            return Outcome::stuck_with(StuckReason::malformed, spent);
        }
        resolve(idx, ret);
      }

    returned:
      ;
    }

    // A value is in `ret`; hand it to the innermost frame.
    for (;;) {
      if (stack.empty()) return Outcome::converged_with(ret, spent);
      Frame& f = stack.back();
      if (f.view->head == Head::univ) {
        resolve(f.trace_index, ret);
        stack.pop_back();
        continue;
      }
      if (f.view->head == Head::comp) {
        if (f.finishing) {
          resolve(f.trace_index, ret);
          stack.pop_back();
          continue;
        }
        f.results.push_back(ret);
        if (f.next < f.view->parts.size()) {
          pending = Call{f.view->parts[f.next++], f.args};
        } else {
          f.finishing = true;
          pending = Call{f.view->base, std::move(f.results)};
        }
        break;
      }
      // efun
      Tri zero = ret.equals(Nat(0));
      if (zero == Tri::unknown) return Outcome::unknown_with(UnknownReason::representation, spent);
      if (zero == Tri::yes) {
        ret = Nat(static_cast<std::uint64_t>(f.next) + 1);
        resolve(f.trace_index, ret);
        stack.pop_back();
        continue;
      }
      if (spent >= fuel) return Outcome::unknown_with(UnknownReason::fuel, spent);
      ++spent;
      ++f.next;
      std::vector<Nat> probe;
      probe.reserve(f.args.size() + 1);
      probe.emplace_back(static_cast<std::uint64_t>(f.next));
      probe.insert(probe.end(), f.args.begin(), f.args.end());
      pending = Call{f.view->base, std::move(probe)};
      break;
    }
  }
}

Outcome apply(const Nat& code, std::span<const Nat> args, std::uint64_t fuel) {
  thread_local Machine vm;
  return vm.apply(code, args, fuel);
}

Outcome apply(const Nat& code, std::initializer_list<Nat> args, std::uint64_t fuel) {
  return apply(code, std::span<const Nat>(args.begin(), args.size()), fuel);
}

std::string format_trace_entry(const TraceEntry& e) {
  auto shorten = [](std::string s) {
    if (s.size() > 72) s = s.substr(0, 60) + "..(" + std::to_string(s.size()) + " chars)";
    return s;
  };
  std::string out(e.depth * 2, ' ');
  std::string_view name = library_name(e.code);
  out += e.accelerated ? "jet" : std::string(head_name(e.head));
  out += ' ';
  out += name.empty() ? shorten(e.code.to_string()) : std::string(name);
  out += " [";
  for (std::size_t i = 0; i < e.args.size(); ++i) {
    if (i != 0) out += ',';
    std::string_view an = library_name(e.args[i]);
    out += an.empty() ? shorten(e.args[i].to_string()) : std::string(an);
  }
  out += "]";
  if (e.returned) out += " -> " + shorten(e.result.to_string());
  return out;
}

}  // namespace erec
