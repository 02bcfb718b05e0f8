#include "erec/kernel/analysis.hpp"

#include <optional>
#include <unordered_map>

#include "erec/kernel/code.hpp"

namespace erec {

namespace {

struct KeyHash {
  std::size_t operator()(const std::pair<Nat, std::size_t>& k) const noexcept {
    return k.first.hash() * 31 + k.second;
  }
};

using Memo = std::unordered_map<std::pair<Nat, std::size_t>, bool, KeyHash>;

// Codes the given code can evaluate to, when that set is known statically.
std::optional<std::vector<Nat>> static_values(const CodeView& v) {
  if (v.head == Head::constant) return std::vector<Nat>{v.value};
  if (v.head == Head::comp && v.base == cases_code(0) && v.parts.size() == 4) {
    CodeView t = view_code(v.parts[0]);
    CodeView e = view_code(v.parts[1]);
    if (t.head == Head::constant && e.head == Head::constant) {
      return std::vector<Nat>{t.value, e.value};
    }
  }
  return std::nullopt;
}

// Clause heads that converge on every argument vector of the right length.
bool always_converges(const Nat& code) {
  Head h = view_code(code).head;
  return h == Head::constant || h == Head::projection || h == Head::successor;
}

bool ignores(const Nat& code, std::size_t i, Memo& memo);

// A component may depend on argument i only if it always converges and the
// consumer ignores the slot it feeds.
bool slot_ok(const Nat& part, std::size_t i, const Nat& consumer, std::size_t slot, Memo& memo) {
  if (ignores(part, i, memo)) return true;
  return always_converges(part) && ignores(consumer, slot, memo);
}

bool ignores(const Nat& code, std::size_t i, Memo& memo) {
  auto key = std::make_pair(code, i);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  CodeView v = view_code(code);
  bool result = false;
  switch (v.head) {
    case Head::constant:
    case Head::malformed:
      result = true;
      break;
    case Head::projection:
    case Head::successor:
      result = v.index != i;
      break;
    case Head::cases:
      result = i >= 4;
      break;
    case Head::smn:
      result = i >= 2;
      break;
    case Head::efun:
      result = ignores(v.base, i + 1, memo);
      break;
    case Head::comp: {
      CodeView b = view_code(v.base);
      if (b.head == Head::univ && !v.parts.empty()) {
        auto choices = static_values(view_code(v.parts[0]));
        result = choices.has_value() && ignores(v.parts[0], i, memo);
        for (std::size_t c = 0; result && c < choices->size(); ++c) {
          for (std::size_t j = 1; result && j < v.parts.size(); ++j) {
            result = slot_ok(v.parts[j], i, (*choices)[c], j - 1, memo);
          }
        }
        break;
      }
      result = true;
      for (std::size_t j = 0; result && j < v.parts.size(); ++j) {
        result = slot_ok(v.parts[j], i, v.base, j, memo);
      }
      break;
    }
    default:
      result = false;
  }
  memo.emplace(key, result);
  return result;
}

}  // namespace

bool ignores_argument(const Nat& code, std::size_t i) {
  thread_local Memo memo;
  if (memo.size() > 500'000) memo.clear();
  return ignores(code, i, memo);
}

Nat table_code(const std::vector<Nat>& keys, const std::vector<Nat>& values, const Nat& fallback) {
  Nat code = const_code(1, fallback);
  for (std::size_t j = keys.size(); j-- > 0;) {
    code = comp_code(1, cases_code(0),
                     {const_code(1, values[j]), code, proj_code(1, 0), const_code(1, keys[j])});
  }
  return code;
}

}  // namespace erec
