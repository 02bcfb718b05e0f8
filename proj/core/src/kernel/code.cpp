#include "erec/kernel/code.hpp"

namespace erec {

std::string_view head_name(Head h) noexcept {
  switch (h) {
    case Head::constant: return "const";
    case Head::projection: return "proj";
    case Head::successor: return "succ";
    case Head::cases: return "cases";
    case Head::smn: return "smn";
    case Head::comp: return "comp";
    case Head::univ: return "univ";
    case Head::efun: return "efun";
    case Head::malformed: return "malformed";
    case Head::undetermined: return "undetermined";
  }
  return "?";
}

namespace {

std::optional<std::uint64_t> small_field(const Nat& n, std::uint64_t limit) {
  auto v = n.as_u64();
  if (!v || *v > limit) return std::nullopt;
  return v;
}

CodeView malformed() { return CodeView{}; }

CodeView view_zero(const std::vector<Nat>& e) {
  if (e.size() < 3) return malformed();
  auto k = small_field(e[1], kMaxArity);
  auto tag = small_field(e[2], 8);
  if (!k || !tag) return malformed();
  CodeView v;
  switch (*tag) {
    case 0:
      if (e.size() != 4) return malformed();
      v.head = Head::constant;
      v.arity = *k;
      v.value = e[3];
      return v;
    case 1:
    case 2: {
      if (e.size() != 4) return malformed();
      auto i = small_field(e[3], kMaxArity);
      if (!i || *i >= *k) return malformed();
      v.head = *tag == 1 ? Head::projection : Head::successor;
      v.arity = *k;
      v.index = *i;
      return v;
    }
    case 4:
      if (e.size() != 3 || *k < 3) return malformed();
      v.head = Head::cases;
      v.arity = *k + 1;
      return v;
    case 5:
      if (e.size() != 3 || *k < 2) return malformed();
      v.head = Head::smn;
      v.arity = *k;
      return v;
    default:
      return malformed();
  }
}

}  // namespace

CodeView view_code(const Nat& code) {
  auto decoded = try_decode_tuple(code);
  if (decoded.status == TupleDecode::Status::undetermined) {
    CodeView v;
    v.head = Head::undetermined;
    return v;
  }
  if (decoded.status != TupleDecode::Status::ok) return malformed();
  const auto& e = decoded.elems;
  if (e.size() < 2) return malformed();
  auto family = small_field(e[0], 3);
  if (!family) return malformed();
  auto k = small_field(e[1], kMaxArity);
  if (!k) return malformed();
  CodeView v;
  switch (*family) {
    case 0:
      return view_zero(e);
    case 1:
      if (e.size() < 3) return malformed();
      v.head = Head::comp;
      v.arity = *k;
      v.base = e[2];
      v.parts.assign(e.begin() + 3, e.end());
      return v;
    case 2:
      if (e.size() != 2 || *k < 1) return malformed();
      v.head = Head::univ;
      v.arity = *k;
      return v;
    case 3:
      if (e.size() != 3) return malformed();
      v.head = Head::efun;
      v.arity = *k;
      v.base = e[2];
      return v;
    default:
      return malformed();
  }
}

Nat const_code(std::size_t k, const Nat& n) { return Nat::tuple({0, k, 0, n}); }

Nat proj_code(std::size_t k, std::size_t i) { return Nat::tuple({0, k, 1, i}); }

Nat succ_code(std::size_t k, std::size_t i) { return Nat::tuple({0, k, 2, i}); }

Nat cases_code(std::size_t extra) { return Nat::tuple({0, extra + 3, 4}); }

Nat smn_code(std::size_t extra) { return Nat::tuple({0, extra + 2, 5}); }

Nat comp_code(std::size_t k, const Nat& b, std::span<const Nat> parts) {
  std::vector<Nat> e;
  e.reserve(parts.size() + 3);
  e.emplace_back(1);
  e.emplace_back(k);
  e.push_back(b);
  e.insert(e.end(), parts.begin(), parts.end());
  return Nat::tuple(e);
}

Nat comp_code(std::size_t k, const Nat& b, std::initializer_list<Nat> parts) {
  return comp_code(k, b, std::span<const Nat>(parts.begin(), parts.size()));
}

Nat univ_code(std::size_t k) { return Nat::tuple({2, k + 1}); }

Nat efun_code(std::size_t k, const Nat& b) { return Nat::tuple({3, k, b}); }

}  // namespace erec
