#include "erec/universe/typecode.hpp"

#include "erec/kernel/library.hpp"

namespace erec {

std::string_view type_tag_name(TypeTag t) noexcept {
  switch (t) {
    case TypeTag::fin: return "fin";
    case TypeTag::nat: return "nat";
    case TypeTag::pl: return "pl";
    case TypeTag::sigma: return "sigma";
    case TypeTag::pi: return "pi";
    case TypeTag::sup: return "sup";
    case TypeTag::foreign: return "foreign";
    case TypeTag::undetermined: return "undetermined";
  }
  return "?";
}

std::string_view verdict_name(Verdict::Kind k) noexcept {
  switch (k) {
    case Verdict::Kind::yes: return "Yes";
    case Verdict::Kind::no: return "No";
    case Verdict::Kind::unknown: return "Unknown";
  }
  return "?";
}

TypeView view_type(const Nat& t) {
  TypeView v;
  auto outer = try_unpair(t);
  if (outer.status == PairDecode::Status::undetermined) {
    v.tag = TypeTag::undetermined;
    return v;
  }
  if (outer.status != PairDecode::Status::ok) return v;
  auto tag = outer.first.as_u64();
  if (!tag || *tag > 5) return v;
  if (*tag == 0) {
    v.tag = TypeTag::fin;
    v.first = outer.second;
    return v;
  }
  if (*tag == 1) {
    if (!outer.second.is_zero()) return v;
    v.tag = TypeTag::nat;
    return v;
  }
  auto inner = try_unpair(outer.second);
  if (inner.status == PairDecode::Status::undetermined) {
    v.tag = TypeTag::undetermined;
    return v;
  }
  if (inner.status != PairDecode::Status::ok) return v;
  static constexpr TypeTag kTags[] = {TypeTag::pl, TypeTag::sigma, TypeTag::pi, TypeTag::sup};
  v.tag = kTags[*tag - 2];
  v.first = inner.first;
  v.second = inner.second;
  return v;
}

Nat fin_type(const Nat& n) { return Nat::pair(0, n); }
Nat nat_type() { return Nat::pair(1, 0); }
Nat pl_type(const Nat& left, const Nat& right) { return Nat::pair(2, Nat::pair(left, right)); }
Nat sigma_type(const Nat& base, const Nat& family) { return Nat::pair(3, Nat::pair(base, family)); }
Nat pi_type(const Nat& base, const Nat& family) { return Nat::pair(4, Nat::pair(base, family)); }
Nat sup_type(const Nat& base, const Nat& family) { return Nat::pair(5, Nat::pair(base, family)); }

namespace {

std::string code_label(const Nat& c) {
  std::string_view name = library_name(c);
  if (!name.empty()) return std::string(name);
  std::string s = c.to_string();
  if (s.size() > 24) return "#" + std::to_string(c.hash() % 1000000);
  return s;
}

}  // namespace

std::string type_to_string(const Nat& t, std::size_t depth) {
  TypeView v = view_type(t);
  if (depth == 0 && v.tag != TypeTag::fin && v.tag != TypeTag::nat) return "..";
  switch (v.tag) {
    case TypeTag::fin: return "fin " + v.first.to_string();
    case TypeTag::nat: return "nat";
    case TypeTag::pl:
      return "pl(" + type_to_string(v.first, depth - 1) + "," + type_to_string(v.second, depth - 1) + ")";
    case TypeTag::sigma:
    case TypeTag::pi:
    case TypeTag::sup:
      return std::string(type_tag_name(v.tag)) + "(" + type_to_string(v.first, depth - 1) + "," +
             code_label(v.second) + ")";
    case TypeTag::foreign: return "foreign " + code_label(t);
    case TypeTag::undetermined: return "undetermined";
  }
  return "?";
}

}  // namespace erec
