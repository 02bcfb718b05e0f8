#ifndef EREC_REALIZE_FORMULA_HPP
#define EREC_REALIZE_FORMULA_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "erec/nat.hpp"

namespace erec {

/// A variable or a V-code literal. `text` keeps the literal as written.
struct SetTerm {
  std::string var;
  Nat value;
  std::string text;

  bool is_var() const noexcept { return !var.empty(); }
  static SetTerm variable(std::string name);
  static SetTerm literal(const Nat& v, std::string text = {});
};

class Formula {
 public:
  enum class Kind { eq, in, and_, or_, not_, implies, all_in, ex_in, all, ex };

  static Formula eq(SetTerm a, SetTerm b);
  static Formula in(SetTerm a, SetTerm b);
  static Formula conj(Formula p, Formula q);
  static Formula disj(Formula p, Formula q);
  static Formula neg(Formula p);
  static Formula implies(Formula p, Formula q);
  static Formula all_in(std::string x, SetTerm t, Formula body);
  static Formula ex_in(std::string x, SetTerm t, Formula body);
  static Formula all(std::string x, Formula body);
  static Formula ex(std::string x, Formula body);

  Kind kind() const noexcept { return node_->kind; }
  const SetTerm& lhs() const { return node_->a; }
  const SetTerm& rhs() const { return node_->b; }
  /// Bound set of a bounded quantifier.
  const SetTerm& bound() const { return node_->a; }
  const std::string& variable() const { return node_->var; }
  const Formula& left() const { return node_->kids.at(0); }
  const Formula& right() const { return node_->kids.at(1); }
  const Formula& body() const { return node_->kids.at(0); }

  bool is_composite() const noexcept { return kind() != Kind::eq && kind() != Kind::in; }
  std::vector<std::string> free_variables() const;
  /// Every variable is bound at most once along any path.
  bool well_scoped() const;

 private:
  struct Node {
    Kind kind = Kind::eq;
    SetTerm a, b;
    std::string var;
    std::vector<Formula> kids;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

std::string_view formula_kind_name(Formula::Kind k) noexcept;

/// Prefix syntax: (= t t) (in t t) (and p q) (or p q) (not p) (-> p q)
/// (all-in x T p) (ex-in x T p) (all x p) (ex x p)
std::string to_string(const Formula& f);

/// Replaces the free occurrences of `var` by `value`.
Formula substitute(const Formula& f, const std::string& var, const SetTerm& value);

class UnboundVariable : public std::runtime_error {
 public:
  explicit UnboundVariable(const std::string& name) : std::runtime_error("unbound variable " + name) {}
};

/// Variable bindings. A variable bound to nullopt is generic: any clause
/// that needs its value answers Unknown.
using Environment = std::unordered_map<std::string, std::optional<Nat>>;

}  // namespace erec

#endif  // EREC_REALIZE_FORMULA_HPP
