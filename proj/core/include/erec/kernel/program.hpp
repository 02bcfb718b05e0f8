#ifndef EREC_KERNEL_PROGRAM_HPP
#define EREC_KERNEL_PROGRAM_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "erec/nat.hpp"

namespace erec {

/// Argument count a code accepts, or 0 for malformed and undetermined codes.
std::size_t arity_of(const Nat& code);

/// Fixes the first argument: {smn(p,q)}(m) ~ {p}(q, m).
/// Built as <1, k, p, Const(k,q), Proj(k,0), ..., Proj(k,k-1)> with
/// k = arity(p) - 1 (0 when p has no positive arity).
Nat smn(const Nat& p, const Nat& q);

/// {close_over(p, a)}(x) ~ {p}(x, a).
Nat close_over(const Nat& p, std::span<const Nat> params);
Nat close_over(const Nat& p, std::initializer_list<Nat> params);

/// For f of arity r+2, e = fix(f) satisfies {e}(x) ~ {f}(e, x).
Nat fix(const Nat& f);

/// Expression language compiled into codes. IfEq evaluates only the chosen
/// branch. Self and SelfCode are valid only under compile_recursive.
class Term {
 public:
  enum class Kind { arg, lit, succ, call, apply, if_eq, self, self_code, close };

  static Term arg(std::size_t i);
  static Term lit(const Nat& n);
  static Term succ(Term t);
  static Term call(const Nat& code, std::vector<Term> args);
  /// Runtime application of the code denoted by `f`.
  static Term apply(Term f, std::vector<Term> args);
  static Term if_eq(Term r, Term s, Term then_branch, Term else_branch);
  static Term self(std::vector<Term> args);
  static Term self_code();
  /// Runtime close_over(p, params).
  static Term close(const Nat& p, std::vector<Term> params);

  Kind kind() const noexcept { return node_->kind; }

 private:
  struct Node {
    Kind kind = Kind::lit;
    std::size_t index = 0;
    Nat value;
    std::vector<Term> kids;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;

  friend class TermCompiler;
};

/// Code of the given arity computing `body`.
Nat compile(const Term& body, std::size_t arity);
/// Code e of the given arity with {e}(x) ~ body[self := e](x).
Nat compile_recursive(const Term& body, std::size_t arity);

}  // namespace erec

#endif  // EREC_KERNEL_PROGRAM_HPP
