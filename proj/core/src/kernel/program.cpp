#include "erec/kernel/program.hpp"

#include <stdexcept>

#include "erec/kernel/code.hpp"

namespace erec {

std::size_t arity_of(const Nat& code) {
  CodeView v = view_code(code);
  if (v.head == Head::malformed || v.head == Head::undetermined) return 0;
  return v.arity;
}

Nat smn(const Nat& p, const Nat& q) {
  std::size_t n = arity_of(p);
  std::size_t k = n == 0 ? 0 : n - 1;
  std::vector<Nat> parts;
  parts.reserve(k + 1);
  parts.push_back(const_code(k, q));
  for (std::size_t i = 0; i < k; ++i) parts.push_back(proj_code(k, i));
  return comp_code(k, p, parts);
}

namespace {

// p'(a1..ar, x) = p(x, a1..ar)
Nat rotate_first_to_last(const Nat& p, std::size_t r) {
  std::vector<Nat> parts;
  parts.reserve(r + 1);
  parts.push_back(proj_code(r + 1, r));
  for (std::size_t i = 0; i < r; ++i) parts.push_back(proj_code(r + 1, i));
  return comp_code(r + 1, p, parts);
}

}  // namespace

Nat close_over(const Nat& p, std::span<const Nat> params) {
  if (params.empty()) return p;
  Nat code = rotate_first_to_last(p, params.size());
  for (const auto& a : params) code = smn(code, a);
  return code;
}

Nat close_over(const Nat& p, std::initializer_list<Nat> params) {
  return close_over(p, std::span<const Nat>(params.begin(), params.size()));
}

Nat fix(const Nat& f) {
  std::size_t n = arity_of(f);
  if (n < 2) throw std::invalid_argument("fix needs a code of arity at least 2");
  // h(y, x) = f(smn(y, y), x);  fix(f) = smn(h, h)
  std::vector<Nat> parts;
  parts.reserve(n);
  parts.push_back(comp_code(n, smn_code(0), {proj_code(n, 0), proj_code(n, 0)}));
  for (std::size_t i = 1; i < n; ++i) parts.push_back(proj_code(n, i));
  Nat h = comp_code(n, f, parts);
  return smn(h, h);
}

// ---------------------------------------------------------------------------

Term Term::arg(std::size_t i) {
  Node n;
  n.kind = Kind::arg;
  n.index = i;
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::lit(const Nat& v) {
  Node n;
  n.kind = Kind::lit;
  n.value = v;
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::succ(Term t) {
  Node n;
  n.kind = Kind::succ;
  n.kids.push_back(std::move(t));
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::call(const Nat& code, std::vector<Term> args) {
  Node n;
  n.kind = Kind::call;
  n.value = code;
  n.kids = std::move(args);
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::apply(Term f, std::vector<Term> args) {
  Node n;
  n.kind = Kind::apply;
  n.kids.push_back(std::move(f));
  for (auto& a : args) n.kids.push_back(std::move(a));
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::if_eq(Term r, Term s, Term then_branch, Term else_branch) {
  Node n;
  n.kind = Kind::if_eq;
  n.kids = {std::move(r), std::move(s), std::move(then_branch), std::move(else_branch)};
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::self(std::vector<Term> args) {
  Node n;
  n.kind = Kind::self;
  n.kids = std::move(args);
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::self_code() {
  Node n;
  n.kind = Kind::self_code;
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::close(const Nat& p, std::vector<Term> params) {
  Node n;
  n.kind = Kind::close;
  n.value = p;
  n.kids = std::move(params);
  return Term(std::make_shared<const Node>(std::move(n)));
}

class TermCompiler {
 public:
  TermCompiler(std::size_t arity, bool recursive)
      : total_(recursive ? arity + 1 : arity), offset_(recursive ? 1 : 0), recursive_(recursive) {}

  Nat compile(const Term& t) const {
    const auto& n = *t.node_;
    switch (n.kind) {
      case Term::Kind::arg:
        if (n.index + offset_ >= total_) throw std::invalid_argument("argument index out of range");
        return proj_code(total_, n.index + offset_);
      case Term::Kind::lit:
        return const_code(total_, n.value);
      case Term::Kind::succ:
        return comp_code(total_, succ_code(1, 0), {compile(n.kids[0])});
      case Term::Kind::call:
        return comp_code(total_, n.value, compile_all(n.kids));
      case Term::Kind::apply:
        return comp_code(total_, univ_code(n.kids.size() - 1), compile_all(n.kids));
      case Term::Kind::if_eq: {
        Nat then_code = compile(n.kids[2]);
        Nat else_code = compile(n.kids[3]);
        Nat select = comp_code(total_, cases_code(0),
                               {const_code(total_, then_code), const_code(total_, else_code),
                                compile(n.kids[0]), compile(n.kids[1])});
        std::vector<Nat> parts{select};
        for (std::size_t i = 0; i < total_; ++i) parts.push_back(proj_code(total_, i));
        return comp_code(total_, univ_code(total_), parts);
      }
      case Term::Kind::self: {
        if (!recursive_) throw std::invalid_argument("self call outside a recursive definition");
        std::vector<Nat> parts{proj_code(total_, 0)};
        for (const auto& k : n.kids) parts.push_back(compile(k));
        return comp_code(total_, univ_code(n.kids.size()), parts);
      }
      case Term::Kind::self_code:
        if (!recursive_) throw std::invalid_argument("self code outside a recursive definition");
        return proj_code(total_, 0);
      case Term::Kind::close: {
        std::size_t r = n.kids.size();
        if (r == 0) return const_code(total_, n.value);
        Nat code = compile(Term::lit(rotate_first_to_last(n.value, r)));
        for (const auto& k : n.kids) code = comp_code(total_, smn_code(0), {code, compile(k)});
        return code;
      }
    }
    throw std::logic_error("unhandled term kind");
  }

 private:
  std::vector<Nat> compile_all(const std::vector<Term>& ts) const {
    std::vector<Nat> out;
    out.reserve(ts.size());
    for (const auto& t : ts) out.push_back(compile(t));
    return out;
  }

  std::size_t total_;
  std::size_t offset_;
  bool recursive_;
};

Nat compile(const Term& body, std::size_t arity) { return TermCompiler(arity, false).compile(body); }

Nat compile_recursive(const Term& body, std::size_t arity) {
  return fix(TermCompiler(arity, true).compile(body));
}

}  // namespace erec
