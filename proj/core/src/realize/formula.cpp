#include "erec/realize/formula.hpp"

#include <algorithm>
#include <set>

namespace erec {

SetTerm SetTerm::variable(std::string name) {
  SetTerm t;
  t.text = name;
  t.var = std::move(name);
  return t;
}

SetTerm SetTerm::literal(const Nat& v, std::string text) {
  SetTerm t;
  t.value = v;
  t.text = text.empty() ? v.to_string() : std::move(text);
  return t;
}

Formula Formula::eq(SetTerm a, SetTerm b) {
  Node n;
  n.kind = Kind::eq;
  n.a = std::move(a);
  n.b = std::move(b);
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::in(SetTerm a, SetTerm b) {
  Node n;
  n.kind = Kind::in;
  n.a = std::move(a);
  n.b = std::move(b);
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::conj(Formula p, Formula q) {
  Node n;
  n.kind = Kind::and_;
  n.kids = {std::move(p), std::move(q)};
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::disj(Formula p, Formula q) {
  Node n;
  n.kind = Kind::or_;
  n.kids = {std::move(p), std::move(q)};
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::implies(Formula p, Formula q) {
  Node n;
  n.kind = Kind::implies;
  n.kids = {std::move(p), std::move(q)};
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::neg(Formula p) {
  Node n;
  n.kind = Kind::not_;
  n.kids = {std::move(p)};
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::all_in(std::string x, SetTerm t, Formula body) {
  Node n;
  n.kind = Kind::all_in;
  n.var = std::move(x);
  n.a = std::move(t);
  n.kids = {std::move(body)};
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::ex_in(std::string x, SetTerm t, Formula body) {
  Node n;
  n.kind = Kind::ex_in;
  n.var = std::move(x);
  n.a = std::move(t);
  n.kids = {std::move(body)};
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::all(std::string x, Formula body) {
  Node n;
  n.kind = Kind::all;
  n.var = std::move(x);
  n.kids = {std::move(body)};
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::ex(std::string x, Formula body) {
  Node n;
  n.kind = Kind::ex;
  n.var = std::move(x);
  n.kids = {std::move(body)};
  return Formula(std::make_shared<const Node>(std::move(n)));
}

std::string_view formula_kind_name(Formula::Kind k) noexcept {
  switch (k) {
    case Formula::Kind::eq: return "=";
    case Formula::Kind::in: return "in";
    case Formula::Kind::and_: return "and";
    case Formula::Kind::or_: return "or";
    case Formula::Kind::not_: return "not";
    case Formula::Kind::implies: return "->";
    case Formula::Kind::all_in: return "all-in";
    case Formula::Kind::ex_in: return "ex-in";
    case Formula::Kind::all: return "all";
    case Formula::Kind::ex: return "ex";
  }
  return "?";
}

namespace {

void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  auto term = [&](const SetTerm& t) {
    if (t.is_var() && !bound.count(t.var)) out.insert(t.var);
  };
  switch (f.kind()) {
    case Formula::Kind::eq:
    case Formula::Kind::in:
      term(f.lhs());
      term(f.rhs());
      return;
    case Formula::Kind::and_:
    case Formula::Kind::or_:
    case Formula::Kind::implies:
      collect_free(f.left(), bound, out);
      collect_free(f.right(), bound, out);
      return;
    case Formula::Kind::not_:
      collect_free(f.body(), bound, out);
      return;
    case Formula::Kind::all_in:
    case Formula::Kind::ex_in:
      term(f.bound());
      [[fallthrough]];
    case Formula::Kind::all:
    case Formula::Kind::ex: {
      bool fresh = bound.insert(f.variable()).second;
      collect_free(f.body(), bound, out);
      if (fresh) bound.erase(f.variable());
      return;
    }
  }
}

bool scoped(const Formula& f, std::set<std::string>& bound) {
  switch (f.kind()) {
    case Formula::Kind::eq:
    case Formula::Kind::in:
      return true;
    case Formula::Kind::and_:
    case Formula::Kind::or_:
    case Formula::Kind::implies:
      return scoped(f.left(), bound) && scoped(f.right(), bound);
    case Formula::Kind::not_:
      return scoped(f.body(), bound);
    default: {
      if (!bound.insert(f.variable()).second) return false;
      bool ok = scoped(f.body(), bound);
      bound.erase(f.variable());
      return ok;
    }
  }
}

}  // namespace

std::vector<std::string> Formula::free_variables() const {
  std::set<std::string> bound, out;
  collect_free(*this, bound, out);
  return {out.begin(), out.end()};
}

bool Formula::well_scoped() const {
  std::set<std::string> bound;
  return scoped(*this, bound);
}

Formula substitute(const Formula& f, const std::string& var, const SetTerm& value) {
  using K = Formula::Kind;
  auto term = [&](const SetTerm& t) { return t.is_var() && t.var == var ? value : t; };
  switch (f.kind()) {
    case K::eq: return Formula::eq(term(f.lhs()), term(f.rhs()));
    case K::in: return Formula::in(term(f.lhs()), term(f.rhs()));
    case K::and_: return Formula::conj(substitute(f.left(), var, value), substitute(f.right(), var, value));
    case K::or_: return Formula::disj(substitute(f.left(), var, value), substitute(f.right(), var, value));
    case K::implies:
      return Formula::implies(substitute(f.left(), var, value), substitute(f.right(), var, value));
    case K::not_: return Formula::neg(substitute(f.body(), var, value));
    case K::all_in:
    case K::ex_in: {
      Formula body = f.variable() == var ? f.body() : substitute(f.body(), var, value);
      return f.kind() == K::all_in ? Formula::all_in(f.variable(), term(f.bound()), body)
                                   : Formula::ex_in(f.variable(), term(f.bound()), body);
    }
    case K::all:
    case K::ex: {
      Formula body = f.variable() == var ? f.body() : substitute(f.body(), var, value);
      return f.kind() == K::all ? Formula::all(f.variable(), body) : Formula::ex(f.variable(), body);
    }
  }
  return f;
}

std::string to_string(const Formula& f) {
  using K = Formula::Kind;
  std::string op(formula_kind_name(f.kind()));
  switch (f.kind()) {
    case K::eq:
    case K::in:
      return "(" + op + " " + f.lhs().text + " " + f.rhs().text + ")";
    case K::and_:
    case K::or_:
    case K::implies:
      return "(" + op + " " + to_string(f.left()) + " " + to_string(f.right()) + ")";
    case K::not_:
      return "(not " + to_string(f.body()) + ")";
    case K::all_in:
    case K::ex_in:
      return "(" + op + " " + f.variable() + " " + f.bound().text + " " + to_string(f.body()) + ")";
    case K::all:
    case K::ex:
      return "(" + op + " " + f.variable() + " " + to_string(f.body()) + ")";
  }
  return "?";
}

}  // namespace erec
