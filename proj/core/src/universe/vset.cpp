#include "erec/universe/vset.hpp"

#include <algorithm>
#include <cctype>

#include "erec/kernel/analysis.hpp"
#include "erec/kernel/code.hpp"
#include "erec/kernel/library.hpp"
#include "erec/kernel/machine.hpp"
#include "erec/kernel/program.hpp"
#include "erec/universe/typecode.hpp"

namespace erec {

namespace {

class HfParser {
 public:
  explicit HfParser(std::string_view s) : s_(s) {}

  HfSet parse() {
    HfSet r = value();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

 private:
  HfSet value() {
    skip();
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t n = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        n = n * 10 + static_cast<std::size_t>(s_[pos_++] - '0');
        if (n > 64) fail("ordinal numeral too large");
      }
      return von_neumann(n);
    }
    expect('{');
    HfSet r;
    skip();
    if (peek('}')) {
      ++pos_;
      return r;
    }
    for (;;) {
      r.elems.push_back(value());
      skip();
      if (peek(',')) {
        ++pos_;
        continue;
      }
      expect('}');
      return r;
    }
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  void expect(char c) {
    skip();
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw HfParseError("hf literal: " + what + " at offset " + std::to_string(pos_));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

Nat fst(const Nat& x) {
  auto d = try_unpair(x);
  return d.status == PairDecode::Status::ok ? d.first : Nat(0);
}

Nat snd(const Nat& x) {
  auto d = try_unpair(x);
  return d.status == PairDecode::Status::ok ? d.second : Nat(0);
}

// Term helpers for the type-forming functions.
Term call(const Nat& code, std::vector<Term> args) { return Term::call(code, std::move(args)); }
Term pair_t(Term a, Term b) { return call(library().pair, {std::move(a), std::move(b)}); }
Term tagged(std::uint64_t tag, Term a, Term b) {
  return pair_t(Term::lit(tag), pair_t(std::move(a), std::move(b)));
}
Term bar_t(Term a) { return call(library().fst, {call(library().snd, {std::move(a)})}); }
Term tilde_t(Term a, Term x) {
  return Term::apply(call(library().snd, {call(library().snd, {std::move(a)})}), {std::move(x)});
}

struct VCodes {
  Nat gp;  // (k, n, d) -> d(k) if k <= n else 0
  Nat d;
};

const VCodes& vcodes() {
  static const VCodes codes = [] {
    using T = Term;
    const Library& lib = library();
    VCodes c;
    c.gp = compile(T::if_eq(call(lib.leq, {T::arg(0), T::arg(1)}), T::lit(1),
                            T::apply(T::arg(2), {T::arg(0)}), T::lit(0)),
                   3);
    T empty = tagged(5, pair_t(T::lit(0), T::lit(0)), T::lit(lib.id));
    T step = tagged(5, pair_t(T::lit(0), T::arg(0)),
                    T::close(c.gp, {call(lib.pred, {T::arg(0)}), T::self_code()}));
    c.d = compile_recursive(T::if_eq(T::arg(0), T::lit(0), empty, step), 1);
    register_name("VNAT", c.d);
    return c;
  }();
  return codes;
}

struct GlCodes {
  Nat l1, l2, l3, l4, l5;
  Nat gl;
};

const GlCodes& glcodes() {
  static const GlCodes codes = [] {
    using T = Term;
    GlCodes c;
    // (y, x, a, b, self) -> self(a~x, b~y)
    c.l3 = compile(T::apply(T::arg(4), {tilde_t(T::arg(2), T::arg(1)), tilde_t(T::arg(3), T::arg(0))}), 5);
    // (x, a, b, self) -> sigma(bar b, y -> l3(y, x, a, b, self))
    c.l1 = compile(tagged(3, bar_t(T::arg(2)), T::close(c.l3, {T::arg(0), T::arg(1), T::arg(2), T::arg(3)})), 4);
    // (x, y, a, b, self) -> self(a~x, b~y)
    c.l5 = compile(T::apply(T::arg(4), {tilde_t(T::arg(2), T::arg(0)), tilde_t(T::arg(3), T::arg(1))}), 5);
    // (y, a, b, self) -> sigma(bar a, x -> l5(x, y, a, b, self))
    c.l4 = compile(tagged(3, bar_t(T::arg(1)), T::close(c.l5, {T::arg(0), T::arg(1), T::arg(2), T::arg(3)})), 4);
    // (z, a, b, self) -> pi(bar b, y -> l4(y, a, b, self))
    c.l2 = compile(tagged(4, bar_t(T::arg(2)), T::close(c.l4, {T::arg(1), T::arg(2), T::arg(3)})), 4);
    // (a, b)
    T left = tagged(4, bar_t(T::arg(0)), T::close(c.l1, {T::arg(0), T::arg(1), T::self_code()}));
    T right = T::close(c.l2, {T::arg(0), T::arg(1), T::self_code()});
    c.gl = compile_recursive(tagged(3, std::move(left), std::move(right)), 2);
    register_name("GL", c.gl);
    return c;
  }();
  return codes;
}

const Nat& refl() {
  static const Nat code = [] {
    using T = Term;
    // (x, a, self) -> (x, self(a~x))
    Nat f = compile(pair_t(T::arg(0), T::apply(T::arg(2), {tilde_t(T::arg(1), T::arg(0))})), 3);
    T half = T::close(f, {T::arg(0), T::self_code()});
    Nat r = compile_recursive(pair_t(half, half), 1);
    register_name("REFL", r);
    return r;
  }();
  return code;
}

}  // namespace

HfSet parse_hf(std::string_view text) { return HfParser(text).parse(); }

std::string to_string(const HfSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.elems.size(); ++i) {
    if (i) out += ',';
    out += to_string(s.elems[i]);
  }
  return out + "}";
}

HfSet von_neumann(std::size_t n) {
  HfSet s;
  for (std::size_t k = 0; k < n; ++k) s.elems.push_back(von_neumann(k));
  return s;
}

std::size_t rank(const HfSet& s) {
  std::size_t r = 0;
  for (const auto& e : s.elems) r = std::max(r, rank(e) + 1);
  return r;
}

std::size_t occurrences(const HfSet& s) {
  std::size_t n = s.elems.size();
  for (const auto& e : s.elems) n += occurrences(e);
  return n;
}

Nat hf_to_v(const HfSet& s) {
  if (s.elems.empty()) return sup_type(fin_type(0), library().id);
  std::vector<Nat> keys;
  std::vector<Nat> values;
  for (std::size_t i = 0; i < s.elems.size(); ++i) {
    keys.emplace_back(i);
    values.push_back(hf_to_v(s.elems[i]));
  }
  return sup_type(fin_type(s.elems.size()), table_code(keys, values));
}

Nat bar(const Nat& alpha) { return fst(snd(alpha)); }
Nat tilde(const Nat& alpha) { return snd(snd(alpha)); }

Outcome tilde_at(const Nat& alpha, const Nat& k, std::uint64_t fuel) {
  return apply(tilde(alpha), {k}, fuel);
}

const Nat& vnat_code() { return vcodes().d; }

Nat vnat_selector(std::uint64_t n) { return close_over(vcodes().gp, {Nat(n), vcodes().d}); }

Nat vnat(std::uint64_t n) {
  if (n == 0) return sup_type(fin_type(0), library().id);
  return sup_type(fin_type(n), vnat_selector(n - 1));
}

Nat omega() { return sup_type(nat_type(), vcodes().d); }

const Nat& gl_code() { return glcodes().gl; }

const Nat& refl_code() { return refl(); }

Nat gl(const Nat& alpha, const Nat& beta) {
  const GlCodes& c = glcodes();
  Nat left = pi_type(bar(alpha), close_over(c.l1, {alpha, beta, c.gl}));
  Nat right = close_over(c.l2, {alpha, beta, c.gl});
  return sigma_type(left, right);
}

}  // namespace erec
