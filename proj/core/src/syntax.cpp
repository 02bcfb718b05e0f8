#include "erec/syntax.hpp"

#include <cctype>
#include <sstream>

#include "erec/kernel/library.hpp"
#include "erec/realize/lpo.hpp"
#include "erec/universe/typecode.hpp"
#include "erec/universe/vset.hpp"

namespace erec {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip();
    return pos_ >= s_.size();
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string word() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        ++pos_;
      } else {
        break;
      }
    }
    if (start == pos_) fail("expected a word");
    return std::string(s_.substr(start, pos_ - start));
  }
  // Connective: everything up to whitespace or a parenthesis.
  std::string op() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '(' &&
           s_[pos_] != ')') {
      ++pos_;
    }
    if (start == pos_) fail("expected a connective");
    return std::string(s_.substr(start, pos_ - start));
  }
  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }
  // Text of a brace-balanced group starting at the cursor.
  std::string braces() {
    skip();
    if (pos_ >= s_.size() || (s_[pos_] != '{' && !std::isdigit(static_cast<unsigned char>(s_[pos_])))) {
      fail("expected a set literal");
    }
    std::size_t start = pos_;
    if (s_[pos_] != '{') return digits();
    int level = 0;
    do {
      if (s_[pos_] == '{') ++level;
      if (s_[pos_] == '}') --level;
      ++pos_;
    } while (pos_ < s_.size() && level > 0);
    if (level != 0) fail("unbalanced braces");
    return std::string(s_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

// Named codes built on first use.
std::optional<Nat> named(const std::string& name) {
  static const bool ready = [] {
    vnat_code();
    gl_code();
    lpo_code();
    return true;
  }();
  (void)ready;
  return lookup_name(name);
}

Nat number(const std::string& d) {
  if (d.size() < 19) return Nat(std::stoull(d));
  return Nat(BigInt(d));
}

Nat code_at(Cursor& c) {
  char ch = c.peek();
  if (std::isdigit(static_cast<unsigned char>(ch))) return number(c.digits());
  if (c.accept('<')) {
    std::vector<Nat> elems;
    if (!c.accept('>')) {
      do {
        elems.push_back(code_at(c));
      } while (c.accept(','));
      c.expect('>');
    }
    return Nat::tuple(elems);
  }
  if (c.accept('(')) {
    Nat a = code_at(c);
    c.expect(',');
    Nat b = code_at(c);
    c.expect(')');
    return Nat::pair(a, b);
  }
  if (c.accept('[')) {
    Nat base = code_at(c);
    bool minus = false;
    if (c.accept('-')) {
      minus = true;
    } else {
      c.expect('+');
    }
    auto d = static_cast<std::int64_t>(std::stoll(c.digits()));
    c.expect(']');
    return base.plus(minus ? -d : d);
  }
  if (std::isalpha(static_cast<unsigned char>(ch))) {
    std::string name = c.word();
    if (auto v = named(name)) return *v;
    c.fail("unknown code name '" + name + "'");
  }
  c.fail("expected a code");
}

Nat type_at(Cursor& c) {
  char ch = c.peek();
  if (!std::isalpha(static_cast<unsigned char>(ch))) return code_at(c);
  std::string w = c.word();
  if (w == "nat") return nat_type();
  if (w == "fin") {
    bool paren = c.accept('(');
    Nat n = code_at(c);
    if (paren) c.expect(')');
    return fin_type(n);
  }
  if (w == "pl" || w == "sigma" || w == "pi" || w == "sup") {
    c.expect('(');
    Nat a = type_at(c);
    c.expect(',');
    Nat b = w == "pl" ? type_at(c) : code_at(c);
    c.expect(')');
    if (w == "pl") return pl_type(a, b);
    if (w == "sigma") return sigma_type(a, b);
    if (w == "pi") return pi_type(a, b);
    return sup_type(a, b);
  }
  if (auto v = named(w)) return *v;
  c.fail("unknown type former '" + w + "'");
}

SetTerm term_at(Cursor& c) {
  if (c.accept('(')) {
    std::string head = c.word();
    SetTerm t;
    if (head == "hf") {
      std::string lit = c.braces();
      HfSet s = parse_hf(lit);
      t = SetTerm::literal(hf_to_v(s), "(hf " + to_string(s) + ")");
    } else if (head == "vnat") {
      std::string d = c.digits();
      t = SetTerm::literal(vnat(std::stoull(d)), "(vnat " + d + ")");
    } else if (head == "code") {
      Nat v = code_at(c);
      t = SetTerm::literal(v, "(code " + format_code(v) + ")");
    } else {
      c.fail("unknown term '" + head + "'");
    }
    c.expect(')');
    return t;
  }
  if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    Nat v = number(c.digits());
    return SetTerm::literal(v, v.to_string());
  }
  std::string w = c.word();
  if (w == "omega") return SetTerm::literal(omega(), "omega");
  return SetTerm::variable(w);
}

Formula formula_at(Cursor& c) {
  c.expect('(');
  std::string op = c.op();
  Formula f = Formula::eq(SetTerm{}, SetTerm{});
  if (op == "=" || op == "in") {
    SetTerm a = term_at(c);
    SetTerm b = term_at(c);
    f = op == "=" ? Formula::eq(a, b) : Formula::in(a, b);
  } else if (op == "and" || op == "or" || op == "->") {
    Formula p = formula_at(c);
    Formula q = formula_at(c);
    f = op == "and" ? Formula::conj(p, q) : op == "or" ? Formula::disj(p, q) : Formula::implies(p, q);
  } else if (op == "not") {
    f = Formula::neg(formula_at(c));
  } else if (op == "all-in" || op == "ex-in") {
    std::string x = c.word();
    SetTerm t = term_at(c);
    Formula body = formula_at(c);
    f = op == "all-in" ? Formula::all_in(x, t, body) : Formula::ex_in(x, t, body);
  } else if (op == "all" || op == "ex") {
    std::string x = c.word();
    Formula body = formula_at(c);
    f = op == "all" ? Formula::all(x, body) : Formula::ex(x, body);
  } else {
    c.fail("unknown connective '" + op + "'");
  }
  c.expect(')');
  return f;
}

}  // namespace

Nat parse_code(std::string_view text) {
  Cursor c(text);
  Nat v = code_at(c);
  if (!c.done()) c.fail("trailing input");
  return v;
}

std::string format_code(const Nat& code) {
  if (code.is_small()) return code.to_string();
  std::string_view name = library_name(code);
  if (!name.empty()) return std::string(name);
  auto t = try_decode_tuple(code);
  if (t.status == TupleDecode::Status::ok) {
    std::string out = "<";
    for (std::size_t i = 0; i < t.elems.size(); ++i) {
      if (i) out += ',';
      out += format_code(t.elems[i]);
    }
    return out + ">";
  }
  auto p = try_unpair(code);
  if (p.status == PairDecode::Status::ok && code.log2() > 64) {
    return "(" + format_code(p.first) + "," + format_code(p.second) + ")";
  }
  return code.to_string();
}

Nat parse_type(std::string_view text) {
  Cursor c(text);
  Nat v = type_at(c);
  if (!c.done()) c.fail("trailing input");
  return v;
}

Formula parse_formula(std::string_view text) {
  Cursor c(text);
  Formula f = formula_at(c);
  if (!c.done()) c.fail("trailing input");
  if (!f.well_scoped()) throw SyntaxError("a variable is bound twice on one path");
  return f;
}

SetTerm parse_set_term(std::string_view text) {
  Cursor c(text);
  SetTerm t = term_at(c);
  if (!c.done()) c.fail("trailing input");
  return t;
}

TotalityCertificate parse_certificate(std::string_view text) {
  TotalityCertificate cert;
  bool have_code = false;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    std::string rest;
    std::getline(ls, rest);
    if (key == "code") {
      cert.code = parse_code(rest);
      have_code = true;
    } else if (key == "position") {
      cert.arg_position = std::stoul(rest);
    } else if (key == "context" || key == "prefix") {
      std::istringstream vs(rest);
      std::string tok;
      auto& dst = key == "context" ? cert.context : cert.prefix;
      while (vs >> tok) dst.push_back(parse_code(tok));
    } else if (key == "tail-from") {
      cert.tail_from = std::stoull(rest);
    } else if (key == "tail-value") {
      cert.tail_value = parse_code(rest);
    } else {
      throw SyntaxError("certificate: unknown key '" + key + "'");
    }
  }
  if (!have_code) throw SyntaxError("certificate: missing code");
  return cert;
}

std::string format_certificate(const TotalityCertificate& c) {
  std::string out = "code " + format_code(c.code) + "\n";
  out += "position " + std::to_string(c.arg_position) + "\n";
  out += "context";
  for (const auto& v : c.context) out += " " + format_code(v);
  out += "\nprefix";
  for (const auto& v : c.prefix) out += " " + format_code(v);
  out += "\ntail-from " + std::to_string(c.tail_from) + "\n";
  out += "tail-value " + format_code(c.tail_value) + "\n";
  return out;
}

}  // namespace erec
