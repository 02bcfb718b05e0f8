#ifndef EREC_SYNTAX_HPP
#define EREC_SYNTAX_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "erec/kernel/certificate.hpp"
#include "erec/nat.hpp"
#include "erec/realize/formula.hpp"

namespace erec {

class SyntaxError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Decimal numeral, registered name (PAIR, B2, ...) or tuple literal
/// `<0,1,0,7>` whose entries are codes again.
Nat parse_code(std::string_view text);
/// Tuple literal for codes of modest size, decimal otherwise.
std::string format_code(const Nat& code);

/// `fin 3`, `nat`, `pl(T,T)`, `sigma(T,c)`, `pi(T,c)`, `sup(T,c)` or a code.
Nat parse_type(std::string_view text);

/// Prefix formula syntax; terms are variables, `(hf {..})`, `(vnat n)`,
/// `omega` or `(code c)`.
Formula parse_formula(std::string_view text);
SetTerm parse_set_term(std::string_view text);

/// Line-oriented certificate text:
///   code <c>
///   position 0
///   context c1 c2 ..
///   prefix v0 v1 ..
///   tail-from N
///   tail-value V
TotalityCertificate parse_certificate(std::string_view text);
std::string format_certificate(const TotalityCertificate& c);

}  // namespace erec

#endif  // EREC_SYNTAX_HPP
