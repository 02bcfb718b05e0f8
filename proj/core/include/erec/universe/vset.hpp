#ifndef EREC_UNIVERSE_VSET_HPP
#define EREC_UNIVERSE_VSET_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "erec/kernel/outcome.hpp"
#include "erec/nat.hpp"

namespace erec {

/// Hereditarily finite set literal. Element order and repetitions are kept
/// as written; they matter for the code but not for extensional equality.
struct HfSet {
  std::vector<HfSet> elems;

  friend bool operator==(const HfSet&, const HfSet&) = default;
};

class HfParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses `{}`, `{{},{{}}}`; a decimal numeral n inside a literal stands for
/// the von Neumann ordinal n.
HfSet parse_hf(std::string_view text);
std::string to_string(const HfSet& s);
HfSet von_neumann(std::size_t n);
std::size_t rank(const HfSet& s);
/// Number of element occurrences at every level.
std::size_t occurrences(const HfSet& s);

/// sup(fin k, e) with {e}(i) = hf_to_v(a_i); {} goes to sup(fin 0, ID).
Nat hf_to_v(const HfSet& s);

/// Branching type and subtree selector of sup(n, e). Outside the sup shape
/// these follow the library's FST/SND convention.
Nat bar(const Nat& alpha);
Nat tilde(const Nat& alpha);
Outcome tilde_at(const Nat& alpha, const Nat& k, std::uint64_t fuel = 10'000);

/// Code d with {d}(0) = sup(fin 0, ID) and {d}(n+1) = sup(fin(n+1), g_n).
const Nat& vnat_code();
/// g_n: k -> vnat(k) for k <= n, 0 otherwise.
Nat vnat_selector(std::uint64_t n);
/// Built on the host; equals the value of {d}(n).
Nat vnat(std::uint64_t n);
Nat omega();

/// Code of the binary function (a, b) -> a gl b.
const Nat& gl_code();
/// Built on the host; equals the value of {gl_code()}(alpha, beta).
Nat gl(const Nat& alpha, const Nat& beta);

/// Code r with {r}(alpha) E (alpha gl alpha) for every alpha in V:
/// r(a) = (F, F), F(x) = (x, r(a~x)).
const Nat& refl_code();

}  // namespace erec

#endif  // EREC_UNIVERSE_VSET_HPP
