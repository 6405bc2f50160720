#pragma once

// Tokenizing helpers shared by the ring-element and polynomial parsers.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace constacyclic::detail {

std::string_view trim(std::string_view text);

/// Parses a signed decimal integer; throws ParseError.
std::int64_t parse_int(std::string_view text);

struct SignedTerm {
  bool negative;
  std::string_view body;
};

/// Splits `a+b-c` into signed terms at bracket depth zero.
std::vector<SignedTerm> split_terms(std::string_view text);

/// Splits on `sep` at bracket depth zero.
std::vector<std::string_view> split_top_level(std::string_view text, char sep);

/// A monomial `coef*var^k`. An empty `coefficient` means an implicit 1.
struct Monomial {
  std::string_view coefficient;
  std::uint64_t exponent;
};

/// Recognizes `c`, `var`, `var^k`, `c*var`, `c*var^k`.
Monomial parse_monomial(std::string_view term, char var);

}  // namespace constacyclic::detail
