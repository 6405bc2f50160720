#include "text_util.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "constacyclic/errors.hpp"

namespace constacyclic::detail {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

std::int64_t parse_int(std::string_view text) {
  text = trim(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::uint64_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size() ||
      value > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw ParseError("invalid integer '" + std::string(text) + "'");
  }
  auto result = static_cast<std::int64_t>(value);
  return negative ? -result : result;
}

std::vector<SignedTerm> split_terms(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty expression");
  std::vector<SignedTerm> terms;
  int depth = 0;
  bool negative = false;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    auto body = trim(text.substr(start, end - start));
    if (body.empty()) throw ParseError("empty term in '" + std::string(text) + "'");
    terms.push_back({negative, body});
  };
  std::size_t i = 0;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    start = i = 1;
  }
  for (; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '[' || ch == '(') ++depth;
    if (ch == ']' || ch == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced brackets in '" + std::string(text) + "'");
    // A sign directly after '^' or '*' belongs to the operand, not a new term.
    bool binary = i > start && text[i - 1] != '^' && text[i - 1] != '*';
    if (depth == 0 && (ch == '+' || ch == '-') && binary) {
      flush(i);
      negative = ch == '-';
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced brackets in '" + std::string(text) + "'");
  flush(text.size());
  return terms;
}

std::vector<std::string_view> split_top_level(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '[' || ch == '(') ++depth;
    if (ch == ']' || ch == ')') --depth;
    if (depth == 0 && ch == sep) {
      parts.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  parts.push_back(trim(text.substr(start)));
  return parts;
}

Monomial parse_monomial(std::string_view term, char var) {
  term = trim(term);
  auto factors = split_top_level(term, '*');
  std::string_view power = factors.back();
  if (power.empty() || power.front() != var) {
    if (factors.size() != 1) throw ParseError("malformed term '" + std::string(term) + "'");
    return {term, 0};
  }
  if (factors.size() > 2) throw ParseError("malformed term '" + std::string(term) + "'");
  std::uint64_t exponent = 1;
  power.remove_prefix(1);
  power = trim(power);
  if (!power.empty()) {
    if (power.front() != '^') throw ParseError("malformed term '" + std::string(term) + "'");
    auto k = parse_int(power.substr(1));
    if (k < 0) throw ParseError("negative exponent in '" + std::string(term) + "'");
    exponent = static_cast<std::uint64_t>(k);
  }
  std::string_view coefficient = factors.size() == 2 ? factors.front() : std::string_view{};
  if (factors.size() == 2 && coefficient.empty()) throw ParseError("malformed term '" + std::string(term) + "'");
  return {coefficient, exponent};
}

}  // namespace constacyclic::detail
