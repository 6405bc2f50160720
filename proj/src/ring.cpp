#include "constacyclic/ring.hpp"

#include <sstream>

#include "constacyclic/errors.hpp"
#include "text_util.hpp"

namespace constacyclic {

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  if (value % 2 == 0) return value == 2;
  for (std::uint64_t d = 3; d * d <= value; d += 2) {
    if (value % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) {
  if (p < 3 || p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw InvalidPrimeError(std::to_string(p) + " is not an odd prime");
  }
  p_ = static_cast<Residue>(p);
}

Residue PrimeField::reduce(std::int64_t value) const noexcept {
  auto r = value % static_cast<std::int64_t>(p_);
  return static_cast<Residue>(r < 0 ? r + p_ : r);
}

Residue PrimeField::add(Residue lhs, Residue rhs) const noexcept {
  auto s = static_cast<std::uint64_t>(lhs) + rhs;
  return static_cast<Residue>(s >= p_ ? s - p_ : s);
}

Residue PrimeField::sub(Residue lhs, Residue rhs) const noexcept {
  return lhs >= rhs ? lhs - rhs : static_cast<Residue>(static_cast<std::uint64_t>(lhs) + p_ - rhs);
}

Residue PrimeField::neg(Residue value) const noexcept { return value == 0 ? 0 : p_ - value; }

Residue PrimeField::mul(Residue lhs, Residue rhs) const noexcept {
  return static_cast<Residue>(static_cast<std::uint64_t>(lhs) * rhs % p_);
}

Residue PrimeField::pow(Residue base, std::uint64_t exponent) const noexcept {
  Residue result = 1 % p_;
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1;
  }
  return result;
}

Residue PrimeField::inv(Residue value) const {
  if (value % p_ == 0) throw DomainError("zero has no inverse in F_" + std::to_string(p_));
  return pow(value, p_ - 2);
}

void require_same_field(const PrimeField& lhs, const PrimeField& rhs) {
  if (lhs != rhs) {
    throw ModulusMismatchError("modulus mismatch: F_" + std::to_string(lhs.modulus()) + " vs F_" +
                               std::to_string(rhs.modulus()));
  }
}

RingElement::RingElement(const PrimeField& field, std::int64_t a, std::int64_t b, std::int64_t c)
    : field_(field), a_(field.reduce(a)), b_(field.reduce(b)), c_(field.reduce(c)) {}

RingElement RingElement::operator-() const {
  RingElement r = *this;
  r.a_ = field_.neg(a_);
  r.b_ = field_.neg(b_);
  r.c_ = field_.neg(c_);
  return r;
}

RingElement& RingElement::operator+=(const RingElement& rhs) {
  require_same_field(field_, rhs.field_);
  a_ = field_.add(a_, rhs.a_);
  b_ = field_.add(b_, rhs.b_);
  c_ = field_.add(c_, rhs.c_);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& rhs) {
  require_same_field(field_, rhs.field_);
  a_ = field_.sub(a_, rhs.a_);
  b_ = field_.sub(b_, rhs.b_);
  c_ = field_.sub(c_, rhs.c_);
  return *this;
}

RingElement& RingElement::operator*=(const RingElement& rhs) {
  require_same_field(field_, rhs.field_);
  const auto& f = field_;
  // u^3 folds onto u and u^4 onto u^2.
  Residue u1 = f.add(f.mul(a_, rhs.b_), f.mul(b_, rhs.a_));
  Residue u2 = f.add(f.add(f.mul(a_, rhs.c_), f.mul(c_, rhs.a_)), f.mul(b_, rhs.b_));
  Residue u3 = f.add(f.mul(b_, rhs.c_), f.mul(c_, rhs.b_));
  Residue u4 = f.mul(c_, rhs.c_);
  a_ = f.mul(a_, rhs.a_);
  b_ = f.add(u1, u3);
  c_ = f.add(u2, u4);
  return *this;
}

RingElement RingElement::scaled(Residue s) const {
  RingElement r = *this;
  r.a_ = field_.mul(a_, s);
  r.b_ = field_.mul(b_, s);
  r.c_ = field_.mul(c_, s);
  return r;
}

std::optional<RingElement> unit_inverse(const RingElement& r) {
  const auto& f = r.field();
  auto t = crt_split(r);
  if (t.x == 0 || t.y == 0 || t.z == 0) return std::nullopt;
  return crt_join(f, {f.inv(t.x), f.inv(t.y), f.inv(t.z)});
}

IdempotentSystem idempotent_system(const PrimeField& field) {
  std::int64_t h = field.half();
  return {RingElement(field, 1, 0, -1), RingElement(field, 0, h, h), RingElement(field, 0, -h, h)};
}

CrtTriple crt_split(const RingElement& r) {
  const auto& f = r.field();
  return {r.a(), f.add(f.add(r.a(), r.b()), r.c()), f.add(f.sub(r.a(), r.b()), r.c())};
}

RingElement crt_join(const PrimeField& field, const CrtTriple& t) {
  // Inverse of evaluation at u = 0, 1, -1.
  Residue h = field.half();
  Residue b = field.mul(field.sub(t.y, t.z), h);
  Residue c = field.sub(field.mul(field.add(t.y, t.z), h), t.x);
  return {field, t.x, b, c};
}

RingElement lambda_power(const PrimeField& field, std::uint64_t n) {
  return n % 2 == 0 ? RingElement::one(field) : RingElement::lambda(field);
}

std::string to_string(const RingElement& r) {
  std::ostringstream os;
  os << '[' << r.a() << ',' << r.b() << ',' << r.c() << ']';
  return os.str();
}

std::string to_expression(const RingElement& r) {
  if (r.is_zero()) return "0";
  std::string out;
  auto append = [&out](Residue coef, const char* unit) {
    if (coef == 0) return;
    if (!out.empty()) out += '+';
    if (*unit == '\0') {
      out += std::to_string(coef);
    } else {
      if (coef != 1) out += std::to_string(coef) + "*";
      out += unit;
    }
  };
  append(r.a(), "");
  append(r.b(), "u");
  append(r.c(), "u^2");
  return out;
}

RingElement parse_ring_element(const PrimeField& field, std::string_view text) {
  text = detail::trim(text);
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw ParseError("unterminated ring element '" + std::string(text) + "'");
    auto parts = detail::split_top_level(text.substr(1, text.size() - 2), ',');
    if (parts.size() != 3) throw ParseError("ring element needs three coordinates: '" + std::string(text) + "'");
    return {field, detail::parse_int(parts[0]), detail::parse_int(parts[1]), detail::parse_int(parts[2])};
  }
  RingElement result = RingElement::zero(field);
  RingElement u = RingElement::u(field);
  for (const auto& term : detail::split_terms(text)) {
    auto mono = detail::parse_monomial(term.body, 'u');
    std::int64_t coef = mono.coefficient.empty() ? 1 : detail::parse_int(mono.coefficient);
    RingElement value = RingElement::scalar(field, term.negative ? -coef : coef);
    // u^k for k >= 1 equals u when k is odd and u^2 when k is even.
    if (mono.exponent > 0) value *= mono.exponent % 2 == 1 ? u : u * u;
    result += value;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const RingElement& r) { return os << to_string(r); }

}  // namespace constacyclic
