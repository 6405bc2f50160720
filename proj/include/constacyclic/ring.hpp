#pragma once

// Arithmetic in F_p and in R = F_p[u]/(u^3 - u).

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace constacyclic {

/// A residue of F_p, always kept in [0, p).
using Residue = std::uint32_t;

bool is_prime(std::uint64_t value);

/// The prime field F_p for an odd prime 3 <= p < 2^31.
class PrimeField {
 public:
  /// Throws InvalidPrimeError unless `p` is an odd prime below 2^31.
  explicit PrimeField(std::uint64_t p);

  Residue modulus() const noexcept { return p_; }

  Residue reduce(std::int64_t value) const noexcept;
  Residue add(Residue lhs, Residue rhs) const noexcept;
  Residue sub(Residue lhs, Residue rhs) const noexcept;
  Residue neg(Residue value) const noexcept;
  Residue mul(Residue lhs, Residue rhs) const noexcept;
  Residue pow(Residue base, std::uint64_t exponent) const noexcept;
  /// Multiplicative inverse; throws DomainError for 0.
  Residue inv(Residue value) const;
  /// 2^{-1}, which exists because p is odd.
  Residue half() const noexcept { return static_cast<Residue>((p_ + 1) / 2); }

  friend auto operator<=>(const PrimeField&, const PrimeField&) = default;

 private:
  Residue p_;
};

/// Throws ModulusMismatchError when the fields differ.
void require_same_field(const PrimeField& lhs, const PrimeField& rhs);

/// One element a + b*u + c*u^2 of R.
class RingElement {
 public:
  RingElement(const PrimeField& field, std::int64_t a, std::int64_t b, std::int64_t c);

  static RingElement zero(const PrimeField& field) { return {field, 0, 0, 0}; }
  static RingElement one(const PrimeField& field) { return {field, 1, 0, 0}; }
  static RingElement scalar(const PrimeField& field, std::int64_t value) { return {field, value, 0, 0}; }
  static RingElement u(const PrimeField& field) { return {field, 0, 1, 0}; }
  /// The constacyclic constant 1 - 2u^2.
  static RingElement lambda(const PrimeField& field) { return {field, 1, 0, -2}; }

  const PrimeField& field() const noexcept { return field_; }
  Residue a() const noexcept { return a_; }
  Residue b() const noexcept { return b_; }
  Residue c() const noexcept { return c_; }
  bool is_zero() const noexcept { return a_ == 0 && b_ == 0 && c_ == 0; }

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& rhs);
  RingElement& operator-=(const RingElement& rhs);
  RingElement& operator*=(const RingElement& rhs);
  /// Action of the scalar s in F_p.
  RingElement scaled(Residue s) const;

  friend RingElement operator+(RingElement lhs, const RingElement& rhs) { return lhs += rhs; }
  friend RingElement operator-(RingElement lhs, const RingElement& rhs) { return lhs -= rhs; }
  friend RingElement operator*(RingElement lhs, const RingElement& rhs) { return lhs *= rhs; }

  friend auto operator<=>(const RingElement&, const RingElement&) = default;

 private:
  PrimeField field_;
  Residue a_;
  Residue b_;
  Residue c_;
};

/// The inverse of `r`, or nullopt when `r` is not a unit.
std::optional<RingElement> unit_inverse(const RingElement& r);

/// The orthogonal idempotents eta1 = 1 - u^2, eta2 = (u + u^2)/2, eta3 = (-u + u^2)/2.
struct IdempotentSystem {
  RingElement eta1;
  RingElement eta2;
  RingElement eta3;
};

IdempotentSystem idempotent_system(const PrimeField& field);

/// Coordinates of r = eta1*x + eta2*y + eta3*z, i.e. r evaluated at u = 0, 1, -1.
struct CrtTriple {
  Residue x;
  Residue y;
  Residue z;

  friend auto operator<=>(const CrtTriple&, const CrtTriple&) = default;
};

CrtTriple crt_split(const RingElement& r);
RingElement crt_join(const PrimeField& field, const CrtTriple& t);

/// (1 - 2u^2)^n, which is 1 for even n and 1 - 2u^2 for odd n.
RingElement lambda_power(const PrimeField& field, std::uint64_t n);

/// Canonical triple form `[a,b,c]`.
std::string to_string(const RingElement& r);
/// Expression form `a+b*u+c*u^2` with zero terms omitted (`0` for zero).
std::string to_expression(const RingElement& r);
/// Accepts either the triple form or the expression form.
RingElement parse_ring_element(const PrimeField& field, std::string_view text);

std::ostream& operator<<(std::ostream& os, const RingElement& r);

}  // namespace constacyclic
