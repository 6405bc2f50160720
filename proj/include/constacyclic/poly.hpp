#pragma once

// Dense univariate polynomials over F_p and over R, little-endian.

#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "constacyclic/ring.hpp"

namespace constacyclic {

/// A polynomial over F_p. Coefficient i is the coefficient of x^i; there
/// are never trailing zeros, so the zero polynomial has no coefficients.
class FpPoly {
 public:
  explicit FpPoly(const PrimeField& field) : field_(field) {}
  FpPoly(const PrimeField& field, const std::vector<std::int64_t>& coeffs);

  static FpPoly from_residues(const PrimeField& field, std::vector<Residue> coeffs);
  static FpPoly constant(const PrimeField& field, std::int64_t value);
  static FpPoly one(const PrimeField& field) { return constant(field, 1); }
  /// coef * x^k.
  static FpPoly monomial(const PrimeField& field, std::int64_t coef, std::size_t k);
  /// x^n - 1, the cyclic modulus.
  static FpPoly cyclic_modulus(const PrimeField& field, std::size_t n);
  /// x^n + 1, the negacyclic modulus.
  static FpPoly negacyclic_modulus(const PrimeField& field, std::size_t n);

  const PrimeField& field() const noexcept { return field_; }
  const std::vector<Residue>& coeffs() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
  Residue coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Residue leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
  Residue evaluate(Residue point) const noexcept;

  /// Scales to leading coefficient 1; throws DomainError for zero.
  FpPoly monic() const;
  FpPoly scaled(Residue s) const;

  FpPoly operator-() const;
  FpPoly& operator+=(const FpPoly& rhs);
  FpPoly& operator-=(const FpPoly& rhs);
  FpPoly& operator*=(const FpPoly& rhs);
  friend FpPoly operator+(FpPoly lhs, const FpPoly& rhs) { return lhs += rhs; }
  friend FpPoly operator-(FpPoly lhs, const FpPoly& rhs) { return lhs -= rhs; }
  friend FpPoly operator*(FpPoly lhs, const FpPoly& rhs) { return lhs *= rhs; }

  friend auto operator<=>(const FpPoly&, const FpPoly&) = default;

 private:
  void trim();

  PrimeField field_;
  std::vector<Residue> coeffs_;
};

/// Degree first, then lexicographic on the little-endian coefficients.
bool degree_lex_less(const FpPoly& lhs, const FpPoly& rhs);

struct DivMod {
  FpPoly quotient;
  FpPoly remainder;
};

/// num = den * quotient + remainder with deg remainder < deg den.
DivMod poly_divmod(const FpPoly& num, const FpPoly& den);
bool divides(const FpPoly& divisor, const FpPoly& value);

/// Monic gcd d with Bezout cofactors: s*f + t*g = d.
struct ExtendedGcd {
  FpPoly gcd;
  FpPoly s;
  FpPoly t;
};

ExtendedGcd poly_gcd(const FpPoly& f, const FpPoly& g);

struct Factor {
  FpPoly irreducible;
  unsigned multiplicity;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Factorization of a monic polynomial into monic irreducibles by trial
/// division, sorted by degree_lex_less.
std::vector<Factor> factor_monic(const FpPoly& f);

/// Every monic divisor of a monic `f`, sorted by degree_lex_less.
std::vector<FpPoly> monic_divisors(const FpPoly& f);

/// Monic normalization of x^{deg h} h(1/x). Requires h(0) != 0.
FpPoly reciprocal_dual(const FpPoly& h);

/// Descending powers, e.g. `x^2+2*x+2`; `0` for the zero polynomial.
std::string to_string(const FpPoly& f);
/// Terms `c`, `x`, `x^k`, `c*x`, `c*x^k` joined by `+` or `-`, any order.
FpPoly parse_fp_poly(const PrimeField& field, std::string_view text);
std::ostream& operator<<(std::ostream& os, const FpPoly& f);

/// A polynomial over R with the same trimming invariant as FpPoly.
class RPoly {
 public:
  explicit RPoly(const PrimeField& field) : field_(field) {}
  RPoly(const PrimeField& field, std::vector<RingElement> coeffs);

  /// The image of an F_p polynomial under F_p -> R.
  static RPoly embed(const FpPoly& f);
  static RPoly monomial(const RingElement& coef, std::size_t k);

  const PrimeField& field() const noexcept { return field_; }
  const std::vector<RingElement>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  RingElement coeff(std::size_t i) const;

  RPoly scaled(const RingElement& s) const;

  RPoly operator-() const;
  RPoly& operator+=(const RPoly& rhs);
  RPoly& operator-=(const RPoly& rhs);
  RPoly& operator*=(const RPoly& rhs);
  friend RPoly operator+(RPoly lhs, const RPoly& rhs) { return lhs += rhs; }
  friend RPoly operator-(RPoly lhs, const RPoly& rhs) { return lhs -= rhs; }
  friend RPoly operator*(RPoly lhs, const RPoly& rhs) { return lhs *= rhs; }

  friend auto operator<=>(const RPoly&, const RPoly&) = default;

 private:
  void trim();

  PrimeField field_;
  std::vector<RingElement> coeffs_;
};

/// eta1*g1 + eta2*g2 + eta3*g3, computed coefficientwise with crt_join.
RPoly eta_combine(const FpPoly& g1, const FpPoly& g2, const FpPoly& g3);
/// Inverse of eta_combine.
std::array<FpPoly, 3> eta_split(const RPoly& f);

/// f mod x^n - constant.
RPoly reduce_mod_binomial(const RPoly& f, std::size_t n, const RingElement& constant);
/// f mod x^n - (1 - 2u^2).
RPoly rpoly_reduce(const RPoly& f, std::size_t n);
/// x^n - constant as an R-polynomial.
RPoly binomial(std::size_t n, const RingElement& constant);

/// Descending powers with triple-form coefficients, e.g. `[0,2,2]*x^2+[1,0,2]*x+[2,0,2]`.
std::string to_string(const RPoly& f);
/// Terms with coefficients `[a,b,c]` or integers.
RPoly parse_rpoly(const PrimeField& field, std::string_view text);
std::ostream& operator<<(std::ostream& os, const RPoly& f);

}  // namespace constacyclic
