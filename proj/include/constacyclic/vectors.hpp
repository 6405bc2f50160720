#pragma once

// Fixed-length vectors over F_p and over R, and the three shifts acting on them.

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "constacyclic/poly.hpp"
#include "constacyclic/ring.hpp"

namespace constacyclic {

class VectorFp {
 public:
  VectorFp(const PrimeField& field, const std::vector<std::int64_t>& entries);
  static VectorFp from_residues(const PrimeField& field, std::vector<Residue> entries);
  static VectorFp zero(const PrimeField& field, std::size_t length);

  const PrimeField& field() const noexcept { return field_; }
  const std::vector<Residue>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  Residue operator[](std::size_t i) const { return entries_[i]; }
  bool is_zero() const noexcept;
  /// Number of nonzero entries.
  std::size_t weight() const noexcept;

  VectorFp scaled(Residue s) const;
  VectorFp& operator+=(const VectorFp& rhs);
  VectorFp& operator-=(const VectorFp& rhs);
  friend VectorFp operator+(VectorFp lhs, const VectorFp& rhs) { return lhs += rhs; }
  friend VectorFp operator-(VectorFp lhs, const VectorFp& rhs) { return lhs -= rhs; }

  friend auto operator<=>(const VectorFp&, const VectorFp&) = default;

 private:
  explicit VectorFp(const PrimeField& field) : field_(field) {}

  PrimeField field_;
  std::vector<Residue> entries_;
};

/// A vector in R^n, n >= 1.
class VectorR {
 public:
  VectorR(const PrimeField& field, std::vector<RingElement> entries);
  static VectorR zero(const PrimeField& field, std::size_t length);

  const PrimeField& field() const noexcept { return field_; }
  const std::vector<RingElement>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const RingElement& operator[](std::size_t i) const { return entries_[i]; }
  bool is_zero() const noexcept;

  VectorR scaled(const RingElement& s) const;
  VectorR& operator+=(const VectorR& rhs);
  VectorR& operator-=(const VectorR& rhs);
  friend VectorR operator+(VectorR lhs, const VectorR& rhs) { return lhs += rhs; }
  friend VectorR operator-(VectorR lhs, const VectorR& rhs) { return lhs -= rhs; }

  friend auto operator<=>(const VectorR&, const VectorR&) = default;

 private:
  PrimeField field_;
  std::vector<RingElement> entries_;
};

/// Sets are ordered so that iteration and serialization are deterministic.
using RWordSet = std::set<VectorR>;
using FpWordSet = std::set<VectorFp>;

enum class ShiftKind { sigma, gamma, rho };

std::string to_string(ShiftKind kind);
ShiftKind parse_shift_kind(std::string_view text);

/// sigma: cyclic right shift; gamma: the wrapped entry is negated;
/// rho: the wrapped entry is multiplied by 1 - 2u^2.
VectorR shift_apply(ShiftKind kind, const VectorR& v);
/// rho needs ring-valued entries and is rejected here with DomainError.
VectorFp shift_apply(ShiftKind kind, const VectorFp& v);

Residue dot(const VectorFp& x, const VectorFp& y);
/// Euclidean inner product x0*y0 + ... + x_{n-1}*y_{n-1} computed in R.
RingElement inner_product(const VectorR& x, const VectorR& y);

/// Coefficient layout (a_0..a_{n-1}, b_0..b_{n-1}, c_0..c_{n-1}) in F_p^{3n}.
VectorFp flatten(const VectorR& v);
VectorR unflatten(const VectorFp& v);

/// Coefficients of a polynomial of degree < n as a length-n vector.
VectorR to_vector(const RPoly& f, std::size_t n);
VectorFp to_vector(const FpPoly& f, std::size_t n);
RPoly to_poly(const VectorR& v);
FpPoly to_poly(const VectorFp& v);

/// Comma-separated residues, e.g. `4,3,3,1`.
std::string to_string(const VectorFp& v);
/// Comma-separated triples, e.g. `[1,0,1],[2,0,2]`.
std::string to_string(const VectorR& v);
VectorFp parse_vector_fp(const PrimeField& field, std::string_view text);
/// Entries may be in triple or expression form.
VectorR parse_vector_r(const PrimeField& field, std::string_view text);

}  // namespace constacyclic
