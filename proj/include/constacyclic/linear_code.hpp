#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "constacyclic/vectors.hpp"

namespace constacyclic {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// p^k, or EnumerationLimitError when it exceeds `cap`.
std::size_t checked_power(std::size_t p, std::size_t k, std::size_t cap);

/// An F_p-linear code of length m held as its reduced row-echelon generator
/// matrix. The matrix is unique per code, so equality of codes is equality of
/// matrices.
class LinearCodeFp {
 public:
  /// The span of `generators`; every generator must have length `length`.
  LinearCodeFp(const PrimeField& field, std::size_t length, const std::vector<VectorFp>& generators);

  static LinearCodeFp zero(const PrimeField& field, std::size_t length) { return {field, length, {}}; }
  static LinearCodeFp full(const PrimeField& field, std::size_t length);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t length() const noexcept { return length_; }
  std::size_t dimension() const noexcept { return rows_.size(); }
  /// Rows of the reduced row-echelon generator matrix.
  const std::vector<VectorFp>& basis() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(const VectorFp& v) const;
  BigInt size() const;
  /// Every codeword; throws EnumerationLimitError beyond `cap` words.
  FpWordSet enumerate(std::size_t cap = kDefaultEnumerationCap) const;

  /// The Euclidean dual.
  LinearCodeFp dual() const;
  /// Checked on the basis: the shift of every row stays in the code.
  bool is_closed_under(ShiftKind kind) const;
  bool is_self_orthogonal() const;

  friend bool operator==(const LinearCodeFp&, const LinearCodeFp&) = default;

 private:
  PrimeField field_;
  std::size_t length_;
  std::vector<VectorFp> rows_;
  std::vector<std::size_t> pivots_;
};

/// Row space of the canonical generator matrix, one line per row.
std::string to_string(const LinearCodeFp& code);

}  // namespace constacyclic
