#include "constacyclic/linear_code.hpp"

#include "constacyclic/errors.hpp"

namespace constacyclic {

std::size_t checked_power(std::size_t p, std::size_t k, std::size_t cap) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (result > cap / p) {
      throw EnumerationLimitError(std::to_string(p) + "^" + std::to_string(k) + " words exceed the enumeration cap of " +
                                  std::to_string(cap));
    }
    result *= p;
  }
  if (result > cap) {
    throw EnumerationLimitError(std::to_string(result) + " words exceed the enumeration cap of " + std::to_string(cap));
  }
  return result;
}

LinearCodeFp::LinearCodeFp(const PrimeField& field, std::size_t length, const std::vector<VectorFp>& generators)
    : field_(field), length_(length) {
  std::vector<std::vector<Residue>> m;
  m.reserve(generators.size());
  for (const auto& g : generators) {
    require_same_field(field, g.field());
    if (g.size() != length) {
      throw LengthMismatchError("generator of length " + std::to_string(g.size()) + " in a code of length " +
                                std::to_string(length));
    }
    m.push_back(g.entries());
  }
  const auto& f = field_;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < length && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    Residue inv = f.inv(m[rank][col]);
    for (auto& e : m[rank]) e = f.mul(e, inv);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Residue factor = m[r][col];
      for (std::size_t c = col; c < length; ++c) m[r][c] = f.sub(m[r][c], f.mul(factor, m[rank][c]));
    }
    pivots_.push_back(col);
    ++rank;
  }
  m.resize(rank);
  rows_.reserve(rank);
  for (auto& row : m) rows_.push_back(VectorFp::from_residues(field, std::move(row)));
}

LinearCodeFp LinearCodeFp::full(const PrimeField& field, std::size_t length) {
  std::vector<VectorFp> unit;
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<Residue> e(length, 0);
    e[i] = 1;
    unit.push_back(VectorFp::from_residues(field, std::move(e)));
  }
  return {field, length, unit};
}

bool LinearCodeFp::contains(const VectorFp& v) const {
  require_same_field(field_, v.field());
  if (v.size() != length_) return false;
  VectorFp rest = v;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Residue coef = rest[pivots_[r]];
    if (coef != 0) rest -= rows_[r].scaled(coef);
  }
  return rest.is_zero();
}

BigInt LinearCodeFp::size() const { return boost::multiprecision::pow(BigInt(field_.modulus()), rows_.size()); }

FpWordSet LinearCodeFp::enumerate(std::size_t cap) const {
  const std::size_t p = field_.modulus();
  const std::size_t total = checked_power(p, rows_.size(), cap);
  FpWordSet words;
  std::vector<Residue> coeffs(rows_.size(), 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    VectorFp w = VectorFp::zero(field_, length_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (coeffs[r] != 0) w += rows_[r].scaled(coeffs[r]);
    }
    words.insert(std::move(w));
    for (std::size_t r = 0; r < coeffs.size(); ++r) {
      if (++coeffs[r] < p) break;
      coeffs[r] = 0;
    }
  }
  return words;
}

LinearCodeFp LinearCodeFp::dual() const {
  // For RREF rows with pivot set P, each free column j gives the null vector
  // e_j - sum_r row_r[j] * e_{P[r]}.
  std::vector<bool> is_pivot(length_, false);
  for (auto c : pivots_) is_pivot[c] = true;
  std::vector<VectorFp> null_basis;
  for (std::size_t j = 0; j < length_; ++j) {
    if (is_pivot[j]) continue;
    std::vector<Residue> v(length_, 0);
    v[j] = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) v[pivots_[r]] = field_.neg(rows_[r][j]);
    null_basis.push_back(VectorFp::from_residues(field_, std::move(v)));
  }
  return {field_, length_, null_basis};
}

bool LinearCodeFp::is_closed_under(ShiftKind kind) const {
  for (const auto& row : rows_) {
    if (!contains(shift_apply(kind, row))) return false;
  }
  return true;
}

bool LinearCodeFp::is_self_orthogonal() const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = i; j < rows_.size(); ++j) {
      if (dot(rows_[i], rows_[j]) != 0) return false;
    }
  }
  return true;
}

std::string to_string(const LinearCodeFp& code) {
  std::string out = "[" + std::to_string(code.length()) + "," + std::to_string(code.dimension()) + "] over F_" +
                    std::to_string(code.field().modulus());
  for (const auto& row : code.basis()) out += "\n  " + to_string(row);
  return out;
}

}  // namespace constacyclic
