#include "constacyclic/nechaev.hpp"

#include <numeric>

#include "constacyclic/errors.hpp"

namespace constacyclic {

namespace {

void require_odd(std::size_t n) {
  if (n == 0 || n % 2 == 0) throw DomainError("n must be odd, got " + std::to_string(n));
}

}  // namespace

RPoly mu_map(const RPoly& c, std::size_t n) {
  require_odd(n);
  if (c.degree() >= static_cast<int>(n)) {
    throw DomainError("mu acts on residues of degree < " + std::to_string(n) + ", got degree " +
                      std::to_string(c.degree()));
  }
  std::vector<RingElement> coeffs = c.coeffs();
  for (std::size_t j = 1; j < coeffs.size(); j += 2) coeffs[j] *= RingElement::lambda(c.field());
  return RPoly(c.field(), std::move(coeffs));
}

VectorR mu_bar(const VectorR& v) {
  require_odd(v.size());
  std::vector<RingElement> entries = v.entries();
  for (std::size_t i = 1; i < entries.size(); i += 2) entries[i] *= RingElement::lambda(v.field());
  return VectorR(v.field(), std::move(entries));
}

NechaevPerm tau_build(std::size_t n) {
  require_odd(n);
  std::vector<std::size_t> table(2 * n);
  std::iota(table.begin(), table.end(), std::size_t{0});
  for (std::size_t i = 1; i + 2 <= n; i += 2) std::swap(table[i], table[n + i]);
  return NechaevPerm(n, std::move(table));
}

VectorFp nechaev_pi(const NechaevPerm& perm, const VectorFp& w) {
  if (w.size() != perm.table().size()) {
    throw LengthMismatchError("Nechaev permutation of length " + std::to_string(perm.table().size()) +
                              " applied to a vector of length " + std::to_string(w.size()));
  }
  std::vector<Residue> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[perm.table()[i]];
  return VectorFp::from_residues(w.field(), std::move(out));
}

std::string to_string(const NechaevPerm& perm) {
  std::string out;
  for (std::size_t i = 0; i < perm.table().size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(perm.table()[i]);
  }
  return out;
}

}  // namespace constacyclic
