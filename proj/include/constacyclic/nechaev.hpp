#pragma once

// For odd n: the ring isomorphism mu: R[x]/<x^n - 1> -> R[x]/<x^n - (1 - 2u^2)>,
// c(x) -> c((1 - 2u^2) x), its coordinate form mu_bar, and the Nechaev
// permutation pi of F_p^{2n} with gray_vec(mu_bar(v)) = pi(gray_vec(v)).

#include <cstddef>
#include <string>
#include <vector>

#include "constacyclic/poly.hpp"
#include "constacyclic/vectors.hpp"

namespace constacyclic {

/// Coefficient j is scaled by (1 - 2u^2)^j. Requires odd n and deg c < n.
RPoly mu_map(const RPoly& c, std::size_t n);

/// Entry i is scaled by (1 - 2u^2)^i. Requires odd length. An involution.
VectorR mu_bar(const VectorR& v);

/// The involution tau = (1, n+1)(3, n+3)...(n-2, 2n-2) on {0, ..., 2n-1}.
class NechaevPerm {
 public:
  std::size_t n() const noexcept { return n_; }
  /// table()[i] = tau(i).
  const std::vector<std::size_t>& table() const noexcept { return table_; }

  friend bool operator==(const NechaevPerm&, const NechaevPerm&) = default;

 private:
  NechaevPerm(std::size_t n, std::vector<std::size_t> table) : n_(n), table_(std::move(table)) {}
  friend NechaevPerm tau_build(std::size_t n);

  std::size_t n_;
  std::vector<std::size_t> table_;
};

/// Throws DomainError for even or zero n.
NechaevPerm tau_build(std::size_t n);

/// (w_{tau(0)}, ..., w_{tau(2n-1)}).
VectorFp nechaev_pi(const NechaevPerm& perm, const VectorFp& w);

/// One-line image notation, e.g. `0 6 2 8 4 5 1 7 3 9`.
std::string to_string(const NechaevPerm& perm);

}  // namespace constacyclic
