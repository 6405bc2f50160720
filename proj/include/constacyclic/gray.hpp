#pragma once

// The Gray map R -> F_p^2, a + bu + cu^2 -> (-c, 2a + c), and its blockwise
// extension R^n -> F_p^{2n}. The map is F_p-linear and discards b.

#include <utility>

#include "constacyclic/codes.hpp"

namespace constacyclic {

std::pair<Residue, Residue> gray_elem(const RingElement& r);

/// (-c_0, ..., -c_{n-1}, 2a_0 + c_0, ..., 2a_{n-1} + c_{n-1}).
VectorFp gray_vec(const VectorR& v);

/// Image of an F_p-linear set. Throws DomainError for a set that is not
/// closed under addition. The dimension may be below log_p |words| because
/// the map is not injective.
LinearCodeFp gray_image_code(const RWordSet& words);
LinearCodeFp gray_image_code(const ConstaCode& code);

/// Image of an F_p-subspace of F_p^{3n} in flatten layout.
LinearCodeFp gray_image_of_flattened(const LinearCodeFp& flat);

}  // namespace constacyclic
