#pragma once

// Brute-force verifiers. These share no arithmetic with the structural
// modules: ring products, polynomial reduction and division are re-derived
// here from the defining relations, so agreement with the structural code is
// independent evidence.

#include <cstddef>
#include <optional>

#include "constacyclic/linear_code.hpp"
#include "constacyclic/poly.hpp"
#include "constacyclic/vectors.hpp"

namespace constacyclic::oracle {

/// Whether the polynomials of `words` form an ideal of R[x]/<x^n - (1 - 2u^2)>:
/// nonempty and closed under addition, every R-scalar multiple, and x-multiplication.
bool brute_ideal_check(const RWordSet& words, std::size_t n);

/// Same closure test for an arbitrary binomial modulus x^n - constant.
bool brute_ideal_check(const RWordSet& words, std::size_t n, const RingElement& constant);

/// {a(x) g(x) mod x^n - constant : a ranges over all p^{3n} residues}.
RWordSet brute_ideal_generated(const RPoly& g, std::size_t n, const RingElement& constant,
                               std::size_t cap = kDefaultEnumerationCap);

/// Every x in R^n with x . y = 0 for all y in `words`, by scanning R^n.
RWordSet brute_dual(const PrimeField& field, std::size_t n, const RWordSet& words,
                    std::size_t cap = kDefaultEnumerationCap);

/// The smallest set containing 0 and `words` closed under addition and R-scaling.
RWordSet brute_r_linear_closure(const PrimeField& field, std::size_t n, const RWordSet& words,
                                std::size_t cap = kDefaultEnumerationCap);

/// Every monic divisor of `f` found by dividing `f` by each monic polynomial
/// of degree <= deg f; sorted by degree_lex_less.
std::vector<FpPoly> exhaustive_divisor_search(const FpPoly& f, std::size_t cap = kDefaultEnumerationCap);

/// Minimum Hamming weight over nonzero words; nullopt when there is none.
std::optional<std::size_t> brute_min_weight(const FpWordSet& words);

}  // namespace constacyclic::oracle
