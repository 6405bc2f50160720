#pragma once

// (1 - 2u^2)-constacyclic codes over R and their structure: generators,
// CRT decomposition into one cyclic and two negacyclic codes over F_p, duals.

#include <array>
#include <cstddef>
#include <vector>

#include "constacyclic/linear_code.hpp"
#include "constacyclic/poly.hpp"
#include "constacyclic/vectors.hpp"

namespace constacyclic {

/// A (1 - 2u^2)-constacyclic code of length n, given by the monic generators
/// of its components: g1 | x^n - 1 and g2, g3 | x^n + 1 over F_p.
class ConstaCode {
 public:
  const PrimeField& field() const noexcept { return field_; }
  std::size_t length() const noexcept { return n_; }
  const FpPoly& g1() const noexcept { return generators_[0]; }
  const FpPoly& g2() const noexcept { return generators_[1]; }
  const FpPoly& g3() const noexcept { return generators_[2]; }
  const std::array<FpPoly, 3>& generators() const noexcept { return generators_; }

  friend bool operator==(const ConstaCode&, const ConstaCode&) = default;

 private:
  ConstaCode(const PrimeField& field, std::size_t n, std::array<FpPoly, 3> generators)
      : field_(field), n_(n), generators_(std::move(generators)) {}

  friend ConstaCode code_from_generators(const PrimeField&, std::size_t, const FpPoly&, const FpPoly&, const FpPoly&);
  friend std::vector<ConstaCode> all_codes(const PrimeField&, std::size_t);

  PrimeField field_;
  std::size_t n_;
  std::array<FpPoly, 3> generators_;
};

/// Throws DomainError for non-monic generators or when a generator does not
/// divide its component modulus.
ConstaCode code_from_generators(const PrimeField& field, std::size_t n, const FpPoly& g1, const FpPoly& g2,
                                const FpPoly& g3);

/// Every code of length n: one per triple of monic divisors of
/// (x^n - 1, x^n + 1, x^n + 1), ordered by the divisor orders.
std::vector<ConstaCode> all_codes(const PrimeField& field, std::size_t n);

/// The modulus of component i (0-based): x^n - 1 for the first, x^n + 1 otherwise.
FpPoly component_modulus(const PrimeField& field, std::size_t n, std::size_t component);

/// Cofactors h_i with g_i * h_i equal to the component modulus.
std::array<FpPoly, 3> check_polynomials(const ConstaCode& code);

/// g = eta1*g1 + eta2*g2 + eta3*g3, the single generator of the code.
RPoly combined_generator(const ConstaCode& code);

/// p^{3n - deg g1 - deg g2 - deg g3}.
BigInt code_size(const ConstaCode& code);

/// The F_p code spanned by g, x*g, ..., x^{n-1-deg g}*g.
LinearCodeFp polynomial_code(const FpPoly& g, std::size_t n);

/// The component codes C1 (cyclic), C2 and C3 (negacyclic).
std::array<LinearCodeFp, 3> component_codes(const ConstaCode& code);

/// {eta1*x + eta2*y + eta3*z : x in c1, y in c2, z in c3}.
RWordSet compose(const LinearCodeFp& c1, const LinearCodeFp& c2, const LinearCodeFp& c3,
                 std::size_t cap = kDefaultEnumerationCap);

/// Every codeword; throws EnumerationLimitError when |C| exceeds `cap`.
RWordSet code_span(const ConstaCode& code, std::size_t cap = kDefaultEnumerationCap);

/// Membership through the component remainders.
bool code_contains(const ConstaCode& code, const VectorR& v);

/// The F_p-span of a set of vectors over R, flattened into F_p^{3n}.
LinearCodeFp flattened_span(const PrimeField& field, std::size_t n, const RWordSet& words);

/// The code as an F_p-subspace of F_p^{3n} (flatten layout), built from bases.
LinearCodeFp flattened_code(const ConstaCode& code);

/// The ideal generated by g in R[x]/<x^n - constant> as an F_p-subspace of F_p^{3n}.
LinearCodeFp ideal_span(const RPoly& g, std::size_t n, const RingElement& constant);
/// Same with constant 1 - 2u^2.
LinearCodeFp ideal_span(const RPoly& g, std::size_t n);

/// True when the finite set is closed under addition (equivalently, it is the
/// F_p-span of itself).
bool is_fp_linear(const RWordSet& words);

struct Decomposition {
  LinearCodeFp c1;
  LinearCodeFp c2;
  LinearCodeFp c3;
};

/// Projections C1, C2, C3 of an R-linear set. Throws DomainError if the set
/// is empty, mixes lengths, or is not closed under addition and R-scaling.
Decomposition code_decompose(const RWordSet& words);

/// The dual code, generated by the reciprocals of the check polynomials.
ConstaCode code_dual(const ConstaCode& code);

/// x . y = 0 for every pair (including x with itself).
bool check_self_orthogonal(const RWordSet& words);

bool check_constacyclic_closure(ShiftKind kind, const RWordSet& words);
bool check_constacyclic_closure(ShiftKind kind, const FpWordSet& words);

/// Whether <g*f> = <g> in R[x]/<x^n - (1 - 2u^2)>, with f = eta_combine(f1, f2, f3).
/// Throws DomainError unless gcd(f_i, h_i) = 1 for every component.
bool check_gcd_regeneration(const ConstaCode& code, const FpPoly& f1, const FpPoly& f2, const FpPoly& f3);

}  // namespace constacyclic
