#include <doctest.h>

#include "constacyclic/codes.hpp"
#include "constacyclic/descriptor.hpp"
#include "constacyclic/errors.hpp"
#include "constacyclic/oracle.hpp"

using namespace constacyclic;

namespace {

FpPoly P(const PrimeField& f, std::string_view text) { return parse_fp_poly(f, text); }

ConstaCode example_code() {
  PrimeField f(3);
  return code_from_generators(f, 2, P(f, "x+2"), P(f, "x^2+1"), FpPoly::one(f));
}

ConstaCode full_code(std::uint64_t p, std::size_t n) {
  PrimeField f(p);
  return code_from_generators(f, n, FpPoly::one(f), FpPoly::one(f), FpPoly::one(f));
}

ConstaCode zero_code(std::uint64_t p, std::size_t n) {
  PrimeField f(p);
  return code_from_generators(f, n, FpPoly::cyclic_modulus(f, n), FpPoly::negacyclic_modulus(f, n),
                              FpPoly::negacyclic_modulus(f, n));
}

VectorR V(const PrimeField& f, std::string_view text) { return parse_vector_r(f, text); }

}  // namespace

TEST_CASE("shifts") {
  PrimeField f(5);
  VectorFp v(f, {1, 2, 3});
  CHECK(shift_apply(ShiftKind::sigma, v) == VectorFp(f, {3, 1, 2}));
  PrimeField g(3);
  CHECK(shift_apply(ShiftKind::gamma, VectorFp(g, {1, 2, 0})) == VectorFp(g, {0, 1, 2}));
  CHECK(shift_apply(ShiftKind::gamma, VectorFp(g, {1, 2, 1})) == VectorFp(g, {2, 1, 2}));
  CHECK(shift_apply(ShiftKind::rho, V(g, "u,1+u")) == V(g, "1+2*u+u^2,u"));
  CHECK_THROWS_AS(shift_apply(ShiftKind::rho, v), DomainError);
  CHECK(parse_shift_kind("gamma") == ShiftKind::gamma);
  CHECK_THROWS_AS(parse_shift_kind("tau"), ParseError);
}

TEST_CASE("construction validates generators") {
  PrimeField f(3);
  CHECK_NOTHROW(example_code());
  CHECK_THROWS_AS(code_from_generators(f, 2, P(f, "x^2+1"), FpPoly::one(f), FpPoly::one(f)), DomainError);
  CHECK_THROWS_AS(code_from_generators(f, 2, P(f, "2*x+1"), FpPoly::one(f), FpPoly::one(f)), DomainError);
  CHECK_THROWS_AS(code_from_generators(f, 2, FpPoly::one(f), P(f, "x+1"), FpPoly::one(f)), DomainError);
  CHECK_THROWS_AS(code_from_generators(f, 0, FpPoly::one(f), FpPoly::one(f), FpPoly::one(f)), DomainError);
  CHECK_THROWS_AS(code_from_generators(f, 2, P(PrimeField(5), "x+4"), FpPoly::one(f), FpPoly::one(f)),
                  ModulusMismatchError);
}

TEST_CASE("combined generator") {
  PrimeField f(3);
  CHECK(combined_generator(example_code()) == parse_rpoly(f, "[0,2,2]*x^2+[1,0,2]*x+[2,0,2]"));
  CHECK(combined_generator(full_code(3, 2)) == RPoly::embed(FpPoly::one(f)));
}

TEST_CASE("sizes") {
  CHECK(code_size(example_code()) == 27);
  CHECK(code_size(full_code(3, 2)) == 729);
  CHECK(code_size(full_code(7, 3)) == BigInt(40353607));
  CHECK(code_size(zero_code(5, 3)) == 1);
  CHECK(code_span(example_code()).size() == 27);
  CHECK(code_span(full_code(3, 1)).size() == 27);
  auto zero = code_span(zero_code(3, 2));
  REQUIRE(zero.size() == 1);
  CHECK(zero.begin()->is_zero());
  CHECK_THROWS_AS(code_span(full_code(3, 3), 1000), EnumerationLimitError);
}

TEST_CASE("membership") {
  PrimeField f(3);
  auto code = example_code();
  CHECK(code_contains(code, VectorR::zero(f, 2)));
  // eta1 * (1, 1) has first component 1 + x, which x + 2 does not divide.
  auto eta1 = idempotent_system(f).eta1;
  CHECK_FALSE(code_contains(code, VectorR(f, {eta1, eta1})));
  CHECK(code_contains(code, VectorR(f, {eta1, -eta1})));
  CHECK(code_contains(full_code(3, 2), V(f, "[1,2,0],[2,2,1]")));
  CHECK_THROWS_AS(code_contains(code, VectorR::zero(f, 3)), LengthMismatchError);
  auto words = code_span(code);
  for (std::size_t i = 0; i < 729; ++i) {
    std::vector<Residue> digits(6);
    std::size_t k = i;
    for (auto& d : digits) {
      d = static_cast<Residue>(k % 3);
      k /= 3;
    }
    VectorR v = unflatten(VectorFp::from_residues(f, digits));
    CHECK(code_contains(code, v) == words.contains(v));
  }
}

TEST_CASE("decomposition") {
  PrimeField f(3);
  auto parts = code_decompose(code_span(example_code()));
  CHECK(parts.c1 == polynomial_code(P(f, "x+2"), 2));
  CHECK(parts.c1.dimension() == 1);
  CHECK(parts.c2.dimension() == 0);
  CHECK(parts.c3 == LinearCodeFp::full(f, 2));
  auto zero = code_decompose({VectorR::zero(f, 2)});
  CHECK(zero.c1.dimension() + zero.c2.dimension() + zero.c3.dimension() == 0);
  auto full = code_decompose(code_span(full_code(3, 2)));
  CHECK(full.c1 == LinearCodeFp::full(f, 2));
  CHECK(full.c2 == LinearCodeFp::full(f, 2));
  CHECK(full.c3 == LinearCodeFp::full(f, 2));
  CHECK_THROWS_AS(code_decompose({}), DomainError);
  CHECK_THROWS_AS(code_decompose({V(f, "1,0")}), DomainError);
  RWordSet not_r_linear;
  for (Residue s = 0; s < 3; ++s) not_r_linear.insert(V(f, "1,0").scaled(RingElement::scalar(f, s)));
  CHECK_THROWS_AS(code_decompose(not_r_linear), DomainError);
}

TEST_CASE("duals") {
  PrimeField f(3);
  auto code = example_code();
  auto dual = code_dual(code);
  CHECK(dual.g1() == P(f, "x+1"));
  CHECK(dual.g2() == FpPoly::one(f));
  CHECK(dual.g3() == P(f, "x^2+1"));
  CHECK(code_size(dual) == 27);
  CHECK(code_dual(full_code(3, 2)) == zero_code(3, 2));
  CHECK(code_dual(zero_code(3, 2)) == full_code(3, 2));
  auto words = code_span(code), dual_words = code_span(dual);
  for (const auto& x : words) {
    for (const auto& y : dual_words) CHECK(inner_product(x, y).is_zero());
  }
}

TEST_CASE("every code of small length is constacyclic with the predicted size and dual") {
  for (auto [p, n] : {std::pair<std::uint64_t, std::size_t>{3, 1}, {3, 2}, {5, 2}, {3, 3}}) {
    PrimeField f(p);
    const BigInt total = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(3 * n));
    for (const auto& code : all_codes(f, n)) {
      auto words = code_span(code);
      CHECK(BigInt(words.size()) == code_size(code));
      CHECK(check_constacyclic_closure(ShiftKind::rho, words));
      CHECK(code_size(code) * code_size(code_dual(code)) == total);
      CHECK(code_dual(code_dual(code)) == code);
      CHECK(flattened_code(code) == flattened_span(f, n, words));
      CHECK(ideal_span(combined_generator(code), n) == flattened_code(code));
    }
  }
}

TEST_CASE("inner products and self-orthogonality") {
  PrimeField f5(5);
  VectorR w = V(f5, "1+u^2,2+2*u^2");
  CHECK(inner_product(w, w).is_zero());
  CHECK(inner_product(w, VectorR::zero(f5, 2)).is_zero());
  PrimeField f3(3);
  CHECK(inner_product(V(f3, "u"), V(f3, "u")) == RingElement(f3, 0, 0, 1));
  RWordSet span;
  for (Residue s = 0; s < 5; ++s) span.insert(w.scaled(RingElement::scalar(f5, s)));
  CHECK(check_self_orthogonal(span));
  CHECK(check_self_orthogonal({VectorR::zero(f3, 2)}));
  CHECK_FALSE(check_self_orthogonal({V(f3, "1")}));
}

TEST_CASE("closure checks") {
  PrimeField f(3);
  CHECK_FALSE(check_constacyclic_closure(ShiftKind::rho, RWordSet{V(f, "1,0")}));
  for (auto kind : {ShiftKind::sigma, ShiftKind::gamma, ShiftKind::rho}) {
    CHECK(check_constacyclic_closure(kind, RWordSet{VectorR::zero(f, 3)}));
  }
}

TEST_CASE("gcd regeneration") {
  PrimeField f(3);
  auto code = example_code();
  CHECK(check_gcd_regeneration(code, FpPoly::one(f), FpPoly::one(f), FpPoly::one(f)));
  CHECK(check_gcd_regeneration(code, P(f, "x"), FpPoly::one(f), FpPoly::one(f)));
  CHECK_THROWS_AS(check_gcd_regeneration(code, P(f, "x+1"), FpPoly::one(f), FpPoly::one(f)), DomainError);
  RPoly gf = rpoly_reduce(combined_generator(code) * eta_combine(P(f, "x"), FpPoly::one(f), FpPoly::one(f)), 2);
  CHECK(oracle::brute_ideal_generated(gf, 2, RingElement::lambda(f)) == code_span(code));
}

TEST_CASE("descriptors") {
  auto code = example_code();
  CHECK(serialize_descriptor(code) == R"({"p":3,"n":2,"g1":"x+2","g2":"x^2+1","g3":"1"})");
  CHECK(parse_descriptor(serialize_descriptor(code)) == code);
  CHECK_THROWS_AS(parse_descriptor("{"), ParseError);
  CHECK_THROWS_AS(parse_descriptor(R"({"p":3,"n":2,"g1":"x+2","g2":"1"})"), ParseError);
  CHECK_THROWS_AS(parse_descriptor(R"({"p":"3","n":2,"g1":"1","g2":"1","g3":"1"})"), ParseError);
  CHECK_THROWS_AS(parse_descriptor(R"({"p":4,"n":2,"g1":"1","g2":"1","g3":"1"})"), InvalidPrimeError);
  CHECK_THROWS_AS(parse_descriptor(R"({"p":3,"n":2,"g1":"x^2+1","g2":"1","g3":"1"})"), DomainError);
}
