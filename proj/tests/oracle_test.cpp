#include <doctest.h>

#include "constacyclic/codes.hpp"
#include "constacyclic/errors.hpp"
#include "constacyclic/gray.hpp"
#include "constacyclic/oracle.hpp"

using namespace constacyclic;

namespace {

FpPoly P(const PrimeField& f, std::string_view text) { return parse_fp_poly(f, text); }

ConstaCode example_code() {
  PrimeField f(3);
  return code_from_generators(f, 2, P(f, "x+2"), P(f, "x^2+1"), FpPoly::one(f));
}

}  // namespace

TEST_CASE("ideal check") {
  PrimeField f(3);
  CHECK(oracle::brute_ideal_check({VectorR::zero(f, 2)}, 2));
  CHECK_FALSE(oracle::brute_ideal_check({parse_vector_r(f, "1,0")}, 2));
  CHECK_FALSE(oracle::brute_ideal_check({}, 2));
  CHECK(oracle::brute_ideal_check(code_span(example_code()), 2));
  // A cyclic ideal that is not constacyclic.
  RWordSet ones;
  for (std::int64_t a = 0; a < 3; ++a) {
    for (std::int64_t b = 0; b < 3; ++b) {
      for (std::int64_t c = 0; c < 3; ++c) {
        RingElement r(f, a, b, c);
        ones.insert(VectorR(f, {r, r}));
      }
    }
  }
  CHECK(oracle::brute_ideal_check(ones, 2, RingElement::one(f)));
  CHECK_FALSE(oracle::brute_ideal_check(ones, 2));
}

TEST_CASE("generated ideals match the code spans") {
  PrimeField f(3);
  for (const auto& code : all_codes(f, 2)) {
    CHECK(oracle::brute_ideal_generated(combined_generator(code), 2, RingElement::lambda(f)) == code_span(code));
  }
  CHECK_THROWS_AS(oracle::brute_ideal_generated(RPoly::embed(FpPoly::one(f)), 3, RingElement::lambda(f), 1000),
                  EnumerationLimitError);
}

TEST_CASE("brute dual") {
  PrimeField f(3);
  auto all = oracle::brute_dual(f, 2, {VectorR::zero(f, 2)});
  CHECK(all.size() == 729);
  auto full = code_span(code_from_generators(f, 2, FpPoly::one(f), FpPoly::one(f), FpPoly::one(f)));
  auto none = oracle::brute_dual(f, 2, full);
  REQUIRE(none.size() == 1);
  CHECK(none.begin()->is_zero());
  auto code = example_code();
  auto dual = oracle::brute_dual(f, 2, code_span(code));
  CHECK(dual.size() == 27);
  CHECK(dual == code_span(code_dual(code)));
}

TEST_CASE("double dual is the R-linear closure") {
  PrimeField f(3);
  RWordSet seed{parse_vector_r(f, "1+u,u^2")};
  auto closure = oracle::brute_r_linear_closure(f, 2, seed);
  CHECK(oracle::brute_dual(f, 2, oracle::brute_dual(f, 2, seed)) == closure);
  CHECK(closure.contains(VectorR::zero(f, 2)));
  CHECK(is_fp_linear(closure));
}

TEST_CASE("exhaustive divisor search") {
  PrimeField f(3);
  CHECK(oracle::exhaustive_divisor_search(P(f, "x+1")) == std::vector<FpPoly>{FpPoly::one(f), P(f, "x+1")});
  CHECK(oracle::exhaustive_divisor_search(P(f, "x^4+2")).size() == 8);
  CHECK(oracle::exhaustive_divisor_search(P(f, "x^4+2")) == monic_divisors(P(f, "x^4+2")));
  CHECK(oracle::exhaustive_divisor_search(P(f, "x^2+1")) == std::vector<FpPoly>{FpPoly::one(f), P(f, "x^2+1")});
  CHECK_THROWS_AS(oracle::exhaustive_divisor_search(FpPoly::cyclic_modulus(f, 20), 1000), EnumerationLimitError);
}

TEST_CASE("minimum weight") {
  PrimeField f(3);
  CHECK_FALSE(oracle::brute_min_weight({VectorFp::zero(f, 4)}).has_value());
  CHECK(oracle::brute_min_weight(LinearCodeFp::full(f, 3).enumerate()) == std::optional<std::size_t>(1));
  auto image = gray_image_code(example_code()).enumerate();
  CHECK(oracle::brute_min_weight(image) == std::optional<std::size_t>(2));
}
