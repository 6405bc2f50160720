#include <doctest.h>

#include <random>

#include "constacyclic/errors.hpp"
#include "constacyclic/oracle.hpp"
#include "constacyclic/poly.hpp"

using namespace constacyclic;

namespace {

FpPoly P(const PrimeField& f, std::string_view text) { return parse_fp_poly(f, text); }

FpPoly random_poly(const PrimeField& f, int max_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> coef(0, f.modulus() - 1);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<std::int64_t> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coef(rng);
  return {f, c};
}

}  // namespace

TEST_CASE("division with remainder") {
  PrimeField f(3);
  auto d = poly_divmod(P(f, "x^2+2"), P(f, "x+2"));
  CHECK(d.quotient == P(f, "x+1"));
  CHECK(d.remainder.is_zero());
  d = poly_divmod(P(f, "x^2+1"), P(f, "x+1"));
  CHECK(d.quotient == P(f, "x+2"));
  CHECK(d.remainder == FpPoly::constant(f, 2));
  FpPoly g = P(f, "2*x^3+x+1");
  d = poly_divmod(g, FpPoly::one(f));
  CHECK(d.quotient == g);
  CHECK(d.remainder.is_zero());
  CHECK_THROWS_AS(poly_divmod(g, FpPoly(f)), DomainError);
}

TEST_CASE("division identity on random inputs") {
  std::mt19937_64 rng(11);
  for (std::uint64_t p : {3, 5, 7}) {
    PrimeField f(p);
    for (int i = 0; i < 200; ++i) {
      FpPoly a = random_poly(f, 8, rng), b = random_poly(f, 4, rng);
      if (b.is_zero()) continue;
      auto d = poly_divmod(a, b);
      CHECK(d.quotient * b + d.remainder == a);
      CHECK(d.remainder.degree() < b.degree());
    }
  }
}

TEST_CASE("gcd with Bezout coefficients") {
  PrimeField f(3);
  auto g = poly_gcd(P(f, "x+1"), P(f, "x+2"));
  CHECK(g.gcd == FpPoly::one(f));
  CHECK(g.s * P(f, "x+1") + g.t * P(f, "x+2") == g.gcd);
  g = poly_gcd(P(f, "x^2+2"), P(f, "x+1"));
  CHECK(g.gcd == P(f, "x+1"));
  g = poly_gcd(P(f, "2*x+1"), FpPoly(f));
  CHECK(g.gcd == P(f, "x+2"));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    FpPoly a = random_poly(f, 6, rng), b = random_poly(f, 6, rng);
    if (a.is_zero() && b.is_zero()) continue;
    auto r = poly_gcd(a, b);
    CHECK(r.gcd.is_monic());
    CHECK(divides(r.gcd, a));
    CHECK(divides(r.gcd, b));
    CHECK(r.s * a + r.t * b == r.gcd);
  }
}

TEST_CASE("factorization of the cyclic and negacyclic moduli") {
  PrimeField f(3);
  auto factors = factor_monic(P(f, "x^4+2"));
  REQUIRE(factors.size() == 3);
  CHECK(factors[0] == Factor{P(f, "x+1"), 1});
  CHECK(factors[1] == Factor{P(f, "x+2"), 1});
  CHECK(factors[2] == Factor{P(f, "x^2+1"), 1});
  factors = factor_monic(P(f, "x^4+1"));
  REQUIRE(factors.size() == 2);
  CHECK(factors[0] == Factor{P(f, "x^2+x+2"), 1});
  CHECK(factors[1] == Factor{P(f, "x^2+2*x+2"), 1});
  CHECK(P(f, "x^2+x+2") * P(f, "x^2+2*x+2") == P(f, "x^4+1"));
  factors = factor_monic(P(f, "x+1"));
  REQUIRE(factors.size() == 1);
  CHECK(factors[0] == Factor{P(f, "x+1"), 1});
  factors = factor_monic(FpPoly::cyclic_modulus(f, 3));
  REQUIRE(factors.size() == 1);
  CHECK(factors[0] == Factor{P(f, "x+2"), 3});
  CHECK(factor_monic(FpPoly::one(f)).empty());
}

TEST_CASE("factor products recover the input") {
  for (std::uint64_t p : {3, 5, 7}) {
    PrimeField f(p);
    for (std::size_t n = 1; n <= 8; ++n) {
      for (const auto& m : {FpPoly::cyclic_modulus(f, n), FpPoly::negacyclic_modulus(f, n)}) {
        FpPoly product = FpPoly::one(f);
        for (const auto& fac : factor_monic(m)) {
          CHECK(fac.irreducible.is_monic());
          CHECK(oracle::exhaustive_divisor_search(fac.irreducible).size() == 2);
          for (unsigned k = 0; k < fac.multiplicity; ++k) product *= fac.irreducible;
        }
        CHECK(product == m);
      }
    }
  }
}

TEST_CASE("divisor lattice") {
  PrimeField f(3);
  auto divs = monic_divisors(P(f, "x^4+2"));
  CHECK(divs.size() == 8);
  CHECK(divs.front() == FpPoly::one(f));
  CHECK(divs.back() == P(f, "x^4+2"));
  CHECK(std::is_sorted(divs.begin(), divs.end(), degree_lex_less));
  CHECK(monic_divisors(FpPoly::one(f)) == std::vector<FpPoly>{FpPoly::one(f)});
  CHECK(monic_divisors(P(f, "x^2+1")) == std::vector<FpPoly>{FpPoly::one(f), P(f, "x^2+1")});
  for (std::uint64_t p : {3, 5}) {
    PrimeField g(p);
    for (std::size_t n = 1; n <= 6; ++n) {
      for (const auto& m : {FpPoly::cyclic_modulus(g, n), FpPoly::negacyclic_modulus(g, n)}) {
        CHECK(monic_divisors(m) == oracle::exhaustive_divisor_search(m));
      }
    }
  }
}

TEST_CASE("reciprocal duals") {
  PrimeField f(3);
  CHECK(reciprocal_dual(P(f, "x+1")) == P(f, "x+1"));
  CHECK(reciprocal_dual(P(f, "x^2+x+2")) == P(f, "x^2+2*x+2"));
  CHECK(reciprocal_dual(P(f, "x^2+1")) == P(f, "x^2+1"));
  CHECK_THROWS_AS(reciprocal_dual(P(f, "x^2+x")), DomainError);
}

TEST_CASE("eta combination") {
  PrimeField f(3);
  RPoly g = eta_combine(P(f, "x+2"), P(f, "x^2+1"), FpPoly::one(f));
  CHECK(g == parse_rpoly(f, "[0,2,2]*x^2+[1,0,2]*x+[2,0,2]"));
  CHECK(to_string(g) == "[0,2,2]*x^2+[1,0,2]*x+[2,0,2]");
  auto parts = eta_split(g);
  CHECK(parts[0] == P(f, "x+2"));
  CHECK(parts[1] == P(f, "x^2+1"));
  CHECK(parts[2] == FpPoly::one(f));
  CHECK(eta_combine(FpPoly::one(f), FpPoly::one(f), FpPoly::one(f)) == RPoly::embed(FpPoly::one(f)));
  CHECK(eta_combine(FpPoly(f), FpPoly(f), FpPoly(f)).is_zero());
  FpPoly h = P(f, "x^2+2*x+1");
  CHECK(eta_combine(h, h, h) == RPoly::embed(h));
}

TEST_CASE("eta combination is a ring map") {
  std::mt19937_64 rng(3);
  PrimeField f(5);
  for (int i = 0; i < 100; ++i) {
    FpPoly a1 = random_poly(f, 4, rng), a2 = random_poly(f, 4, rng), a3 = random_poly(f, 4, rng);
    FpPoly b1 = random_poly(f, 4, rng), b2 = random_poly(f, 4, rng), b3 = random_poly(f, 4, rng);
    CHECK(eta_combine(a1, a2, a3) * eta_combine(b1, b2, b3) == eta_combine(a1 * b1, a2 * b2, a3 * b3));
    CHECK(eta_combine(a1, a2, a3) + eta_combine(b1, b2, b3) == eta_combine(a1 + b1, a2 + b2, a3 + b3));
  }
}

TEST_CASE("reduction modulo x^n - lambda") {
  PrimeField f(3);
  RingElement one = RingElement::one(f);
  RingElement lam = RingElement::lambda(f);
  CHECK(rpoly_reduce(RPoly::monomial(one, 2), 2) == RPoly::monomial(lam, 0));
  CHECK(rpoly_reduce(RPoly::monomial(one, 3), 2) == RPoly::monomial(lam, 1));
  CHECK(rpoly_reduce(RPoly::monomial(one, 4), 2) == RPoly::monomial(one, 0));
  CHECK(reduce_mod_binomial(RPoly::monomial(one, 5), 2, one) == RPoly::monomial(one, 1));
  CHECK(binomial(2, lam) == parse_rpoly(f, "x^2+[2,0,2]"));
}

TEST_CASE("text forms") {
  PrimeField f(3);
  CHECK(to_string(P(f, "x^2+2*x+2")) == "x^2+2*x+2");
  CHECK(to_string(FpPoly(f)) == "0");
  CHECK(P(f, "x^4-1") == P(f, "x^4+2"));
  CHECK(P(f, "2*x + 1") == FpPoly(f, {1, 2}));
  CHECK(P(f, " x^3 - x ") == FpPoly(f, {0, 2, 0, 1}));
  CHECK_THROWS_AS(P(f, "2x+1"), ParseError);
  CHECK_THROWS_AS(P(f, "x^"), ParseError);
  CHECK_THROWS_AS(P(f, "y+1"), ParseError);
  CHECK(parse_rpoly(f, "[0,1,0]*x+1") == RPoly(f, {RingElement::one(f), RingElement::u(f)}));
  CHECK(parse_rpoly(f, "[1,0,1]*x") == RPoly::monomial(RingElement::lambda(f), 1));
  CHECK(parse_rpoly(f, to_string(parse_rpoly(f, "[0,2,2]*x^2+[1,0,2]*x+[2,0,2]"))) ==
        parse_rpoly(f, "[0,2,2]*x^2+[1,0,2]*x+[2,0,2]"));
}
