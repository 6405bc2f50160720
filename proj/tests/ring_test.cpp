#include <doctest.h>

#include <random>
#include <vector>

#include "constacyclic/errors.hpp"
#include "constacyclic/ring.hpp"

using namespace constacyclic;

namespace {

std::vector<RingElement> all_elements(const PrimeField& f) {
  std::vector<RingElement> out;
  const auto p = f.modulus();
  for (Residue a = 0; a < p; ++a) {
    for (Residue b = 0; b < p; ++b) {
      for (Residue c = 0; c < p; ++c) out.emplace_back(f, a, b, c);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("prime field rejects non-primes and even primes") {
  CHECK_THROWS_AS(PrimeField(4), InvalidPrimeError);
  CHECK_THROWS_AS(PrimeField(2), InvalidPrimeError);
  CHECK_THROWS_AS(PrimeField(1), InvalidPrimeError);
  CHECK_THROWS_AS(PrimeField(9), InvalidPrimeError);
  CHECK_THROWS_WITH(PrimeField(4), "4 is not an odd prime");
  CHECK_NOTHROW(PrimeField(2147483647));
  CHECK_THROWS_AS(PrimeField(4294967311ULL), InvalidPrimeError);
}

TEST_CASE("field arithmetic") {
  PrimeField f(7);
  CHECK(f.reduce(-1) == 6);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.half() == 4);
  CHECK(f.pow(3, 6) == 1);
  CHECK_THROWS_AS(f.inv(0), DomainError);
}

TEST_CASE("multiplication folds u^3 to u") {
  PrimeField f(3);
  RingElement u = RingElement::u(f);
  CHECK(u * (u * u) == u);
  CHECK(RingElement(f, 1, 1, 0) * RingElement(f, 1, 0, 1) == RingElement(f, 1, 2, 1));
  RingElement r(f, 2, 1, 2);
  CHECK(r * RingElement::one(f) == r);
}

TEST_CASE("mixing fields is rejected") {
  RingElement a = RingElement::one(PrimeField(3));
  RingElement b = RingElement::one(PrimeField(5));
  CHECK_THROWS_AS(a * b, ModulusMismatchError);
  CHECK_THROWS_AS(a + b, ModulusMismatchError);
}

TEST_CASE("unit inverses") {
  PrimeField f(3);
  RingElement lam = RingElement::lambda(f);
  CHECK(lam == RingElement(f, 1, 0, 1));
  REQUIRE(unit_inverse(lam).has_value());
  CHECK(*unit_inverse(lam) == lam);
  CHECK_FALSE(unit_inverse(RingElement::u(f)).has_value());
  CHECK_FALSE(unit_inverse(RingElement(f, 1, 1, 0)).has_value());
  CHECK_FALSE(unit_inverse(RingElement::zero(f)).has_value());
}

TEST_CASE("idempotent system values") {
  SUBCASE("p = 3") {
    PrimeField f(3);
    auto e = idempotent_system(f);
    CHECK(e.eta1 == RingElement(f, 1, 0, 2));
    CHECK(e.eta2 == RingElement(f, 0, 2, 2));
    CHECK(e.eta3 == RingElement(f, 0, 1, 2));
  }
  SUBCASE("p = 5") {
    PrimeField f(5);
    auto e = idempotent_system(f);
    CHECK(e.eta1 == RingElement(f, 1, 0, 4));
    CHECK(e.eta2 == RingElement(f, 0, 3, 3));
    CHECK(e.eta3 == RingElement(f, 0, 2, 3));
  }
}

TEST_CASE("idempotents are orthogonal, sum to one, and diagonalize lambda") {
  for (std::uint64_t p : {3, 5, 7, 11, 13, 101}) {
    PrimeField f(p);
    auto e = idempotent_system(f);
    RingElement etas[] = {e.eta1, e.eta2, e.eta3};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) CHECK(etas[i] * etas[j] == (i == j ? etas[i] : RingElement::zero(f)));
    }
    CHECK(e.eta1 + e.eta2 + e.eta3 == RingElement::one(f));
    RingElement lam = RingElement::lambda(f);
    CHECK(lam * e.eta1 == e.eta1);
    CHECK(lam * e.eta2 == -e.eta2);
    CHECK(lam * e.eta3 == -e.eta3);
  }
}

TEST_CASE("crt split and join") {
  PrimeField f5(5);
  CHECK(crt_split(RingElement(f5, 1, 2, 3)) == CrtTriple{1, 1, 2});
  CHECK(crt_join(f5, {1, 1, 2}) == RingElement(f5, 1, 2, 3));
  CHECK(crt_split(RingElement::one(f5)) == CrtTriple{1, 1, 1});
  CHECK(crt_join(f5, {1, 1, 1}) == RingElement::one(f5));
  CHECK(crt_join(f5, {1, 4, 4}) == RingElement::lambda(f5));
  PrimeField f3(3);
  CHECK(crt_split(RingElement::lambda(f3)) == CrtTriple{1, 2, 2});
}

TEST_CASE("crt is a ring isomorphism on all of R at p = 3") {
  PrimeField f(3);
  auto elements = all_elements(f);
  for (const auto& r : elements) {
    CHECK(crt_join(f, crt_split(r)) == r);
    auto tr = crt_split(r);
    CHECK(unit_inverse(r).has_value() == (tr.x != 0 && tr.y != 0 && tr.z != 0));
    for (const auto& s : elements) {
      auto ts = crt_split(s), prod = crt_split(r * s);
      CHECK(prod == CrtTriple{f.mul(tr.x, ts.x), f.mul(tr.y, ts.y), f.mul(tr.z, ts.z)});
    }
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(7);
  for (std::uint64_t p : {5, 7, 1000003}) {
    PrimeField f(p);
    std::uniform_int_distribution<std::int64_t> dist(0, static_cast<std::int64_t>(p) - 1);
    auto random = [&] { return RingElement(f, dist(rng), dist(rng), dist(rng)); };
    for (int i = 0; i < 500; ++i) {
      RingElement a = random(), b = random(), c = random();
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == RingElement::zero(f));
      if (auto inv = unit_inverse(a)) CHECK(*inv * a == RingElement::one(f));
    }
  }
}

TEST_CASE("powers of lambda") {
  PrimeField f(3);
  CHECK(lambda_power(f, 0) == RingElement::one(f));
  CHECK(lambda_power(f, 2) == RingElement::one(f));
  CHECK(lambda_power(f, 7) == RingElement::lambda(f));
}

TEST_CASE("text forms round-trip") {
  PrimeField f(5);
  RingElement r(f, 1, 0, 4);
  CHECK(to_string(r) == "[1,0,4]");
  CHECK(to_expression(r) == "1+4*u^2");
  CHECK(to_expression(RingElement::zero(f)) == "0");
  CHECK(parse_ring_element(f, "[1,0,4]") == r);
  CHECK(parse_ring_element(f, "1+4*u^2") == r);
  CHECK(parse_ring_element(f, "1-u^2") == r);
  CHECK(parse_ring_element(f, "u^3") == RingElement::u(f));
  CHECK(parse_ring_element(f, "u^4") == RingElement(f, 0, 0, 1));
  CHECK_THROWS_AS(parse_ring_element(f, "[1,2]"), ParseError);
  CHECK_THROWS_AS(parse_ring_element(f, "1+v"), ParseError);
  for (const auto& e : all_elements(PrimeField(3))) {
    CHECK(parse_ring_element(e.field(), to_string(e)) == e);
    CHECK(parse_ring_element(e.field(), to_expression(e)) == e);
  }
}
