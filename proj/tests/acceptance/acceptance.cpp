// End-to-end acceptance run. Each check prints one PASS/FAIL line with its
// wall time; a check that exceeds its time bound fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "constacyclic/codes.hpp"
#include "constacyclic/errors.hpp"
#include "constacyclic/verify.hpp"

using namespace constacyclic;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
  void absorb(const verify::Entry& e, std::optional<std::size_t> expected_cases = std::nullopt) {
    std::string where = e.theorem + " p=" + std::to_string(e.p) + (e.n ? " n=" + std::to_string(*e.n) : "");
    require(e.passed, where + ": " + e.detail.value_or(""));
    if (expected_cases) {
      require(e.cases == *expected_cases, where + ": expected " + std::to_string(*expected_cases) + " cases, ran " +
                                              std::to_string(e.cases));
    }
  }
};

struct Check {
  std::string name;
  double limit_seconds;
  std::function<void(Outcome&)> body;
};

verify::Options exhaustive_up_to(std::size_t limit) {
  verify::Options o;
  o.exhaustive_limit = limit;
  return o;
}

std::size_t code_count(std::uint64_t p, std::size_t n) { return all_codes(PrimeField(p), n).size(); }

}  // namespace

int main() {
  const std::vector<Check> checks = {
      {"idempotent system for p in {3,5,7,11}", 1.0,
       [](Outcome& o) {
         for (std::uint64_t p : {3, 5, 7, 11}) o.absorb(verify::run_theorem("idempotents", PrimeField(p), 0));
       }},
      {"CRT isomorphism: all pairs at p=3, 10^4 random pairs at p=5,7", 1.0,
       [](Outcome& o) {
         auto opts = exhaustive_up_to(729);
         o.absorb(verify::run_theorem("crt", PrimeField(3), 0, opts));
         for (std::uint64_t p : {5, 7}) o.absorb(verify::run_theorem("crt", PrimeField(p), 0, opts));
       }},
      {"Gray map intertwines rho and sigma", 1.0,
       [](Outcome& o) {
         auto opts = exhaustive_up_to(729);
         o.absorb(verify::run_theorem("gray-intertwine", PrimeField(3), 2, opts), 729);
         for (std::uint64_t p : {5, 7}) {
           for (std::size_t n = 3; n <= 6; ++n) {
             o.absorb(verify::run_theorem("gray-intertwine", PrimeField(p), n, opts), opts.random_cases);
           }
         }
       }},
      {"decomposition criterion over all 16 codes at p=3, n=2", 5.0,
       [](Outcome& o) {
         o.require(code_count(3, 2) == 16, "expected 16 codes");
         o.absorb(verify::run_theorem("decomposition", PrimeField(3), 2));
       }},
      {"size formula at (3,2), (3,3), (5,2)", 30.0,
       [](Outcome& o) {
         o.absorb(verify::run_theorem("size", PrimeField(3), 2));
         o.absorb(verify::run_theorem("size", PrimeField(3), 3));
         o.absorb(verify::run_theorem("size", PrimeField(5), 2));
       }},
      {"unique combined generator for all 16 codes", 30.0,
       [](Outcome& o) { o.absorb(verify::run_theorem("unique-generator", PrimeField(3), 2)); }},
      {"g(x)h(x) = x^n - (1-2u^2) at p=3, n in {2,4}", 30.0,
       [](Outcome& o) {
         o.absorb(verify::run_theorem("factorization-identity", PrimeField(3), 2), 16);
         o.absorb(verify::run_theorem("factorization-identity", PrimeField(3), 4), 8 * 4 * 4);
       }},
      {"duals for all 16 codes at p=3, n=2", 10.0,
       [](Outcome& o) { o.absorb(verify::run_theorem("duals", PrimeField(3), 2)); }},
      {"Gray images of all 16 codes are cyclic", 30.0,
       [](Outcome& o) { o.absorb(verify::run_theorem("gray-cyclic", PrimeField(3), 2)); }},
      {"self-orthogonality survives the Gray map", 30.0,
       [](Outcome& o) {
         verify::Options opts;
         opts.random_sets = 100;
         o.absorb(verify::run_theorem("self-orthogonal", PrimeField(5), 2, opts));
         o.absorb(verify::run_theorem("self-orthogonal", PrimeField(3), 4, opts));
       }},
      {"mu isomorphism and Nechaev permutation at p=3, n=3", 30.0,
       [](Outcome& o) {
         auto opts = exhaustive_up_to(19683);
         opts.random_cases = 10'000;
         o.absorb(verify::run_theorem("mu-isomorphism", PrimeField(3), 3, opts));
         o.absorb(verify::run_theorem("nechaev", PrimeField(3), 3, opts));
       }},
      {"gcd regeneration with 5 coprime triples per code", 30.0,
       [](Outcome& o) {
         verify::Options opts;
         opts.gcd_triples = 5;
         o.absorb(verify::run_theorem("gcd-regeneration", PrimeField(3), 2, opts), 16 * 5 * 2);
       }},
  };

  int failures = 0;
  for (const auto& check : checks) {
    Outcome outcome;
    auto start = std::chrono::steady_clock::now();
    try {
      check.body(outcome);
    } catch (const Error& e) {
      outcome.require(false, std::string("error: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    outcome.require(seconds < check.limit_seconds,
                    "took " + std::to_string(seconds) + " s, limit " + std::to_string(check.limit_seconds) + " s");
    std::printf("%s  %-62s %8.3f s", outcome.passed ? "PASS" : "FAIL", check.name.c_str(), seconds);
    if (!outcome.passed) std::printf("  %s", outcome.detail.c_str());
    std::printf("\n");
    if (!outcome.passed) ++failures;
  }
  std::printf("%zu of %zu acceptance checks passed\n", checks.size() - failures, checks.size());
  return failures == 0 ? 0 : 1;
}
