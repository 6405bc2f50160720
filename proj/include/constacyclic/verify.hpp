#pragma once

// Theorem-by-theorem verification drivers. Each theorem check pairs the
// structural operations with the brute-force oracles at one (p, n) and
// records the first counterexample it meets.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "constacyclic/codes.hpp"

namespace constacyclic::verify {

inline constexpr std::uint64_t kDefaultSeed = 20261016;

struct Options {
  std::uint64_t seed = kDefaultSeed;
  /// Largest set any check may enumerate.
  std::size_t cap = kDefaultEnumerationCap;
  /// Element/vector spaces up to this size are scanned exhaustively; larger
  /// ones are sampled with `random_cases` draws.
  std::size_t exhaustive_limit = 20'000;
  std::size_t random_cases = 10'000;
  /// Random self-orthogonal sets per (p, n).
  std::size_t random_sets = 100;
  /// Random coprime (f1, f2, f3) per code.
  std::size_t gcd_triples = 5;
};

struct Entry {
  std::string theorem;
  std::uint32_t p;
  /// Absent for theorems about R alone.
  std::optional<std::size_t> n;
  bool passed;
  std::size_t cases;
  /// Present exactly when the check failed.
  std::optional<std::string> detail;
};

struct Report {
  std::vector<Entry> entries;

  bool passed() const;
};

/// Canonical theorem order.
const std::vector<std::string>& theorem_ids();
bool is_theorem_id(std::string_view id);
bool requires_odd_length(std::string_view id);
bool depends_on_length(std::string_view id);

/// Runs one theorem. Throws ParseError for an unknown id, DomainError for an
/// even n where odd is required, EnumerationLimitError beyond the cap.
Entry run_theorem(std::string_view id, const PrimeField& field, std::size_t n, const Options& options = {});

/// `suite` is "all" or a theorem id. With "all", odd-length theorems are
/// skipped for even n. Entries follow theorem order, then p, then n.
Report run_suite(std::string_view suite, const std::vector<std::uint64_t>& primes,
                 const std::vector<std::size_t>& lengths, const Options& options = {});

std::string to_text(const Report& report);
nlohmann::ordered_json to_json(const Report& report);

/// An F_p-linear set inside (F_p + u^2 F_p)^n that is self-orthogonal by
/// construction: its CRT components come from totally isotropic subspaces.
RWordSet random_self_orthogonal_set(const PrimeField& field, std::size_t n, std::mt19937_64& rng);

}  // namespace constacyclic::verify
