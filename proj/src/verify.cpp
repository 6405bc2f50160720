#include "constacyclic/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>

#include "constacyclic/errors.hpp"
#include "constacyclic/gray.hpp"
#include "constacyclic/nechaev.hpp"
#include "constacyclic/oracle.hpp"

namespace constacyclic::verify {

namespace {

class Checker {
 public:
  void check(bool ok, const std::function<std::string()>& describe) {
    ++cases_;
    if (!ok && !detail_) detail_ = describe();
  }

  Entry finish(std::string_view id, const PrimeField& field, std::optional<std::size_t> n) const {
    return {std::string(id), field.modulus(), n, !detail_, cases_, detail_};
  }

 private:
  std::size_t cases_ = 0;
  std::optional<std::string> detail_;
};

struct Context {
  const PrimeField& field;
  std::size_t n;
  const Options& options;
  std::mt19937_64& rng;
};

Residue random_residue(const PrimeField& field, std::mt19937_64& rng) {
  return std::uniform_int_distribution<Residue>(0, field.modulus() - 1)(rng);
}

RingElement random_ring(const PrimeField& field, std::mt19937_64& rng) {
  Residue a = random_residue(field, rng), b = random_residue(field, rng), c = random_residue(field, rng);
  return {field, a, b, c};
}

VectorR random_vector(const PrimeField& field, std::size_t n, std::mt19937_64& rng) {
  std::vector<RingElement> entries;
  for (std::size_t i = 0; i < n; ++i) entries.push_back(random_ring(field, rng));
  return {field, std::move(entries)};
}

VectorFp random_fp_vector(const PrimeField& field, std::size_t n, std::mt19937_64& rng) {
  std::vector<Residue> entries;
  for (std::size_t i = 0; i < n; ++i) entries.push_back(random_residue(field, rng));
  return VectorFp::from_residues(field, std::move(entries));
}

// Base-p digits of `index` in flatten layout.
VectorR vector_at(const PrimeField& field, std::size_t n, std::size_t index) {
  std::vector<Residue> digits(3 * n);
  for (auto& d : digits) {
    d = static_cast<Residue>(index % field.modulus());
    index /= field.modulus();
  }
  return unflatten(VectorFp::from_residues(field, std::move(digits)));
}

RingElement element_at(const PrimeField& field, std::size_t index) { return vector_at(field, 1, index)[0]; }

// p^k when it does not exceed `limit`.
std::optional<std::size_t> bounded_power(std::size_t p, std::size_t k, std::size_t limit) {
  try {
    return checked_power(p, k, limit);
  } catch (const EnumerationLimitError&) {
    return std::nullopt;
  }
}

// Every vector of R^n when the space is within the exhaustive limit,
// otherwise `random_cases` random vectors.
void for_each_vector(const Context& ctx, const std::function<void(const VectorR&)>& fn) {
  if (auto total = bounded_power(ctx.field.modulus(), 3 * ctx.n, ctx.options.exhaustive_limit)) {
    for (std::size_t i = 0; i < *total; ++i) fn(vector_at(ctx.field, ctx.n, i));
  } else {
    for (std::size_t i = 0; i < ctx.options.random_cases; ++i) fn(random_vector(ctx.field, ctx.n, ctx.rng));
  }
}

void require_enumerable(const Context& ctx) { checked_power(ctx.field.modulus(), 3 * ctx.n, ctx.options.cap); }

bool small_space(const Context& ctx) {
  return bounded_power(ctx.field.modulus(), 3 * ctx.n, ctx.options.exhaustive_limit).has_value();
}

std::string describe(const ConstaCode& code) {
  return "code (" + to_string(code.g1()) + ", " + to_string(code.g2()) + ", " + to_string(code.g3()) + ")";
}

FpWordSet gray_words(const RWordSet& words) {
  FpWordSet out;
  for (const auto& w : words) out.insert(gray_vec(w));
  return out;
}

RWordSet mu_bar_words(const RWordSet& words) {
  RWordSet out;
  for (const auto& w : words) out.insert(mu_bar(w));
  return out;
}

// The ideals of R[x]/<x^n - 1>: components drawn from the cyclic codes.
std::vector<std::pair<std::string, RWordSet>> cyclic_ideals(const Context& ctx) {
  auto divisors = monic_divisors(FpPoly::cyclic_modulus(ctx.field, ctx.n));
  std::vector<std::pair<std::string, RWordSet>> out;
  for (const auto& d1 : divisors) {
    for (const auto& d2 : divisors) {
      for (const auto& d3 : divisors) {
        out.emplace_back("cyclic ideal (" + to_string(d1) + ", " + to_string(d2) + ", " + to_string(d3) + ")",
                         compose(polynomial_code(d1, ctx.n), polynomial_code(d2, ctx.n),
                                 polynomial_code(d3, ctx.n), ctx.options.cap));
      }
    }
  }
  return out;
}

// R-linear sets generated by a few random vectors; usually not constacyclic.
std::vector<std::pair<std::string, RWordSet>> random_r_linear_sets(const Context& ctx, std::size_t count) {
  std::vector<std::pair<std::string, RWordSet>> out;
  for (std::size_t i = 0; i < count; ++i) {
    VectorR v = random_vector(ctx.field, ctx.n, ctx.rng);
    out.emplace_back("R-span of " + to_string(v),
                     oracle::brute_r_linear_closure(ctx.field, ctx.n, {v}, ctx.options.cap));
  }
  return out;
}

void check_idempotents(Checker& ck, const Context& ctx) {
  const auto& f = ctx.field;
  auto sys = idempotent_system(f);
  const std::array<RingElement, 3> eta{sys.eta1, sys.eta2, sys.eta3};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      RingElement expected = i == j ? eta[i] : RingElement::zero(f);
      ck.check(eta[i] * eta[j] == expected, [&] {
        return "eta" + std::to_string(i + 1) + " * eta" + std::to_string(j + 1) + " = " +
               to_string(eta[i] * eta[j]);
      });
    }
  }
  ck.check(eta[0] + eta[1] + eta[2] == RingElement::one(f), [] { return std::string("etas do not sum to 1"); });
  const RingElement lam = RingElement::lambda(f);
  ck.check(lam * eta[0] == eta[0], [] { return std::string("lambda * eta1 != eta1"); });
  ck.check(lam * eta[1] == -eta[1], [] { return std::string("lambda * eta2 != -eta2"); });
  ck.check(lam * eta[2] == -eta[2], [] { return std::string("lambda * eta3 != -eta3"); });
}

void check_crt_pair(Checker& ck, const PrimeField& f, const RingElement& r, const RingElement& s) {
  auto tr = crt_split(r), ts = crt_split(s), prod = crt_split(r * s), sum = crt_split(r + s);
  ck.check(prod.x == f.mul(tr.x, ts.x) && prod.y == f.mul(tr.y, ts.y) && prod.z == f.mul(tr.z, ts.z),
           [&] { return "split is not multiplicative at " + to_string(r) + ", " + to_string(s); });
  ck.check(sum.x == f.add(tr.x, ts.x) && sum.y == f.add(tr.y, ts.y) && sum.z == f.add(tr.z, ts.z),
           [&] { return "split is not additive at " + to_string(r) + ", " + to_string(s); });
}

void check_crt_element(Checker& ck, const PrimeField& f, const RingElement& r) {
  auto t = crt_split(r);
  ck.check(crt_join(f, t) == r, [&] { return "join(split(r)) != r for r = " + to_string(r); });
  bool unit = t.x != 0 && t.y != 0 && t.z != 0;
  auto inverse = unit_inverse(r);
  ck.check(inverse.has_value() == unit, [&] { return "unit test disagrees with components at " + to_string(r); });
  if (inverse) {
    ck.check(*inverse * r == RingElement::one(f), [&] { return "bad inverse for " + to_string(r); });
  }
}

void check_crt(Checker& ck, const Context& ctx) {
  const auto& f = ctx.field;
  const std::size_t p = f.modulus();
  if (bounded_power(p, 6, ctx.options.exhaustive_limit)) {
    const std::size_t count = p * p * p;
    for (std::size_t i = 0; i < count; ++i) {
      RingElement r = element_at(f, i);
      check_crt_element(ck, f, r);
      for (std::size_t j = 0; j < count; ++j) check_crt_pair(ck, f, r, element_at(f, j));
    }
  } else {
    for (std::size_t i = 0; i < ctx.options.random_cases; ++i) {
      RingElement r = random_ring(f, ctx.rng), s = random_ring(f, ctx.rng);
      check_crt_element(ck, f, r);
      check_crt_pair(ck, f, r, s);
    }
  }
}

void check_ideal(Checker& ck, const Context& ctx) {
  require_enumerable(ctx);
  auto test = [&](const std::string& name, const RWordSet& words) {
    bool ideal = oracle::brute_ideal_check(words, ctx.n);
    bool closed = check_constacyclic_closure(ShiftKind::rho, words);
    ck.check(ideal == closed, [&] {
      return name + ": ideal=" + (ideal ? "yes" : "no") + " but rho-closed=" + (closed ? "yes" : "no");
    });
  };
  for (const auto& code : all_codes(ctx.field, ctx.n)) {
    RWordSet words = code_span(code, ctx.options.cap);
    ck.check(oracle::brute_ideal_check(words, ctx.n), [&] { return describe(code) + " is not an ideal"; });
    test(describe(code), words);
  }
  for (const auto& [name, words] : cyclic_ideals(ctx)) test(name, words);
  for (const auto& [name, words] : random_r_linear_sets(ctx, 10)) test(name, words);
}

void check_gray_intertwine(Checker& ck, const Context& ctx) {
  for_each_vector(ctx, [&](const VectorR& v) {
    ck.check(gray_vec(shift_apply(ShiftKind::rho, v)) == shift_apply(ShiftKind::sigma, gray_vec(v)),
             [&] { return "Phi(rho(v)) != sigma(Phi(v)) at v = " + to_string(v); });
  });
}

void check_gray_cyclic(Checker& ck, const Context& ctx) {
  require_enumerable(ctx);
  for (const auto& code : all_codes(ctx.field, ctx.n)) {
    RWordSet words = code_span(code, ctx.options.cap);
    FpWordSet image = gray_words(words);
    ck.check(check_constacyclic_closure(ShiftKind::sigma, image),
             [&] { return "Gray image of " + describe(code) + " is not cyclic"; });
    LinearCodeFp structural = gray_image_code(code);
    ck.check(structural.is_closed_under(ShiftKind::sigma),
             [&] { return "structural Gray image of " + describe(code) + " is not cyclic"; });
    ck.check(structural.enumerate(ctx.options.cap) == image,
             [&] { return "structural Gray image of " + describe(code) + " differs from the word images"; });
  }
}

void check_self_orthogonal_set(Checker& ck, const std::string& name, const RWordSet& words) {
  bool in_subring = std::all_of(words.begin(), words.end(), [](const VectorR& w) {
    return std::all_of(w.entries().begin(), w.entries().end(), [](const RingElement& e) { return e.b() == 0; });
  });
  ck.check(in_subring, [&] { return name + " leaves F_p + u^2 F_p"; });
  ck.check(check_self_orthogonal(words), [&] { return name + " is not self-orthogonal"; });
  std::vector<VectorFp> image;
  for (const auto& w : words) image.push_back(gray_vec(w));
  bool orthogonal = true;
  for (std::size_t i = 0; i < image.size() && orthogonal; ++i) {
    for (std::size_t j = i; j < image.size() && orthogonal; ++j) orthogonal = dot(image[i], image[j]) == 0;
  }
  ck.check(orthogonal, [&] { return "Gray image of " + name + " is not self-orthogonal"; });
  ck.check(gray_image_code(words).is_self_orthogonal(),
           [&] { return "structural Gray image of " + name + " is not self-orthogonal"; });
}

void check_self_orthogonal(Checker& ck, const Context& ctx) {
  const auto& f = ctx.field;
  if (f.modulus() == 5 && ctx.n == 2) {
    VectorR w(f, {RingElement(f, 1, 0, 1), RingElement(f, 2, 0, 2)});
    RWordSet words;
    for (Residue s = 0; s < 5; ++s) words.insert(w.scaled(RingElement::scalar(f, s)));
    check_self_orthogonal_set(ck, "span of " + to_string(w), words);
  }
  for (std::size_t i = 0; i < ctx.options.random_sets; ++i) {
    RWordSet words = random_self_orthogonal_set(f, ctx.n, ctx.rng);
    check_self_orthogonal_set(ck, "random set #" + std::to_string(i), words);
  }
}

void check_decomposition(Checker& ck, const Context& ctx) {
  require_enumerable(ctx);
  const std::size_t cap = ctx.options.cap;
  for (const auto& code : all_codes(ctx.field, ctx.n)) {
    RWordSet words = code_span(code, cap);
    ck.check(check_constacyclic_closure(ShiftKind::rho, words),
             [&] { return describe(code) + " is not rho-closed"; });
    auto parts = code_decompose(words);
    ck.check(check_constacyclic_closure(ShiftKind::sigma, parts.c1.enumerate(cap)),
             [&] { return "C1 of " + describe(code) + " is not cyclic"; });
    ck.check(check_constacyclic_closure(ShiftKind::gamma, parts.c2.enumerate(cap)),
             [&] { return "C2 of " + describe(code) + " is not negacyclic"; });
    ck.check(check_constacyclic_closure(ShiftKind::gamma, parts.c3.enumerate(cap)),
             [&] { return "C3 of " + describe(code) + " is not negacyclic"; });
    auto expected = component_codes(code);
    ck.check(parts.c1 == expected[0] && parts.c2 == expected[1] && parts.c3 == expected[2],
             [&] { return "projections of " + describe(code) + " differ from its component codes"; });
    ck.check(compose(parts.c1, parts.c2, parts.c3, cap) == words,
             [&] { return "recomposing " + describe(code) + " changes the code"; });
  }
  auto test = [&](const std::string& name, const RWordSet& words) {
    auto parts = code_decompose(words);
    bool closed = check_constacyclic_closure(ShiftKind::rho, words);
    bool components = parts.c1.is_closed_under(ShiftKind::sigma) && parts.c2.is_closed_under(ShiftKind::gamma) &&
                      parts.c3.is_closed_under(ShiftKind::gamma);
    ck.check(closed == components, [&] { return name + ": rho-closure disagrees with the component shifts"; });
    ck.check(compose(parts.c1, parts.c2, parts.c3, cap) == words, [&] { return name + " does not recompose"; });
  };
  for (const auto& [name, words] : cyclic_ideals(ctx)) test(name, words);
  for (const auto& [name, words] : random_r_linear_sets(ctx, 10)) test(name, words);
}

// Codes above the cap are checked through their flattened form only.
void check_size(Checker& ck, const Context& ctx) {
  for (const auto& code : all_codes(ctx.field, ctx.n)) {
    ck.check(flattened_code(code).size() == code_size(code),
             [&] { return "flattened " + describe(code) + " has the wrong size"; });
    if (code_size(code) > ctx.options.cap) continue;
    RWordSet words = code_span(code, ctx.options.cap);
    ck.check(BigInt(words.size()) == code_size(code), [&] {
      return describe(code) + " has " + std::to_string(words.size()) + " words, formula gives " +
             code_size(code).str();
    });
  }
}

void check_unique_generator(Checker& ck, const Context& ctx) {
  require_enumerable(ctx);
  const bool brute = small_space(ctx);
  const RingElement lam = RingElement::lambda(ctx.field);
  std::set<std::vector<VectorFp>> seen;
  for (const auto& code : all_codes(ctx.field, ctx.n)) {
    RPoly g = combined_generator(code);
    LinearCodeFp flat = flattened_code(code);
    ck.check(ideal_span(g, ctx.n) == flat, [&] { return "<g> differs from " + describe(code); });
    ck.check(seen.insert(flat.basis()).second, [&] { return describe(code) + " repeats an earlier code"; });
    if (brute) {
      RWordSet generated = oracle::brute_ideal_generated(g, ctx.n, lam, ctx.options.cap);
      ck.check(generated == code_span(code, ctx.options.cap),
               [&] { return "brute <g> differs from " + describe(code); });
    }
  }
}

void check_factorization_identity(Checker& ck, const Context& ctx) {
  const RPoly target = binomial(ctx.n, RingElement::lambda(ctx.field));
  for (const auto& code : all_codes(ctx.field, ctx.n)) {
    auto h = check_polynomials(code);
    RPoly product = combined_generator(code) * eta_combine(h[0], h[1], h[2]);
    ck.check(product == target, [&] { return "g*h = " + to_string(product) + " for " + describe(code); });
  }
}

void check_duals(Checker& ck, const Context& ctx) {
  require_enumerable(ctx);
  const std::size_t cap = ctx.options.cap;
  const BigInt total = boost::multiprecision::pow(BigInt(ctx.field.modulus()), static_cast<unsigned>(3 * ctx.n));
  for (const auto& code : all_codes(ctx.field, ctx.n)) {
    ConstaCode dual = code_dual(code);
    RWordSet words = code_span(code, cap), dual_words = code_span(dual, cap);
    ck.check(oracle::brute_dual(ctx.field, ctx.n, words, cap) == dual_words,
             [&] { return "dual of " + describe(code) + " differs from the brute-force dual"; });
    ck.check(code_size(code) * code_size(dual) == total,
             [&] { return "|C| |C_perp| != p^{3n} for " + describe(code); });
    ck.check(check_constacyclic_closure(ShiftKind::rho, dual_words),
             [&] { return "dual of " + describe(code) + " is not rho-closed"; });
    ck.check(code_dual(dual) == code, [&] { return "dual of the dual of " + describe(code) + " differs"; });
    auto parts = code_decompose(dual_words);
    auto components = component_codes(code);
    ck.check(parts.c1 == components[0].dual() && parts.c2 == components[1].dual() &&
                 parts.c3 == components[2].dual(),
             [&] { return "components of the dual of " + describe(code) + " are not the component duals"; });
  }
}

FpPoly random_coprime(const Context& ctx, const FpPoly& h) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    FpPoly f = to_poly(random_fp_vector(ctx.field, ctx.n, ctx.rng));
    if (!f.is_zero() && poly_gcd(f, h).gcd.degree() == 0) return f;
  }
  return FpPoly::one(ctx.field);
}

void check_gcd_regeneration(Checker& ck, const Context& ctx) {
  require_enumerable(ctx);
  const bool brute = small_space(ctx);
  const RingElement lam = RingElement::lambda(ctx.field);
  for (const auto& code : all_codes(ctx.field, ctx.n)) {
    auto h = check_polynomials(code);
    RWordSet words = code_span(code, ctx.options.cap);
    for (std::size_t t = 0; t < ctx.options.gcd_triples; ++t) {
      FpPoly f1 = random_coprime(ctx, h[0]), f2 = random_coprime(ctx, h[1]), f3 = random_coprime(ctx, h[2]);
      auto label = [&] {
        return describe(code) + " with f = (" + to_string(f1) + ", " + to_string(f2) + ", " + to_string(f3) + ")";
      };
      ck.check(check_gcd_regeneration(code, f1, f2, f3), [&] { return "<g f> != <g> for " + label(); });
      if (brute) {
        RPoly gf = rpoly_reduce(combined_generator(code) * eta_combine(f1, f2, f3), ctx.n);
        ck.check(oracle::brute_ideal_generated(gf, ctx.n, lam, ctx.options.cap) == words,
                 [&] { return "brute <g f> != C for " + label(); });
      }
    }
  }
}

void check_mu_isomorphism(Checker& ck, const Context& ctx) {
  require_enumerable(ctx);
  const auto& f = ctx.field;
  const std::size_t n = ctx.n;
  const RingElement one = RingElement::one(f);
  if (auto total = bounded_power(f.modulus(), 3 * n, ctx.options.exhaustive_limit)) {
    std::set<RPoly> images;
    for (std::size_t i = 0; i < *total; ++i) images.insert(mu_map(to_poly(vector_at(f, n, i)), n));
    ck.check(images.size() == *total, [] { return std::string("mu is not a bijection"); });
  }
  auto random_poly = [&] { return to_poly(random_vector(f, n, ctx.rng)); };
  for (std::size_t i = 0; i < ctx.options.random_cases; ++i) {
    RPoly c = random_poly(), d = random_poly();
    RPoly lhs = mu_map(reduce_mod_binomial(c * d, n, one), n);
    RPoly rhs = rpoly_reduce(mu_map(c, n) * mu_map(d, n), n);
    ck.check(lhs == rhs, [&] { return "mu(c d) != mu(c) mu(d) at c = " + to_string(c) + ", d = " + to_string(d); });
    ck.check(mu_map(c + d, n) == mu_map(c, n) + mu_map(d, n),
             [&] { return "mu is not additive at c = " + to_string(c); });
    ck.check(mu_map(mu_map(c, n), n) == c, [&] { return "mu is not an involution at c = " + to_string(c); });
  }
  for (const auto& [name, words] : cyclic_ideals(ctx)) {
    ck.check(oracle::brute_ideal_check(words, n, one), [&] { return name + " is not an ideal mod x^n - 1"; });
    ck.check(oracle::brute_ideal_check(mu_bar_words(words), n),
             [&] { return "mu image of " + name + " is not an ideal mod x^n - lambda"; });
  }
  for (const auto& code : all_codes(f, n)) {
    ck.check(oracle::brute_ideal_check(mu_bar_words(code_span(code, ctx.options.cap)), n, one),
             [&] { return "mu preimage of " + describe(code) + " is not an ideal mod x^n - 1"; });
  }
}

void check_nechaev(Checker& ck, const Context& ctx) {
  require_enumerable(ctx);
  const std::size_t n = ctx.n;
  NechaevPerm perm = tau_build(n);
  const auto& table = perm.table();
  for (std::size_t i = 0; i < 2 * n; ++i) {
    std::size_t expected = i;
    if (i < n && i % 2 == 1 && i + 2 <= n) expected = i + n;
    if (i >= n && (i - n) % 2 == 1 && i - n + 2 <= n) expected = i - n;
    ck.check(table[i] == expected, [&] { return "tau(" + std::to_string(i) + ") = " + std::to_string(table[i]); });
  }
  for_each_vector(ctx, [&](const VectorR& v) {
    ck.check(mu_bar(mu_bar(v)) == v, [&] { return "mu_bar is not an involution at " + to_string(v); });
    ck.check(gray_vec(mu_bar(v)) == nechaev_pi(perm, gray_vec(v)),
             [&] { return "Phi(mu_bar(v)) != pi(Phi(v)) at v = " + to_string(v); });
  });
  for (const auto& [name, words] : cyclic_ideals(ctx)) {
    RWordSet image = mu_bar_words(words);
    ck.check(check_constacyclic_closure(ShiftKind::rho, image),
             [&] { return "mu image of " + name + " is not rho-closed"; });
    FpWordSet permuted;
    for (const auto& w : words) permuted.insert(nechaev_pi(perm, gray_vec(w)));
    ck.check(permuted == gray_words(image), [&] { return "pi(Phi(" + name + ")) != Phi(mu(" + name + "))"; });
    ck.check(check_constacyclic_closure(ShiftKind::sigma, permuted),
             [&] { return "pi(Phi(" + name + ")) is not cyclic"; });
  }
  for (const auto& code : all_codes(ctx.field, n)) {
    RWordSet words = code_span(code, ctx.options.cap);
    bool cyclic = check_constacyclic_closure(ShiftKind::sigma, mu_bar_words(words));
    ck.check(cyclic, [&] { return "mu preimage of " + describe(code) + " is not cyclic"; });
  }
}

using TheoremFn = void (*)(Checker&, const Context&);

struct Theorem {
  std::string id;
  TheoremFn run;
  bool uses_length;
  bool odd_only;
};

const std::vector<Theorem>& theorems() {
  static const std::vector<Theorem> table = {
      {"idempotents", check_idempotents, false, false},
      {"crt", check_crt, false, false},
      {"ideal", check_ideal, true, false},
      {"gray-intertwine", check_gray_intertwine, true, false},
      {"gray-cyclic", check_gray_cyclic, true, false},
      {"self-orthogonal", check_self_orthogonal, true, false},
      {"decomposition", check_decomposition, true, false},
      {"size", check_size, true, false},
      {"unique-generator", check_unique_generator, true, false},
      {"factorization-identity", check_factorization_identity, true, false},
      {"duals", check_duals, true, false},
      {"gcd-regeneration", check_gcd_regeneration, true, false},
      {"mu-isomorphism", check_mu_isomorphism, true, true},
      {"nechaev", check_nechaev, true, true},
  };
  return table;
}

const Theorem& find_theorem(std::string_view id) {
  for (const auto& t : theorems()) {
    if (t.id == id) return t;
  }
  throw ParseError("unknown theorem '" + std::string(id) + "'");
}

std::size_t theorem_index(const Theorem& t) { return static_cast<std::size_t>(&t - theorems().data()); }

}  // namespace

bool Report::passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const Entry& e) { return e.passed; });
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& t : theorems()) out.push_back(t.id);
    return out;
  }();
  return ids;
}

bool is_theorem_id(std::string_view id) {
  return std::any_of(theorems().begin(), theorems().end(), [&](const Theorem& t) { return t.id == id; });
}

bool requires_odd_length(std::string_view id) { return find_theorem(id).odd_only; }

bool depends_on_length(std::string_view id) { return find_theorem(id).uses_length; }

Entry run_theorem(std::string_view id, const PrimeField& field, std::size_t n, const Options& options) {
  const Theorem& theorem = find_theorem(id);
  if (theorem.uses_length && n == 0) throw DomainError("n must be at least 1");
  if (theorem.odd_only && n % 2 == 0) throw DomainError("n must be odd, got " + std::to_string(n));
  const std::size_t length = theorem.uses_length ? n : 0;
  std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                    static_cast<std::uint32_t>(field.modulus()), static_cast<std::uint32_t>(length),
                    static_cast<std::uint32_t>(theorem_index(theorem))};
  std::mt19937_64 rng(seq);
  Checker checker;
  theorem.run(checker, Context{field, length, options, rng});
  return checker.finish(theorem.id, field, theorem.uses_length ? std::optional<std::size_t>(n) : std::nullopt);
}

Report run_suite(std::string_view suite, const std::vector<std::uint64_t>& primes,
                 const std::vector<std::size_t>& lengths, const Options& options) {
  std::vector<const Theorem*> selected;
  const bool all = suite == "all";
  if (all) {
    for (const auto& t : theorems()) selected.push_back(&t);
  } else {
    selected.push_back(&find_theorem(suite));
  }
  std::vector<PrimeField> fields;
  for (auto p : primes) fields.emplace_back(p);
  for (auto n : lengths) {
    if (n == 0) throw DomainError("n must be at least 1");
    if (!all && selected.front()->odd_only && n % 2 == 0) {
      throw DomainError("n must be odd, got " + std::to_string(n));
    }
  }
  Report report;
  for (const auto* t : selected) {
    for (const auto& field : fields) {
      if (!t->uses_length) {
        report.entries.push_back(run_theorem(t->id, field, 0, options));
        continue;
      }
      for (auto n : lengths) {
        if (t->odd_only && n % 2 == 0) continue;
        report.entries.push_back(run_theorem(t->id, field, n, options));
      }
    }
  }
  return report;
}

std::string to_text(const Report& report) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& e : report.entries) {
    out << (e.passed ? "PASS" : "FAIL") << "  " << e.theorem << "  p=" << e.p;
    if (e.n) out << " n=" << *e.n;
    out << "  cases=" << e.cases;
    if (e.detail) out << "  " << *e.detail;
    out << '\n';
    if (e.passed) ++passed;
  }
  out << passed << " of " << report.entries.size() << " checks passed\n";
  return out.str();
}

nlohmann::ordered_json to_json(const Report& report) {
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  for (const auto& e : report.entries) {
    nlohmann::ordered_json item;
    item["theorem"] = e.theorem;
    item["p"] = e.p;
    item["n"] = e.n ? nlohmann::ordered_json(*e.n) : nlohmann::ordered_json(nullptr);
    item["passed"] = e.passed;
    item["cases"] = e.cases;
    if (e.detail) item["detail"] = *e.detail;
    results.push_back(std::move(item));
  }
  nlohmann::ordered_json doc;
  doc["passed"] = report.passed();
  doc["results"] = std::move(results);
  return doc;
}

namespace {

// Random sets stay this small so that pairwise checks are cheap.
constexpr std::size_t kMaxSetSize = 729;

// A totally isotropic subspace of F_p^n grown by rejection sampling.
std::vector<VectorFp> random_isotropic_basis(const PrimeField& field, std::size_t n, std::size_t max_dim,
                                             std::mt19937_64& rng) {
  const std::size_t target = std::uniform_int_distribution<std::size_t>(0, std::min(n / 2, max_dim))(rng);
  std::vector<VectorFp> basis;
  for (int attempt = 0; attempt < 200 && basis.size() < target; ++attempt) {
    VectorFp v = random_fp_vector(field, n, rng);
    if (v.is_zero() || dot(v, v) != 0) continue;
    if (!std::all_of(basis.begin(), basis.end(), [&](const VectorFp& b) { return dot(v, b) == 0; })) continue;
    if (LinearCodeFp(field, n, basis).contains(v)) continue;
    basis.push_back(v);
  }
  return basis;
}

}  // namespace

RWordSet random_self_orthogonal_set(const PrimeField& field, std::size_t n, std::mt19937_64& rng) {
  std::size_t budget = 0;
  for (std::size_t size = field.modulus(); size <= kMaxSetSize; size *= field.modulus()) ++budget;
  LinearCodeFp a(field, n, random_isotropic_basis(field, n, budget, rng));
  LinearCodeFp b(field, n, random_isotropic_basis(field, n, budget - a.dimension(), rng));
  RWordSet words;
  std::vector<RingElement> entries(n, RingElement::zero(field));
  for (const auto& x : a.enumerate()) {
    for (const auto& y : b.enumerate()) {
      // x + (y - x)u^2 splits as (x, y, y).
      for (std::size_t j = 0; j < n; ++j) entries[j] = crt_join(field, {x[j], y[j], y[j]});
      words.emplace(field, entries);
    }
  }
  return words;
}

}  // namespace constacyclic::verify
