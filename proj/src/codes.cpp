#include "constacyclic/codes.hpp"

#include "constacyclic/errors.hpp"

namespace constacyclic {

namespace {

const char* component_name(std::size_t i) {
  static const char* names[] = {"g1", "g2", "g3"};
  return names[i];
}

// eta_i * x for x in F_p^n placed in component slot i.
VectorR embed_component(const VectorFp& x, std::size_t slot) {
  const auto& field = x.field();
  std::vector<RingElement> entries;
  entries.reserve(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    CrtTriple t{0, 0, 0};
    (slot == 0 ? t.x : slot == 1 ? t.y : t.z) = x[j];
    entries.push_back(crt_join(field, t));
  }
  return VectorR(field, std::move(entries));
}

std::array<VectorFp, 3> split_components(const VectorR& v) {
  std::vector<Residue> xs, ys, zs;
  for (const auto& e : v.entries()) {
    auto t = crt_split(e);
    xs.push_back(t.x);
    ys.push_back(t.y);
    zs.push_back(t.z);
  }
  const auto& f = v.field();
  return {VectorFp::from_residues(f, std::move(xs)), VectorFp::from_residues(f, std::move(ys)),
          VectorFp::from_residues(f, std::move(zs))};
}

}  // namespace

FpPoly component_modulus(const PrimeField& field, std::size_t n, std::size_t component) {
  return component == 0 ? FpPoly::cyclic_modulus(field, n) : FpPoly::negacyclic_modulus(field, n);
}

ConstaCode code_from_generators(const PrimeField& field, std::size_t n, const FpPoly& g1, const FpPoly& g2,
                                const FpPoly& g3) {
  if (n == 0) throw DomainError("code length must be at least 1");
  std::array<FpPoly, 3> gens{g1, g2, g3};
  for (std::size_t i = 0; i < 3; ++i) {
    require_same_field(field, gens[i].field());
    if (!gens[i].is_monic()) {
      throw DomainError(std::string(component_name(i)) + " = " + to_string(gens[i]) + " is not monic");
    }
    FpPoly modulus = component_modulus(field, n, i);
    if (!divides(gens[i], modulus)) {
      throw DomainError(std::string(component_name(i)) + " = " + to_string(gens[i]) + " does not divide " +
                        to_string(modulus));
    }
  }
  return ConstaCode(field, n, std::move(gens));
}

std::vector<ConstaCode> all_codes(const PrimeField& field, std::size_t n) {
  auto cyclic = monic_divisors(FpPoly::cyclic_modulus(field, n));
  auto nega = monic_divisors(FpPoly::negacyclic_modulus(field, n));
  std::vector<ConstaCode> codes;
  codes.reserve(cyclic.size() * nega.size() * nega.size());
  for (const auto& g1 : cyclic) {
    for (const auto& g2 : nega) {
      for (const auto& g3 : nega) codes.push_back(ConstaCode(field, n, {g1, g2, g3}));
    }
  }
  return codes;
}

std::array<FpPoly, 3> check_polynomials(const ConstaCode& code) {
  const auto& f = code.field();
  const auto n = code.length();
  return {poly_divmod(component_modulus(f, n, 0), code.g1()).quotient,
          poly_divmod(component_modulus(f, n, 1), code.g2()).quotient,
          poly_divmod(component_modulus(f, n, 2), code.g3()).quotient};
}

RPoly combined_generator(const ConstaCode& code) { return eta_combine(code.g1(), code.g2(), code.g3()); }

BigInt code_size(const ConstaCode& code) {
  std::size_t exponent = 3 * code.length();
  for (const auto& g : code.generators()) exponent -= static_cast<std::size_t>(g.degree());
  return boost::multiprecision::pow(BigInt(code.field().modulus()), static_cast<unsigned>(exponent));
}

LinearCodeFp polynomial_code(const FpPoly& g, std::size_t n) {
  if (g.is_zero()) throw DomainError("the zero polynomial generates nothing");
  std::vector<VectorFp> rows;
  const auto deg = static_cast<std::size_t>(g.degree());
  FpPoly shifted = g;
  const FpPoly x = FpPoly::monomial(g.field(), 1, 1);
  for (std::size_t k = 0; k + deg < n; ++k) {
    rows.push_back(to_vector(shifted, n));
    shifted *= x;
  }
  return {g.field(), n, rows};
}

std::array<LinearCodeFp, 3> component_codes(const ConstaCode& code) {
  return {polynomial_code(code.g1(), code.length()), polynomial_code(code.g2(), code.length()),
          polynomial_code(code.g3(), code.length())};
}

RWordSet compose(const LinearCodeFp& c1, const LinearCodeFp& c2, const LinearCodeFp& c3, std::size_t cap) {
  const auto& field = c1.field();
  require_same_field(field, c2.field());
  require_same_field(field, c3.field());
  const std::size_t n = c1.length();
  if (c2.length() != n || c3.length() != n) throw LengthMismatchError("component codes differ in length");
  checked_power(field.modulus(), c1.dimension() + c2.dimension() + c3.dimension(), cap);
  auto xs = c1.enumerate(cap), ys = c2.enumerate(cap), zs = c3.enumerate(cap);
  RWordSet words;
  std::vector<RingElement> entries(n, RingElement::zero(field));
  for (const auto& x : xs) {
    for (const auto& y : ys) {
      for (const auto& z : zs) {
        for (std::size_t j = 0; j < n; ++j) entries[j] = crt_join(field, {x[j], y[j], z[j]});
        words.emplace_hint(words.end(), field, entries);
      }
    }
  }
  return words;
}

RWordSet code_span(const ConstaCode& code, std::size_t cap) {
  auto [c1, c2, c3] = component_codes(code);
  return compose(c1, c2, c3, cap);
}

bool code_contains(const ConstaCode& code, const VectorR& v) {
  require_same_field(code.field(), v.field());
  if (v.size() != code.length()) {
    throw LengthMismatchError("vector of length " + std::to_string(v.size()) + " against a code of length " +
                              std::to_string(code.length()));
  }
  auto parts = split_components(v);
  for (std::size_t i = 0; i < 3; ++i) {
    if (!divides(code.generators()[i], to_poly(parts[i]))) return false;
  }
  return true;
}

LinearCodeFp flattened_span(const PrimeField& field, std::size_t n, const RWordSet& words) {
  std::vector<VectorFp> flat;
  flat.reserve(words.size());
  for (const auto& w : words) flat.push_back(flatten(w));
  return {field, 3 * n, flat};
}

LinearCodeFp flattened_code(const ConstaCode& code) {
  auto components = component_codes(code);
  std::vector<VectorFp> gens;
  for (std::size_t i = 0; i < 3; ++i) {
    for (const auto& row : components[i].basis()) gens.push_back(flatten(embed_component(row, i)));
  }
  return {code.field(), 3 * code.length(), gens};
}

LinearCodeFp ideal_span(const RPoly& g, std::size_t n, const RingElement& constant) {
  const auto& field = g.field();
  RPoly reduced = reduce_mod_binomial(g, n, constant);
  const RingElement units[] = {RingElement::one(field), RingElement::u(field),
                               RingElement::u(field) * RingElement::u(field)};
  std::vector<VectorFp> gens;
  for (const auto& e : units) {
    for (std::size_t k = 0; k < n; ++k) {
      auto multiple = reduce_mod_binomial(RPoly::monomial(e, k) * reduced, n, constant);
      gens.push_back(flatten(to_vector(multiple, n)));
    }
  }
  return {field, 3 * n, gens};
}

LinearCodeFp ideal_span(const RPoly& g, std::size_t n) { return ideal_span(g, n, RingElement::lambda(g.field())); }

bool is_fp_linear(const RWordSet& words) {
  if (words.empty()) return false;
  const auto& first = *words.begin();
  auto span = flattened_span(first.field(), first.size(), words);
  return span.size() == BigInt(words.size());
}

Decomposition code_decompose(const RWordSet& words) {
  if (words.empty()) throw DomainError("cannot decompose the empty set");
  const auto& first = *words.begin();
  const auto& field = first.field();
  const std::size_t n = first.size();
  for (const auto& w : words) {
    if (w.size() != n) throw DomainError("input words have different lengths");
  }
  auto span = flattened_span(field, n, words);
  if (span.size() != BigInt(words.size())) throw DomainError("input set is not linear over R: not closed under addition");
  const RingElement u = RingElement::u(field);
  std::array<std::vector<VectorFp>, 3> projections;
  for (const auto& row : span.basis()) {
    VectorR word = unflatten(row);
    if (!span.contains(flatten(word.scaled(u)))) {
      throw DomainError("input set is not linear over R: not closed under multiplication by u");
    }
    auto parts = split_components(word);
    for (std::size_t i = 0; i < 3; ++i) projections[i].push_back(parts[i]);
  }
  return {LinearCodeFp(field, n, projections[0]), LinearCodeFp(field, n, projections[1]),
          LinearCodeFp(field, n, projections[2])};
}

ConstaCode code_dual(const ConstaCode& code) {
  auto h = check_polynomials(code);
  return code_from_generators(code.field(), code.length(), reciprocal_dual(h[0]), reciprocal_dual(h[1]),
                              reciprocal_dual(h[2]));
}

bool check_self_orthogonal(const RWordSet& words) {
  for (auto it = words.begin(); it != words.end(); ++it) {
    for (auto jt = it; jt != words.end(); ++jt) {
      if (!inner_product(*it, *jt).is_zero()) return false;
    }
  }
  return true;
}

bool check_constacyclic_closure(ShiftKind kind, const RWordSet& words) {
  for (const auto& w : words) {
    if (!words.contains(shift_apply(kind, w))) return false;
  }
  return true;
}

bool check_constacyclic_closure(ShiftKind kind, const FpWordSet& words) {
  for (const auto& w : words) {
    if (!words.contains(shift_apply(kind, w))) return false;
  }
  return true;
}

bool check_gcd_regeneration(const ConstaCode& code, const FpPoly& f1, const FpPoly& f2, const FpPoly& f3) {
  auto h = check_polynomials(code);
  const FpPoly* fs[] = {&f1, &f2, &f3};
  for (std::size_t i = 0; i < 3; ++i) {
    require_same_field(code.field(), fs[i]->field());
    if (poly_gcd(*fs[i], h[i]).gcd.degree() != 0) {
      throw DomainError("gcd(f" + std::to_string(i + 1) + ", h" + std::to_string(i + 1) + ") = gcd(" +
                        to_string(*fs[i]) + ", " + to_string(h[i]) + ") is not 1");
    }
  }
  const std::size_t n = code.length();
  RPoly g = combined_generator(code);
  RPoly gf = rpoly_reduce(g * eta_combine(f1, f2, f3), n);
  return ideal_span(g, n) == ideal_span(gf, n);
}

}  // namespace constacyclic
