#include "constacyclic/poly.hpp"

#include <algorithm>
#include <utility>

#include "constacyclic/errors.hpp"
#include "text_util.hpp"

namespace constacyclic {

// ---------------------------------------------------------------------------
// FpPoly

FpPoly::FpPoly(const PrimeField& field, const std::vector<std::int64_t>& coeffs) : field_(field) {
  coeffs_.reserve(coeffs.size());
  for (auto c : coeffs) coeffs_.push_back(field.reduce(c));
  trim();
}

FpPoly FpPoly::from_residues(const PrimeField& field, std::vector<Residue> coeffs) {
  FpPoly f(field);
  for (auto& c : coeffs) c %= field.modulus();
  f.coeffs_ = std::move(coeffs);
  f.trim();
  return f;
}

FpPoly FpPoly::constant(const PrimeField& field, std::int64_t value) { return FpPoly(field, {value}); }

FpPoly FpPoly::monomial(const PrimeField& field, std::int64_t coef, std::size_t k) {
  std::vector<std::int64_t> coeffs(k + 1, 0);
  coeffs[k] = coef;
  return FpPoly(field, coeffs);
}

FpPoly FpPoly::cyclic_modulus(const PrimeField& field, std::size_t n) {
  return monomial(field, 1, n) - constant(field, 1);
}

FpPoly FpPoly::negacyclic_modulus(const PrimeField& field, std::size_t n) {
  return monomial(field, 1, n) + constant(field, 1);
}

void FpPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Residue FpPoly::evaluate(Residue point) const noexcept {
  Residue acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.add(field_.mul(acc, point), *it);
  return acc;
}

FpPoly FpPoly::monic() const {
  if (is_zero()) throw DomainError("the zero polynomial has no monic normalization");
  return scaled(field_.inv(leading()));
}

FpPoly FpPoly::scaled(Residue s) const {
  FpPoly r(field_);
  r.coeffs_.reserve(coeffs_.size());
  for (auto c : coeffs_) r.coeffs_.push_back(field_.mul(c, s));
  r.trim();
  return r;
}

FpPoly FpPoly::operator-() const { return scaled(field_.neg(1)); }

FpPoly& FpPoly::operator+=(const FpPoly& rhs) {
  require_same_field(field_, rhs.field_);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = field_.add(coeffs_[i], rhs.coeffs_[i]);
  trim();
  return *this;
}

FpPoly& FpPoly::operator-=(const FpPoly& rhs) {
  require_same_field(field_, rhs.field_);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = field_.sub(coeffs_[i], rhs.coeffs_[i]);
  trim();
  return *this;
}

FpPoly& FpPoly::operator*=(const FpPoly& rhs) {
  require_same_field(field_, rhs.field_);
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Residue> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] = field_.add(out[i + j], field_.mul(coeffs_[i], rhs.coeffs_[j]));
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

bool degree_lex_less(const FpPoly& lhs, const FpPoly& rhs) {
  if (lhs.degree() != rhs.degree()) return lhs.degree() < rhs.degree();
  return std::lexicographical_compare(lhs.coeffs().begin(), lhs.coeffs().end(), rhs.coeffs().begin(),
                                      rhs.coeffs().end());
}

DivMod poly_divmod(const FpPoly& num, const FpPoly& den) {
  require_same_field(num.field(), den.field());
  if (den.is_zero()) throw DomainError("division by the zero polynomial");
  const auto& f = num.field();
  std::vector<Residue> rem = num.coeffs();
  const auto& d = den.coeffs();
  const Residue lead_inv = f.inv(den.leading());
  std::vector<Residue> quot;
  if (rem.size() >= d.size()) {
    quot.assign(rem.size() - d.size() + 1, 0);
    for (std::size_t k = quot.size(); k-- > 0;) {
      Residue q = f.mul(rem[k + d.size() - 1], lead_inv);
      quot[k] = q;
      if (q == 0) continue;
      for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] = f.sub(rem[k + j], f.mul(q, d[j]));
    }
    rem.resize(d.size() - 1);
  }
  return {FpPoly::from_residues(f, std::move(quot)), FpPoly::from_residues(f, std::move(rem))};
}

bool divides(const FpPoly& divisor, const FpPoly& value) {
  return poly_divmod(value, divisor).remainder.is_zero();
}

ExtendedGcd poly_gcd(const FpPoly& f, const FpPoly& g) {
  require_same_field(f.field(), g.field());
  const auto& field = f.field();
  if (f.is_zero() && g.is_zero()) throw DomainError("gcd(0, 0) is undefined");
  FpPoly r0 = f, r1 = g;
  FpPoly s0 = FpPoly::one(field), s1(field);
  FpPoly t0(field), t1 = FpPoly::one(field);
  while (!r1.is_zero()) {
    auto [q, r] = poly_divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  Residue scale = field.inv(r0.leading());
  return {r0.scaled(scale), s0.scaled(scale), t0.scaled(scale)};
}

namespace {

void require_monic(const FpPoly& f, const char* op) {
  if (!f.is_monic()) throw DomainError(std::string(op) + " requires a monic polynomial, got " + to_string(f));
}

// Advances the low coefficients of a monic candidate like an odometer.
// Returns false once every candidate of this degree has been produced.
bool next_candidate(std::vector<Residue>& coeffs, Residue p) {
  for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) {
    if (++coeffs[i] < p) return true;
    coeffs[i] = 0;
  }
  return false;
}

}  // namespace

std::vector<Factor> factor_monic(const FpPoly& f) {
  require_monic(f, "factor_monic");
  const auto& field = f.field();
  std::vector<Factor> factors;
  FpPoly rest = f;
  // The smallest-degree monic divisor of the remaining cofactor is always
  // irreducible, so plain trial division in degree order yields irreducibles.
  for (std::size_t d = 1; 2 * d <= static_cast<std::size_t>(std::max(rest.degree(), 0)); ++d) {
    std::vector<Residue> cand(d + 1, 0);
    cand[d] = 1;
    do {
      FpPoly divisor = FpPoly::from_residues(field, cand);
      unsigned mult = 0;
      while (true) {
        auto [q, r] = poly_divmod(rest, divisor);
        if (!r.is_zero()) break;
        rest = std::move(q);
        ++mult;
      }
      if (mult > 0) factors.push_back({divisor, mult});
    } while (2 * d <= static_cast<std::size_t>(rest.degree()) && next_candidate(cand, field.modulus()));
  }
  // Whatever remains has no factor of degree <= deg/2, so it is irreducible.
  if (rest.degree() >= 1) factors.push_back({rest, 1});
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return degree_lex_less(a.irreducible, b.irreducible); });
  return factors;
}

std::vector<FpPoly> monic_divisors(const FpPoly& f) {
  require_monic(f, "monic_divisors");
  std::vector<FpPoly> divisors{FpPoly::one(f.field())};
  if (f.degree() == 0) return divisors;
  for (const auto& [irreducible, multiplicity] : factor_monic(f)) {
    std::vector<FpPoly> next;
    next.reserve(divisors.size() * (multiplicity + 1));
    for (const auto& d : divisors) {
      FpPoly power = d;
      next.push_back(power);
      for (unsigned e = 0; e < multiplicity; ++e) {
        power *= irreducible;
        next.push_back(power);
      }
    }
    divisors = std::move(next);
  }
  std::sort(divisors.begin(), divisors.end(), degree_lex_less);
  return divisors;
}

FpPoly reciprocal_dual(const FpPoly& h) {
  if (h.is_zero() || h.coeff(0) == 0) {
    throw DomainError("reciprocal polynomial undefined: " + to_string(h) + " has zero constant term");
  }
  std::vector<Residue> reversed(h.coeffs().rbegin(), h.coeffs().rend());
  return FpPoly::from_residues(h.field(), std::move(reversed)).monic();
}

namespace {

template <typename Coef, typename Format>
std::string format_descending(const std::vector<Coef>& coeffs, Format&& coef_text) {
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    auto text = coef_text(coeffs[k], k);
    if (text.empty()) continue;
    if (!out.empty()) out += '+';
    out += text;
  }
  return out.empty() ? "0" : out;
}

std::string power_suffix(std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return "x";
  return "x^" + std::to_string(k);
}

}  // namespace

std::string to_string(const FpPoly& f) {
  return format_descending(f.coeffs(), [](Residue c, std::size_t k) -> std::string {
    if (c == 0) return "";
    if (k == 0) return std::to_string(c);
    return (c == 1 ? "" : std::to_string(c) + "*") + power_suffix(k);
  });
}

FpPoly parse_fp_poly(const PrimeField& field, std::string_view text) {
  FpPoly result(field);
  for (const auto& term : detail::split_terms(text)) {
    auto mono = detail::parse_monomial(term.body, 'x');
    std::int64_t coef = mono.coefficient.empty() ? 1 : detail::parse_int(mono.coefficient);
    result += FpPoly::monomial(field, term.negative ? -coef : coef, mono.exponent);
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const FpPoly& f) { return os << to_string(f); }

// ---------------------------------------------------------------------------
// RPoly

RPoly::RPoly(const PrimeField& field, std::vector<RingElement> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) require_same_field(field_, c.field());
  trim();
}

RPoly RPoly::embed(const FpPoly& f) {
  std::vector<RingElement> coeffs;
  coeffs.reserve(f.coeffs().size());
  for (auto c : f.coeffs()) coeffs.push_back(RingElement::scalar(f.field(), c));
  return RPoly(f.field(), std::move(coeffs));
}

RPoly RPoly::monomial(const RingElement& coef, std::size_t k) {
  std::vector<RingElement> coeffs(k + 1, RingElement::zero(coef.field()));
  coeffs[k] = coef;
  return RPoly(coef.field(), std::move(coeffs));
}

void RPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RingElement RPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : RingElement::zero(field_);
}

RPoly RPoly::scaled(const RingElement& s) const {
  require_same_field(field_, s.field());
  RPoly r = *this;
  for (auto& c : r.coeffs_) c *= s;
  r.trim();
  return r;
}

RPoly RPoly::operator-() const {
  RPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

RPoly& RPoly::operator+=(const RPoly& rhs) {
  require_same_field(field_, rhs.field_);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), RingElement::zero(field_));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

RPoly& RPoly::operator-=(const RPoly& rhs) {
  require_same_field(field_, rhs.field_);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), RingElement::zero(field_));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

RPoly& RPoly::operator*=(const RPoly& rhs) {
  require_same_field(field_, rhs.field_);
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<RingElement> out(coeffs_.size() + rhs.coeffs_.size() - 1, RingElement::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

RPoly eta_combine(const FpPoly& g1, const FpPoly& g2, const FpPoly& g3) {
  const auto& field = g1.field();
  require_same_field(field, g2.field());
  require_same_field(field, g3.field());
  std::size_t len = std::max({g1.coeffs().size(), g2.coeffs().size(), g3.coeffs().size()});
  std::vector<RingElement> coeffs;
  coeffs.reserve(len);
  for (std::size_t j = 0; j < len; ++j) coeffs.push_back(crt_join(field, {g1.coeff(j), g2.coeff(j), g3.coeff(j)}));
  return RPoly(field, std::move(coeffs));
}

std::array<FpPoly, 3> eta_split(const RPoly& f) {
  const auto& field = f.field();
  std::vector<Residue> xs, ys, zs;
  for (const auto& c : f.coeffs()) {
    auto t = crt_split(c);
    xs.push_back(t.x);
    ys.push_back(t.y);
    zs.push_back(t.z);
  }
  return {FpPoly::from_residues(field, std::move(xs)), FpPoly::from_residues(field, std::move(ys)),
          FpPoly::from_residues(field, std::move(zs))};
}

RPoly reduce_mod_binomial(const RPoly& f, std::size_t n, const RingElement& constant) {
  require_same_field(f.field(), constant.field());
  if (n == 0) throw DomainError("reduction needs n >= 1");
  std::vector<RingElement> coeffs = f.coeffs();
  // x^{n+k} = constant * x^k, applied from the top down.
  for (std::size_t k = coeffs.size(); k-- > n;) {
    coeffs[k - n] += constant * coeffs[k];
    coeffs[k] = RingElement::zero(f.field());
  }
  return RPoly(f.field(), std::move(coeffs));
}

RPoly rpoly_reduce(const RPoly& f, std::size_t n) {
  return reduce_mod_binomial(f, n, RingElement::lambda(f.field()));
}

RPoly binomial(std::size_t n, const RingElement& constant) {
  return RPoly::monomial(RingElement::one(constant.field()), n) - RPoly::monomial(constant, 0);
}

std::string to_string(const RPoly& f) {
  return format_descending(f.coeffs(), [](const RingElement& c, std::size_t k) -> std::string {
    if (c.is_zero()) return "";
    return k == 0 ? to_string(c) : to_string(c) + "*" + power_suffix(k);
  });
}

RPoly parse_rpoly(const PrimeField& field, std::string_view text) {
  RPoly result(field);
  for (const auto& term : detail::split_terms(text)) {
    auto mono = detail::parse_monomial(term.body, 'x');
    RingElement coef = mono.coefficient.empty() ? RingElement::one(field)
                                                : parse_ring_element(field, mono.coefficient);
    result += RPoly::monomial(term.negative ? -coef : coef, mono.exponent);
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const RPoly& f) { return os << to_string(f); }

}  // namespace constacyclic
