#include "constacyclic/vectors.hpp"

#include <algorithm>

#include "constacyclic/errors.hpp"
#include "text_util.hpp"

namespace constacyclic {

namespace {

void require_same_length(std::size_t lhs, std::size_t rhs) {
  if (lhs != rhs) {
    throw LengthMismatchError("length mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs));
  }
}

}  // namespace

VectorFp::VectorFp(const PrimeField& field, const std::vector<std::int64_t>& entries) : field_(field) {
  entries_.reserve(entries.size());
  for (auto e : entries) entries_.push_back(field.reduce(e));
}

VectorFp VectorFp::from_residues(const PrimeField& field, std::vector<Residue> entries) {
  VectorFp v(field);
  for (auto& e : entries) e %= field.modulus();
  v.entries_ = std::move(entries);
  return v;
}

VectorFp VectorFp::zero(const PrimeField& field, std::size_t length) {
  return from_residues(field, std::vector<Residue>(length, 0));
}

bool VectorFp::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](Residue e) { return e == 0; });
}

std::size_t VectorFp::weight() const noexcept {
  return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(), [](Residue e) { return e != 0; }));
}

VectorFp VectorFp::scaled(Residue s) const {
  VectorFp r = *this;
  for (auto& e : r.entries_) e = field_.mul(e, s);
  return r;
}

VectorFp& VectorFp::operator+=(const VectorFp& rhs) {
  require_same_field(field_, rhs.field_);
  require_same_length(size(), rhs.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] = field_.add(entries_[i], rhs.entries_[i]);
  return *this;
}

VectorFp& VectorFp::operator-=(const VectorFp& rhs) {
  require_same_field(field_, rhs.field_);
  require_same_length(size(), rhs.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] = field_.sub(entries_[i], rhs.entries_[i]);
  return *this;
}

VectorR::VectorR(const PrimeField& field, std::vector<RingElement> entries)
    : field_(field), entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("vectors over R need length >= 1");
  for (const auto& e : entries_) require_same_field(field_, e.field());
}

VectorR VectorR::zero(const PrimeField& field, std::size_t length) {
  return VectorR(field, std::vector<RingElement>(length, RingElement::zero(field)));
}

bool VectorR::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](const RingElement& e) { return e.is_zero(); });
}

VectorR VectorR::scaled(const RingElement& s) const {
  VectorR r = *this;
  for (auto& e : r.entries_) e *= s;
  return r;
}

VectorR& VectorR::operator+=(const VectorR& rhs) {
  require_same_length(size(), rhs.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

VectorR& VectorR::operator-=(const VectorR& rhs) {
  require_same_length(size(), rhs.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

std::string to_string(ShiftKind kind) {
  switch (kind) {
    case ShiftKind::sigma:
      return "sigma";
    case ShiftKind::gamma:
      return "gamma";
    case ShiftKind::rho:
      return "rho";
  }
  return "?";
}

ShiftKind parse_shift_kind(std::string_view text) {
  if (text == "sigma") return ShiftKind::sigma;
  if (text == "gamma") return ShiftKind::gamma;
  if (text == "rho") return ShiftKind::rho;
  throw ParseError("unknown shift '" + std::string(text) + "' (expected sigma, gamma or rho)");
}

VectorR shift_apply(ShiftKind kind, const VectorR& v) {
  std::vector<RingElement> out;
  out.reserve(v.size());
  RingElement wrapped = v.entries().back();
  if (kind == ShiftKind::gamma) wrapped = -wrapped;
  if (kind == ShiftKind::rho) wrapped *= RingElement::lambda(v.field());
  out.push_back(wrapped);
  out.insert(out.end(), v.entries().begin(), v.entries().end() - 1);
  return VectorR(v.field(), std::move(out));
}

VectorFp shift_apply(ShiftKind kind, const VectorFp& v) {
  if (kind == ShiftKind::rho) throw DomainError("the rho shift acts on vectors over R, not over F_p");
  if (v.size() == 0) return v;
  std::vector<Residue> out;
  out.reserve(v.size());
  Residue wrapped = v.entries().back();
  out.push_back(kind == ShiftKind::gamma ? v.field().neg(wrapped) : wrapped);
  out.insert(out.end(), v.entries().begin(), v.entries().end() - 1);
  return VectorFp::from_residues(v.field(), std::move(out));
}

Residue dot(const VectorFp& x, const VectorFp& y) {
  require_same_field(x.field(), y.field());
  require_same_length(x.size(), y.size());
  const auto& f = x.field();
  Residue acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc = f.add(acc, f.mul(x[i], y[i]));
  return acc;
}

RingElement inner_product(const VectorR& x, const VectorR& y) {
  require_same_field(x.field(), y.field());
  require_same_length(x.size(), y.size());
  RingElement acc = RingElement::zero(x.field());
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

VectorFp flatten(const VectorR& v) {
  const std::size_t n = v.size();
  std::vector<Residue> out(3 * n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = v[i].a();
    out[n + i] = v[i].b();
    out[2 * n + i] = v[i].c();
  }
  return VectorFp::from_residues(v.field(), std::move(out));
}

VectorR unflatten(const VectorFp& v) {
  if (v.size() == 0 || v.size() % 3 != 0) {
    throw LengthMismatchError("flattened vector length " + std::to_string(v.size()) + " is not a positive multiple of 3");
  }
  const std::size_t n = v.size() / 3;
  std::vector<RingElement> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(v.field(), v[i], v[n + i], v[2 * n + i]);
  return VectorR(v.field(), std::move(out));
}

VectorR to_vector(const RPoly& f, std::size_t n) {
  if (f.degree() >= static_cast<int>(n)) {
    throw DomainError("polynomial of degree " + std::to_string(f.degree()) + " does not fit length " +
                      std::to_string(n));
  }
  std::vector<RingElement> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(f.coeff(i));
  return VectorR(f.field(), std::move(out));
}

VectorFp to_vector(const FpPoly& f, std::size_t n) {
  if (f.degree() >= static_cast<int>(n)) {
    throw DomainError("polynomial of degree " + std::to_string(f.degree()) + " does not fit length " +
                      std::to_string(n));
  }
  std::vector<Residue> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = f.coeff(i);
  return VectorFp::from_residues(f.field(), std::move(out));
}

RPoly to_poly(const VectorR& v) { return RPoly(v.field(), v.entries()); }

FpPoly to_poly(const VectorFp& v) { return FpPoly::from_residues(v.field(), v.entries()); }

std::string to_string(const VectorFp& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string to_string(const VectorR& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += to_string(v[i]);
  }
  return out;
}

VectorFp parse_vector_fp(const PrimeField& field, std::string_view text) {
  std::vector<std::int64_t> entries;
  for (auto part : detail::split_top_level(detail::trim(text), ',')) entries.push_back(detail::parse_int(part));
  return VectorFp(field, entries);
}

VectorR parse_vector_r(const PrimeField& field, std::string_view text) {
  std::vector<RingElement> entries;
  for (auto part : detail::split_top_level(detail::trim(text), ',')) entries.push_back(parse_ring_element(field, part));
  return VectorR(field, std::move(entries));
}

}  // namespace constacyclic
