#include "constacyclic/oracle.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "constacyclic/errors.hpp"

namespace constacyclic::oracle {

namespace {

// Coefficients of 1, u, u^2.
using Raw = std::array<std::uint64_t, 3>;
using RawVec = std::vector<Raw>;

struct Arith {
  std::uint64_t p;

  Raw add(const Raw& x, const Raw& y) const { return {(x[0] + y[0]) % p, (x[1] + y[1]) % p, (x[2] + y[2]) % p}; }

  Raw mul(const Raw& x, const Raw& y) const {
    std::uint64_t t[5] = {0, 0, 0, 0, 0};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) t[i + j] = (t[i + j] + x[i] * y[j]) % p;
    }
    // u^k = u^{k-2} for k >= 3, folded from the top.
    for (int k = 4; k >= 3; --k) t[k - 2] = (t[k - 2] + t[k]) % p;
    return {t[0], t[1], t[2]};
  }

  RawVec add(const RawVec& x, const RawVec& y) const {
    RawVec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = add(x[i], y[i]);
    return out;
  }

  RawVec scale(const Raw& r, const RawVec& x) const {
    RawVec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = mul(r, x[i]);
    return out;
  }

  // x * v(x) modulo x^n - c, straight from x^n = c.
  RawVec times_x(const RawVec& v, const Raw& c) const {
    RawVec out(v.size());
    out[0] = mul(c, v.back());
    for (std::size_t i = 1; i < v.size(); ++i) out[i] = v[i - 1];
    return out;
  }

  Raw dot(const RawVec& x, const RawVec& y) const {
    Raw acc{0, 0, 0};
    for (std::size_t i = 0; i < x.size(); ++i) acc = add(acc, mul(x[i], y[i]));
    return acc;
  }

  // a(x) g(x) reduced by x^n = c, with a of length n.
  RawVec mulmod(const RawVec& a, const RawVec& g, std::size_t n, const Raw& c) const {
    RawVec prod(a.size() + g.size(), Raw{0, 0, 0});
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < g.size(); ++j) prod[i + j] = add(prod[i + j], mul(a[i], g[j]));
    }
    for (std::size_t k = prod.size(); k-- > n;) {
      prod[k - n] = add(prod[k - n], mul(c, prod[k]));
    }
    prod.resize(n, Raw{0, 0, 0});
    return prod;
  }
};

Raw to_raw(const RingElement& r) { return {r.a(), r.b(), r.c()}; }

RawVec to_raw(const VectorR& v) {
  RawVec out;
  out.reserve(v.size());
  for (const auto& e : v.entries()) out.push_back(to_raw(e));
  return out;
}

VectorR from_raw(const PrimeField& field, const RawVec& v) {
  std::vector<RingElement> entries;
  entries.reserve(v.size());
  for (const auto& r : v) {
    entries.emplace_back(field, static_cast<std::int64_t>(r[0]), static_cast<std::int64_t>(r[1]),
                         static_cast<std::int64_t>(r[2]));
  }
  return VectorR(field, std::move(entries));
}

bool is_zero(const Raw& r) { return r[0] == 0 && r[1] == 0 && r[2] == 0; }

// Advances a vector of n ring elements through all p^{3n} values.
bool next_raw(RawVec& v, std::uint64_t p) {
  for (auto& r : v) {
    for (auto& coord : r) {
      if (++coord < p) return true;
      coord = 0;
    }
  }
  return false;
}

std::vector<Raw> all_ring_elements(std::uint64_t p) {
  std::vector<Raw> out;
  RawVec one(1, Raw{0, 0, 0});
  do {
    out.push_back(one[0]);
  } while (next_raw(one, p));
  return out;
}

}  // namespace

bool brute_ideal_check(const RWordSet& words, std::size_t n) {
  if (words.empty()) return false;
  return brute_ideal_check(words, n, RingElement::lambda(words.begin()->field()));
}

bool brute_ideal_check(const RWordSet& words, std::size_t n, const RingElement& constant) {
  if (words.empty()) return false;
  const Arith ar{constant.field().modulus()};
  std::set<RawVec> set;
  for (const auto& w : words) {
    if (w.size() != n) return false;
    set.insert(to_raw(w));
  }
  // Additive closure: grow the additive span one new word at a time and
  // require every element produced to lie in the set.
  const RawVec zero(n, Raw{0, 0, 0});
  if (!set.contains(zero)) return false;
  std::set<RawVec> span{zero};
  std::vector<RawVec> generators;
  for (const auto& s : set) {
    if (span.contains(s)) continue;
    generators.push_back(s);
    std::set<RawVec> grown;
    for (const auto& t : span) {
      RawVec acc = t;
      for (std::uint64_t k = 0; k < ar.p; ++k) {
        if (!set.contains(acc)) return false;
        grown.insert(acc);
        acc = ar.add(acc, s);
      }
    }
    span = std::move(grown);
  }
  // With additive closure settled, scaling and x-multiplication need only be
  // checked on the additive generators.
  const auto scalars = all_ring_elements(ar.p);
  const Raw c = to_raw(constant);
  for (const auto& g : generators) {
    for (const auto& r : scalars) {
      if (!set.contains(ar.scale(r, g))) return false;
    }
    if (!set.contains(ar.times_x(g, c))) return false;
  }
  return true;
}

RWordSet brute_ideal_generated(const RPoly& g, std::size_t n, const RingElement& constant, std::size_t cap) {
  const auto& field = g.field();
  require_same_field(field, constant.field());
  checked_power(field.modulus(), 3 * n, cap);
  const Arith ar{field.modulus()};
  RawVec graw;
  for (const auto& e : g.coeffs()) graw.push_back(to_raw(e));
  const Raw c = to_raw(constant);
  std::set<RawVec> out;
  RawVec a(n, Raw{0, 0, 0});
  do {
    out.insert(ar.mulmod(a, graw, n, c));
  } while (next_raw(a, ar.p));
  RWordSet words;
  for (const auto& v : out) words.insert(words.end(), from_raw(field, v));
  return words;
}

RWordSet brute_dual(const PrimeField& field, std::size_t n, const RWordSet& words, std::size_t cap) {
  checked_power(field.modulus(), 3 * n, cap);
  const Arith ar{field.modulus()};
  std::vector<RawVec> raw;
  raw.reserve(words.size());
  for (const auto& w : words) {
    if (w.size() != n) throw LengthMismatchError("word length differs from n");
    raw.push_back(to_raw(w));
  }
  RWordSet dual;
  RawVec x(n, Raw{0, 0, 0});
  do {
    bool orthogonal = std::all_of(raw.begin(), raw.end(), [&](const RawVec& y) { return is_zero(ar.dot(x, y)); });
    if (orthogonal) dual.insert(from_raw(field, x));
  } while (next_raw(x, ar.p));
  return dual;
}

RWordSet brute_r_linear_closure(const PrimeField& field, std::size_t n, const RWordSet& words, std::size_t cap) {
  const Arith ar{field.modulus()};
  const auto scalars = all_ring_elements(ar.p);
  std::vector<RawVec> gens;
  for (const auto& w : words) gens.push_back(to_raw(w));
  std::set<RawVec> seen{RawVec(n, Raw{0, 0, 0})};
  std::vector<RawVec> frontier(seen.begin(), seen.end());
  for (std::size_t idx = 0; idx < frontier.size(); ++idx) {
    for (const auto& g : gens) {
      for (const auto& r : scalars) {
        RawVec next = ar.add(frontier[idx], ar.scale(r, g));
        if (seen.insert(next).second) {
          if (seen.size() > cap) throw EnumerationLimitError("R-linear closure exceeds the enumeration cap");
          frontier.push_back(std::move(next));
        }
      }
    }
  }
  RWordSet out;
  for (const auto& v : seen) out.insert(out.end(), from_raw(field, v));
  return out;
}

std::vector<FpPoly> exhaustive_divisor_search(const FpPoly& f, std::size_t cap) {
  if (!f.is_monic()) throw DomainError("exhaustive_divisor_search requires a monic polynomial");
  const std::uint64_t p = f.field().modulus();
  const auto deg = static_cast<std::size_t>(f.degree());
  std::size_t total = 0;
  for (std::size_t d = 0; d <= deg; ++d) {
    total += checked_power(p, d, cap);
    if (total > cap) throw EnumerationLimitError("divisor search exceeds the enumeration cap");
  }
  const std::vector<std::uint64_t> target(f.coeffs().begin(), f.coeffs().end());
  std::vector<FpPoly> found;
  for (std::size_t d = 0; d <= deg; ++d) {
    std::vector<std::uint64_t> cand(d + 1, 0);
    cand[d] = 1;
    while (true) {
      // Long division by a monic candidate: no inverses needed.
      std::vector<std::uint64_t> rem = target;
      for (std::size_t k = rem.size(); k-- > d;) {
        std::uint64_t q = rem[k];
        if (q == 0) continue;
        for (std::size_t j = 0; j <= d; ++j) rem[k - d + j] = (rem[k - d + j] + (p - q) * cand[j]) % p;
      }
      if (std::all_of(rem.begin(), rem.end(), [](std::uint64_t r) { return r == 0; })) {
        std::vector<std::int64_t> coeffs(cand.begin(), cand.end());
        found.emplace_back(f.field(), coeffs);
      }
      std::size_t i = 0;
      for (; i < d; ++i) {
        if (++cand[i] < p) break;
        cand[i] = 0;
      }
      if (i == d) break;
    }
  }
  std::sort(found.begin(), found.end(), degree_lex_less);
  return found;
}

std::optional<std::size_t> brute_min_weight(const FpWordSet& words) {
  std::optional<std::size_t> best;
  for (const auto& w : words) {
    std::size_t weight = 0;
    for (auto e : w.entries()) weight += e != 0 ? 1 : 0;
    if (weight > 0 && (!best || weight < *best)) best = weight;
  }
  return best;
}

}  // namespace constacyclic::oracle
