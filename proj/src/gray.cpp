#include "constacyclic/gray.hpp"

#include "constacyclic/errors.hpp"

namespace constacyclic {

std::pair<Residue, Residue> gray_elem(const RingElement& r) {
  const auto& f = r.field();
  return {f.neg(r.c()), f.add(f.add(r.a(), r.a()), r.c())};
}

VectorFp gray_vec(const VectorR& v) {
  const std::size_t n = v.size();
  std::vector<Residue> out(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [first, second] = gray_elem(v[i]);
    out[i] = first;
    out[n + i] = second;
  }
  return VectorFp::from_residues(v.field(), std::move(out));
}

LinearCodeFp gray_image_of_flattened(const LinearCodeFp& flat) {
  if (flat.length() % 3 != 0) throw LengthMismatchError("flattened code length is not a multiple of 3");
  std::vector<VectorFp> images;
  images.reserve(flat.dimension());
  for (const auto& row : flat.basis()) images.push_back(gray_vec(unflatten(row)));
  return {flat.field(), 2 * (flat.length() / 3), images};
}

LinearCodeFp gray_image_code(const RWordSet& words) {
  if (words.empty()) throw DomainError("the Gray image of the empty set is not a code");
  if (!is_fp_linear(words)) throw DomainError("input set is not F_p-linear");
  const auto& first = *words.begin();
  return gray_image_of_flattened(flattened_span(first.field(), first.size(), words));
}

LinearCodeFp gray_image_code(const ConstaCode& code) { return gray_image_of_flattened(flattened_code(code)); }

}  // namespace constacyclic
