#include "asymcone/flat.hpp"

#include "asymcone/errors.hpp"

namespace asymcone {

Flat Flat::ambient(int dim) {
  Flat f;
  f.dim = dim;
  f.normals.cols = dim;
  return f;
}

Flat Flat::from_covectors(int dim,
                          const std::vector<std::vector<Int>>& rows) {
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != dim)
      throw DimensionMismatch("covector length does not match ambient dim");
  Flat f;
  f.dim = dim;
  f.normals = canonical_basis(dim, rows);
  return f;
}

bool Flat::contains(const Flat& other) const {
  if (dim != other.dim)
    throw DimensionMismatch("flats live in different ambient spaces");
  // *this >= other iff every covector cutting *this vanishes on other,
  // i.e. lies in the span of other's normals.
  for (int i = 0; i < normals.rank; ++i)
    if (!in_span(other.normals, normals.row(i))) return false;
  return true;
}

Flat intersect_flats(const Flat& f1, const Flat& f2) {
  if (f1.dim != f2.dim)
    throw DimensionMismatch("flats live in different ambient spaces");
  Flat out;
  out.dim = f1.dim;
  out.normals = f1.normals;
  for (int i = 0; i < f2.normals.rank; ++i)
    out.normals = extend_basis(out.normals, f2.normals.row(i));
  return out;
}

bool vanishes_on(std::span<const Int> form, const Flat& f) {
  return in_span(f.normals, form);
}

}  // namespace asymcone
