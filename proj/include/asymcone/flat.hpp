#pragma once

#include <vector>

#include "asymcone/linalg.hpp"

namespace asymcone {

// A linear subspace of the ambient space, represented by the canonical
// basis of the covectors vanishing on it. Two flats are equal iff their
// canonical bases are equal.
struct Flat {
  int dim = 0;     // ambient dimension
  Basis normals;   // canonical; rank == codimension of the flat

  int codim() const { return normals.rank; }
  // Codimension inside the union of the hyperplanes; meaningful for proper
  // flats (codim >= 1) only.
  int strat_codim() const { return normals.rank - 1; }

  static Flat ambient(int dim);
  static Flat from_covectors(int dim, const std::vector<std::vector<Int>>& rows);

  // True iff other is a subspace of *this.
  bool contains(const Flat& other) const;

  bool operator==(const Flat& o) const {
    return dim == o.dim && normals == o.normals;
  }
  bool operator<(const Flat& o) const {
    if (dim != o.dim) return dim < o.dim;
    return normals < o.normals;
  }
};

// The flat cut out by both flats together. Throws DimensionMismatch.
Flat intersect_flats(const Flat& f1, const Flat& f2);

// True iff the form vanishes identically on the flat.
bool vanishes_on(std::span<const Int> form, const Flat& f);

}  // namespace asymcone
