#pragma once

#include <utility>
#include <vector>

#include "asymcone/euler.hpp"

namespace asymcone {

// The conormal multiplicities m(S), one per proper flat of the lattice.
// They satisfy, for the whole arrangement and for every localization,
//   sum over proper flats S of (-1)^strat_codim(S) * m(S)
//     = milnor_euler of the sub-arrangement,
// which pins them down by downward recursion over the lattice.
struct CharCycle {
  Arrangement ambient;
  std::vector<std::pair<Flat, Int>> entries;  // sorted by (codim, basis)

  const Int& at(const Flat& f) const;  // throws NotAFlat if absent
};

// The sub-arrangement of forms vanishing on s, in the same ambient space.
// s must be a proper flat of a's lattice (equivalently: the common kernel
// of the forms vanishing on s must be exactly s); otherwise NotAFlat.
Arrangement localize(const Arrangement& a, const Flat& s);

// All multiplicities m(S), by the recursion
//   (-1)^c(S) m(S) = milnor_euler(A_S) - sum over proper T > S of
//                    (-1)^c(T) m(T),
// processed in decreasing flat dimension and memoized per flat. A negative
// value would signal a bug and throws.
CharCycle multiplicities(const Arrangement& a,
                         std::size_t flat_cap = kDefaultFlatCap);
CharCycle multiplicities(const IntersectionPoset& p);

// m at the minimal flat: the rank of the local system carried by the
// Fourier-transformed nearby-cycles sheaf.
Int rank_L(const Arrangement& a, std::size_t flat_cap = kDefaultFlatCap);

// Canonical basis of the span of the forms inside the dual space; equals
// the orthogonal complement of the minimal flat and supports the
// transformed sheaf.
Basis dual_support(const Arrangement& a);

}  // namespace asymcone
