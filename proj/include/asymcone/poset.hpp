#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "asymcone/arrangement.hpp"
#include "asymcone/flat.hpp"
#include "asymcone/support.hpp"

namespace asymcone {

inline constexpr std::size_t kDefaultFlatCap = 100000;

// Univariate polynomial with exact integer coefficients, ascending degree.
struct Polynomial {
  std::vector<Int> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  Int eval(const Int& t) const {
    Int v = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * t + *it;
    return v;
  }

  // Rendering like "t^3 - 3*t^2 + 2*t"; the zero polynomial prints "0".
  std::string str() const;

  bool operator==(const Polynomial& o) const { return coeffs == o.coeffs; }
};

// Exact quotient by (t - 1). Throws DivisionError if the remainder is
// nonzero; for the characteristic polynomial of a nonempty central
// arrangement that would signal an internal bug.
Polynomial divide_by_t_minus_1(const Polynomial& p);

// All intersections of subfamilies of the hyperplanes, ordered by inclusion
// of subspaces, with Mobius numbers computed downward from the ambient
// flat. Flats are sorted by (codim, canonical basis), so index 0 is the
// ambient space V.
struct IntersectionPoset {
  Arrangement arrangement;
  std::vector<Flat> flats;
  std::vector<Support> supports;  // forms vanishing on each flat
  std::vector<Int> mobius;
  int ambient_index = 0;
  int minimal_index = 0;  // the unique flat of maximal codim (K)

  std::size_t size() const { return flats.size(); }

  // flats[i] <= flats[j] as subspaces. Within one lattice this is exactly
  // reverse inclusion of the vanishing-form sets.
  bool leq(int i, int j) const { return supports[j].subset_of(supports[i]); }

  // Sum of multiplicities of the forms vanishing on flats[i].
  Int localized_degree(int i) const;
};

// Builds the poset by iterated pairwise intersection to a fixed point.
// Throws FlatCapExceeded when the number of flats passes flat_cap.
IntersectionPoset build_poset(const Arrangement& a,
                              std::size_t flat_cap = kDefaultFlatCap);

// Same, but the form list may be empty (poset of just the ambient flat).
// Used by internal recursions and tests; top-level arrangements are
// nonempty by construction.
IntersectionPoset build_poset_of_forms(int dim,
                                       const std::vector<LinearForm>& forms,
                                       std::size_t flat_cap = kDefaultFlatCap);

// Characteristic polynomial: sum over flats of mu(X) * t^dim(X). Monic of
// degree dim for any central arrangement.
Polynomial char_poly(const IntersectionPoset& p);

// Characteristic polynomial of the sub-arrangement of forms vanishing on
// flats[i], evaluated from the interval [flats[i], V] of the same poset.
Polynomial char_poly_localized(const IntersectionPoset& p, int i);

}  // namespace asymcone
