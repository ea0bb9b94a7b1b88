#pragma once

#include "asymcone/poset.hpp"

namespace asymcone {

// Euler characteristic of the complement of the union of hyperplanes:
// the characteristic polynomial at t = 1. Zero for every nonempty central
// arrangement.
Int complement_euler(const Arrangement& a);
Int complement_euler(const IntersectionPoset& p);

// Euler characteristic of the complement divided by the scaling action,
// i.e. q(1) where char_poly = (t - 1) * q. Computing through the exact
// polynomial quotient makes the value independent of any choice of slice.
Int decone_euler(const Arrangement& a);
Int decone_euler(const IntersectionPoset& p);

// Euler characteristic of the fiber {f = 1}: the fiber is a deg(f)-fold
// cover of the deconed complement, so this is total_degree * decone_euler.
Int milnor_euler(const Arrangement& a);
Int milnor_euler(const IntersectionPoset& p);

// milnor_euler of the sub-arrangement of forms vanishing on flats[i],
// evaluated on the interval [flats[i], V] without rebuilding a poset.
Int milnor_euler_localized(const IntersectionPoset& p, int i);

}  // namespace asymcone
