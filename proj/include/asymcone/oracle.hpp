#pragma once

#include <cstdint>

#include "asymcone/charcycle.hpp"

namespace asymcone::oracle {

inline constexpr long kDefaultPointBudget = 10'000'000;
inline constexpr int kMaxReferenceFlats = 64;

// Brute-force validation layer. Everything here recomputes its answers from
// scratch, sharing only the input and output data types with the main
// pipeline, so agreement between the two is meaningful evidence.

// The combinatorial shape of the intersection lattice: for every subfamily
// of forms, the set of forms vanishing on its common kernel, together with
// the codimension. Two shapes are equal iff the lattices match flat-by-flat
// with the same dimensions and incidences.
struct PosetShape {
  std::vector<std::pair<Support, int>> closures;  // sorted, deduplicated

  bool operator==(const PosetShape& o) const { return closures == o.closures; }
};

// Exact shape over the rationals. Enumerates subfamilies; capped at 20
// forms (InstanceTooLarge beyond that).
PosetShape shape_over_rationals(const Arrangement& a);

// Shape of the arrangement reduced mod p, by modular elimination.
PosetShape shape_mod_p(const Arrangement& a, std::int64_t p);

// True iff reducing mod p keeps every form nonzero, keeps all forms
// pairwise non-proportional, and preserves the whole lattice shape. The
// second overload reuses a precomputed rational shape.
bool good_prime(const Arrangement& a, std::int64_t p);
bool good_prime(const Arrangement& a, std::int64_t p,
                const PosetShape& rational_shape);

// Number of points of F_q^dim avoiding every hyperplane, by enumeration.
// Throws BadPrime unless good_prime(a, q); BudgetExceeded when q^dim is
// over budget.
Int count_complement_points(const Arrangement& a, std::int64_t q,
                            const Int& budget = kDefaultPointBudget);

// Enumeration only, skipping the goodness check (for callers that already
// filtered their primes).
Int count_points_raw(const Arrangement& a, std::int64_t q,
                     const Int& budget = kDefaultPointBudget);

// Euler characteristic of the slice {l_i = 1} minus the other hyperplanes,
// computed from the poset of nonempty affine flats by the Mobius sum. The
// index i refers to a.forms. Independent of i for a central arrangement.
Int affine_decone_euler(const Arrangement& a, std::size_t i);

// Recomputes every conormal multiplicity by solving the linear system that
// states the alternating-sum identity at every localization at once, with
// each right-hand side obtained through the affine slice path (checked to
// agree across all slice choices). Throws InstanceTooLarge above
// kMaxReferenceFlats flats and InconsistentSystem when any cross-check
// fails.
CharCycle reference_multiplicities(const Arrangement& a);

}  // namespace asymcone::oracle
