#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "asymcone/numbers.hpp"

namespace asymcone {

// One linear form with a repetition count. Canonical form: coprime integer
// coefficients, first nonzero entry positive, mult >= 1.
struct LinearForm {
  std::vector<Int> coeffs;
  Int mult = 1;

  bool operator==(const LinearForm& o) const {
    return coeffs == o.coeffs && mult == o.mult;
  }
};

// A central hyperplane arrangement with multiplicities. Always canonical:
// forms pairwise non-proportional (proportional inputs merged), each form
// canonical, sorted by a fixed total order on coefficient vectors. Equality
// of arrangements is equality of this representation.
struct Arrangement {
  int dim = 0;
  std::vector<LinearForm> forms;

  // Degree of the defining product: sum of multiplicities.
  Int total_degree() const {
    Int d = 0;
    for (const auto& f : forms) d += f.mult;
    return d;
  }

  bool operator==(const Arrangement& o) const {
    return dim == o.dim && forms == o.forms;
  }
};

using RawForm = std::pair<std::vector<Rat>, Int>;

// Merges proportional vectors (summing multiplicities), normalizes each form
// and sorts. Throws ZeroForm, EmptyArrangement, NonpositiveMultiplicity,
// DimensionMismatch.
Arrangement canonicalize(const std::vector<RawForm>& raw, int dim);

// Reads either a JSON arrangement document or a built-in name such as
// "boolean:3", "braid:3", "generic:2:5" (an optional "builtin:" prefix is
// accepted). Throws ParseError with position information plus everything
// canonicalize throws.
Arrangement parse_arrangement(std::string_view text);

// Expands a built-in family name (no "builtin:" prefix).
//   boolean:d      coordinate forms in C^d
//   braid:d        all pairwise differences x_i - x_j, i < j
//   generic:d:m    rows of the m x d Vandermonde matrix (i^(j-1))
//   random:d:n:s   n nonzero vectors with entries in [-2,2], seeded by s
Arrangement builtin_arrangement(std::string_view name);

// Total order used to sort canonical forms: by leading-coefficient index,
// then lexicographically on the coefficient vector.
bool form_less(const std::vector<Int>& a, const std::vector<Int>& b);

}  // namespace asymcone
