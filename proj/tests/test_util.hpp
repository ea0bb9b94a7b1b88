#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "asymcone/arrangement.hpp"
#include "asymcone/linalg.hpp"

namespace testutil {

using asymcone::Arrangement;
using asymcone::Int;
using asymcone::Rat;
using asymcone::RawForm;

inline Arrangement make(int dim, const std::vector<std::vector<int>>& coeffs,
                        const std::vector<long>& mults = {}) {
  std::vector<RawForm> raw;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::vector<Rat> v(coeffs[i].begin(), coeffs[i].end());
    raw.emplace_back(std::move(v), mults.empty() ? 1 : mults[i]);
  }
  return asymcone::canonicalize(raw, dim);
}

inline Arrangement boolean2() { return make(2, {{1, 0}, {0, 1}}); }
inline Arrangement boolean3() { return make(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }
inline Arrangement braid3() {
  return make(3, {{1, -1, 0}, {1, 0, -1}, {0, 1, -1}});
}
// Three concurrent lines in the plane: x, y, x + y.
inline Arrangement three_lines() { return make(2, {{1, 0}, {0, 1}, {1, 1}}); }

// n random nonzero integer covectors with entries in [-2, 2]; proportional
// picks merge during canonicalization, so the result may have fewer forms.
inline Arrangement random_arrangement(std::mt19937_64& rng, int dim, int n,
                                      bool random_mults = false) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::uniform_int_distribution<int> mult(1, 4);
  std::vector<RawForm> raw;
  for (int i = 0; i < n; ++i) {
    std::vector<Rat> v(dim);
    bool zero = true;
    do {
      zero = true;
      for (int k = 0; k < dim; ++k) {
        int c = coeff(rng);
        v[k] = c;
        if (c) zero = false;
      }
    } while (zero);
    raw.emplace_back(std::move(v), random_mults ? mult(rng) : 1);
  }
  return asymcone::canonicalize(raw, dim);
}

// Random unimodular integer matrix: a product of elementary shears and
// signed permutations. Returns row-major d*d entries.
inline std::vector<std::vector<Int>> random_unimodular(std::mt19937_64& rng,
                                                       int d) {
  std::vector<std::vector<Int>> g(d, std::vector<Int>(d, 0));
  for (int i = 0; i < d; ++i) g[i][i] = 1;
  std::uniform_int_distribution<int> idx(0, d - 1);
  std::uniform_int_distribution<int> shear(-2, 2);
  for (int step = 0; step < 3 * d; ++step) {
    int i = idx(rng), j = idx(rng);
    if (i == j) {
      if (shear(rng) % 2) {
        for (int k = 0; k < d; ++k) g[i][k] = -g[i][k];
      }
      continue;
    }
    Int c = shear(rng);
    for (int k = 0; k < d; ++k) g[i][k] += c * g[j][k];
  }
  return g;
}

// Restriction of an arrangement to the hyperplane of its i-th form,
// re-expressed in coordinates of that hyperplane.
inline Arrangement restrict_to(const Arrangement& a, std::size_t i) {
  asymcone::Basis h = asymcone::canonical_basis(a.dim, {a.forms[i].coeffs});
  auto basis = asymcone::kernel_basis(h);  // rows span the hyperplane
  std::vector<RawForm> raw;
  for (std::size_t j = 0; j < a.forms.size(); ++j) {
    if (j == i) continue;
    std::vector<Rat> w(basis.size());
    for (std::size_t r = 0; r < basis.size(); ++r) {
      Int acc = 0;
      for (int k = 0; k < a.dim; ++k) acc += a.forms[j].coeffs[k] * basis[r][k];
      w[r] = Rat(acc);
    }
    raw.emplace_back(std::move(w), a.forms[j].mult);
  }
  return asymcone::canonicalize(raw, a.dim - 1);
}

// Applies a coordinate change to every form: form -> form * g.
inline Arrangement transform(const Arrangement& a,
                             const std::vector<std::vector<Int>>& g) {
  std::vector<RawForm> raw;
  for (const auto& f : a.forms) {
    std::vector<Rat> v(a.dim, 0);
    for (int k = 0; k < a.dim; ++k) {
      Int acc = 0;
      for (int l = 0; l < a.dim; ++l) acc += f.coeffs[l] * g[l][k];
      v[k] = Rat(acc);
    }
    raw.emplace_back(std::move(v), f.mult);
  }
  return asymcone::canonicalize(raw, a.dim);
}

}  // namespace testutil
