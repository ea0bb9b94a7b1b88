#include "asymcone/charcycle.hpp"

#include <algorithm>

#include "asymcone/errors.hpp"

namespace asymcone {

const Int& CharCycle::at(const Flat& f) const {
  auto it = std::lower_bound(
      entries.begin(), entries.end(), f,
      [](const std::pair<Flat, Int>& e, const Flat& key) {
        if (e.first.codim() != key.codim())
          return e.first.codim() < key.codim();
        return e.first < key;
      });
  if (it == entries.end() || !(it->first == f))
    throw NotAFlat("flat is not in the arrangement's lattice");
  return it->second;
}

Arrangement localize(const Arrangement& a, const Flat& s) {
  if (s.dim != a.dim)
    throw DimensionMismatch("flat and arrangement dimensions differ");
  if (s.codim() < 1)
    throw NotAFlat("localization needs a proper flat");

  Arrangement sub;
  sub.dim = a.dim;
  std::vector<std::vector<Int>> rows;
  for (const auto& f : a.forms)
    if (vanishes_on(f.coeffs, s)) {
      sub.forms.push_back(f);
      rows.push_back(f.coeffs);
    }
  // s must be exactly the common kernel of the forms through it.
  if (!(canonical_basis(a.dim, rows) == s.normals))
    throw NotAFlat("subspace is not an intersection of hyperplanes");
  return sub;
}

CharCycle multiplicities(const IntersectionPoset& p) {
  const std::size_t n = p.size();
  std::vector<Int> m(n, 0);

  // Flats are sorted by increasing codim, so every flat strictly above S
  // is finished when S is reached.
  for (std::size_t i = 1; i < n; ++i) {
    Int rhs = milnor_euler_localized(p, static_cast<int>(i));
    for (std::size_t j = 1; j < i; ++j) {
      if (!p.supports[j].subset_of(p.supports[i])) continue;
      if (p.flats[j].strat_codim() % 2 == 0)
        rhs -= m[j];
      else
        rhs += m[j];
    }
    m[i] = p.flats[i].strat_codim() % 2 == 0 ? rhs : -rhs;
    if (m[i] < 0)
      throw Error("negative conormal multiplicity at a flat; this is a bug");
  }

  CharCycle cc;
  cc.ambient = p.arrangement;
  cc.entries.reserve(n - 1);
  for (std::size_t i = 1; i < n; ++i)
    cc.entries.emplace_back(p.flats[i], m[i]);
  return cc;
}

CharCycle multiplicities(const Arrangement& a, std::size_t flat_cap) {
  return multiplicities(build_poset(a, flat_cap));
}

Int rank_L(const Arrangement& a, std::size_t flat_cap) {
  IntersectionPoset p = build_poset(a, flat_cap);
  CharCycle cc = multiplicities(p);
  return cc.entries.back().second;  // entries sorted; the minimal flat is last
}

Basis dual_support(const Arrangement& a) {
  std::vector<std::vector<Int>> rows;
  rows.reserve(a.forms.size());
  for (const auto& f : a.forms) rows.push_back(f.coeffs);
  return canonical_basis(a.dim, rows);
}

}  // namespace asymcone
