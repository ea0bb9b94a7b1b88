#include "asymcone/poset.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "asymcone/errors.hpp"

namespace asymcone {

std::string Polynomial::str() const {
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Int& c = coeffs[k];
    if (c.is_zero()) continue;
    Int a = boost::multiprecision::abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    bool unit = a == 1;
    if (k == 0) {
      out += a.str();
    } else {
      if (!unit) out += a.str() + "*";
      out += k == 1 ? "t" : "t^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

Polynomial divide_by_t_minus_1(const Polynomial& p) {
  int n = p.degree();
  if (n < 1 || p.coeffs.empty()) {
    if (!p.coeffs.empty() && !p.coeffs[0].is_zero())
      throw DivisionError("(t - 1) does not divide " + p.str());
    return Polynomial{{Int(0)}};
  }
  Polynomial q;
  q.coeffs.assign(n, 0);
  q.coeffs[n - 1] = p.coeffs[n];
  for (int k = n - 1; k >= 1; --k) q.coeffs[k - 1] = p.coeffs[k] + q.coeffs[k];
  Int rem = p.coeffs[0] + q.coeffs[0];
  if (!rem.is_zero())
    throw DivisionError("(t - 1) does not divide " + p.str());
  return q;
}

namespace {

struct PendingFlat {
  Flat flat;
  Support support;
};

}  // namespace

IntersectionPoset build_poset_of_forms(int dim,
                                       const std::vector<LinearForm>& forms,
                                       std::size_t flat_cap) {
  const int n = static_cast<int>(forms.size());

  std::vector<PendingFlat> flats;
  std::unordered_map<Support, int, SupportHash> by_support;
  // Candidate sets already resolved to a flat; a candidate determines its
  // flat (the intersection of the listed kernels), so repeats are skipped
  // before any linear algebra happens.
  std::unordered_map<Support, int, SupportHash> candidate_memo;

  auto add_flat = [&](Flat f, Support sup) -> int {
    int idx = static_cast<int>(flats.size());
    if (flats.size() + 1 > flat_cap)
      throw FlatCapExceeded("flat count exceeds cap of " +
                            std::to_string(flat_cap) +
                            "; raise --flat-cap to proceed");
    by_support.emplace(sup, idx);
    flats.push_back(PendingFlat{std::move(f), std::move(sup)});
    return idx;
  };

  add_flat(Flat::ambient(dim), Support(n));
  // Canonical forms are primitive with positive lead, so each hyperplane's
  // basis is its own form; pairwise non-proportionality makes its closed
  // support a singleton.
  for (int i = 0; i < n; ++i) {
    Flat h;
    h.dim = dim;
    h.normals.cols = dim;
    h.normals.rank = 1;
    h.normals.rows = forms[i].coeffs;
    int piv = 0;
    while (forms[i].coeffs[piv].is_zero()) ++piv;
    h.normals.pivots = {piv};
    add_flat(std::move(h), Support(n).with(i));
  }

  Support full(n);
  for (int i = 0; i < n; ++i) full.set(i);

  for (std::size_t f = 1; f < flats.size(); ++f) {
    for (int j = 0; j < n; ++j) {
      if (flats[f].support.test(j)) continue;
      Support cand = flats[f].support.with(j);
      if (candidate_memo.contains(cand)) continue;

      Flat g;
      g.dim = dim;
      g.normals = extend_basis(flats[f].flat.normals, forms[j].coeffs);
      Support sup(n);
      if (g.normals.rank == dim) {
        sup = full;  // the origin; every form vanishes there
      } else {
        sup = cand;
        SpanTester tester(g.normals);
        for (int k = 0; k < n; ++k)
          if (!sup.test(k) && tester.contains(forms[k].coeffs)) sup.set(k);
      }
      auto it = by_support.find(sup);
      int idx = it != by_support.end() ? it->second
                                       : add_flat(std::move(g), sup);
      candidate_memo.emplace(std::move(cand), idx);
    }
  }

  // Deterministic order: by codimension, then by canonical basis.
  std::vector<int> order(flats.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (flats[a].flat.codim() != flats[b].flat.codim())
      return flats[a].flat.codim() < flats[b].flat.codim();
    return flats[a].flat < flats[b].flat;
  });

  IntersectionPoset p;
  p.arrangement.dim = dim;
  p.arrangement.forms = forms;
  p.flats.reserve(flats.size());
  p.supports.reserve(flats.size());
  for (int i : order) {
    p.flats.push_back(std::move(flats[i].flat));
    p.supports.push_back(std::move(flats[i].support));
  }
  p.ambient_index = 0;
  p.minimal_index = static_cast<int>(p.flats.size()) - 1;

  // mu(V) = 1; mu(X) = -sum of mu over flats strictly above X. Sorting by
  // codim guarantees everything above X is already done.
  p.mobius.assign(p.flats.size(), 0);
  p.mobius[0] = 1;
  for (std::size_t i = 1; i < p.flats.size(); ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (p.supports[j].subset_of(p.supports[i]) &&
          !(p.supports[j] == p.supports[i]))
        acc += p.mobius[j];
    p.mobius[i] = -acc;
  }
  return p;
}

IntersectionPoset build_poset(const Arrangement& a, std::size_t flat_cap) {
  if (a.forms.empty())
    throw EmptyArrangement("cannot build the poset of an empty arrangement");
  return build_poset_of_forms(a.dim, a.forms, flat_cap);
}

Int IntersectionPoset::localized_degree(int i) const {
  Int d = 0;
  for (std::size_t k = 0; k < arrangement.forms.size(); ++k)
    if (supports[i].test(static_cast<int>(k))) d += arrangement.forms[k].mult;
  return d;
}

Polynomial char_poly(const IntersectionPoset& p) {
  Polynomial out;
  out.coeffs.assign(p.arrangement.dim + 1, 0);
  for (std::size_t i = 0; i < p.flats.size(); ++i)
    out.coeffs[p.arrangement.dim - p.flats[i].codim()] += p.mobius[i];
  return out;
}

Polynomial char_poly_localized(const IntersectionPoset& p, int i) {
  // The lattice of the sub-arrangement at flats[i] is the interval
  // [flats[i], V], and the Mobius numbers agree on it.
  Polynomial out;
  out.coeffs.assign(p.arrangement.dim + 1, 0);
  for (std::size_t j = 0; j < p.flats.size(); ++j)
    if (p.supports[j].subset_of(p.supports[i]))
      out.coeffs[p.arrangement.dim - p.flats[j].codim()] += p.mobius[j];
  return out;
}

}  // namespace asymcone
