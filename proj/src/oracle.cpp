// Brute-force reference implementations. Nothing here calls into the
// lattice, euler or charcycle code: lattice shapes are rebuilt by closure
// enumeration with local eliminations, Euler characteristics come from
// affine slices, and the multiplicities from one global linear system.

#include "asymcone/oracle.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <unordered_set>

#include "asymcone/errors.hpp"

namespace asymcone::oracle {
namespace {

struct OverflowSignal {};

inline std::int64_t ck_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowSignal{};
  return r;
}
inline std::int64_t ck_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowSignal{};
  return r;
}

// Forward-elimination echelon over the integers (exact ranks over Q).
template <class T>
struct IntEchelon {
  int cols;
  std::vector<std::vector<T>> rows;
  std::vector<int> pivots;

  explicit IntEchelon(int c) : cols(c) {}

  static T mulT(const T& a, const T& b) {
    if constexpr (std::is_same_v<T, std::int64_t>)
      return ck_mul(a, b);
    else
      return a * b;
  }

  void reduce(std::vector<T>& r) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const T& c = r[pivots[i]];
      if (c == 0) continue;
      const T& p = rows[i][pivots[i]];
      std::vector<T> out(cols);
      for (int k = 0; k < cols; ++k) {
        if constexpr (std::is_same_v<T, std::int64_t>)
          out[k] = ck_add(ck_mul(p, r[k]), -ck_mul(c, rows[i][k]));
        else
          out[k] = p * r[k] - c * rows[i][k];
      }
      // Divide by the content to keep the entries small.
      T g = 0;
      for (const T& x : out) {
        if constexpr (std::is_same_v<T, std::int64_t>) {
          T a = x < 0 ? -x : x;
          while (a) {
            T t = g % a;
            g = a;
            a = t;
          }
        } else {
          g = boost::multiprecision::gcd(g, x);
        }
        if (g == 1) break;
      }
      if (g > 1)
        for (T& x : out) x /= g;
      r = std::move(out);
    }
  }

  bool add(std::vector<T> r) {
    reduce(r);
    for (int k = 0; k < cols; ++k)
      if (r[k] != 0) {
        pivots.push_back(k);
        rows.push_back(std::move(r));
        return true;
      }
    return false;
  }

  bool zero_after_reduce(std::vector<T> r) const {
    reduce(r);
    for (const T& x : r)
      if (x != 0) return false;
    return true;
  }
};

// Abstract "vector space over a field" used by the closure search: only
// ranks and membership of forms in spans are needed.
struct RationalSpace {
  const Arrangement& a;

  std::pair<int, Support> rank_and_closure(const Support& s) const {
    try {
      return run<std::int64_t>(s);
    } catch (const OverflowSignal&) {
      return run<Int>(s);
    }
  }

  template <class T>
  std::pair<int, Support> run(const Support& s) const {
    const int n = static_cast<int>(a.forms.size());
    IntEchelon<T> e(a.dim);
    for (int i = 0; i < n; ++i) {
      if (!s.test(i)) continue;
      std::vector<T> r(a.dim);
      for (int k = 0; k < a.dim; ++k) r[k] = conv<T>(a.forms[i].coeffs[k]);
      e.add(std::move(r));
    }
    Support cl(n);
    for (int i = 0; i < n; ++i) {
      if (s.test(i)) {
        cl.set(i);
        continue;
      }
      std::vector<T> r(a.dim);
      for (int k = 0; k < a.dim; ++k) r[k] = conv<T>(a.forms[i].coeffs[k]);
      if (e.zero_after_reduce(std::move(r))) cl.set(i);
    }
    return {static_cast<int>(e.rows.size()), cl};
  }

  template <class T>
  static T conv(const Int& v) {
    if constexpr (std::is_same_v<T, std::int64_t>) {
      static const Int lo = std::numeric_limits<std::int64_t>::min();
      static const Int hi = std::numeric_limits<std::int64_t>::max();
      if (v < lo || v > hi) throw OverflowSignal{};
      return static_cast<std::int64_t>(v);
    } else {
      return v;
    }
  }
};

std::int64_t mod_reduce(const Int& v, std::int64_t p) {
  Int r = v % p;
  if (r < 0) r += p;
  return static_cast<std::int64_t>(r);
}

struct ModPSpace {
  std::int64_t p;
  int dim;
  std::vector<std::vector<std::int64_t>> forms;  // entries in [0, p)

  ModPSpace(const Arrangement& a, std::int64_t prime) : p(prime), dim(a.dim) {
    forms.reserve(a.forms.size());
    for (const auto& f : a.forms) {
      std::vector<std::int64_t> r(a.dim);
      for (int k = 0; k < a.dim; ++k) r[k] = mod_reduce(f.coeffs[k], p);
      forms.push_back(std::move(r));
    }
  }

  void reduce(const std::vector<std::vector<std::int64_t>>& rows,
              const std::vector<int>& pivots,
              std::vector<std::int64_t>& r) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::int64_t c = r[pivots[i]];
      if (c == 0) continue;
      std::int64_t pv = rows[i][pivots[i]];
      for (int k = 0; k < dim; ++k)
        r[k] = ((pv * r[k] - c * rows[i][k]) % p + p) % p;
    }
  }

  std::pair<int, Support> rank_and_closure(const Support& s) const {
    const int n = static_cast<int>(forms.size());
    std::vector<std::vector<std::int64_t>> rows;
    std::vector<int> pivots;
    for (int i = 0; i < n; ++i) {
      if (!s.test(i)) continue;
      std::vector<std::int64_t> r = forms[i];
      reduce(rows, pivots, r);
      for (int k = 0; k < dim; ++k)
        if (r[k] != 0) {
          pivots.push_back(k);
          rows.push_back(std::move(r));
          break;
        }
    }
    Support cl(n);
    for (int i = 0; i < n; ++i) {
      if (s.test(i)) {
        cl.set(i);
        continue;
      }
      std::vector<std::int64_t> r = forms[i];
      reduce(rows, pivots, r);
      bool zero = true;
      for (int k = 0; k < dim; ++k)
        if (r[k] != 0) {
          zero = false;
          break;
        }
      if (zero) cl.set(i);
    }
    return {static_cast<int>(rows.size()), cl};
  }
};

// Breadth-first enumeration of closed form-sets: every flat's vanishing set
// arises by repeatedly adjoining one form to a smaller closed set.
template <class Space>
PosetShape shape_by_closure(const Space& space, int n_forms) {
  PosetShape shape;
  std::unordered_map<Support, int, SupportHash> seen;  // closure -> rank
  std::unordered_set<Support, SupportHash> tried;      // candidates done

  auto [rank0, cl0] = space.rank_and_closure(Support(n_forms));
  seen.emplace(cl0, rank0);
  std::queue<Support> work;
  work.push(cl0);

  while (!work.empty()) {
    Support c = work.front();
    work.pop();
    for (int k = 0; k < n_forms; ++k) {
      if (c.test(k)) continue;
      Support cand = c.with(k);
      if (!tried.insert(cand).second) continue;
      auto [rank, cl] = space.rank_and_closure(cand);
      if (seen.emplace(cl, rank).second) work.push(cl);
      if (seen.size() > 65536)
        throw InstanceTooLarge("lattice too large for the brute-force oracle");
    }
  }

  shape.closures.assign(seen.begin(), seen.end());
  std::sort(shape.closures.begin(), shape.closures.end());
  return shape;
}

// Modular products below stay inside int64 as long as p fits in 31 bits.
bool is_prime(std::int64_t p) {
  if (p < 2 || p > std::numeric_limits<std::int32_t>::max()) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------------
// Affine slice machinery (rational row reduction on augmented systems).

using QRow = std::vector<Rat>;  // length dim+1; last entry is the rhs

struct AffineSystem {
  int dim = 0;
  std::vector<QRow> rows;  // reduced; pivots only in coefficient columns
  std::vector<int> pivots;

  bool operator<(const AffineSystem& o) const { return rows < o.rows; }
  bool operator==(const AffineSystem& o) const { return rows == o.rows; }

  int space_dim() const { return dim - static_cast<int>(rows.size()); }
};

// Reduced row echelon form of an augmented system; nullopt if inconsistent.
std::optional<AffineSystem> affine_rref(int dim, std::vector<QRow> input) {
  AffineSystem s;
  s.dim = dim;
  for (QRow& r : input) {
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
      const Rat c = r[s.pivots[i]];
      if (c == 0) continue;
      for (int k = 0; k <= dim; ++k) r[k] -= c * s.rows[i][k];
    }
    int p = -1;
    for (int k = 0; k < dim; ++k)
      if (r[k] != 0) {
        p = k;
        break;
      }
    if (p < 0) {
      if (r[dim] != 0) return std::nullopt;  // 0 = c with c != 0
      continue;
    }
    const Rat inv = r[p];
    for (int k = 0; k <= dim; ++k) r[k] /= inv;
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
      const Rat c = s.rows[i][p];
      if (c == 0) continue;
      for (int k = 0; k <= dim; ++k) s.rows[i][k] -= c * r[k];
    }
    s.rows.push_back(std::move(r));
    s.pivots.push_back(p);
  }
  // Canonical row order by pivot column.
  std::vector<std::size_t> order(s.rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return s.pivots[x] < s.pivots[y]; });
  AffineSystem out;
  out.dim = dim;
  for (std::size_t i : order) {
    out.rows.push_back(std::move(s.rows[i]));
    out.pivots.push_back(s.pivots[i]);
  }
  return out;
}

// True iff the solution set of inner is contained in the one of outer.
bool affine_subset(const AffineSystem& inner, const AffineSystem& outer) {
  for (const QRow& row : outer.rows) {
    QRow r = row;
    for (std::size_t i = 0; i < inner.rows.size(); ++i) {
      const Rat c = r[inner.pivots[i]];
      if (c == 0) continue;
      for (int k = 0; k <= inner.dim; ++k) r[k] -= c * inner.rows[i][k];
    }
    for (int k = 0; k <= inner.dim; ++k)
      if (r[k] != 0) return false;
  }
  return true;
}

QRow rat_row(const std::vector<Int>& coeffs, const Rat& rhs) {
  QRow r(coeffs.size() + 1);
  for (std::size_t k = 0; k < coeffs.size(); ++k) r[k] = Rat(coeffs[k]);
  r.back() = rhs;
  return r;
}

}  // namespace

PosetShape shape_over_rationals(const Arrangement& a) {
  RationalSpace space{a};
  return shape_by_closure(space, static_cast<int>(a.forms.size()));
}

PosetShape shape_mod_p(const Arrangement& a, std::int64_t p) {
  ModPSpace space(a, p);
  return shape_by_closure(space, static_cast<int>(a.forms.size()));
}

bool good_prime(const Arrangement& a, std::int64_t p) {
  return good_prime(a, p, shape_over_rationals(a));
}

bool good_prime(const Arrangement& a, std::int64_t p,
                const PosetShape& rational_shape) {
  if (!is_prime(p)) return false;
  ModPSpace space(a, p);
  // Every form must stay nonzero mod p.
  std::set<std::vector<std::int64_t>> scaled;
  for (const auto& f : space.forms) {
    int lead = -1;
    for (int k = 0; k < space.dim; ++k)
      if (f[k] != 0) {
        lead = k;
        break;
      }
    if (lead < 0) return false;
    // Scale the first nonzero entry to 1; proportional forms collide.
    std::int64_t inv = 1, base = f[lead], e = p - 2;
    while (e) {  // base^(p-2) mod p
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    std::vector<std::int64_t> norm(space.dim);
    for (int k = 0; k < space.dim; ++k) norm[k] = f[k] * inv % p;
    if (!scaled.insert(norm).second) return false;
  }
  return shape_mod_p(a, p) == rational_shape;
}

Int count_points_raw(const Arrangement& a, std::int64_t q, const Int& budget) {
  if (q < 2 || q > std::numeric_limits<std::int32_t>::max())
    throw BadPrime("field size " + std::to_string(q) + " out of range");
  Int points = 1;
  for (int k = 0; k < a.dim; ++k) {
    points *= q;
    if (points > budget)
      throw BudgetExceeded("q^dim exceeds enumeration budget " +
                           budget.str());
  }

  const int d = a.dim;
  const int n = static_cast<int>(a.forms.size());
  // Coefficients transposed per level so each coordinate step is one
  // running addition per form.
  std::vector<std::vector<std::int64_t>> c(d, std::vector<std::int64_t>(n));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < d; ++k) c[k][j] = mod_reduce(a.forms[j].coeffs[k], q);

  std::vector<std::vector<std::int64_t>> scratch(
      d, std::vector<std::int64_t>(n, 0));
  long long count = 0;
  auto sweep = [&](auto&& self, int level,
                   const std::vector<std::int64_t>& base) -> void {
    std::vector<std::int64_t>& vals = scratch[level];
    vals = base;
    const std::vector<std::int64_t>& step = c[level];
    for (std::int64_t xv = 0;;) {
      if (level == d - 1) {
        bool all_nonzero = true;
        for (int j = 0; j < n; ++j)
          if (vals[j] == 0) {
            all_nonzero = false;
            break;
          }
        count += all_nonzero;
      } else {
        self(self, level + 1, vals);
      }
      if (++xv == q) break;
      for (int j = 0; j < n; ++j) {
        vals[j] += step[j];
        if (vals[j] >= q) vals[j] -= q;
      }
    }
  };
  sweep(sweep, 0, std::vector<std::int64_t>(n, 0));
  return Int(count);
}

Int count_complement_points(const Arrangement& a, std::int64_t q,
                            const Int& budget) {
  if (!good_prime(a, q))
    throw BadPrime("prime " + std::to_string(q) +
                   " degenerates the arrangement");
  return count_points_raw(a, q, budget);
}

Int affine_decone_euler(const Arrangement& a, std::size_t i) {
  if (i >= a.forms.size()) throw Error("slice index out of range");
  const int d = a.dim;

  auto ambient = affine_rref(d, {rat_row(a.forms[i].coeffs, 1)});
  if (!ambient) throw Error("slice system inconsistent; this is a bug");

  // The slice hyperplanes; kernels of forms proportional to l_i miss the
  // slice entirely, but canonical arrangements have none.
  std::vector<AffineSystem> cuts;
  for (std::size_t j = 0; j < a.forms.size(); ++j) {
    if (j == i) continue;
    auto s = affine_rref(d, {rat_row(a.forms[i].coeffs, 1),
                             rat_row(a.forms[j].coeffs, 0)});
    if (s) cuts.push_back(std::move(*s));
  }

  std::vector<AffineSystem> flats{*ambient};
  std::set<AffineSystem> seen{*ambient};
  for (const auto& cut : cuts)
    if (seen.insert(cut).second) flats.push_back(cut);

  // Close under intersection with the hyperplanes, dropping empty ones.
  for (std::size_t f = 0; f < flats.size(); ++f) {
    for (const auto& cut : cuts) {
      std::vector<QRow> rows = flats[f].rows;
      rows.insert(rows.end(), cut.rows.begin(), cut.rows.end());
      auto g = affine_rref(d, std::move(rows));
      if (!g) continue;
      if (seen.insert(*g).second) flats.push_back(std::move(*g));
      if (flats.size() > 65536)
        throw InstanceTooLarge("affine slice lattice too large");
    }
  }

  // Mobius from the slice downward, by decreasing flat dimension.
  std::vector<std::size_t> order(flats.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return flats[x].rows.size() < flats[y].rows.size();
  });

  std::vector<Int> mu(flats.size(), 0);
  Int chi = 0;
  for (std::size_t oi = 0; oi < order.size(); ++oi) {
    std::size_t x = order[oi];
    Int acc = oi == 0 ? Int(1) : Int(0);
    for (std::size_t oj = 0; oj < oi; ++oj) {
      std::size_t y = order[oj];
      if (flats[y].rows.size() < flats[x].rows.size() &&
          affine_subset(flats[x], flats[y]))
        acc -= mu[y];
    }
    mu[x] = acc;
    chi += acc;
  }
  return chi;
}

namespace {

// Exact Gaussian elimination; returns the unique solution or nullopt.
std::optional<std::vector<Rat>> solve_rational(
    std::vector<std::vector<Rat>> m, std::vector<Rat> rhs) {
  const std::size_t n = rhs.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t k = 0; k < n; ++k) perm[k] = k;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t k = 0; k < n; ++k) x[k] = rhs[k] / m[k][k];
  return x;
}

}  // namespace

CharCycle reference_multiplicities(const Arrangement& a) {
  PosetShape shape = shape_over_rationals(a);

  std::vector<std::pair<Support, int>> proper;
  for (const auto& [cl, rank] : shape.closures)
    if (rank >= 1) proper.push_back({cl, rank});
  if (proper.size() > kMaxReferenceFlats)
    throw InstanceTooLarge("more than " +
                           std::to_string(kMaxReferenceFlats) +
                           " flats; brute-force system skipped");

  const std::size_t nf = proper.size();

  // Right-hand sides: the fiber Euler characteristic of each localized
  // sub-arrangement through the affine slice path, which must not depend
  // on the slice choice.
  std::vector<Rat> rhs(nf);
  for (std::size_t t = 0; t < nf; ++t) {
    Arrangement sub;
    sub.dim = a.dim;
    for (std::size_t k = 0; k < a.forms.size(); ++k)
      if (proper[t].first.test(static_cast<int>(k)))
        sub.forms.push_back(a.forms[k]);
    std::optional<Int> chi;
    for (std::size_t i = 0; i < sub.forms.size(); ++i) {
      Int c = affine_decone_euler(sub, i);
      if (chi && *chi != c)
        throw InconsistentSystem(
            "slice Euler characteristics disagree across slice choices");
      chi = c;
    }
    rhs[t] = Rat(sub.total_degree() * *chi);
  }

  // One equation per flat T: the signed multiplicities over the flats
  // above T sum to the localized fiber Euler characteristic.
  std::vector<std::vector<Rat>> m(nf, std::vector<Rat>(nf, 0));
  for (std::size_t t = 0; t < nf; ++t)
    for (std::size_t s = 0; s < nf; ++s)
      if (proper[s].first.subset_of(proper[t].first))
        m[t][s] = (proper[s].second - 1) % 2 == 0 ? 1 : -1;

  auto sol = solve_rational(m, rhs);
  if (!sol)
    throw InconsistentSystem("multiplicity system is singular");
  for (const Rat& v : *sol)
    if (boost::multiprecision::denominator(v) != 1)
      throw InconsistentSystem("multiplicity system has a non-integer solution");

  CharCycle cc;
  cc.ambient = a;
  for (std::size_t s = 0; s < nf; ++s) {
    std::vector<std::vector<Int>> rows;
    for (std::size_t k = 0; k < a.forms.size(); ++k)
      if (proper[s].first.test(static_cast<int>(k)))
        rows.push_back(a.forms[k].coeffs);
    cc.entries.emplace_back(Flat::from_covectors(a.dim, rows),
                            Int(boost::multiprecision::numerator((*sol)[s])));
  }
  std::sort(cc.entries.begin(), cc.entries.end(),
            [](const auto& x, const auto& y) {
              if (x.first.codim() != y.first.codim())
                return x.first.codim() < y.first.codim();
              return x.first < y.first;
            });
  return cc;
}

}  // namespace asymcone::oracle
