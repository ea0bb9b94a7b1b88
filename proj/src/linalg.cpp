// Exact row-echelon computations. The worker is templated on the integer
// type: an int64 engine with overflow-checked arithmetic handles the common
// small-coefficient case, and any overflow restarts the computation with
// arbitrary-precision integers. Both engines compute the same numbers.

#include "asymcone/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>

namespace asymcone {
namespace {

struct OverflowSignal {};

template <class T>
struct Ops;

template <>
struct Ops<std::int64_t> {
  using T = std::int64_t;
  static T add(T a, T b) {
    T r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowSignal{};
    return r;
  }
  static T sub(T a, T b) {
    T r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowSignal{};
    return r;
  }
  static T mul(T a, T b) {
    T r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowSignal{};
    return r;
  }
  static T div_exact(T a, T b) { return a / b; }
  static T gcd(T a, T b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
      T t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  static bool is_zero(T a) { return a == 0; }
  static bool is_neg(T a) { return a < 0; }
};

template <>
struct Ops<Int> {
  using T = Int;
  static T add(const T& a, const T& b) { return a + b; }
  static T sub(const T& a, const T& b) { return a - b; }
  static T mul(const T& a, const T& b) { return a * b; }
  static T div_exact(const T& a, const T& b) { return a / b; }
  static T gcd(const T& a, const T& b) {
    return boost::multiprecision::gcd(a, b);
  }
  static bool is_zero(const T& a) { return a.is_zero(); }
  static bool is_neg(const T& a) { return a < 0; }
};

template <class T>
void primitive(std::vector<T>& v) {
  using O = Ops<T>;
  T g = 0;
  for (const T& x : v) {
    g = O::gcd(g, x);
    // gcd 1 is the common case; stop early.
    if (g == 1) break;
  }
  if (O::is_zero(g)) return;
  int lead = -1;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!O::is_zero(v[k])) {
      lead = static_cast<int>(k);
      break;
    }
  }
  if (O::is_neg(v[lead])) g = -g;
  if (g == 1) return;
  for (T& x : v) x = O::div_exact(x, g);
}

// Working representation during elimination: rows with mutually distinct
// pivot columns, zero at every other row's pivot, primitive, pivot positive.
template <class T>
struct Echelon {
  int cols;
  std::vector<std::vector<T>> rows;
  std::vector<int> pivots;

  explicit Echelon(int c) : cols(c) {}

  // Eliminates the existing pivot columns from r.
  void reduce(std::vector<T>& r) const {
    using O = Ops<T>;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const T& c = r[pivots[i]];
      if (O::is_zero(c)) continue;
      const T& p = rows[i][pivots[i]];
      std::vector<T> out(cols);
      for (int k = 0; k < cols; ++k)
        out[k] = O::sub(O::mul(p, r[k]), O::mul(c, rows[i][k]));
      r = std::move(out);
      primitive(r);
    }
  }

  // Inserts an already-reduced nonzero row and restores the invariant.
  void insert(std::vector<T> r) {
    using O = Ops<T>;
    primitive(r);
    int p = 0;
    while (O::is_zero(r[p])) ++p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const T& c = rows[i][p];
      if (O::is_zero(c)) continue;
      std::vector<T> out(cols);
      for (int k = 0; k < cols; ++k)
        out[k] = O::sub(O::mul(r[p], rows[i][k]), O::mul(c, r[k]));
      rows[i] = std::move(out);
      primitive(rows[i]);
    }
    rows.push_back(std::move(r));
    pivots.push_back(p);
  }

  void add_row(std::vector<T> r) {
    using O = Ops<T>;
    reduce(r);
    bool zero = true;
    for (const T& x : r)
      if (!O::is_zero(x)) {
        zero = false;
        break;
      }
    if (!zero) insert(std::move(r));
  }

  void sort_by_pivot() {
    std::vector<int> order(rows.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return pivots[a] < pivots[b]; });
    std::vector<std::vector<T>> rs;
    std::vector<int> ps;
    rs.reserve(rows.size());
    ps.reserve(rows.size());
    for (int i : order) {
      rs.push_back(std::move(rows[i]));
      ps.push_back(pivots[i]);
    }
    rows = std::move(rs);
    pivots = std::move(ps);
  }
};

bool fits_int64(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  return v >= lo && v <= hi;
}

template <class T>
T from_int(const Int& v);

template <>
std::int64_t from_int<std::int64_t>(const Int& v) {
  return static_cast<std::int64_t>(v);
}
template <>
Int from_int<Int>(const Int& v) {
  return v;
}

template <class T>
Basis run_basis(int cols, const std::vector<std::vector<Int>>& input) {
  Echelon<T> e(cols);
  for (const auto& r : input) {
    std::vector<T> row(cols);
    for (int k = 0; k < cols; ++k) row[k] = from_int<T>(r[k]);
    e.add_row(std::move(row));
  }
  e.sort_by_pivot();
  Basis b;
  b.cols = cols;
  b.rank = static_cast<int>(e.rows.size());
  b.pivots = e.pivots;
  b.rows.reserve(static_cast<std::size_t>(b.rank) * cols);
  for (const auto& r : e.rows)
    for (const auto& x : r) b.rows.emplace_back(x);
  return b;
}

template <class T>
Basis run_extend(const Basis& b, std::span<const Int> row) {
  Echelon<T> e(b.cols);
  for (int i = 0; i < b.rank; ++i) {
    std::vector<T> r(b.cols);
    for (int k = 0; k < b.cols; ++k) r[k] = from_int<T>(b.rows[i * b.cols + k]);
    e.rows.push_back(std::move(r));
    e.pivots.push_back(b.pivots[i]);
  }
  std::vector<T> r(b.cols);
  for (int k = 0; k < b.cols; ++k) r[k] = from_int<T>(row[k]);
  e.add_row(std::move(r));
  e.sort_by_pivot();
  Basis out;
  out.cols = b.cols;
  out.rank = static_cast<int>(e.rows.size());
  out.pivots = e.pivots;
  out.rows.reserve(static_cast<std::size_t>(out.rank) * out.cols);
  for (const auto& rw : e.rows)
    for (const auto& x : rw) out.rows.emplace_back(x);
  return out;
}

template <class T>
bool run_in_span(const Basis& b, std::span<const Int> row) {
  Echelon<T> e(b.cols);
  for (int i = 0; i < b.rank; ++i) {
    std::vector<T> r(b.cols);
    for (int k = 0; k < b.cols; ++k) r[k] = from_int<T>(b.rows[i * b.cols + k]);
    e.rows.push_back(std::move(r));
    e.pivots.push_back(b.pivots[i]);
  }
  std::vector<T> r(b.cols);
  for (int k = 0; k < b.cols; ++k) r[k] = from_int<T>(row[k]);
  e.reduce(r);
  for (const auto& x : r)
    if (!Ops<T>::is_zero(x)) return false;
  return true;
}

bool all_small(const std::vector<std::vector<Int>>& input) {
  for (const auto& r : input)
    for (const auto& x : r)
      if (!fits_int64(x)) return false;
  return true;
}

bool all_small(const Basis& b, std::span<const Int> row) {
  for (const auto& x : b.rows)
    if (!fits_int64(x)) return false;
  for (const auto& x : row)
    if (!fits_int64(x)) return false;
  return true;
}

}  // namespace

SpanTester::SpanTester(const Basis& b) : b_(b) {
  fast_ = true;
  for (const Int& x : b.rows)
    if (!fits_int64(x)) {
      fast_ = false;
      return;
    }
  rows_.reserve(b.rows.size());
  for (const Int& x : b.rows) rows_.push_back(static_cast<std::int64_t>(x));
  buf_.resize(b.cols);
}

bool SpanTester::contains(std::span<const Int> row) const {
  if (fast_) {
    bool ok = true;
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (!fits_int64(row[k])) {
        ok = false;
        break;
      }
      buf_[k] = static_cast<std::int64_t>(row[k]);
    }
    if (ok) {
      try {
        for (int i = 0; i < b_.rank; ++i) {
          std::int64_t c = buf_[b_.pivots[i]];
          if (c == 0) continue;
          std::int64_t p = rows_[static_cast<std::size_t>(i) * b_.cols +
                                 b_.pivots[i]];
          for (int k = 0; k < b_.cols; ++k) {
            std::int64_t t = Ops<std::int64_t>::mul(p, buf_[k]);
            std::int64_t u = Ops<std::int64_t>::mul(
                c, rows_[static_cast<std::size_t>(i) * b_.cols + k]);
            buf_[k] = Ops<std::int64_t>::sub(t, u);
          }
        }
        for (int k = 0; k < b_.cols; ++k)
          if (buf_[k] != 0) return false;
        return true;
      } catch (const OverflowSignal&) {
      }
    }
  }
  return run_in_span<Int>(b_, row);
}

Basis canonical_basis(int cols, const std::vector<std::vector<Int>>& input) {
  if (all_small(input)) {
    try {
      return run_basis<std::int64_t>(cols, input);
    } catch (const OverflowSignal&) {
    }
  }
  return run_basis<Int>(cols, input);
}

Basis extend_basis(const Basis& b, std::span<const Int> row) {
  if (all_small(b, row)) {
    try {
      return run_extend<std::int64_t>(b, row);
    } catch (const OverflowSignal&) {
    }
  }
  return run_extend<Int>(b, row);
}

bool in_span(const Basis& b, std::span<const Int> row) {
  if (all_small(b, row)) {
    try {
      return run_in_span<std::int64_t>(b, row);
    } catch (const OverflowSignal&) {
    }
  }
  return run_in_span<Int>(b, row);
}

std::vector<std::vector<Int>> kernel_basis(const Basis& b) {
  std::vector<bool> is_pivot(b.cols, false);
  for (int p : b.pivots) is_pivot[p] = true;

  Int lead_lcm = 1;
  for (int i = 0; i < b.rank; ++i) {
    const Int& a = b.rows[static_cast<std::size_t>(i) * b.cols + b.pivots[i]];
    lead_lcm = boost::multiprecision::lcm(lead_lcm, a);
  }

  std::vector<std::vector<Int>> out;
  for (int f = 0; f < b.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Int> v(b.cols, 0);
    v[f] = lead_lcm;
    for (int i = 0; i < b.rank; ++i) {
      const Int& a = b.rows[static_cast<std::size_t>(i) * b.cols + b.pivots[i]];
      const Int& c = b.rows[static_cast<std::size_t>(i) * b.cols + f];
      v[b.pivots[i]] = -c * (lead_lcm / a);
    }
    make_primitive(v);
    out.push_back(std::move(v));
  }
  return out;
}

void make_primitive(std::span<Int> v) {
  Int g = 0;
  for (const Int& x : v) {
    g = boost::multiprecision::gcd(g, x);
    if (g == 1) break;
  }
  if (g.is_zero()) return;
  for (const Int& x : v) {
    if (!x.is_zero()) {
      if (x < 0) g = -g;
      break;
    }
  }
  if (g == 1) return;
  for (Int& x : v) x /= g;
}

}  // namespace asymcone
