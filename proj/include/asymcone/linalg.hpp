#pragma once

#include <span>
#include <vector>

#include "asymcone/numbers.hpp"

namespace asymcone {

// Canonical basis of a covector span: the reduced row-echelon form over the
// rationals with every row rescaled to a primitive integer vector whose
// pivot entry is positive. Rows are ordered by pivot column. This form is
// unique for a given row space, so Basis equality is span equality.
struct Basis {
  int cols = 0;
  int rank = 0;
  std::vector<Int> rows;   // row-major, rank * cols entries
  std::vector<int> pivots; // pivot column of each row, strictly increasing

  std::span<const Int> row(int i) const {
    return {rows.data() + static_cast<std::size_t>(i) * cols,
            static_cast<std::size_t>(cols)};
  }

  bool operator==(const Basis& o) const {
    return cols == o.cols && rank == o.rank && rows == o.rows;
  }
  bool operator<(const Basis& o) const {
    if (rank != o.rank) return rank < o.rank;
    for (std::size_t k = 0; k < rows.size(); ++k)
      if (rows[k] != o.rows[k]) return rows[k] < o.rows[k];
    return false;
  }
};

// Canonical basis of the span of the given rows (each of length cols).
Basis canonical_basis(int cols, const std::vector<std::vector<Int>>& input);

// Canonical basis of span(b) + span(row). Cheap when row already lies in
// span(b): returns b unchanged.
Basis extend_basis(const Basis& b, std::span<const Int> row);

// True iff row lies in the span of the basis rows.
bool in_span(const Basis& b, std::span<const Int> row);

// Answers many span-membership queries against one basis without
// rebuilding state per query. Not safe to share across threads.
class SpanTester {
 public:
  explicit SpanTester(const Basis& b);
  bool contains(std::span<const Int> row) const;

 private:
  const Basis& b_;
  bool fast_ = false;
  std::vector<std::int64_t> rows_;          // flattened, when fast_
  mutable std::vector<std::int64_t> buf_;
};

// Primitive integer rows spanning the null space { v : b . v = 0 }.
// Returns (cols - rank) rows of length cols.
std::vector<std::vector<Int>> kernel_basis(const Basis& b);

// Divides a vector by its content (gcd of entries) and flips sign so the
// first nonzero entry is positive. Zero vectors are left untouched.
void make_primitive(std::span<Int> v);

}  // namespace asymcone
