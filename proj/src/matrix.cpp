#include "gkmkit/matrix.hpp"

#include <limits>
#include <sstream>

namespace gkmkit {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  auto a = m.row(i);
  auto b = m.row(j);
  std::swap_ranges(a.begin(), a.end(), b.begin());
}

// row[dst] -= q * row[src]
void axpy_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (m(src, j) != 0) m(dst, j) -= q * m(src, j);
  }
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (auto& x : m.row(i)) x = -x;
}

// Unimodular row reduction to echelon form. Every row operation is mirrored on
// `companion` (when given). Pivots are chosen by minimal absolute value.
// Returns the list of pivot columns; rows past its size are zero.
std::vector<std::size_t> echelon(IntMatrix& a, IntMatrix* companion) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t r = row; r < a.rows(); ++r) {
        if (a(r, col) == 0) continue;
        if (!best || abs(a(r, col)) < abs(a(*best, col))) best = r;
      }
      if (!best) break;
      swap_rows(a, row, *best);
      if (companion) swap_rows(*companion, row, *best);
      bool cleared = true;
      for (std::size_t r = row + 1; r < a.rows(); ++r) {
        if (a(r, col) == 0) continue;
        Integer q = a(r, col) / a(row, col);
        axpy_row(a, r, row, q);
        if (companion) axpy_row(*companion, r, row, q);
        if (a(r, col) != 0) cleared = false;
      }
      if (cleared) {
        pivots.push_back(col);
        ++row;
        break;
      }
    }
  }
  return pivots;
}

// Brings an echelon matrix into Hermite form in place (mirrored on companion).
void reduce_above(IntMatrix& a, const std::vector<std::size_t>& pivots, IntMatrix* companion) {
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const std::size_t c = pivots[i];
    if (a(i, c) < 0) {
      negate_row(a, i);
      if (companion) negate_row(*companion, i);
    }
    for (std::size_t k = 0; k < i; ++k) {
      Integer q = floor_div(a(k, c), a(i, c));
      axpy_row(a, k, i, q);
      if (companion) axpy_row(*companion, k, i, q);
    }
  }
}

}  // namespace

IntMatrix widen(const SmallMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

SmallMatrix narrow(const IntMatrix& m) {
  static const Integer lo = std::numeric_limits<std::int64_t>::min();
  static const Integer hi = std::numeric_limits<std::int64_t>::max();
  SmallMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) < lo || m(i, j) > hi) throw DomainError("matrix entry exceeds 64-bit range");
      out(i, j) = static_cast<std::int64_t>(m(i, j));
    }
  return out;
}

Integer determinant(const IntMatrix& input) {
  if (!input.is_square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = input;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && a(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      swap_rows(a, k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool is_unimodular(const SmallMatrix& m) {
  if (!m.is_square()) return false;
  return abs(determinant(widen(m))) == 1;
}

std::optional<SmallMatrix> unimodular_inverse(const SmallMatrix& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  IntMatrix a = widen(m);
  IntMatrix inv = IntMatrix::identity(n);
  auto pivots = echelon(a, &inv);
  if (pivots.size() != n) return std::nullopt;
  reduce_above(a, pivots, &inv);
  if (!(a == IntMatrix::identity(n))) return std::nullopt;
  return narrow(inv);
}

IntMatrix hermite_rows(IntMatrix m) {
  auto pivots = echelon(m, nullptr);
  reduce_above(m, pivots, nullptr);
  IntMatrix out(pivots.size(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

std::vector<std::vector<Integer>> integer_kernel(const IntMatrix& m) {
  const std::size_t n = m.cols();
  IntMatrix a = m.transposed();
  IntMatrix u = IntMatrix::identity(n);
  const std::size_t rank = echelon(a, &u).size();

  IntMatrix kernel(n - rank, n);
  for (std::size_t i = rank; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) kernel(i - rank, j) = u(i, j);
  kernel = hermite_rows(std::move(kernel));

  std::vector<std::vector<Integer>> out;
  out.reserve(kernel.rows());
  for (std::size_t i = 0; i < kernel.rows(); ++i) {
    auto r = kernel.row(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

std::string to_string(const SmallMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace gkmkit
