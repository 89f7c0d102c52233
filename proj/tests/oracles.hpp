#pragma once

// Reference computations used to cross-check the library. They only touch the
// plain data (graph edges, term maps) and never call congruent_mod, the Smith
// presentation or integer_kernel.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gkmkit/gkm_graph.hpp"
#include "gkmkit/pe_ring.hpp"

namespace oracle {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

// Long division of a rank-1 Laurent polynomial by t^d - 1; true iff the remainder is 0.
inline bool divisible_by_t_power_minus_one(const gkmkit::LaurentElement& f, std::int64_t d) {
  if (d < 0) d = -d;
  if (f.is_zero()) return true;
  const std::int64_t lo = f.terms().begin()->first[0];
  const std::int64_t hi = f.terms().rbegin()->first[0];
  std::vector<cpp_int> p(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const auto& [e, c] : f.terms()) p[static_cast<std::size_t>(e[0] - lo)] = c;
  // Leading term c*t^k: subtract c*t^{k-d}*(t^d - 1).
  for (std::size_t k = p.size(); k-- > static_cast<std::size_t>(d);) {
    if (p[k] == 0) continue;
    p[k - d] += p[k];
    p[k] = 0;
  }
  return std::all_of(p.begin(), p.end(), [](const cpp_int& c) { return c == 0; });
}

// Is a - b an integer multiple of chi?
inline bool differ_by_multiple(const gkmkit::ExponentVector& a, const gkmkit::ExponentVector& b,
                               const gkmkit::ExponentVector& chi) {
  std::optional<std::int64_t> k;
  for (std::size_t i = 0; i < chi.rank(); ++i) {
    const std::int64_t d = a[i] - b[i];
    if (chi[i] == 0) {
      if (d != 0) return false;
      continue;
    }
    if (d % chi[i] != 0) return false;
    if (k && *k != d / chi[i]) return false;
    k = d / chi[i];
  }
  return true;
}

// Canonical point of lambda + Z chi: the one whose first coordinate where chi
// is nonzero lies in [0, |chi_i|).
inline gkmkit::ExponentVector coset_representative(const gkmkit::ExponentVector& lambda,
                                                    const gkmkit::ExponentVector& chi) {
  std::size_t i = 0;
  while (chi[i] == 0) ++i;
  const std::int64_t c = chi[i];
  const std::int64_t m = c < 0 ? -c : c;
  const std::int64_t r = ((lambda[i] % m) + m) % m;
  const std::int64_t k = (lambda[i] - r) / c;
  gkmkit::ExponentVector rep = lambda;
  for (std::size_t j = 0; j < chi.rank(); ++j) rep[j] -= k * chi[j];
  return rep;
}

// Edge congruence tested from the definition: in Z[M]/(1 - e^{-chi}) two
// monomials agree iff their exponents differ by a multiple of chi, so the
// difference vanishes iff every such class has coefficient sum zero.
inline bool congruent(const gkmkit::LaurentElement& f, const gkmkit::LaurentElement& g,
                      const gkmkit::ExponentVector& chi) {
  std::map<gkmkit::ExponentVector, cpp_int> classes;
  for (const auto& [e, c] : f.terms()) classes[coset_representative(e, chi)] += c;
  for (const auto& [e, c] : g.terms()) classes[coset_representative(e, chi)] -= c;
  return std::all_of(classes.begin(), classes.end(), [](const auto& cl) { return cl.second == 0; });
}

inline bool member(const gkmkit::PeTuple& t) {
  for (const auto& e : t.graph().edges()) {
    if (e.is_loop()) continue;
    if (!congruent(t[e.u], t[e.v], e.weight->vector())) return false;
  }
  return true;
}

using Row = std::vector<cpp_rational>;

inline std::size_t rational_rank(std::vector<Row> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const cpp_rational f = rows[r][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

// gcd of the maximal minors of a full-row-rank k x n integer matrix, as the
// product of the pivots of a diagonalization by unimodular row and column
// operations. It is 1 exactly when the row span is saturated in Z^n.
inline cpp_int maximal_minor_gcd(const std::vector<Row>& rows) {
  const std::size_t k = rows.size();
  const std::size_t n = k == 0 ? 0 : rows[0].size();
  std::vector<std::vector<cpp_int>> a(k, std::vector<cpp_int>(n));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = numerator(rows[i][j]);
  cpp_int product = 1;
  for (std::size_t p = 0; p < k; ++p) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t bi = k, bj = n;
      for (std::size_t i = p; i < k; ++i)
        for (std::size_t j = p; j < n; ++j)
          if (a[i][j] != 0 && (bi == k || abs(a[i][j]) < abs(a[bi][bj]))) bi = i, bj = j;
      if (bi == k) return 0;
      std::swap(a[p], a[bi]);
      for (auto& r : a) std::swap(r[p], r[bj]);
      bool clean = true;
      for (std::size_t i = p + 1; i < k; ++i) {
        const cpp_int q = a[i][p] / a[p][p];
        for (std::size_t j = p; j < n; ++j) a[i][j] -= q * a[p][j];
        clean = clean && a[i][p] == 0;
      }
      for (std::size_t j = p + 1; j < n; ++j) {
        const cpp_int q = a[p][j] / a[p][p];
        for (std::size_t i = p; i < k; ++i) a[i][j] -= q * a[i][p];
        clean = clean && a[p][j] == 0;
      }
      if (clean) break;
    }
    product *= abs(a[p][p]);
  }
  return product;
}

// Coordinates of a truncated tuple: vertex-major, box points in the given order.
struct Coordinates {
  std::vector<gkmkit::ExponentVector> points;
  std::size_t vertices = 0;
  std::size_t size() const { return points.size() * vertices; }
  std::size_t at(std::size_t x, const gkmkit::ExponentVector& p) const {
    const auto it = std::find(points.begin(), points.end(), p);
    return x * points.size() + static_cast<std::size_t>(it - points.begin());
  }
};

inline Coordinates coordinates(const gkmkit::GkmGraph& g, const std::vector<gkmkit::ExponentVector>& points) {
  return Coordinates{points, g.vertex_count()};
}

// Linear conditions cutting out the box-supported members.
inline std::vector<Row> edge_conditions(const gkmkit::GkmGraph& g, const Coordinates& co) {
  std::vector<Row> rows;
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    std::vector<bool> used(co.points.size(), false);
    for (std::size_t i = 0; i < co.points.size(); ++i) {
      if (used[i]) continue;
      Row row(co.size(), 0);
      for (std::size_t j = i; j < co.points.size(); ++j) {
        if (!differ_by_multiple(co.points[i], co.points[j], e.weight->vector())) continue;
        used[j] = true;
        row[co.at(e.u, co.points[j])] += 1;
        row[co.at(e.v, co.points[j])] -= 1;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

// f(sigma x)(M lambda) = f(x)(lambda) for one generator.
inline std::vector<Row> invariance_conditions(const Coordinates& co, const std::vector<std::size_t>& perm,
                                              const gkmkit::SmallMatrix& m) {
  std::vector<Row> rows;
  for (std::size_t x = 0; x < co.vertices; ++x)
    for (const auto& p : co.points) {
      Row row(co.size(), 0);
      row[co.at(perm[x], gkmkit::apply(m, p))] += 1;
      row[co.at(x, p)] -= 1;
      rows.push_back(std::move(row));
    }
  return rows;
}

inline Row flatten(const gkmkit::PeTuple& t, const Coordinates& co) {
  Row row(co.size(), 0);
  for (std::size_t x = 0; x < co.vertices; ++x)
    for (const auto& [e, c] : t[x].terms()) row[co.at(x, e)] = cpp_rational(c);
  return row;
}

inline bool satisfies(const Row& v, const std::vector<Row>& conditions) {
  for (const auto& c : conditions) {
    cpp_rational s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) s += c[j] * v[j];
    if (s != 0) return false;
  }
  return true;
}

}  // namespace oracle
