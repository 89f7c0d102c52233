#pragma once

// Piecewise exponential functions: tuples (f_x) of Laurent polynomials indexed
// by the vertices of a GKM graph, with f_u == f_v mod (1 - e^{-chi}) across
// every non-loop edge u -- v of weight chi.

#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gkmkit/gkm_graph.hpp"

namespace gkmkit {

using GraphPtr = std::shared_ptr<const GkmGraph>;

class PeTuple {
 public:
  // values[i] belongs to vertex index i of the graph.
  PeTuple(GraphPtr graph, std::vector<LaurentElement> values);
  // Throws DomainError if a vertex has no value or an id is unknown.
  static PeTuple from_map(GraphPtr graph, const std::map<std::string, LaurentElement>& values);
  static PeTuple constant(GraphPtr graph, const LaurentElement& f);
  static PeTuple zero(GraphPtr graph);
  // 1 at `vertex`, 0 elsewhere.
  static PeTuple delta(GraphPtr graph, const std::string& vertex);

  const GkmGraph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  const std::vector<LaurentElement>& values() const { return values_; }
  const LaurentElement& operator[](std::size_t i) const { return values_.at(i); }
  const LaurentElement& at(const std::string& vertex) const { return values_.at(graph_->index_of(vertex)); }

  PeTuple operator+(const PeTuple& o) const;
  PeTuple operator-(const PeTuple& o) const;
  // Pointwise product.
  PeTuple operator*(const PeTuple& o) const;
  // R(T)-module structure: f * (t_x) = (f t_x).
  PeTuple scaled(const LaurentElement& f) const;

  friend bool operator==(const PeTuple& a, const PeTuple& b) {
    return *a.graph_ == *b.graph_ && a.values_ == b.values_;
  }

 private:
  void require_same_graph(const PeTuple& o) const;

  GraphPtr graph_;
  std::vector<LaurentElement> values_;
};

// Per-coordinate integer intervals bounding the exponents of every vertex value.
struct Box {
  std::vector<std::pair<std::int64_t, std::int64_t>> ranges;

  static Box uniform(std::size_t rank, std::int64_t lo, std::int64_t hi);
  std::size_t rank() const { return ranges.size(); }
  bool contains(const ExponentVector& e) const;
  // Lattice points in lexicographic order. Throws DomainError for an empty box.
  std::vector<ExponentVector> points() const;
};

bool member(const PeTuple& t);
// Indices of the edges whose congruence fails; empty iff member(t).
std::vector<std::size_t> failing_edges(const PeTuple& t);

struct ClearedTuple {
  // Product of (1 - e^{-chi}) over all non-loop edges, chi sign-normalized.
  LaurentElement denominator;
  PeTuple scaled;
};

// denominator * t, which is always a member: after inverting the edge factors
// every tuple lies in PE.
ClearedTuple clear_denominators(const PeTuple& t);

// Z-basis of {t in PE : supp(t_x) in box for all x}, in Hermite normal form
// over the (vertex, exponent) coordinates.
std::vector<PeTuple> truncated_basis(const GraphPtr& g, const Box& box);

// Z-basis of the truncated members fixed by every generator of the action.
// The box must be mapped into itself by every generator's lattice map.
std::vector<PeTuple> invariant_basis(const GraphPtr& g, const CheckedAction& action, const Box& box);

// Image of t under generator k: t'[w x] = w . t[x], with w . e^lambda = e^{w lambda}.
PeTuple act(const CheckedAction& action, std::size_t k, const PeTuple& t);

// Restriction of t to the induced subgraph on `keep`.
PeTuple restrict_tuple(const PeTuple& t, std::span<const std::string> keep);

// (s (x) t)[(u, v)] = s[u] t[v] on the product graph (built with `product`).
PeTuple tensor_tuple(const PeTuple& s, const PeTuple& t, const GraphPtr& product_graph);

}  // namespace gkmkit
