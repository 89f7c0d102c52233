#include "gkmkit/pe_ring.hpp"

#include <set>

namespace gkmkit {

// ---------------------------------------------------------------------------
// PeTuple

PeTuple::PeTuple(GraphPtr graph, std::vector<LaurentElement> values)
    : graph_(std::move(graph)), values_(std::move(values)) {
  if (!graph_) throw DomainError("tuple without a graph");
  if (values_.size() != graph_->vertex_count())
    throw DomainError("tuple has " + std::to_string(values_.size()) + " values for " +
                      std::to_string(graph_->vertex_count()) + " vertices");
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i].rank() != graph_->rank())
      throw DomainError("value at vertex '" + graph_->id(i) + "' has rank " + std::to_string(values_[i].rank()) +
                        ", graph lattice has rank " + std::to_string(graph_->rank()));
}

PeTuple PeTuple::from_map(GraphPtr graph, const std::map<std::string, LaurentElement>& values) {
  std::vector<std::optional<LaurentElement>> slots(graph->vertex_count());
  for (const auto& [id, f] : values) slots[graph->index_of(id)] = f;
  std::vector<LaurentElement> out;
  out.reserve(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) throw DomainError("missing value for vertex '" + graph->id(i) + "'");
    out.push_back(std::move(*slots[i]));
  }
  return PeTuple(std::move(graph), std::move(out));
}

PeTuple PeTuple::constant(GraphPtr graph, const LaurentElement& f) {
  std::vector<LaurentElement> values(graph->vertex_count(), f);
  return PeTuple(std::move(graph), std::move(values));
}

PeTuple PeTuple::zero(GraphPtr graph) {
  const std::size_t r = graph->rank();
  return constant(std::move(graph), LaurentElement(r));
}

PeTuple PeTuple::delta(GraphPtr graph, const std::string& vertex) {
  const std::size_t r = graph->rank();
  std::vector<LaurentElement> values(graph->vertex_count(), LaurentElement(r));
  values[graph->index_of(vertex)] = LaurentElement::constant(r, 1);
  return PeTuple(std::move(graph), std::move(values));
}

void PeTuple::require_same_graph(const PeTuple& o) const {
  if (graph_ != o.graph_ && !(*graph_ == *o.graph_)) throw DomainError("tuples live on different graphs");
}

PeTuple PeTuple::operator+(const PeTuple& o) const {
  require_same_graph(o);
  std::vector<LaurentElement> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i] + o.values_[i];
  return PeTuple(graph_, std::move(v));
}

PeTuple PeTuple::operator-(const PeTuple& o) const {
  require_same_graph(o);
  std::vector<LaurentElement> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i] - o.values_[i];
  return PeTuple(graph_, std::move(v));
}

PeTuple PeTuple::operator*(const PeTuple& o) const {
  require_same_graph(o);
  std::vector<LaurentElement> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i] * o.values_[i];
  return PeTuple(graph_, std::move(v));
}

PeTuple PeTuple::scaled(const LaurentElement& f) const {
  std::vector<LaurentElement> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f * values_[i];
  return PeTuple(graph_, std::move(v));
}

// ---------------------------------------------------------------------------
// Box

Box Box::uniform(std::size_t rank, std::int64_t lo, std::int64_t hi) {
  return Box{std::vector<std::pair<std::int64_t, std::int64_t>>(rank, {lo, hi})};
}

bool Box::contains(const ExponentVector& e) const {
  if (e.rank() != rank()) return false;
  for (std::size_t i = 0; i < rank(); ++i)
    if (e[i] < ranges[i].first || e[i] > ranges[i].second) return false;
  return true;
}

std::vector<ExponentVector> Box::points() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (ranges[i].first > ranges[i].second)
      throw DomainError("empty box: coordinate " + std::to_string(i) + " has lo " +
                        std::to_string(ranges[i].first) + " > hi " + std::to_string(ranges[i].second));
  std::vector<ExponentVector> out;
  ExponentVector cur(rank());
  for (std::size_t i = 0; i < rank(); ++i) cur[i] = ranges[i].first;
  while (true) {
    out.push_back(cur);
    std::size_t i = rank();
    while (i > 0) {
      --i;
      if (cur[i] < ranges[i].second) {
        ++cur[i];
        break;
      }
      cur[i] = ranges[i].first;
      if (i == 0) return out;
    }
    if (rank() == 0) return out;
  }
}

// ---------------------------------------------------------------------------
// Membership

std::vector<std::size_t> failing_edges(const PeTuple& t) {
  const GkmGraph& g = t.graph();
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edges()[k];
    if (e.is_loop()) continue;
    if (!congruent_mod(t[e.u], t[e.v], *e.weight)) out.push_back(k);
  }
  return out;
}

bool member(const PeTuple& t) {
  const GkmGraph& g = t.graph();
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    if (!congruent_mod(t[e.u], t[e.v], *e.weight)) return false;
  }
  return true;
}

ClearedTuple clear_denominators(const PeTuple& t) {
  const GkmGraph& g = t.graph();
  LaurentElement d = LaurentElement::constant(g.rank(), 1);
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    d = d * one_minus_exp_neg(e.weight->sign_normalized());
  }
  PeTuple scaled = t.scaled(d);
  return ClearedTuple{std::move(d), std::move(scaled)};
}

// ---------------------------------------------------------------------------
// Truncated bases

namespace {

// Coordinates (vertex, box point) laid out as vertex * points + point.
struct BoxCoordinates {
  std::vector<ExponentVector> points;
  std::map<ExponentVector, std::size_t> point_index;
  std::size_t vertices = 0;

  BoxCoordinates(const GkmGraph& g, const Box& box) : points(box.points()), vertices(g.vertex_count()) {
    if (box.rank() != g.rank())
      throw DomainError("box of rank " + std::to_string(box.rank()) + " for a lattice of rank " +
                        std::to_string(g.rank()));
    for (std::size_t p = 0; p < points.size(); ++p) point_index.emplace(points[p], p);
  }

  std::size_t size() const { return vertices * points.size(); }
  std::size_t column(std::size_t vertex, std::size_t point) const { return vertex * points.size() + point; }
};

using SparseRow = std::vector<std::pair<std::size_t, int>>;

void add_edge_rows(const GkmGraph& g, const BoxCoordinates& coords, std::set<SparseRow>& rows) {
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    const QuotientPresentation p = smith_presentation(*e.weight);
    std::map<ExponentVector, std::vector<std::size_t>> classes;
    for (std::size_t k = 0; k < coords.points.size(); ++k) classes[quotient_class(coords.points[k], p)].push_back(k);
    // Sum of f_u coefficients minus sum of f_v coefficients over each class.
    for (const auto& [cls, members] : classes) {
      SparseRow row;
      for (std::size_t k : members) {
        row.emplace_back(coords.column(e.u, k), 1);
        row.emplace_back(coords.column(e.v, k), -1);
      }
      std::sort(row.begin(), row.end());
      rows.insert(std::move(row));
    }
  }
}

std::vector<PeTuple> kernel_tuples(const GraphPtr& g, const BoxCoordinates& coords, const std::set<SparseRow>& rows) {
  IntMatrix m(rows.size(), coords.size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    for (const auto& [col, val] : row) m(i, col) += val;
    ++i;
  }
  std::vector<PeTuple> out;
  for (const auto& v : integer_kernel(m)) {
    std::vector<LaurentElement> values;
    values.reserve(coords.vertices);
    for (std::size_t x = 0; x < coords.vertices; ++x) {
      std::vector<std::pair<ExponentVector, Integer>> terms;
      for (std::size_t p = 0; p < coords.points.size(); ++p) {
        const Integer& c = v[coords.column(x, p)];
        if (c != 0) terms.emplace_back(coords.points[p], c);
      }
      values.push_back(LaurentElement::from_terms(g->rank(), terms));
    }
    out.emplace_back(g, std::move(values));
  }
  return out;
}

}  // namespace

std::vector<PeTuple> truncated_basis(const GraphPtr& g, const Box& box) {
  BoxCoordinates coords(*g, box);
  std::set<SparseRow> rows;
  add_edge_rows(*g, coords, rows);
  return kernel_tuples(g, coords, rows);
}

std::vector<PeTuple> invariant_basis(const GraphPtr& g, const CheckedAction& action, const Box& box) {
  if (!(action.graph() == *g)) throw DomainError("action is not registered on this graph");
  BoxCoordinates coords(*g, box);
  std::set<SparseRow> rows;
  add_edge_rows(*g, coords, rows);

  // Fixed points: coefficient of e^{w lambda} at w x equals that of e^lambda at x.
  for (std::size_t k = 0; k < action.generator_count(); ++k) {
    const auto& perm = action.permutation(k);
    const auto& m = action.lattice_map(k);
    for (std::size_t p = 0; p < coords.points.size(); ++p) {
      const ExponentVector image = apply(m, coords.points[p]);
      auto it = coords.point_index.find(image);
      if (it == coords.point_index.end())
        throw DomainError("box is not stable under generator #" + std::to_string(k) + ": " +
                          coords.points[p].to_string() + " maps to " + image.to_string());
      for (std::size_t x = 0; x < coords.vertices; ++x) {
        const std::size_t from = coords.column(x, p);
        const std::size_t to = coords.column(perm[x], it->second);
        if (from == to) continue;
        SparseRow row{{std::min(from, to), 1}, {std::max(from, to), -1}};
        rows.insert(std::move(row));
      }
    }
  }
  return kernel_tuples(g, coords, rows);
}

PeTuple act(const CheckedAction& action, std::size_t k, const PeTuple& t) {
  if (!(action.graph() == t.graph())) throw DomainError("action is not registered on the tuple's graph");
  const auto& perm = action.permutation(k);
  std::vector<LaurentElement> values(t.values().size());
  for (std::size_t x = 0; x < values.size(); ++x) values[perm[x]] = t[x].transformed(action.lattice_map(k));
  return PeTuple(t.graph_ptr(), std::move(values));
}

// ---------------------------------------------------------------------------
// Restriction and products

PeTuple restrict_tuple(const PeTuple& t, std::span<const std::string> keep) {
  auto sub = std::make_shared<const GkmGraph>(induced_subgraph(t.graph(), keep));
  std::vector<LaurentElement> values;
  values.reserve(sub->vertex_count());
  for (const auto& v : sub->vertices()) values.push_back(t.at(v.id));
  return PeTuple(sub, std::move(values));
}

PeTuple tensor_tuple(const PeTuple& s, const PeTuple& t, const GraphPtr& product_graph) {
  const std::size_t r1 = s.graph().rank();
  const std::size_t r2 = t.graph().rank();
  if (product_graph->rank() != r1 + r2) throw DomainError("product graph rank does not match the factors");
  std::map<std::string, LaurentElement> values;
  for (std::size_t i = 0; i < s.graph().vertex_count(); ++i)
    for (std::size_t j = 0; j < t.graph().vertex_count(); ++j)
      values.emplace(product_vertex_id(s.graph().id(i), t.graph().id(j)),
                     s[i].widened(r1, r2, true) * t[j].widened(r1, r2, false));
  return PeTuple::from_map(product_graph, values);
}

}  // namespace gkmkit
