#include "gkmkit/gkm_graph.hpp"

#include <set>
#include <tuple>

namespace gkmkit {

GkmGraph::GkmGraph(Lattice lattice, std::vector<Vertex> vertices, const std::vector<EdgeSpec>& edges)
    : lattice_(lattice), vertices_(std::move(vertices)) {
  index_vertices();
  edges_.reserve(edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto& e = edges[k];
    auto u = find(e.u);
    auto v = find(e.v);
    if (!u || !v) {
      throw DomainError("edge #" + std::to_string(k) + " (" + e.u + " -- " + e.v + "): dangling endpoint '" +
                        (u ? e.v : e.u) + "'");
    }
    edges_.push_back(Edge{*u, *v, e.weight});
  }
  check_edges();
}

GkmGraph::GkmGraph(Lattice lattice, std::vector<Vertex> vertices, std::vector<Edge> edges)
    : lattice_(lattice), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  index_vertices();
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    if (edges_[k].u >= vertices_.size() || edges_[k].v >= vertices_.size())
      throw DomainError("edge #" + std::to_string(k) + ": dangling endpoint index");
  }
  check_edges();
}

void GkmGraph::index_vertices() {
  index_.clear();
  index_.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].id.empty()) throw DomainError("vertex #" + std::to_string(i) + " has an empty id");
    if (!index_.emplace(vertices_[i].id, i).second)
      throw DomainError("duplicate vertex id '" + vertices_[i].id + "'");
  }
}

void GkmGraph::check_edges() const {
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    if (e.is_loop()) {
      if (e.weight) throw DomainError("edge #" + std::to_string(k) + " (" + describe_edge(k) + "): loops carry no weight");
      continue;
    }
    if (!e.weight) throw DomainError("edge #" + std::to_string(k) + " (" + describe_edge(k) + "): missing weight");
    if (e.weight->rank() != rank())
      throw DomainError("edge #" + std::to_string(k) + " (" + describe_edge(k) + "): weight of rank " +
                        std::to_string(e.weight->rank()) + " in a lattice of rank " + std::to_string(rank()));
    if (!e.weight->is_nonzero())
      throw DomainError("edge #" + std::to_string(k) + " (" + describe_edge(k) + "): zero weight on a non-loop edge");
  }
}

std::optional<std::size_t> GkmGraph::find(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t GkmGraph::index_of(const std::string& id) const {
  auto i = find(id);
  if (!i) throw DomainError("unknown vertex id '" + id + "'");
  return *i;
}

std::string GkmGraph::describe_edge(std::size_t edge_index) const {
  const Edge& e = edges_.at(edge_index);
  std::string s = id(e.u) + " -- " + id(e.v);
  if (e.weight) s += " [" + e.weight->to_string() + "]";
  return s;
}

ValidationReport validate(const GkmGraph& g) {
  // Construction already enforced the structural invariants; re-run them so a
  // report is never produced for a graph assembled through other means.
  GkmGraph checked(g.lattice(), g.vertices(), g.edges());
  ValidationReport report;
  report.vertex_count = checked.vertex_count();
  report.edge_count = checked.edge_count();
  for (const Edge& e : checked.edges()) {
    if (e.is_loop()) {
      ++report.loop_count;
      continue;
    }
    ++report.relation_count;
    ++report.directions[e.weight->direction()];
  }
  return report;
}

std::map<Character, GkmGraph> cs_partition(const GkmGraph& g) {
  std::map<Character, std::vector<Edge>> classes;
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    classes[e.weight->direction()].push_back(e);
  }
  std::map<Character, GkmGraph> out;
  for (auto& [dir, edges] : classes) out.emplace(dir, GkmGraph(g.lattice(), g.vertices(), std::move(edges)));
  return out;
}

std::string product_vertex_id(const std::string& u, const std::string& v) { return u + "," + v; }

GkmGraph product(const GkmGraph& g1, const GkmGraph& g2) {
  const std::size_t r1 = g1.rank();
  const std::size_t r2 = g2.rank();
  const std::size_t n2 = g2.vertex_count();

  std::vector<Vertex> vertices;
  vertices.reserve(g1.vertex_count() * n2);
  for (const auto& a : g1.vertices())
    for (const auto& b : g2.vertices()) vertices.push_back(Vertex{product_vertex_id(a.id, b.id), {}});

  auto at = [n2](std::size_t i, std::size_t j) { return i * n2 + j; };
  std::vector<Edge> edges;
  edges.reserve(g1.edge_count() * n2 + g1.vertex_count() * g2.edge_count());
  for (const Edge& e : g1.edges())
    for (std::size_t j = 0; j < n2; ++j) {
      std::optional<Character> w;
      if (e.weight) w = Character(ExponentVector::direct_sum(e.weight->vector(), ExponentVector(r2)));
      edges.push_back(Edge{at(e.u, j), at(e.v, j), w});
    }
  for (std::size_t i = 0; i < g1.vertex_count(); ++i)
    for (const Edge& e : g2.edges()) {
      std::optional<Character> w;
      if (e.weight) w = Character(ExponentVector::direct_sum(ExponentVector(r1), e.weight->vector()));
      edges.push_back(Edge{at(i, e.u), at(i, e.v), w});
    }
  return GkmGraph(Lattice{r1 + r2}, std::move(vertices), std::move(edges));
}

GkmGraph induced_subgraph(const GkmGraph& g, std::span<const std::string> keep) {
  std::vector<bool> kept(g.vertex_count(), false);
  for (const auto& id : keep) kept[g.index_of(id)] = true;

  std::vector<std::size_t> new_index(g.vertex_count(), 0);
  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    if (!kept[i]) continue;
    new_index[i] = vertices.size();
    vertices.push_back(g.vertices()[i]);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (kept[e.u] && kept[e.v]) edges.push_back(Edge{new_index[e.u], new_index[e.v], e.weight});
  return GkmGraph(g.lattice(), std::move(vertices), std::move(edges));
}

GkmGraph with_negated_weights(const GkmGraph& g) {
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges)
    if (e.weight) e.weight = -*e.weight;
  return GkmGraph(g.lattice(), g.vertices(), std::move(edges));
}

namespace {

// Unordered endpoints plus the weight up to sign.
using EdgeKey = std::tuple<std::size_t, std::size_t, std::optional<Character>>;

EdgeKey edge_key(std::size_t u, std::size_t v, const std::optional<Character>& w) {
  std::optional<Character> normalized;
  if (w) normalized = w->sign_normalized();
  return {std::min(u, v), std::max(u, v), normalized};
}

}  // namespace

CheckedAction register_action(const GkmGraph& g, const GraphAction& a) {
  CheckedAction out;
  out.graph_ = g;
  const std::size_t n = g.vertex_count();

  std::multiset<EdgeKey> edge_keys;
  std::multiset<std::pair<std::size_t, std::size_t>> endpoint_pairs;
  for (const Edge& e : g.edges()) {
    edge_keys.insert(edge_key(e.u, e.v, e.weight));
    endpoint_pairs.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  }

  for (std::size_t k = 0; k < a.generators.size(); ++k) {
    const auto& gen = a.generators[k];
    const std::string where = "generator #" + std::to_string(k) + ": ";

    if (gen.lattice_map.rows() != g.rank() || gen.lattice_map.cols() != g.rank())
      throw DomainError(where + "lattice map is not " + std::to_string(g.rank()) + "x" + std::to_string(g.rank()));
    if (!is_unimodular(gen.lattice_map)) throw DomainError(where + "lattice map is not unimodular");

    std::vector<std::size_t> perm(n, n);
    std::vector<bool> hit(n, false);
    if (gen.vertex_map.size() != n) throw DomainError(where + "vertex map must list every vertex exactly once");
    for (const auto& [from, to] : gen.vertex_map) {
      const std::size_t i = g.index_of(from);
      const std::size_t j = g.index_of(to);
      if (hit[j]) throw DomainError(where + "vertex map is not a bijection (two vertices sent to '" + to + "')");
      hit[j] = true;
      perm[i] = j;
    }

    std::multiset<EdgeKey> images;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const Edge& edge = g.edges()[e];
      const std::size_t pu = perm[edge.u];
      const std::size_t pv = perm[edge.v];
      if (!endpoint_pairs.contains({std::min(pu, pv), std::max(pu, pv)}))
        throw DomainError(where + "not an automorphism: edge " + g.describe_edge(e) + " maps to the non-edge " +
                          g.id(pu) + " -- " + g.id(pv));
      std::optional<Character> w;
      if (edge.weight) w = Character(apply(gen.lattice_map, edge.weight->vector()));
      EdgeKey key = edge_key(pu, pv, w);
      if (!edge_keys.contains(key))
        throw DomainError(where + "weight image mismatch: edge " + g.describe_edge(e) + " maps to " + g.id(pu) +
                          " -- " + g.id(pv) + " with weight " + (w ? w->to_string() : "none") +
                          ", which is not an edge weight up to sign");
      images.insert(key);
    }
    if (images != edge_keys) throw DomainError(where + "not an automorphism: edge multiplicities are not preserved");

    out.permutations_.push_back(std::move(perm));
    out.matrices_.push_back(gen.lattice_map);
  }
  return out;
}

}  // namespace gkmkit
