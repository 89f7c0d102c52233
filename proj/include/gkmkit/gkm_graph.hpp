#pragma once

// GKM graphs: torus-fixed points joined by invariant curves, each curve labeled
// by the character (defined up to sign) through which the torus acts on it.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "gkmkit/exp_ring.hpp"

namespace gkmkit {

struct Vertex {
  std::string id;
  std::map<std::string, std::string> meta;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// Edge as supplied by a caller or a file: endpoints by id. A loop (u == v) has
// no weight.
struct EdgeSpec {
  std::string u;
  std::string v;
  std::optional<Character> weight;
};

// Edge inside a graph: endpoints by vertex index.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  std::optional<Character> weight;

  bool is_loop() const { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

class GkmGraph {
 public:
  GkmGraph() = default;
  // Throws DomainError on duplicate ids, dangling endpoints, zero or missing
  // weights on non-loop edges, weighted loops, or weights of the wrong rank.
  GkmGraph(Lattice lattice, std::vector<Vertex> vertices, const std::vector<EdgeSpec>& edges);
  GkmGraph(Lattice lattice, std::vector<Vertex> vertices, std::vector<Edge> edges);

  const Lattice& lattice() const { return lattice_; }
  std::size_t rank() const { return lattice_.rank; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& id(std::size_t index) const { return vertices_.at(index).id; }
  std::optional<std::size_t> find(const std::string& id) const;
  // Throws DomainError for an unknown id.
  std::size_t index_of(const std::string& id) const;

  // "u -- v [weight]" for diagnostics.
  std::string describe_edge(std::size_t edge_index) const;

  friend bool operator==(const GkmGraph& a, const GkmGraph& b) {
    return a.lattice_ == b.lattice_ && a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  void index_vertices();
  void check_edges() const;

  Lattice lattice_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct ValidationReport {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::size_t loop_count = 0;
  // Non-loop edges, i.e. the number of congruence conditions.
  std::size_t relation_count = 0;
  // Multiset of primitive, sign-normalized edge directions.
  std::map<Character, std::size_t> directions;
};

ValidationReport validate(const GkmGraph& g);

// Non-loop edges grouped by primitive direction up to sign; each class is the
// graph on all vertices carrying only that class's edges.
std::map<Character, GkmGraph> cs_partition(const GkmGraph& g);

// Vertex id of (u, v) in a product graph.
std::string product_vertex_id(const std::string& u, const std::string& v);

// Graph of X x Y for the product torus: weights (chi, 0) and (0, chi').
GkmGraph product(const GkmGraph& g1, const GkmGraph& g2);

// Keeps the vertices in `keep` (in the graph's order) and the edges between them.
GkmGraph induced_subgraph(const GkmGraph& g, std::span<const std::string> keep);

// A copy of g with every weight replaced by its negative.
GkmGraph with_negated_weights(const GkmGraph& g);

struct ActionGenerator {
  std::map<std::string, std::string> vertex_map;
  SmallMatrix lattice_map;
};

struct GraphAction {
  std::vector<ActionGenerator> generators;
};

// A GraphAction verified against one specific graph. Only register_action
// creates these.
class CheckedAction {
 public:
  const GkmGraph& graph() const { return graph_; }
  std::size_t generator_count() const { return permutations_.size(); }
  // permutation(k)[x] is the image of vertex index x under generator k.
  const std::vector<std::size_t>& permutation(std::size_t k) const { return permutations_.at(k); }
  const SmallMatrix& lattice_map(std::size_t k) const { return matrices_.at(k); }

 private:
  friend CheckedAction register_action(const GkmGraph& g, const GraphAction& a);
  CheckedAction() = default;

  GkmGraph graph_;
  std::vector<std::vector<std::size_t>> permutations_;
  std::vector<SmallMatrix> matrices_;
};

// Verifies that every generator is a graph automorphism carrying each edge
// weight to plus or minus the weight of the image edge.
CheckedAction register_action(const GkmGraph& g, const GraphAction& a);

}  // namespace gkmkit
