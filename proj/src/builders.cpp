#include "gkmkit/builders.hpp"

#include <numeric>
#include <set>

namespace gkmkit {

namespace {

std::string join(const std::vector<std::size_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

std::int64_t pairing(const ExponentVector& a, const ExponentVector& b) {
  Integer acc = 0;
  for (std::size_t i = 0; i < a.rank(); ++i) acc += Integer(a[i]) * b[i];
  if (acc > 0) return 1;
  if (acc < 0) return -1;
  return 0;
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t root(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) { parent[root(a)] = root(b); }
};

}  // namespace

GkmGraph build_toric(const Fan& fan) {
  const std::size_t n = fan.rank;
  if (n == 0) throw DomainError("fan of rank 0");

  std::set<ExponentVector> seen_rays;
  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    const auto& r = fan.rays[i];
    if (r.rank() != n) throw DomainError("ray #" + std::to_string(i) + " has the wrong length");
    if (r.is_zero()) throw DomainError("ray #" + std::to_string(i) + " is zero");
    if (content(r) != 1) throw DomainError("ray #" + std::to_string(i) + " " + r.to_string() + " is not primitive");
    if (!seen_rays.insert(r).second) throw DomainError("ray #" + std::to_string(i) + " is repeated");
  }
  if (fan.cones.empty()) throw DomainError("fan has no maximal cones");

  // wall (sorted ray indices) -> (cone, ray of the cone off the wall)
  std::map<std::vector<std::size_t>, std::vector<std::pair<std::size_t, std::size_t>>> walls;
  std::set<std::vector<std::size_t>> seen_cones;
  std::vector<Vertex> vertices;
  for (std::size_t c = 0; c < fan.cones.size(); ++c) {
    std::vector<std::size_t> cone = fan.cones[c];
    std::sort(cone.begin(), cone.end());
    const std::string where = "cone #" + std::to_string(c) + " {" + join(cone) + "}";
    if (cone.size() != n)
      throw DomainError(where + ": non-simplicial or not full-dimensional (" + std::to_string(cone.size()) +
                        " rays in rank " + std::to_string(n) + ")");
    if (std::adjacent_find(cone.begin(), cone.end()) != cone.end()) throw DomainError(where + ": repeated ray");
    for (auto i : cone)
      if (i >= fan.rays.size()) throw DomainError(where + ": ray index out of range");
    if (!seen_cones.insert(cone).second) throw DomainError(where + ": repeated cone");

    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = fan.rays[cone[i]][j];
    const Integer det = determinant(m);
    if (det == 0) throw DomainError(where + ": non-simplicial cone (linearly dependent rays)");
    if (abs(det) != 1) throw DomainError(where + ": non-smooth cone (rays do not form a lattice basis)");

    for (std::size_t drop = 0; drop < n; ++drop) {
      std::vector<std::size_t> wall;
      for (std::size_t i = 0; i < n; ++i)
        if (i != drop) wall.push_back(cone[i]);
      walls[wall].emplace_back(c, cone[drop]);
    }
    vertices.push_back(Vertex{"c" + std::to_string(c), {{"rays", join(cone)}}});
  }

  DisjointSets components(fan.cones.size());
  std::vector<Edge> edges;
  for (const auto& [wall, sides] : walls) {
    if (sides.size() != 2)
      throw DomainError("wall {" + join(wall) + "} shared by " + std::to_string(sides.size()) +
                        " maximal cones (expected 2)");
    IntMatrix w(wall.size(), n);
    for (std::size_t i = 0; i < wall.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) w(i, j) = fan.rays[wall[i]][j];
    auto kernel = integer_kernel(w);
    if (kernel.size() != 1) throw DomainError("wall {" + join(wall) + "} does not span a hyperplane");
    ExponentVector m(n);
    for (std::size_t j = 0; j < n; ++j) m[j] = static_cast<std::int64_t>(kernel[0][j]);
    const Character weight = Character(m).sign_normalized();

    const auto [c1, r1] = sides[0];
    const auto [c2, r2] = sides[1];
    if (pairing(weight.vector(), fan.rays[r1]) == pairing(weight.vector(), fan.rays[r2]))
      throw DomainError("cones #" + std::to_string(c1) + " and #" + std::to_string(c2) +
                        " lie on the same side of wall {" + join(wall) + "}");
    components.join(c1, c2);
    edges.push_back(Edge{c1, c2, weight});
  }
  for (std::size_t c = 1; c < fan.cones.size(); ++c)
    if (components.root(c) != components.root(0))
      throw DomainError("cone #" + std::to_string(c) + " is not connected to cone #0 through walls");

  return GkmGraph(Lattice{n}, std::move(vertices), std::move(edges));
}

// ---------------------------------------------------------------------------

GkmGraph build_schubert(const RootDatum& rd, const std::vector<int>& word) {
  const SmallMatrix w = word_matrix(rd, word);
  const std::size_t len = coxeter_length(rd, w);
  if (len != word.size())
    throw DomainError("word of length " + std::to_string(word.size()) + " is not reduced (element has length " +
                      std::to_string(len) + ")");

  // Subword property: [e, w] is the set of products of subwords.
  std::set<SmallMatrix> interval{SmallMatrix::identity(rd.rank())};
  for (int k : word) {
    std::vector<SmallMatrix> extended;
    for (const auto& x : interval) extended.push_back(x * rd.simple_reflections[k - 1]);
    interval.insert(extended.begin(), extended.end());
  }

  const MatrixGroup group = weyl_group(rd);
  std::vector<Vertex> vertices;
  std::map<SmallMatrix, std::size_t> index;
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (!interval.contains(group.element(i))) continue;
    index.emplace(group.element(i), vertices.size());
    vertices.push_back(Vertex{word_label(group.word(i)), {{"length", std::to_string(group.word(i).size())}}});
  }

  std::vector<Edge> edges;
  for (std::size_t r = 0; r < rd.positive_roots.size(); ++r) {
    const Character alpha(rd.positive_roots[r]);
    for (const auto& [x, i] : index) {
      auto it = index.find(rd.reflections[r] * x);
      if (it == index.end() || it->second <= i) continue;
      edges.push_back(Edge{i, it->second, alpha});
    }
  }
  // Deterministic order: by root, then by endpoints.
  std::stable_sort(edges.begin(), edges.end(), [&](const Edge& a, const Edge& b) {
    if (a.weight != b.weight) {
      auto pa = std::find(rd.positive_roots.begin(), rd.positive_roots.end(), a.weight->vector());
      auto pb = std::find(rd.positive_roots.begin(), rd.positive_roots.end(), b.weight->vector());
      return pa < pb;
    }
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  return GkmGraph(Lattice{rd.rank()}, std::move(vertices), std::move(edges));
}

GraphAction weyl_left_action(const RootDatum& rd) {
  const MatrixGroup group = weyl_group(rd);
  GraphAction action;
  for (std::size_t i = 0; i < rd.rank(); ++i) {
    ActionGenerator gen;
    gen.lattice_map = rd.simple_reflections[i];
    for (std::size_t x = 0; x < group.size(); ++x) {
      auto y = group.find(rd.simple_reflections[i] * group.element(x));
      gen.vertex_map.emplace(word_label(group.word(x)), word_label(group.word(*y)));
    }
    action.generators.push_back(std::move(gen));
  }
  return action;
}

GkmGraph projective_space_graph(std::size_t n) {
  std::vector<Vertex> vertices;
  for (std::size_t a = 1; a <= n; ++a) vertices.push_back(Vertex{std::to_string(a), {}});
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      ExponentVector w(n);
      w[a] = 1;
      w[b] = -1;
      edges.push_back(Edge{a, b, Character(std::move(w))});
    }
  return GkmGraph(Lattice{n}, std::move(vertices), std::move(edges));
}

}  // namespace gkmkit
