#include <numeric>
#include <set>
#include <tuple>

#include "gkmkit/builders.hpp"

namespace gkmkit {

namespace {

constexpr std::size_t kWeylLimit = 200000;

std::string word_string(const std::vector<int>& word) {
  std::string s = "[";
  for (std::size_t i = 0; i < word.size(); ++i) s += (i ? "," : "") + std::to_string(word[i]);
  return s + "]";
}

// Conjugation action of every group element on E1, as permutations of E1 indices.
std::vector<std::vector<std::size_t>> conjugation_table(const EmbeddingDatum& d, const MatrixGroup& w,
                                                        const std::map<std::string, std::size_t>& e1_index) {
  const std::size_t m = d.e1.size();
  if (d.e1_action.size() != d.weyl_generators.size())
    throw DomainError("e1_action lists " + std::to_string(d.e1_action.size()) + " permutations for " +
                      std::to_string(d.weyl_generators.size()) + " generators");

  std::vector<std::vector<std::size_t>> gens;
  for (std::size_t k = 0; k < d.e1_action.size(); ++k) {
    const auto& action = d.e1_action[k];
    if (action.size() != m)
      throw DomainError("e1_action of generator #" + std::to_string(k + 1) + " must list every idempotent");
    std::vector<std::size_t> perm(m, m);
    std::vector<bool> hit(m, false);
    for (const auto& [from, to] : action) {
      auto a = e1_index.find(from);
      auto b = e1_index.find(to);
      if (a == e1_index.end() || b == e1_index.end())
        throw DomainError("e1_action of generator #" + std::to_string(k + 1) + " names an unknown idempotent");
      if (hit[b->second])
        throw DomainError("e1_action of generator #" + std::to_string(k + 1) + " is not a permutation");
      hit[b->second] = true;
      perm[a->second] = b->second;
    }
    gens.push_back(std::move(perm));
  }

  // w = g_{k1} ... g_{kn} acts by g_{k1}(...(g_{kn}(f))).
  std::vector<std::vector<std::size_t>> table(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    const auto& word = w.word(i);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      for (auto& f : perm) f = gens[*it - 1][f];
    table[i] = std::move(perm);
  }
  // The words are one choice per element; the action must not depend on it.
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const std::size_t j = *w.find(w.generators()[k] * w.element(i));
      for (std::size_t f = 0; f < m; ++f)
        if (table[j][f] != gens[k][table[i][f]])
          throw DomainError("e1_action is not a group action: it violates a relation among the Weyl generators");
    }
  return table;
}

}  // namespace

GkmGraph build_group_embedding(const EmbeddingDatum& d) {
  const std::size_t r = d.lattice_rank;
  const MatrixGroup w = MatrixGroup::generate(d.weyl_generators, r, kWeylLimit);

  std::map<std::string, std::size_t> e1_index;
  for (std::size_t i = 0; i < d.e1.size(); ++i)
    if (!e1_index.emplace(d.e1[i], i).second) throw DomainError("duplicate idempotent '" + d.e1[i] + "' in E1");
  auto e1_at = [&](const std::string& name, const std::string& context) {
    auto it = e1_index.find(name);
    if (it == e1_index.end()) throw DomainError(context + ": unknown idempotent '" + name + "'");
    return it->second;
  };
  const auto conj = conjugation_table(d, w, e1_index);

  // Orbit representative in Lambda1 for every idempotent.
  std::vector<std::optional<std::size_t>> orbit_rep(d.e1.size());
  std::set<std::size_t> lambda;
  for (const auto& name : d.lambda1) {
    const std::size_t e = e1_at(name, "lambda1");
    if (!lambda.insert(e).second) throw DomainError("duplicate idempotent '" + name + "' in lambda1");
    for (const auto& perm : conj) {
      auto& rep = orbit_rep[perm[e]];
      if (rep && *rep != e)
        throw DomainError("lambda1 elements '" + d.e1[*rep] + "' and '" + name + "' are conjugate");
      rep = e;
    }
  }
  for (std::size_t f = 0; f < d.e1.size(); ++f)
    if (!orbit_rep[f]) throw DomainError("idempotent '" + d.e1[f] + "' is not conjugate to any element of lambda1");

  // Fixed points: vertices of the closed-orbit graphs, labeled by E1 x W.
  if (d.closed_orbits.size() != d.lambda1.size())
    throw DomainError("label mismatch: " + std::to_string(d.closed_orbits.size()) + " closed-orbit graphs for " +
                      std::to_string(d.lambda1.size()) + " elements of lambda1");
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::map<std::string, std::size_t> vertex_index;
  std::vector<std::vector<std::optional<std::size_t>>> label(d.e1.size(),
                                                             std::vector<std::optional<std::size_t>>(w.size()));
  std::set<std::size_t> orbit_seen;
  for (const auto& orbit : d.closed_orbits) {
    const std::size_t e = e1_at(orbit.idempotent, "closed orbit");
    if (!lambda.contains(e)) throw DomainError("closed orbit of '" + orbit.idempotent + "', which is not in lambda1");
    if (!orbit_seen.insert(e).second) throw DomainError("two closed-orbit graphs for '" + orbit.idempotent + "'");
    if (orbit.graph.rank() != 2 * r)
      throw DomainError("closed-orbit graph of '" + orbit.idempotent + "' has lattice rank " +
                        std::to_string(orbit.graph.rank()) + ", expected " + std::to_string(2 * r));

    const std::size_t offset = vertices.size();
    for (const auto& v : orbit.graph.vertices()) {
      if (!vertex_index.emplace(v.id, vertices.size()).second)
        throw DomainError("vertex id '" + v.id + "' appears in two closed-orbit graphs");
      vertices.push_back(v);
    }
    for (const Edge& edge : orbit.graph.edges()) edges.push_back(Edge{edge.u + offset, edge.v + offset, edge.weight});

    std::vector<bool> labeled(orbit.graph.vertex_count(), false);
    for (const auto& l : orbit.labels) {
      const std::string where = "label (" + l.idempotent + ", " + word_string(l.word) + ")";
      auto local = orbit.graph.find(l.vertex);
      if (!local) throw DomainError(where + ": unknown vertex '" + l.vertex + "'");
      const std::size_t f = e1_at(l.idempotent, where);
      if (*orbit_rep[f] != e)
        throw DomainError("label mismatch: " + where + " is not in the orbit of '" + orbit.idempotent + "'");
      const std::size_t u = w.evaluate(l.word);
      if (label[f][u]) throw DomainError("label mismatch: " + where + " is assigned twice");
      label[f][u] = offset + *local;
      labeled[*local] = true;
    }
    for (std::size_t v = 0; v < labeled.size(); ++v)
      if (!labeled[v]) throw DomainError("label mismatch: vertex '" + orbit.graph.id(v) + "' has no (f, u) label");
  }
  for (std::size_t f = 0; f < d.e1.size(); ++f)
    for (std::size_t u = 0; u < w.size(); ++u)
      if (!label[f][u])
        throw DomainError("label mismatch: (" + d.e1[f] + ", " + word_string(w.word(u)) + ") has no vertex");

  // Type-3 curves.
  std::set<std::tuple<std::size_t, std::size_t, std::optional<Character>>> seen;
  for (const auto& f : d.e2) {
    const std::string where = "E2 element '" + f.name + "'";
    const std::size_t f1 = e1_at(f.lower_first, where);
    const std::size_t f2 = e1_at(f.lower_second, where);
    ExponentVector chi;
    if (const auto* a = std::get_if<ReflectionBranch>(&f.branch)) {
      if (a->root.rank() != r || a->root.is_zero()) throw DomainError(where + ": root must be a nonzero vector of rank " + std::to_string(r));
      auto s = w.find(a->reflection);
      if (!s) throw DomainError(where + ": reflection is not an element of the Weyl group");
      if (!(a->reflection * a->reflection == SmallMatrix::identity(r)) || apply(a->reflection, a->root) != -a->root)
        throw DomainError(where + ": reflection does not negate its root");
      if (conj[*s][f1] != f2)
        throw DomainError(where + ": lower idempotents are not exchanged by the reflection (f_2 != s f_1 s)");
      chi = a->root;
    } else {
      const auto& b = std::get<CharacterBranch>(f.branch);
      if (b.character.rank() != r || b.character.is_zero())
        throw DomainError(where + ": character must be a nonzero vector of rank " + std::to_string(r));
      chi = b.character;
    }
    chi = Character(chi).sign_normalized().vector();

    for (std::size_t u = 0; u < w.size(); ++u) {
      const std::size_t a = *label[f1][u];
      const std::size_t b = *label[f2][u];
      std::optional<Character> weight;
      if (a != b) weight = Character(ExponentVector::direct_sum(chi, apply(w.element(w.inverse(u)), chi)));
      auto key = std::make_tuple(std::min(a, b), std::max(a, b),
                                 weight ? std::optional<Character>(weight->direction()) : std::nullopt);
      if (!seen.insert(key).second) continue;
      edges.push_back(Edge{a, b, weight});
    }
  }
  return GkmGraph(Lattice{2 * r}, std::move(vertices), std::move(edges));
}

// ---------------------------------------------------------------------------

EmbeddingDatum rook_datum(std::size_t n) {
  if (n < 1) throw DomainError("rook monoid needs n >= 1");
  EmbeddingDatum d;
  d.lattice_rank = n;
  auto idem = [](std::size_t i) { return "e" + std::to_string(i); };

  for (std::size_t k = 1; k < n; ++k) {
    SmallMatrix s = SmallMatrix::identity(n);
    s(k - 1, k - 1) = 0;
    s(k, k) = 0;
    s(k - 1, k) = 1;
    s(k, k - 1) = 1;
    d.weyl_generators.push_back(std::move(s));
    std::map<std::string, std::string> action;
    for (std::size_t i = 1; i <= n; ++i) action.emplace(idem(i), idem(i == k ? k + 1 : i == k + 1 ? k : i));
    d.e1_action.push_back(std::move(action));
  }
  for (std::size_t i = 1; i <= n; ++i) d.e1.push_back(idem(i));
  d.lambda1 = {idem(1)};

  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      SmallMatrix t = SmallMatrix::identity(n);
      t(i - 1, i - 1) = 0;
      t(j - 1, j - 1) = 0;
      t(i - 1, j - 1) = 1;
      t(j - 1, i - 1) = 1;
      ExponentVector root(n);
      root[i - 1] = 1;
      root[j - 1] = -1;
      d.e2.push_back(RankTwoIdempotent{idem(i) + "+" + idem(j), idem(i), idem(j), ReflectionBranch{t, root}});
    }

  // G[E_11]G = P^{n-1} x P^{n-1}; E_ii u is the matrix unit at (i, sigma^{-1}(i))
  // where u e_k = e_{sigma(k)}.
  const MatrixGroup w = MatrixGroup::generate(d.weyl_generators, n, kWeylLimit);
  ClosedOrbit orbit{idem(1), product(projective_space_graph(n), projective_space_graph(n)), {}};
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t u = 0; u < w.size(); ++u) {
      std::size_t col = 0;
      while (w.element(u)(i - 1, col) != 1) ++col;
      orbit.labels.push_back(
          OrbitLabel{product_vertex_id(std::to_string(i), std::to_string(col + 1)), idem(i), w.word(u)});
    }
  d.closed_orbits.push_back(std::move(orbit));
  return d;
}

GkmGraph build_rook_embedding(std::size_t n) { return build_group_embedding(rook_datum(n)); }

}  // namespace gkmkit
