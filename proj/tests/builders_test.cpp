#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "gkmkit/builders.hpp"
#include "graphs.hpp"

using namespace gkmkit;
using namespace testgraphs;

namespace {

using EdgeSet = std::multiset<std::tuple<std::string, std::string, Character>>;

EdgeSet edge_set(const GkmGraph& g, const std::vector<std::string>& rename = {}) {
  EdgeSet out;
  for (const auto& e : g.edges()) {
    std::string a = rename.empty() ? g.id(e.u) : rename[e.u];
    std::string b = rename.empty() ? g.id(e.v) : rename[e.v];
    if (b < a) std::swap(a, b);
    out.emplace(a, b, e.weight ? e.weight->sign_normalized() : Character{});
  }
  return out;
}

// Brute force over vertex bijections; fine for a handful of vertices.
bool isomorphic(const GkmGraph& g, const GkmGraph& h) {
  if (g.vertex_count() != h.vertex_count() || g.rank() != h.rank()) return false;
  std::vector<std::size_t> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  const EdgeSet target = edge_set(h);
  do {
    std::vector<std::string> rename;
    for (auto p : perm) rename.push_back(h.id(p));
    if (edge_set(g, rename) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// S_n as permutations of {0..n-1}; s_i swaps i-1 and i.
using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

Perm from_word(const std::vector<int>& word, int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int k : word) {
    Perm s(n);
    std::iota(s.begin(), s.end(), 0);
    std::swap(s[k - 1], s[k]);
    p = compose(p, s);
  }
  return p;
}

std::vector<int> parse_label(const std::string& label) {
  std::vector<int> w;
  if (label == "e") return w;
  for (std::size_t i = 0; i < label.size(); ++i)
    if (label[i] == 's') w.push_back(label[i + 1] - '0');
  return w;
}

// Tableau criterion: x <= w iff for every k the sorted prefixes compare entrywise.
bool bruhat_leq(const Perm& x, const Perm& w) {
  for (std::size_t k = 1; k <= x.size(); ++k) {
    std::vector<int> a(x.begin(), x.begin() + k), b(w.begin(), w.begin() + k);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < k; ++i)
      if (a[i] > b[i]) return false;
  }
  return true;
}

}  // namespace

TEST(Toric, P1) {
  const auto g = build_toric(Fan{1, {{1}, {-1}}, {{0}, {1}}});
  EXPECT_EQ(g.vertex_count(), 2u);
  ASSERT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(*g.edges()[0].weight, Character{1});
}

TEST(Toric, P2) {
  const auto g = build_toric(p2_fan());
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  std::set<Character> w;
  for (const auto& e : g.edges()) w.insert(e.weight->sign_normalized());
  EXPECT_EQ(w, (std::set<Character>{{1, 0}, {0, 1}, {1, -1}}));
}

TEST(Toric, P1xP1MatchesProduct) { EXPECT_TRUE(isomorphic(build_toric(p1xp1_fan()), product(p1(), p1()))); }

TEST(Toric, WeightsAnnihilateWalls) {
  // Hirzebruch surface F_2.
  const Fan f{2, {{1, 0}, {0, 1}, {-1, 2}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
  const auto g = build_toric(f);
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 4u);
  for (const auto& e : g.edges()) {
    std::vector<std::size_t> a = f.cones[e.u], b = f.cones[e.v];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<std::size_t> wall;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(wall));
    ASSERT_EQ(wall.size(), 1u);
    const auto& ray = f.rays[wall[0]];
    EXPECT_EQ(e.weight->vector()[0] * ray[0] + e.weight->vector()[1] * ray[1], 0);
    EXPECT_TRUE(e.weight->is_primitive());
  }
}

TEST(Toric, Rejections) {
  // Non-smooth cone.
  EXPECT_THROW(build_toric(Fan{2, {{1, 0}, {1, 2}, {-1, 0}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}}), DomainError);
  // Non-simplicial cone.
  EXPECT_THROW(build_toric(Fan{2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1, 2}}}), DomainError);
  // Missing cone: a wall with one side.
  EXPECT_THROW(build_toric(Fan{2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}}}), DomainError);
  // Non-primitive ray.
  EXPECT_THROW(build_toric(Fan{1, {{2}, {-1}}, {{0}, {1}}}), DomainError);
  // Two cones on the same side of a wall.
  EXPECT_THROW(build_toric(Fan{1, {{1}, {1}}, {{0}, {1}}}), DomainError);
  EXPECT_THROW(build_toric(Fan{2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 5}, {2, 0}}}), DomainError);
}

TEST(Weyl, GroupAndRootCounts) {
  const std::vector<std::tuple<std::string, std::size_t, std::size_t>> cases{
      {"A1", 2, 1}, {"A2", 6, 3}, {"A3", 24, 6}, {"B2", 8, 4}, {"B3", 48, 9},
      {"C3", 48, 9}, {"D4", 192, 12}, {"G2", 12, 6}, {"F4", 1152, 24}};
  for (const auto& [type, order, roots] : cases) {
    const auto rd = RootDatum::of_type(type);
    EXPECT_EQ(weyl_group(rd).size(), order) << type;
    EXPECT_EQ(rd.positive_roots.size(), roots) << type;
    EXPECT_EQ(longest_word(rd).size(), roots) << type;
  }
  EXPECT_EQ(RootDatum::of_type("E6").positive_roots.size(), 36u);
  EXPECT_EQ(RootDatum::of_type("E8").positive_roots.size(), 120u);
  EXPECT_THROW(RootDatum::of_type("Q3"), DomainError);
  EXPECT_THROW(RootDatum::from_cartan(SmallMatrix{{2, -2}, {-2, 2}}), DomainError);
}

TEST(Weyl, ReflectionsNegateTheirRoots) {
  const auto rd = RootDatum::of_type("B3");
  for (std::size_t r = 0; r < rd.positive_roots.size(); ++r) {
    EXPECT_EQ(apply(rd.reflections[r], rd.positive_roots[r]), -rd.positive_roots[r]);
    EXPECT_EQ(rd.reflections[r] * rd.reflections[r], SmallMatrix::identity(3));
  }
}

TEST(Schubert, SmallCases) {
  const auto a1 = build_schubert(RootDatum::of_type("A1"), {1});
  EXPECT_EQ(a1.vertex_count(), 2u);
  ASSERT_EQ(a1.edge_count(), 1u);
  EXPECT_EQ(*a1.edges()[0].weight, Character{1});
  EXPECT_EQ(a1.id(0), "e");
  EXPECT_EQ(a1.id(1), "s1");

  const auto a2 = RootDatum::of_type("A2");
  EXPECT_EQ(build_schubert(a2, {1}).vertex_count(), 2u);
  EXPECT_EQ(build_schubert(a2, {1}).edge_count(), 1u);
  EXPECT_EQ(build_schubert(a2, {1, 2, 1}).vertex_count(), 6u);
  EXPECT_EQ(build_schubert(a2, {1, 2, 1}).edge_count(), 9u);
  EXPECT_EQ(build_schubert(a2, {}).vertex_count(), 1u);
  EXPECT_THROW(build_schubert(a2, {1, 1}), DomainError);
  EXPECT_THROW(build_schubert(a2, {3}), DomainError);
}

TEST(Schubert, FullFlagVarieties) {
  for (const std::string type : {"B2", "G2", "A3"}) {
    const auto rd = RootDatum::of_type(type);
    const auto g = build_schubert(rd, longest_word(rd));
    EXPECT_EQ(g.vertex_count(), weyl_group(rd).size());
    EXPECT_EQ(g.edge_count(), g.vertex_count() * rd.positive_roots.size() / 2);
    EXPECT_NO_THROW(register_action(g, weyl_left_action(rd)));
  }
}

TEST(Schubert, AgreesWithTableauCriterionInA3) {
  const auto rd = RootDatum::of_type("A3");
  const auto w = weyl_group(rd);
  std::vector<Perm> all;
  for (std::size_t i = 0; i < w.size(); ++i) all.push_back(from_word(w.word(i), 4));
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Perm top = from_word(w.word(i), 4);
    const auto g = build_schubert(rd, w.word(i));

    std::set<Perm> expected_vertices;
    for (const auto& x : all)
      if (bruhat_leq(x, top)) expected_vertices.insert(x);
    std::set<Perm> got_vertices;
    for (const auto& v : g.vertices()) got_vertices.insert(from_word(parse_label(v.id), 4));
    EXPECT_EQ(got_vertices, expected_vertices) << word_label(w.word(i));

    // Edges {x, t x} for transpositions t = (a b), weight e_a - e_b in simple-root coordinates.
    std::set<std::pair<std::pair<Perm, Perm>, ExponentVector>> expected_edges;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) {
        Perm t{0, 1, 2, 3};
        std::swap(t[a], t[b]);
        ExponentVector root(3);
        for (int k = a; k < b; ++k) root[k] = 1;
        for (const auto& x : expected_vertices) {
          const Perm y = compose(t, x);
          if (expected_vertices.contains(y) && x < y) expected_edges.insert({{x, y}, root});
        }
      }
    std::set<std::pair<std::pair<Perm, Perm>, ExponentVector>> got_edges;
    for (const auto& e : g.edges()) {
      Perm x = from_word(parse_label(g.id(e.u)), 4), y = from_word(parse_label(g.id(e.v)), 4);
      if (y < x) std::swap(x, y);
      got_edges.insert({{x, y}, e.weight->vector()});
    }
    EXPECT_EQ(got_edges, expected_edges) << word_label(w.word(i));
  }
}

TEST(Rook, SmallCases) {
  const auto r1 = build_rook_embedding(1);
  EXPECT_EQ(r1.vertex_count(), 1u);
  EXPECT_EQ(r1.edge_count(), 0u);

  const auto r2 = build_rook_embedding(2);
  EXPECT_EQ(r2.vertex_count(), 4u);
  EXPECT_EQ(r2.edge_count(), 6u);
  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& e : r2.edges()) pairs.insert(std::minmax(r2.id(e.u), r2.id(e.v)));
  EXPECT_TRUE(pairs.contains({"1,1", "2,2"}));
  EXPECT_TRUE(pairs.contains({"1,2", "2,1"}));

  EXPECT_EQ(build_group_embedding(rook_datum(2)), r2);
  EXPECT_THROW(build_rook_embedding(0), DomainError);
}

TEST(Rook, MatchesDirectConstruction) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto g = build_rook_embedding(n);
    // Matrix units E_ia scale by the character (e_i, e_a); every pair of cells spans a curve.
    EdgeSet expected;
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t a = 1; a <= n; ++a) cells.emplace_back(i, a);
    for (std::size_t p = 0; p < cells.size(); ++p)
      for (std::size_t q = p + 1; q < cells.size(); ++q) {
        ExponentVector w(2 * n);
        w[cells[p].first - 1] += 1;
        w[cells[q].first - 1] -= 1;
        w[n + cells[p].second - 1] += 1;
        w[n + cells[q].second - 1] -= 1;
        std::string a = std::to_string(cells[p].first) + "," + std::to_string(cells[p].second);
        std::string b = std::to_string(cells[q].first) + "," + std::to_string(cells[q].second);
        if (b < a) std::swap(a, b);
        expected.emplace(a, b, Character(w).sign_normalized());
      }
    EXPECT_EQ(edge_set(g), expected) << "n = " << n;
    EXPECT_EQ(g.edge_count(), n * n * (n * n - 1) / 2);
  }
}

namespace {

// Two closed orbits (single points) over a trivial Weyl group.
EmbeddingDatum two_point_datum() {
  EmbeddingDatum d;
  d.lattice_rank = 1;
  d.e1 = {"f", "g"};
  d.lambda1 = {"f", "g"};
  for (const std::string name : {"f", "g"}) {
    GkmGraph pt(Lattice{2}, {{"p" + name, {}}}, std::vector<EdgeSpec>{});
    d.closed_orbits.push_back(ClosedOrbit{name, pt, {{"p" + name, name, {}}}});
  }
  return d;
}

}  // namespace

TEST(Embedding, EmptyE2IsDisjointUnion) {
  const auto g = build_group_embedding(two_point_datum());
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(Embedding, CharacterBranch) {
  auto d = two_point_datum();
  d.e2.push_back(RankTwoIdempotent{"h", "f", "g", CharacterBranch{{3}}});
  const auto g = build_group_embedding(d);
  ASSERT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(*g.edges()[0].weight, (Character{3, 3}));
  d.e2.back().branch = CharacterBranch{{0}};
  EXPECT_THROW(build_group_embedding(d), DomainError);
}

TEST(Embedding, LabelMismatch) {
  auto d = two_point_datum();
  d.closed_orbits[1].labels.clear();
  try {
    build_group_embedding(d);
    FAIL() << "expected a label mismatch";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("label mismatch"), std::string::npos) << e.what();
  }
}

TEST(Embedding, ReflectionBranchMustExchangeIdempotents) {
  auto d = rook_datum(3);
  auto& a = std::get<ReflectionBranch>(d.e2[0].branch);
  a.reflection = std::get<ReflectionBranch>(d.e2[1].branch).reflection;
  EXPECT_THROW(build_group_embedding(d), DomainError);
  d = rook_datum(3);
  std::get<ReflectionBranch>(d.e2[0].branch).root = ExponentVector{1, 1, 0};
  EXPECT_THROW(build_group_embedding(d), DomainError);
}

TEST(Embedding, InconsistentConjugationIsRejected) {
  auto d = rook_datum(3);
  d.e1_action[0] = {{"e1", "e1"}, {"e2", "e3"}, {"e3", "e2"}};
  EXPECT_THROW(build_group_embedding(d), DomainError);
}
