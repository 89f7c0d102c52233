#pragma once

// GKM graphs of complete toric varieties, Schubert varieties and projective
// group embeddings.

#include <string>
#include <variant>
#include <vector>

#include "gkmkit/gkm_graph.hpp"
#include "gkmkit/weyl.hpp"

namespace gkmkit {

// ---------------------------------------------------------------------------
// Toric varieties

struct Fan {
  std::size_t rank = 0;
  std::vector<ExponentVector> rays;
  std::vector<std::vector<std::size_t>> cones;
};

// Vertices are the maximal cones (ids "c0", "c1", ...), one edge per wall with
// the primitive character annihilating the wall. The fan must be smooth with
// full-dimensional cones, every wall shared by exactly two cones lying on
// opposite sides of it, and the cones connected through walls. These are
// necessary conditions for completeness, not a proof of it.
GkmGraph build_toric(const Fan& fan);

// ---------------------------------------------------------------------------
// Schubert varieties

// Bruhat graph of the interval [e, w] for w given by a reduced word of 1-based
// simple reflection indices. Vertex ids are shortlex reduced words ("e",
// "s1", "s1s2", ...). The word is rejected if it is not reduced.
GkmGraph build_schubert(const RootDatum& rd, const std::vector<int>& word);

// Left multiplication by the simple reflections on the full flag variety graph
// build_schubert(rd, longest_word(rd)).
GraphAction weyl_left_action(const RootDatum& rd);

// P^{n-1}: coordinate points "1".."n" over Z^n, edges a -- b of weight e_a - e_b.
GkmGraph projective_space_graph(std::size_t n);

// ---------------------------------------------------------------------------
// Group embeddings

// Two-fixed-point curve whose idempotents are exchanged by a reflection.
struct ReflectionBranch {
  SmallMatrix reflection;
  ExponentVector root;
};

// Curve joining idempotents fixed by every reflection.
struct CharacterBranch {
  ExponentVector character;
};

struct RankTwoIdempotent {
  std::string name;
  std::string lower_first;
  std::string lower_second;
  std::variant<ReflectionBranch, CharacterBranch> branch;
};

// Vertex `vertex` of a closed-orbit graph represents the fixed point f u.
struct OrbitLabel {
  std::string vertex;
  std::string idempotent;
  std::vector<int> word;
};

struct ClosedOrbit {
  std::string idempotent;
  GkmGraph graph;
  std::vector<OrbitLabel> labels;
};

// Combinatorial data of a projective group embedding, with torus T x T acting
// on the character lattice M + M (M of rank lattice_rank). The Weyl group is
// given by generating matrices on M; `e1_action[k]` is the conjugation action
// of generator k on the rank-one idempotents.
struct EmbeddingDatum {
  std::size_t lattice_rank = 0;
  std::vector<SmallMatrix> weyl_generators;
  std::vector<std::string> e1;
  std::vector<std::map<std::string, std::string>> e1_action;
  std::vector<std::string> lambda1;
  std::vector<RankTwoIdempotent> e2;
  std::vector<ClosedOrbit> closed_orbits;
};

// Vertices: the fixed points, taken from the closed-orbit graphs. Edges: all
// closed-orbit edges, then for each f in E2 and u in W an edge joining f_1 u
// and f_2 u with weight (alpha_f, u^{-1} alpha_f) or (lambda_f, u^{-1} lambda_f).
// Repeated curves (same endpoints, proportional weights) are kept once.
GkmGraph build_group_embedding(const EmbeddingDatum& d);

// Datum of the rook monoid M_n, i.e. the embedding P^{n^2 - 1} of PGL_n.
// Fixed points are the matrix units E_ij, with vertex id "i,j".
EmbeddingDatum rook_datum(std::size_t n);
GkmGraph build_rook_embedding(std::size_t n);

}  // namespace gkmkit
