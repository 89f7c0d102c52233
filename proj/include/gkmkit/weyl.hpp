#pragma once

// Finite Weyl groups realized as integer matrices on a lattice, enumerated from
// their simple reflections.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gkmkit/exp_ring.hpp"

namespace gkmkit {

// Finite group generated by unimodular matrices. Elements are listed
// breadth-first, so element 0 is the identity and each element's word is its
// shortlex-minimal expression in the generators (1-based generator indices).
class MatrixGroup {
 public:
  // Throws DomainError if the closure exceeds `limit` elements.
  static MatrixGroup generate(std::vector<SmallMatrix> generators, std::size_t dimension, std::size_t limit);

  std::size_t size() const { return elements_.size(); }
  std::size_t dimension() const { return dimension_; }
  const std::vector<SmallMatrix>& generators() const { return generators_; }
  const SmallMatrix& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<int>& word(std::size_t i) const { return words_.at(i); }
  std::optional<std::size_t> find(const SmallMatrix& m) const;
  std::size_t product(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;
  // Element named by a word of 1-based generator indices.
  std::size_t evaluate(const std::vector<int>& word) const;

 private:
  std::size_t dimension_ = 0;
  std::vector<SmallMatrix> generators_;
  std::vector<SmallMatrix> elements_;
  std::vector<std::vector<int>> words_;
  std::map<SmallMatrix, std::size_t> index_;
};

// Root system of a finite-type Cartan matrix, on the root lattice with the
// simple roots as standard basis. Simple reflection i acts by
// s_i(alpha_j) = alpha_j - cartan(i, j) alpha_i.
struct RootDatum {
  SmallMatrix cartan;
  std::vector<SmallMatrix> simple_reflections;
  // Positive roots in simple-root coordinates, ordered by height then lexicographically.
  std::vector<ExponentVector> positive_roots;
  // Reflection s_alpha for each positive root, same order.
  std::vector<SmallMatrix> reflections;

  std::size_t rank() const { return cartan.rows(); }

  // Throws DomainError for malformed or infinite-type Cartan matrices.
  static RootDatum from_cartan(const SmallMatrix& cartan);
  // "A2", "B3", "C4", "D4", "E6", "F4", "G2", ...
  static RootDatum of_type(std::string_view name);
};

SmallMatrix cartan_matrix(std::string_view type_name);

// Throws DomainError if |W| exceeds `limit`.
MatrixGroup weyl_group(const RootDatum& rd, std::size_t limit = 200000);

// Number of positive roots sent to negative roots by w.
std::size_t coxeter_length(const RootDatum& rd, const SmallMatrix& w);

// Product s_{i1} ... s_{ik} of 1-based simple reflection indices.
SmallMatrix word_matrix(const RootDatum& rd, const std::vector<int>& word);

// A reduced word for the longest element.
std::vector<int> longest_word(const RootDatum& rd);

// "e" for the identity, otherwise e.g. "s1s2s1".
std::string word_label(const std::vector<int>& word);

}  // namespace gkmkit
