#include "gkmkit/sampling.hpp"

namespace gkmkit {

LaurentElement random_laurent(std::mt19937_64& rng, std::size_t rank, const LaurentSampler& s) {
  std::uniform_int_distribution<std::size_t> terms(0, s.max_terms);
  std::uniform_int_distribution<std::int64_t> exponent(s.exponent_lo, s.exponent_hi);
  std::uniform_int_distribution<std::int64_t> coefficient(-s.max_coefficient, s.max_coefficient);
  std::vector<std::pair<ExponentVector, Integer>> out;
  const std::size_t n = terms(rng);
  for (std::size_t k = 0; k < n; ++k) {
    ExponentVector e(rank);
    for (std::size_t i = 0; i < rank; ++i) e[i] = exponent(rng);
    out.emplace_back(std::move(e), coefficient(rng));
  }
  return LaurentElement::from_terms(rank, out);
}

PeTuple random_tuple(std::mt19937_64& rng, const GraphPtr& g, const LaurentSampler& s) {
  std::vector<LaurentElement> values;
  for (std::size_t x = 0; x < g->vertex_count(); ++x) values.push_back(random_laurent(rng, g->rank(), s));
  return PeTuple(g, std::move(values));
}

PeTuple vertex_generator(const GraphPtr& g, std::size_t x) {
  LaurentElement f = LaurentElement::constant(g->rank(), 1);
  for (const Edge& e : g->edges())
    if (!e.is_loop() && (e.u == x || e.v == x)) f = f * one_minus_exp_neg(*e.weight);
  std::vector<LaurentElement> values(g->vertex_count(), LaurentElement(g->rank()));
  values[x] = std::move(f);
  return PeTuple(g, std::move(values));
}

PeTuple random_member(std::mt19937_64& rng, const GraphPtr& g, const LaurentSampler& s) {
  LaurentSampler small = s;
  small.max_terms = std::min<std::size_t>(s.max_terms, 2);
  PeTuple t = PeTuple::constant(g, random_laurent(rng, g->rank(), s));
  std::bernoulli_distribution use(0.5);
  for (std::size_t x = 0; x < g->vertex_count(); ++x)
    if (use(rng)) t = t + vertex_generator(g, x).scaled(random_laurent(rng, g->rank(), small));
  return t;
}

}  // namespace gkmkit
