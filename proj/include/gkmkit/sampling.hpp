#pragma once

// Random Laurent polynomials and tuples for property checks.

#include <random>

#include "gkmkit/pe_ring.hpp"

namespace gkmkit {

struct LaurentSampler {
  std::int64_t exponent_lo = -4;
  std::int64_t exponent_hi = 4;
  std::size_t max_terms = 4;
  std::int64_t max_coefficient = 3;
};

LaurentElement random_laurent(std::mt19937_64& rng, std::size_t rank, const LaurentSampler& s = {});
PeTuple random_tuple(std::mt19937_64& rng, const GraphPtr& g, const LaurentSampler& s = {});

// delta_x times the product of (1 - e^{-chi}) over the non-loop edges at x.
PeTuple vertex_generator(const GraphPtr& g, std::size_t x);

// A constant plus random R(T)-multiples of the vertex generators.
PeTuple random_member(std::mt19937_64& rng, const GraphPtr& g, const LaurentSampler& s = {});

}  // namespace gkmkit
