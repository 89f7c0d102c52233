#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "gkmkit/exp_ring.hpp"
#include "gkmkit/sampling.hpp"
#include "oracles.hpp"

using namespace gkmkit;

namespace {

LaurentElement t(std::int64_t k) { return LaurentElement::monomial(ExponentVector{k}); }
LaurentElement one(std::size_t rank) { return LaurentElement::constant(rank, 1); }
LaurentElement mono(ExponentVector e) { return LaurentElement::monomial(std::move(e)); }

Integer det2(const IntMatrix& u) { return u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0); }

}  // namespace

TEST(ExponentVector, ArithmeticAndFormatting) {
  ExponentVector a{1, -2};
  ExponentVector b{3, 4};
  EXPECT_EQ(a + b, (ExponentVector{4, 2}));
  EXPECT_EQ(a - b, (ExponentVector{-2, -6}));
  EXPECT_EQ(-a, (ExponentVector{-1, 2}));
  EXPECT_EQ(a.scaled(3), (ExponentVector{3, -6}));
  EXPECT_EQ(ExponentVector::direct_sum(a, b), (ExponentVector{1, -2, 3, 4}));
  EXPECT_EQ(a.to_string(), "(1,-2)");
  EXPECT_EQ(content(ExponentVector{6, -4}), 2);
}

TEST(ExponentVector, OverflowIsReported) {
  const auto big = std::numeric_limits<std::int64_t>::max();
  EXPECT_THROW(ExponentVector{big} + ExponentVector{1}, DomainError);
  EXPECT_THROW(ExponentVector{big}.scaled(2), DomainError);
  EXPECT_THROW(-ExponentVector{std::numeric_limits<std::int64_t>::min()}, DomainError);
  EXPECT_THROW((ExponentVector{1} + ExponentVector{1, 2}), DomainError);
}

TEST(Character, Normalization) {
  Character c{-4, 6};
  EXPECT_EQ(c.divisibility(), 2);
  EXPECT_EQ(c.primitive(), (Character{-2, 3}));
  EXPECT_EQ(c.sign_normalized(), (Character{4, -6}));
  EXPECT_EQ(c.direction(), (Character{2, -3}));
  EXPECT_EQ((Character{0, -3}).direction(), (Character{0, 1}));
  EXPECT_THROW((Character{0, 0}).primitive(), DomainError);
}

TEST(Laurent, Addition) {
  EXPECT_EQ((one(1) - t(1)) + t(1), one(1));
  const auto f = mono({1, 0}) + mono({0, 1});
  EXPECT_EQ(f + LaurentElement(2), f);
  EXPECT_EQ(add(f, mono({1, 0})), LaurentElement::from_terms(2, {{{1, 0}, 2}, {{0, 1}, 1}}));
  EXPECT_TRUE((f - f).is_zero());
}

TEST(Laurent, Multiplication) {
  EXPECT_EQ((one(1) - t(1)) * (one(1) + t(1)), one(1) - t(2));
  EXPECT_EQ(mul(mono({2, 1}), mono({-2, -1})), one(2));
  for (const Character& chi : {Character{1}, Character{2, -3}, Character{0, 0, 5}}) {
    EXPECT_EQ(one_minus_exp_neg(chi) * -mono(chi.vector()), one(chi.rank()) - mono(chi.vector()));
  }
}

TEST(Laurent, RankMismatchThrows) { EXPECT_THROW(one(1) + one(2), DomainError); }

TEST(Laurent, TransformedAndWidened) {
  const auto f = LaurentElement::from_terms(2, {{{1, 2}, 3}, {{0, -1}, 1}});
  const SmallMatrix swap{{0, 1}, {1, 0}};
  EXPECT_EQ(f.transformed(swap), LaurentElement::from_terms(2, {{{2, 1}, 3}, {{-1, 0}, 1}}));
  EXPECT_EQ(t(2).widened(1, 2, true), mono({2, 0, 0}));
  EXPECT_EQ(t(2).widened(2, 1, false), mono({0, 0, 2}));
  EXPECT_EQ(f.augmentation(), 4);
  EXPECT_EQ(f.coefficient({1, 2}), 3);
  EXPECT_EQ(f.coefficient({5, 5}), 0);
}

TEST(Laurent, ZeroCoefficientsAreDropped) {
  const auto f = LaurentElement::from_terms(1, {{{1}, 2}, {{1}, -2}, {{0}, 0}});
  EXPECT_TRUE(f.is_zero());
  EXPECT_EQ(f.to_string(), "0");
}

TEST(Laurent, RingAxiomsOnRandomElements) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    const auto a = random_laurent(rng, 2);
    const auto b = random_laurent(rng, 2);
    const auto c = random_laurent(rng, 2);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * one(2), a);
    EXPECT_EQ((a * b).augmentation(), a.augmentation() * b.augmentation());
  }
}

TEST(SmithPresentation, Rank1) {
  const auto p = smith_presentation(Character{1});
  EXPECT_EQ(p.modulus, 1);
  EXPECT_EQ(p.transform, IntMatrix{{1}});
}

TEST(SmithPresentation, NonPrimitiveRank2) {
  const auto p = smith_presentation(Character{2, 4});
  EXPECT_EQ(p.modulus, 2);
  const IntMatrix& u = p.transform;
  EXPECT_TRUE(det2(u) == 1 || det2(u) == -1);
  EXPECT_EQ(u(0, 0) * 2 + u(0, 1) * 4, 2);
  EXPECT_EQ(u(1, 0) * 2 + u(1, 1) * 4, 0);
}

TEST(SmithPresentation, GcdReadOff) {
  EXPECT_EQ(smith_presentation(Character{0, 3}).modulus, 3);
  EXPECT_EQ(smith_presentation(Character{-6, 9, 15}).modulus, 3);
  EXPECT_THROW(smith_presentation(Character{0, 0}), DomainError);
}

TEST(SmithPresentation, RandomCharactersSatisfyDefinition) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> coord(-30, 30);
  for (int k = 0; k < 300; ++k) {
    ExponentVector v(3);
    for (std::size_t i = 0; i < 3; ++i) v[i] = coord(rng);
    if (v.is_zero()) continue;
    const auto p = smith_presentation(Character(v));
    EXPECT_EQ(p.modulus, content(v));
    EXPECT_TRUE(determinant(p.transform) == 1 || determinant(p.transform) == -1);
    for (std::size_t i = 0; i < 3; ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < 3; ++j) s += p.transform(i, j) * v[j];
      EXPECT_EQ(s, i == 0 ? p.modulus : Integer(0));
    }
  }
}

TEST(QuotientReduce, Examples) {
  EXPECT_TRUE(quotient_reduce(mono({2, 4}) - one(2), Character{2, 4}).is_zero());
  EXPECT_FALSE(quotient_reduce(mono({1, 2}) - one(2), Character{2, 4}).is_zero());
  EXPECT_FALSE(quotient_reduce(t(1) - one(1), Character{2}).is_zero());
  EXPECT_TRUE(quotient_reduce(t(2) - one(1), Character{2}).is_zero());
}

TEST(QuotientReduce, IsARingHomomorphism) {
  std::mt19937_64 rng(3);
  for (const Character& chi : {Character{1, 0}, Character{2, 4}, Character{-3, 3}, Character{0, 5}}) {
    const auto p = smith_presentation(chi);
    for (int k = 0; k < 50; ++k) {
      const auto a = random_laurent(rng, 2);
      const auto b = random_laurent(rng, 2);
      EXPECT_EQ(quotient_reduce(a + b, p), quotient_reduce(a, p) + quotient_reduce(b, p));
      EXPECT_EQ(quotient_reduce(a * b, p), quotient_reduce(a, p) * quotient_reduce(b, p));
    }
  }
}

TEST(Congruence, Examples) {
  for (const Character& chi : {Character{1}, Character{-2}, Character{7}}) EXPECT_TRUE(congruent_mod(t(chi.vector()[0]), one(1), chi));
  EXPECT_TRUE(congruent_mod(mono({3, -1}), one(2), Character{3, -1}));
  EXPECT_FALSE(congruent_mod(t(1), LaurentElement(1), Character{1}));
  EXPECT_TRUE(congruent_mod(t(2), one(1), Character{2}));
  EXPECT_FALSE(congruent_mod(t(1), one(1), Character{2}));
}

TEST(Congruence, AgreesWithRank1Division) {
  std::mt19937_64 rng(17);
  for (std::int64_t d : {1, 2, 3, -2}) {
    for (int k = 0; k < 300; ++k) {
      const auto f = random_laurent(rng, 1);
      const auto g = random_laurent(rng, 1);
      EXPECT_EQ(congruent_mod(f, g, Character{d}), oracle::divisible_by_t_power_minus_one(f - g, d))
          << f.to_string() << " vs " << g.to_string() << " mod " << d;
    }
  }
}

TEST(Congruence, AgreesWithClassSumsInRank2) {
  std::mt19937_64 rng(23);
  LaurentSampler narrow{-2, 2, 4, 2};
  for (const Character& chi : {Character{1, 1}, Character{2, 0}, Character{2, -2}, Character{1, -2}}) {
    int hits = 0;
    for (int k = 0; k < 400; ++k) {
      const auto f = random_laurent(rng, 2, narrow);
      auto g = f + one_minus_exp_neg(chi) * random_laurent(rng, 2, narrow);
      if (k % 2) g = g + random_laurent(rng, 2, LaurentSampler{-2, 2, 1, 1});
      const bool expected = oracle::congruent(f, g, chi.vector());
      hits += expected;
      EXPECT_EQ(congruent_mod(f, g, chi), expected);
    }
    EXPECT_GT(hits, 100);
  }
}

TEST(Congruence, SignInvariance) {
  std::mt19937_64 rng(29);
  for (int k = 0; k < 300; ++k) {
    const auto f = random_laurent(rng, 2);
    const auto g = random_laurent(rng, 2);
    const Character chi{static_cast<std::int64_t>(k % 7) - 3, static_cast<std::int64_t>(k % 4) + 1};
    EXPECT_EQ(congruent_mod(f, g, chi), congruent_mod(f, g, -chi));
  }
}

TEST(Congruence, MultiplesWeakenTheCondition) {
  // 1 - e^{-chi} divides 1 - e^{-k chi}.
  std::mt19937_64 rng(31);
  LaurentSampler narrow{-3, 3, 3, 2};
  int strong = 0;
  for (int k = 0; k < 300; ++k) {
    const Character chi{1, -1};
    const auto f = random_laurent(rng, 2, narrow);
    const auto g = k % 2 ? f + one_minus_exp_neg(Character{2, -2}) * random_laurent(rng, 2, narrow)
                         : random_laurent(rng, 2, narrow);
    if (congruent_mod(f, g, Character{2, -2})) {
      ++strong;
      EXPECT_TRUE(congruent_mod(f, g, chi));
    }
  }
  EXPECT_GT(strong, 100);
}

TEST(IntegerKernel, Examples) {
  auto k1 = integer_kernel(IntMatrix{{1, -1}});
  ASSERT_EQ(k1.size(), 1u);
  EXPECT_EQ(abs(k1[0][0]), 1);
  EXPECT_EQ(k1[0][0], k1[0][1]);

  EXPECT_TRUE(integer_kernel(IntMatrix::identity(3)).empty());

  auto k2 = integer_kernel(IntMatrix{{2, 4}});
  ASSERT_EQ(k2.size(), 1u);
  EXPECT_EQ(2 * k2[0][0] + 4 * k2[0][1], 0);
  EXPECT_EQ(gcd(k2[0][0], k2[0][1]), 1);
  EXPECT_EQ(abs(k2[0][0]), 2);
}

TEST(IntegerKernel, RandomMatricesGiveSaturatedBases) {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + trial % 3;
    const std::size_t cols = rows + 1 + trial % 3;
    IntMatrix m(rows, cols);
    std::vector<oracle::Row> as_rows(rows, oracle::Row(cols));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        m(i, j) = entry(rng);
        as_rows[i][j] = m(i, j).convert_to<long long>();
      }
    const auto basis = integer_kernel(m);
    EXPECT_EQ(basis.size(), cols - oracle::rational_rank(as_rows));
    std::vector<oracle::Row> b;
    for (const auto& v : basis) {
      for (std::size_t i = 0; i < rows; ++i) {
        Integer s = 0;
        for (std::size_t j = 0; j < cols; ++j) s += m(i, j) * v[j];
        EXPECT_EQ(s, 0);
      }
      oracle::Row r;
      for (const auto& x : v) r.push_back(oracle::cpp_rational(x));
      b.push_back(std::move(r));
    }
    if (!b.empty()) EXPECT_EQ(oracle::maximal_minor_gcd(b), 1);
  }
}

TEST(Matrix, DeterminantAndInverse) {
  EXPECT_EQ(determinant(IntMatrix{{2, 1}, {7, 4}}), 1);
  EXPECT_EQ(determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}), 0);
  const SmallMatrix u{{2, 1}, {7, 4}};
  ASSERT_TRUE(unimodular_inverse(u).has_value());
  EXPECT_EQ(*unimodular_inverse(u) * u, SmallMatrix::identity(2));
  EXPECT_FALSE(is_unimodular(SmallMatrix{{2, 0}, {0, 1}}));
}
