#pragma once

// Exact arithmetic in the group ring Z[M] of a free abelian character lattice
// M = Z^r, and congruences modulo principal ideals (1 - e^{-chi}).

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gkmkit/matrix.hpp"

namespace gkmkit {

// Rank of a character lattice Z^r.
struct Lattice {
  std::size_t rank = 0;
  friend bool operator==(const Lattice&, const Lattice&) = default;
};

class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t rank) : coords_(rank, 0) {}
  explicit ExponentVector(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  ExponentVector(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  std::size_t rank() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }
  std::span<const std::int64_t> coords() const { return coords_; }
  bool is_zero() const;

  // Checked arithmetic: throws DomainError on overflow or rank mismatch.
  ExponentVector operator+(const ExponentVector& o) const;
  ExponentVector operator-(const ExponentVector& o) const;
  ExponentVector operator-() const;
  ExponentVector scaled(std::int64_t k) const;

  // Concatenation (a, b) in M1 + M2.
  static ExponentVector direct_sum(const ExponentVector& a, const ExponentVector& b);

  std::string to_string() const;

  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<std::int64_t> coords_;
};

// gcd of the absolute values of the entries; 0 for the zero vector.
std::int64_t content(const ExponentVector& v);

// m * v with overflow checking; m must be rank x rank.
ExponentVector apply(const SmallMatrix& m, const ExponentVector& v);

// A character of the torus, stored exactly as given. Zero is representable;
// operations that need a nonzero character reject it.
class Character {
 public:
  Character() = default;
  explicit Character(ExponentVector v) : vector_(std::move(v)) {}
  Character(std::initializer_list<std::int64_t> coords) : vector_(coords) {}

  const ExponentVector& vector() const { return vector_; }
  std::size_t rank() const { return vector_.rank(); }
  bool is_nonzero() const { return !vector_.is_zero(); }

  std::int64_t divisibility() const { return content(vector_); }
  bool is_primitive() const { return divisibility() == 1; }
  Character primitive() const;
  // First nonzero coordinate made positive.
  Character sign_normalized() const;
  // Primitive and sign-normalized: the codimension-one subtorus ker(chi) up to sign.
  Character direction() const { return primitive().sign_normalized(); }
  Character operator-() const { return Character(-vector_); }

  std::string to_string() const { return vector_.to_string(); }

  friend auto operator<=>(const Character&, const Character&) = default;
  friend bool operator==(const Character&, const Character&) = default;

 private:
  ExponentVector vector_;
};

// Element of Z[M]: finitely many exponent -> nonzero coefficient terms, stored in
// lexicographic exponent order.
class LaurentElement {
 public:
  using Terms = std::map<ExponentVector, Integer>;

  LaurentElement() = default;
  explicit LaurentElement(std::size_t rank) : rank_(rank) {}

  static LaurentElement monomial(ExponentVector exponent, Integer coefficient = 1);
  static LaurentElement constant(std::size_t rank, Integer value);
  // Merges repeated exponents and drops zero coefficients.
  static LaurentElement from_terms(std::size_t rank, const std::vector<std::pair<ExponentVector, Integer>>& terms);

  std::size_t rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const ExponentVector& e) const;
  // Sum of coefficients (evaluation at the identity of the torus).
  Integer augmentation() const;

  // Substitutes e^lambda -> e^{m lambda}.
  LaurentElement transformed(const SmallMatrix& m) const;
  // Embeds into Z[M1 + M2] as f (x) 1 (first) or 1 (x) f (second).
  LaurentElement widened(std::size_t left_rank, std::size_t right_rank, bool first) const;

  LaurentElement& operator+=(const LaurentElement& o);
  LaurentElement& operator-=(const LaurentElement& o);
  LaurentElement operator+(const LaurentElement& o) const;
  LaurentElement operator-(const LaurentElement& o) const;
  LaurentElement operator-() const;
  LaurentElement operator*(const LaurentElement& o) const;

  friend bool operator==(const LaurentElement& a, const LaurentElement& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

  // Human-readable form such as "1 - 2*e^(1,0) + e^(0,-1)".
  std::string to_string() const;

 private:
  void require_same_rank(const LaurentElement& o) const;

  std::size_t rank_ = 0;
  Terms terms_;
};

LaurentElement add(const LaurentElement& a, const LaurentElement& b);
LaurentElement mul(const LaurentElement& a, const LaurentElement& b);

// 1 - e^{-chi}
LaurentElement one_minus_exp_neg(const Character& chi);

// Coordinates in which Z chi becomes d Z e_1: transform * chi = (d, 0, ..., 0),
// d = gcd(chi) > 0. The quotient M / Z chi is Z/d + Z^{r-1}.
struct QuotientPresentation {
  Character source;
  IntMatrix transform;
  Integer modulus;
};

QuotientPresentation smith_presentation(const Character& chi);

// Element of the group ring of M / Z chi. Exponents are given in the transformed
// coordinates, with the first coordinate reduced into [0, d).
class QuotientElement {
 public:
  QuotientElement(std::size_t rank, std::int64_t modulus) : rank_(rank), modulus_(modulus) {}

  std::size_t rank() const { return rank_; }
  std::int64_t modulus() const { return modulus_; }
  const std::map<ExponentVector, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Adds c * [e], e already in transformed coordinates (first coordinate is reduced here).
  void accumulate(ExponentVector e, const Integer& c);

  QuotientElement operator+(const QuotientElement& o) const;
  QuotientElement operator*(const QuotientElement& o) const;
  friend bool operator==(const QuotientElement& a, const QuotientElement& b) {
    return a.rank_ == b.rank_ && a.modulus_ == b.modulus_ && a.terms_ == b.terms_;
  }

 private:
  void require_compatible(const QuotientElement& o) const;

  std::size_t rank_;
  std::int64_t modulus_;
  std::map<ExponentVector, Integer> terms_;
};

// Class of an exponent in M / Z chi, in the presentation's coordinates.
ExponentVector quotient_class(const ExponentVector& e, const QuotientPresentation& p);

QuotientElement quotient_reduce(const LaurentElement& f, const QuotientPresentation& p);
QuotientElement quotient_reduce(const LaurentElement& f, const Character& chi);

// f == g mod (1 - e^{-chi}).
bool congruent_mod(const LaurentElement& f, const LaurentElement& g, const Character& chi);
bool congruent_mod(const LaurentElement& f, const LaurentElement& g, const QuotientPresentation& p);

}  // namespace gkmkit
