#include "gkmkit/exp_ring.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace gkmkit {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw DomainError("exponent overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw DomainError("exponent overflow");
  return r;
}

std::int64_t to_int64(const Integer& x) {
  static const Integer lo = std::numeric_limits<std::int64_t>::min();
  static const Integer hi = std::numeric_limits<std::int64_t>::max();
  if (x < lo || x > hi) throw DomainError("exponent overflow");
  return static_cast<std::int64_t>(x);
}

void require_rank(std::size_t a, std::size_t b) {
  if (a != b)
    throw DomainError("lattice rank mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

// ---------------------------------------------------------------------------
// ExponentVector / Character

bool ExponentVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t x) { return x == 0; });
}

ExponentVector ExponentVector::operator+(const ExponentVector& o) const {
  require_rank(rank(), o.rank());
  ExponentVector out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = checked_add(coords_[i], o.coords_[i]);
  return out;
}

ExponentVector ExponentVector::operator-(const ExponentVector& o) const { return *this + (-o); }

ExponentVector ExponentVector::operator-() const { return scaled(-1); }

ExponentVector ExponentVector::scaled(std::int64_t k) const {
  ExponentVector out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = checked_mul(coords_[i], k);
  return out;
}

ExponentVector ExponentVector::direct_sum(const ExponentVector& a, const ExponentVector& b) {
  std::vector<std::int64_t> c(a.coords().begin(), a.coords().end());
  c.insert(c.end(), b.coords().begin(), b.coords().end());
  return ExponentVector(std::move(c));
}

std::string ExponentVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
  os << ')';
  return os.str();
}

std::int64_t content(const ExponentVector& v) {
  std::int64_t g = 0;
  for (auto x : v.coords()) {
    if (x == std::numeric_limits<std::int64_t>::min()) throw DomainError("exponent overflow");
    g = std::gcd(g, x < 0 ? -x : x);
  }
  return g;
}

ExponentVector apply(const SmallMatrix& m, const ExponentVector& v) {
  if (m.rows() != v.rank() || m.cols() != v.rank())
    throw DomainError("matrix of size " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                      " applied to a vector of rank " + std::to_string(v.rank()));
  ExponentVector out(v.rank());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc = checked_add(acc, checked_mul(m(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

Character Character::primitive() const {
  const std::int64_t g = divisibility();
  if (g == 0) throw DomainError("zero character has no primitive direction");
  ExponentVector out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[i] = vector_[i] / g;
  return Character(std::move(out));
}

Character Character::sign_normalized() const {
  for (auto x : vector_.coords()) {
    if (x > 0) return *this;
    if (x < 0) return -*this;
  }
  return *this;
}

// ---------------------------------------------------------------------------
// LaurentElement

LaurentElement LaurentElement::monomial(ExponentVector exponent, Integer coefficient) {
  LaurentElement out(exponent.rank());
  if (coefficient != 0) out.terms_.emplace(std::move(exponent), std::move(coefficient));
  return out;
}

LaurentElement LaurentElement::constant(std::size_t rank, Integer value) {
  return monomial(ExponentVector(rank), std::move(value));
}

LaurentElement LaurentElement::from_terms(std::size_t rank,
                                          const std::vector<std::pair<ExponentVector, Integer>>& terms) {
  LaurentElement out(rank);
  for (const auto& [e, c] : terms) {
    require_rank(rank, e.rank());
    out.terms_[e] += c;
  }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Integer LaurentElement::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer LaurentElement::augmentation() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

LaurentElement LaurentElement::transformed(const SmallMatrix& m) const {
  LaurentElement out(rank_);
  for (const auto& [e, c] : terms_) out.terms_[apply(m, e)] += c;
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
  return out;
}

LaurentElement LaurentElement::widened(std::size_t left_rank, std::size_t right_rank, bool first) const {
  require_rank(rank_, first ? left_rank : right_rank);
  LaurentElement out(left_rank + right_rank);
  for (const auto& [e, c] : terms_) {
    auto wide = first ? ExponentVector::direct_sum(e, ExponentVector(right_rank))
                      : ExponentVector::direct_sum(ExponentVector(left_rank), e);
    out.terms_.emplace(std::move(wide), c);
  }
  return out;
}

void LaurentElement::require_same_rank(const LaurentElement& o) const { require_rank(rank_, o.rank_); }

LaurentElement& LaurentElement::operator+=(const LaurentElement& o) {
  require_same_rank(o);
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentElement& LaurentElement::operator-=(const LaurentElement& o) { return *this += -o; }

LaurentElement LaurentElement::operator+(const LaurentElement& o) const {
  LaurentElement out = *this;
  out += o;
  return out;
}

LaurentElement LaurentElement::operator-(const LaurentElement& o) const {
  LaurentElement out = *this;
  out -= o;
  return out;
}

LaurentElement LaurentElement::operator-() const {
  LaurentElement out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentElement LaurentElement::operator*(const LaurentElement& o) const {
  require_same_rank(o);
  // Collect all pairwise products, then sort and merge.
  std::vector<std::pair<ExponentVector, Integer>> products;
  products.reserve(terms_.size() * o.terms_.size());
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) products.emplace_back(ea + eb, ca * cb);
  std::sort(products.begin(), products.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  LaurentElement out(rank_);
  auto hint = out.terms_.end();
  for (std::size_t i = 0; i < products.size();) {
    Integer sum = 0;
    std::size_t j = i;
    for (; j < products.size() && products[j].first == products[i].first; ++j) sum += products[j].second;
    if (sum != 0) hint = out.terms_.emplace_hint(hint, std::move(products[i].first), std::move(sum));
    i = j;
  }
  return out;
}

std::string LaurentElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e.is_zero()) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << "e^" << e.to_string();
  }
  return os.str();
}

LaurentElement add(const LaurentElement& a, const LaurentElement& b) { return a + b; }
LaurentElement mul(const LaurentElement& a, const LaurentElement& b) { return a * b; }

LaurentElement one_minus_exp_neg(const Character& chi) {
  return LaurentElement::constant(chi.rank(), 1) - LaurentElement::monomial(-chi.vector());
}

// ---------------------------------------------------------------------------
// Quotients by Z chi

QuotientPresentation smith_presentation(const Character& chi) {
  if (!chi.is_nonzero()) throw DomainError("quotient by the zero character");
  const std::size_t r = chi.rank();
  std::vector<Integer> v(chi.vector().coords().begin(), chi.vector().coords().end());
  IntMatrix u = IntMatrix::identity(r);

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(v[i], v[j]);
    auto a = u.row(i);
    auto b = u.row(j);
    std::swap_ranges(a.begin(), a.end(), b.begin());
  };

  // Euclid on the entries, smallest nonzero absolute value as pivot.
  while (true) {
    std::size_t best = r;
    for (std::size_t i = 0; i < r; ++i)
      if (v[i] != 0 && (best == r || abs(v[i]) < abs(v[best]))) best = i;
    swap_rows(0, best);
    bool done = true;
    for (std::size_t i = 1; i < r; ++i) {
      if (v[i] == 0) continue;
      Integer q = v[i] / v[0];
      v[i] -= q * v[0];
      for (std::size_t j = 0; j < r; ++j) u(i, j) -= q * u(0, j);
      if (v[i] != 0) done = false;
    }
    if (done) break;
  }
  if (v[0] < 0) {
    v[0] = -v[0];
    for (std::size_t j = 0; j < r; ++j) u(0, j) = -u(0, j);
  }
  return QuotientPresentation{chi, std::move(u), v[0]};
}

void QuotientElement::accumulate(ExponentVector e, const Integer& c) {
  if (c == 0) return;
  if (e.rank() != rank_) throw DomainError("quotient element rank mismatch");
  if (rank_ > 0) {
    e[0] %= modulus_;
    if (e[0] < 0) e[0] += modulus_;
  }
  auto [it, inserted] = terms_.try_emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void QuotientElement::require_compatible(const QuotientElement& o) const {
  if (rank_ != o.rank_ || modulus_ != o.modulus_)
    throw DomainError("quotient elements over different quotient lattices");
}

QuotientElement QuotientElement::operator+(const QuotientElement& o) const {
  require_compatible(o);
  QuotientElement out = *this;
  for (const auto& [e, c] : o.terms_) out.accumulate(e, c);
  return out;
}

QuotientElement QuotientElement::operator*(const QuotientElement& o) const {
  require_compatible(o);
  QuotientElement out(rank_, modulus_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) out.accumulate(ea + eb, ca * cb);
  return out;
}

ExponentVector quotient_class(const ExponentVector& e, const QuotientPresentation& p) {
  const std::size_t r = e.rank();
  if (r != p.source.rank()) throw DomainError("lattice rank mismatch in quotient reduction");
  ExponentVector out(r);
  for (std::size_t i = 0; i < r; ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < r; ++j)
      if (p.transform(i, j) != 0 && e[j] != 0) acc += p.transform(i, j) * e[j];
    if (i == 0) {
      acc %= p.modulus;
      if (acc < 0) acc += p.modulus;
    }
    out[i] = to_int64(acc);
  }
  return out;
}

QuotientElement quotient_reduce(const LaurentElement& f, const QuotientPresentation& p) {
  require_rank(f.rank(), p.source.rank());
  QuotientElement out(f.rank(), to_int64(p.modulus));
  for (const auto& [e, c] : f.terms()) out.accumulate(quotient_class(e, p), c);
  return out;
}

QuotientElement quotient_reduce(const LaurentElement& f, const Character& chi) {
  return quotient_reduce(f, smith_presentation(chi));
}

bool congruent_mod(const LaurentElement& f, const LaurentElement& g, const QuotientPresentation& p) {
  return quotient_reduce(f - g, p).is_zero();
}

bool congruent_mod(const LaurentElement& f, const LaurentElement& g, const Character& chi) {
  return congruent_mod(f, g, smith_presentation(chi));
}

}  // namespace gkmkit
