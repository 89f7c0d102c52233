#include "gkmkit/weyl.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace gkmkit {

MatrixGroup MatrixGroup::generate(std::vector<SmallMatrix> generators, std::size_t dimension, std::size_t limit) {
  MatrixGroup g;
  g.dimension_ = dimension;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const auto& m = generators[k];
    if (m.rows() != dimension || m.cols() != dimension)
      throw DomainError("generator #" + std::to_string(k + 1) + " is not " + std::to_string(dimension) + "x" +
                        std::to_string(dimension));
    if (!is_unimodular(m)) throw DomainError("generator #" + std::to_string(k + 1) + " is not unimodular");
  }
  g.generators_ = std::move(generators);

  const SmallMatrix id = SmallMatrix::identity(dimension);
  g.elements_.push_back(id);
  g.words_.push_back({});
  g.index_.emplace(id, 0);
  for (std::size_t i = 0; i < g.elements_.size(); ++i) {
    for (std::size_t k = 0; k < g.generators_.size(); ++k) {
      SmallMatrix next = g.elements_[i] * g.generators_[k];
      if (g.index_.contains(next)) continue;
      if (g.elements_.size() >= limit)
        throw DomainError("group generated by the given matrices has more than " + std::to_string(limit) +
                          " elements");
      std::vector<int> w = g.words_[i];
      w.push_back(static_cast<int>(k + 1));
      g.index_.emplace(next, g.elements_.size());
      g.elements_.push_back(std::move(next));
      g.words_.push_back(std::move(w));
    }
  }
  return g;
}

std::optional<std::size_t> MatrixGroup::find(const SmallMatrix& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t MatrixGroup::product(std::size_t a, std::size_t b) const {
  auto i = find(elements_.at(a) * elements_.at(b));
  if (!i) throw DomainError("group is not closed under multiplication");
  return *i;
}

std::size_t MatrixGroup::inverse(std::size_t a) const {
  auto inv = unimodular_inverse(elements_.at(a));
  if (!inv) throw DomainError("group element is not invertible");
  auto i = find(*inv);
  if (!i) throw DomainError("group is not closed under inversion");
  return *i;
}

std::size_t MatrixGroup::evaluate(const std::vector<int>& word) const {
  SmallMatrix m = SmallMatrix::identity(dimension_);
  for (int k : word) {
    if (k < 1 || static_cast<std::size_t>(k) > generators_.size())
      throw DomainError("generator index " + std::to_string(k) + " out of range 1.." +
                        std::to_string(generators_.size()));
    m = m * generators_[k - 1];
  }
  auto i = find(m);
  if (!i) throw DomainError("word does not evaluate to a group element");
  return *i;
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t kRootLimit = 2000;

std::int64_t height(const ExponentVector& v) {
  return std::accumulate(v.coords().begin(), v.coords().end(), std::int64_t{0});
}

bool is_positive(const ExponentVector& v) {
  return std::all_of(v.coords().begin(), v.coords().end(), [](std::int64_t x) { return x >= 0; });
}

}  // namespace

RootDatum RootDatum::from_cartan(const SmallMatrix& cartan) {
  const std::size_t n = cartan.rows();
  if (!cartan.is_square()) throw DomainError("Cartan matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j && cartan(i, j) != 2) throw DomainError("Cartan matrix diagonal entries must be 2");
      if (i != j && cartan(i, j) > 0) throw DomainError("Cartan matrix off-diagonal entries must be <= 0");
      if (i != j && (cartan(i, j) == 0) != (cartan(j, i) == 0))
        throw DomainError("Cartan matrix entries (i,j) and (j,i) must vanish together");
    }

  RootDatum rd;
  rd.cartan = cartan;
  for (std::size_t i = 0; i < n; ++i) {
    SmallMatrix s = SmallMatrix::identity(n);
    for (std::size_t j = 0; j < n; ++j) s(i, j) -= cartan(i, j);
    rd.simple_reflections.push_back(std::move(s));
  }

  // Orbit of the simple roots; each root carries its reflection w s_i w^{-1}.
  std::map<ExponentVector, SmallMatrix> roots;
  std::deque<ExponentVector> queue;
  for (std::size_t i = 0; i < n; ++i) {
    ExponentVector a(n);
    a[i] = 1;
    roots.emplace(a, rd.simple_reflections[i]);
    queue.push_back(a);
  }
  while (!queue.empty()) {
    ExponentVector beta = queue.front();
    queue.pop_front();
    const SmallMatrix reflection = roots.at(beta);
    for (const auto& s : rd.simple_reflections) {
      ExponentVector image = apply(s, beta);
      if (roots.contains(image)) continue;
      if (roots.size() >= kRootLimit) throw DomainError("Cartan matrix is not of finite type");
      roots.emplace(image, s * reflection * s);
      queue.push_back(std::move(image));
    }
  }

  std::vector<ExponentVector> positive;
  for (const auto& [r, m] : roots)
    if (is_positive(r)) positive.push_back(r);
  std::stable_sort(positive.begin(), positive.end(),
                   [](const ExponentVector& a, const ExponentVector& b) { return height(a) < height(b); });
  if (positive.size() * 2 != roots.size()) throw DomainError("Cartan matrix is not of finite type");
  for (const auto& r : positive) {
    rd.reflections.push_back(roots.at(r));
    rd.positive_roots.push_back(r);
  }
  return rd;
}

SmallMatrix cartan_matrix(std::string_view type_name) {
  if (type_name.size() < 2) throw DomainError("unknown Cartan type '" + std::string(type_name) + "'");
  const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(type_name[0])));
  std::size_t n = 0;
  for (char c : type_name.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw DomainError("unknown Cartan type '" + std::string(type_name) + "'");
    n = n * 10 + static_cast<std::size_t>(c - '0');
  }
  auto bad = [&] { return DomainError("unknown Cartan type '" + std::string(type_name) + "'"); };
  if (n == 0) throw bad();

  SmallMatrix a = SmallMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 2;
  auto link = [&](std::size_t i, std::size_t j) {  // 1-based, simply laced
    a(i - 1, j - 1) = -1;
    a(j - 1, i - 1) = -1;
  };

  switch (family) {
    case 'A':
      for (std::size_t i = 1; i < n; ++i) link(i, i + 1);
      break;
    case 'B':
    case 'C':
      if (n < 2) throw bad();
      for (std::size_t i = 1; i < n; ++i) link(i, i + 1);
      // B: alpha_n short.  C: alpha_n long.
      if (family == 'B') a(n - 1, n - 2) = -2;
      else a(n - 2, n - 1) = -2;
      break;
    case 'D':
      if (n < 4) throw bad();
      for (std::size_t i = 1; i + 1 < n; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    case 'E':
      if (n < 6 || n > 8) throw bad();
      link(1, 3);
      link(2, 4);
      for (std::size_t i = 3; i < n; ++i) link(i, i + 1);
      break;
    case 'F':
      if (n != 4) throw bad();
      link(1, 2);
      link(3, 4);
      a(1, 2) = -1;
      a(2, 1) = -2;
      break;
    case 'G':
      if (n != 2) throw bad();
      a(0, 1) = -3;
      a(1, 0) = -1;
      break;
    default:
      throw bad();
  }
  return a;
}

RootDatum RootDatum::of_type(std::string_view name) { return from_cartan(cartan_matrix(name)); }

MatrixGroup weyl_group(const RootDatum& rd, std::size_t limit) {
  return MatrixGroup::generate(rd.simple_reflections, rd.rank(), limit);
}

std::size_t coxeter_length(const RootDatum& rd, const SmallMatrix& w) {
  std::size_t len = 0;
  for (const auto& beta : rd.positive_roots)
    if (!is_positive(apply(w, beta))) ++len;
  return len;
}

SmallMatrix word_matrix(const RootDatum& rd, const std::vector<int>& word) {
  SmallMatrix m = SmallMatrix::identity(rd.rank());
  for (int k : word) {
    if (k < 1 || static_cast<std::size_t>(k) > rd.rank())
      throw DomainError("simple reflection index " + std::to_string(k) + " out of range 1.." +
                        std::to_string(rd.rank()));
    m = m * rd.simple_reflections[k - 1];
  }
  return m;
}

std::vector<int> longest_word(const RootDatum& rd) {
  MatrixGroup w = weyl_group(rd);
  return w.word(w.size() - 1);
}

std::string word_label(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (int k : word) s += k < 10 ? "s" + std::to_string(k) : "s{" + std::to_string(k) + "}";
  return s;
}

}  // namespace gkmkit
