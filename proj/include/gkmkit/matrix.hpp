#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gkmkit/errors.hpp"

namespace gkmkit {

using Integer = boost::multiprecision::cpp_int;

// Dense row-major matrix. Used with Integer for normal forms and with
// std::int64_t for lattice automorphisms (Weyl group elements, graph actions).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : init) {
      if (r.size() != cols_) throw DomainError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  const std::vector<T>& data() const { return data_; }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DomainError("matrix dimension mismatch in product");
    Matrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
      }
    return out;
  }

  Matrix transposed() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator<(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return std::lexicographical_compare(a.data_.begin(), a.data_.end(), b.data_.begin(), b.data_.end());
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using SmallMatrix = Matrix<std::int64_t>;

IntMatrix widen(const SmallMatrix& m);
// Throws DomainError if an entry does not fit in 64 bits.
SmallMatrix narrow(const IntMatrix& m);

Integer determinant(const IntMatrix& m);
bool is_unimodular(const SmallMatrix& m);
// Inverse of a unimodular matrix; nullopt if the matrix is singular or not unimodular.
std::optional<SmallMatrix> unimodular_inverse(const SmallMatrix& m);

// Row Hermite normal form of the lattice spanned by the rows of m: zero rows
// dropped, pivots positive, entries above each pivot reduced into [0, pivot).
// Unique for the lattice, so it doubles as a canonical basis.
IntMatrix hermite_rows(IntMatrix m);

// Z-basis of {v : m v = 0}, returned in Hermite normal form (see hermite_rows).
// The basis spans the full kernel lattice, not merely a finite-index sublattice.
std::vector<std::vector<Integer>> integer_kernel(const IntMatrix& m);

std::string to_string(const SmallMatrix& m);

}  // namespace gkmkit
