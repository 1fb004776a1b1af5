#pragma once

// Exact scalars and dense matrices over Q (arbitrary-precision rationals)
// and GF(2).  Everything here is division-exact: no rounding anywhere, so
// minor signs and vanishing are decidable.

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <string>
#include <vector>

#include "lagmat/errors.hpp"

namespace lagmat {

using Rat = boost::multiprecision::cpp_rational;

inline int sign_of(const Rat& x) { return x.sign(); }

// The two-element field.
struct GF2 {
  std::uint8_t v = 0;

  constexpr GF2() = default;
  constexpr explicit GF2(int x) : v(static_cast<std::uint8_t>(x & 1)) {}

  friend constexpr GF2 operator+(GF2 a, GF2 b) { return GF2{a.v ^ b.v}; }
  friend constexpr GF2 operator-(GF2 a, GF2 b) { return GF2{a.v ^ b.v}; }
  friend constexpr GF2 operator*(GF2 a, GF2 b) { return GF2{a.v & b.v}; }
  friend GF2 operator/(GF2 a, GF2 b) {
    if (!b.v) throw domain_error("GF(2): division by zero");
    return a;
  }
  GF2& operator+=(GF2 o) { v ^= o.v; return *this; }
  GF2& operator-=(GF2 o) { v ^= o.v; return *this; }
  constexpr GF2 operator-() const { return *this; }
  friend constexpr bool operator==(GF2, GF2) = default;
};

template <class F>
struct field_name;
template <>
struct field_name<Rat> {
  static constexpr const char* value = "Q";
};
template <>
struct field_name<GF2> {
  static constexpr const char* value = "GF2";
};

std::string scalar_to_string(const Rat& x);
std::string scalar_to_string(const GF2& x);
Rat parse_rational(const std::string& token);
GF2 parse_gf2(const std::string& token);

template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<F>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    a_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != cols_)
        throw domain_error("matrix literal: ragged rows");
      for (const auto& x : row) a_.push_back(x);
    }
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = F{1};
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  F& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const F& at(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * cols_ + c];
  }

  Matrix transposed() const {
    Matrix m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw domain_error("matrix product: shape mismatch");
    Matrix m(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
      for (int k = 0; k < cols_; ++k) {
        const F& x = at(r, k);
        if (x == F{}) continue;
        for (int c = 0; c < o.cols_; ++c) m.at(r, c) += x * o.at(k, c);
      }
    return m;
  }

  bool symmetric() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r)
      for (int c = r + 1; c < cols_; ++c)
        if (at(r, c) != at(c, r)) return false;
    return true;
  }

  // Submatrix by explicit row and column index lists (0-based).
  Matrix select(const std::vector<int>& rows, const std::vector<int>& cols) const {
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c)
        m.at(static_cast<int>(r), static_cast<int>(c)) = at(rows[r], cols[c]);
    return m;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<F> a_;
};

using QMatrix = Matrix<Rat>;
using F2Matrix = Matrix<GF2>;

// Exact determinant by Gaussian elimination; the 0x0 determinant is 1.
template <class F>
F det(Matrix<F> m);

template <class F>
int rank(Matrix<F> m);

// Solve R * X = L for X, i.e. the left block once the right block has been
// row-reduced to the identity.  R must be invertible.
template <class F>
Matrix<F> normalize_right_block(const Matrix<F>& left, const Matrix<F>& right);

extern template Rat det(Matrix<Rat>);
extern template GF2 det(Matrix<GF2>);
extern template int rank(Matrix<Rat>);
extern template int rank(Matrix<GF2>);
extern template Matrix<Rat> normalize_right_block(const Matrix<Rat>&,
                                                  const Matrix<Rat>&);
extern template Matrix<GF2> normalize_right_block(const Matrix<GF2>&,
                                                  const Matrix<GF2>&);

}  // namespace lagmat
