#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "tropical/error.hpp"
#include "tropical/scalar.hpp"

namespace tropical {

/// A point of FT^n. Ordered componentwise by leq().
class TropVector {
 public:
  TropVector() = default;
  explicit TropVector(std::vector<Scalar> entries) : entries_(std::move(entries)) {}
  TropVector(std::initializer_list<Scalar> entries) : entries_(entries) {}

  static TropVector zero(std::size_t n) { return TropVector(std::vector<Scalar>(n)); }

  std::size_t size() const noexcept { return entries_.size(); }
  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Scalar> entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  std::string str() const;

  friend bool operator==(const TropVector&, const TropVector&) = default;
  // Lexicographic; used only for containers and canonical ordering.
  friend auto operator<=>(const TropVector&, const TropVector&) = default;

 private:
  std::vector<Scalar> entries_;
};

/// Dense row-major matrix over FT (T = Scalar) or T (T = ExtScalar).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows.front().size();
    m.data_.reserve(m.rows_ * m.cols_);
    for (const auto& r : rows) {
      if (r.size() != m.cols_) throw DimensionError("ragged matrix rows");
      m.data_.insert(m.data_.end(), r.begin(), r.end());
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Copy with one entry replaced.
  Matrix with(std::size_t i, std::size_t j, T value) const {
    Matrix m = *this;
    m.data_[i * cols_ + j] = std::move(value);
    return m;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  template <class U>
  friend class MatrixBuilder;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using TropMatrix = Matrix<Scalar>;
using ExtMatrix = Matrix<ExtScalar>;

/// Mutable staging area for assembling a Matrix entry by entry.
template <class T>
class MatrixBuilder {
 public:
  MatrixBuilder(std::size_t rows, std::size_t cols, T fill = T{}) : m_(rows, cols, std::move(fill)) {}
  T& operator()(std::size_t i, std::size_t j) { return m_.data_[i * m_.cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  Matrix<T> build() && { return std::move(m_); }

 private:
  Matrix<T> m_;
};

// --- construction and conversion -------------------------------------------

TropMatrix from_columns(std::span<const TropVector> columns);
TropVector column(const TropMatrix& a, std::size_t j);
TropVector row(const TropMatrix& a, std::size_t i);
std::vector<TropVector> columns(const TropMatrix& a);
std::vector<TropVector> rows(const TropMatrix& a);

/// I_n: zeros on the diagonal, −∞ elsewhere.
ExtMatrix identity(std::size_t n);
ExtMatrix to_ext(const TropMatrix& a);
/// Throws PreconditionError if any entry is −∞.
TropMatrix to_finite(const ExtMatrix& a);

// --- semiring operations ---------------------------------------------------

/// (A ⊗ B)_{ij} = max_l (A_il + B_lj). Throws DimensionError on mismatch.
TropMatrix mat_mul(const TropMatrix& a, const TropMatrix& b);
ExtMatrix mat_mul(const ExtMatrix& a, const ExtMatrix& b);
TropVector mat_vec(const TropMatrix& a, const TropVector& x);
/// Entrywise max.
TropMatrix mat_add(const TropMatrix& a, const TropMatrix& b);
ExtMatrix mat_add(const ExtMatrix& a, const ExtMatrix& b);
TropMatrix scale(const Scalar& lambda, const TropMatrix& a);
TropMatrix negate(const TropMatrix& a);

TropVector scale(const Scalar& lambda, const TropVector& x);
TropVector negate(const TropVector& x);
TropVector vec_add(const TropVector& x, const TropVector& y);
/// Componentwise minimum (the min-plus sum).
TropVector vec_min(const TropVector& x, const TropVector& y);
/// Componentwise order x ≤ y.
bool leq(const TropVector& x, const TropVector& y);

/// ⟨x|y⟩ = max{λ : λ ⊗ x ≤ y} = min_i (y_i − x_i).
Scalar residuation(const TropVector& x, const TropVector& y);

/// (x_1 − x_n, …, x_{n−1} − x_n). Requires n ≥ 2.
std::vector<Scalar> projectivize(const TropVector& x);

/// True iff y = λ ⊗ x for some λ.
bool same_ray(const TropVector& x, const TropVector& y);

bool is_symmetric(const TropMatrix& a);

void require_square(const TropMatrix& a, const char* op);

}  // namespace tropical
