#include "tropical/matrix.hpp"

#include <algorithm>

namespace tropical {

namespace {

void require_same_length(const TropVector& x, const TropVector& y, const char* op) {
  if (x.size() != y.size())
    throw DimensionError(std::string(op) + ": vector lengths " + std::to_string(x.size()) + " and " +
                         std::to_string(y.size()) + " differ");
}

template <class T>
void require_product_shape(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows())
    throw DimensionError("mat_mul: incompatible shapes " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
}

}  // namespace

std::string TropVector::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ", ";
    s += entries_[i].str();
  }
  return s + ")";
}

TropMatrix from_columns(std::span<const TropVector> cols) {
  if (cols.empty()) return {};
  const std::size_t n = cols.front().size();
  MatrixBuilder<Scalar> b(n, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != n) throw DimensionError("from_columns: columns differ in length");
    for (std::size_t i = 0; i < n; ++i) b(i, j) = cols[j][i];
  }
  return std::move(b).build();
}

TropVector column(const TropMatrix& a, std::size_t j) {
  std::vector<Scalar> c;
  c.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) c.push_back(a(i, j));
  return TropVector(std::move(c));
}

TropVector row(const TropMatrix& a, std::size_t i) {
  std::vector<Scalar> r;
  r.reserve(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) r.push_back(a(i, j));
  return TropVector(std::move(r));
}

std::vector<TropVector> columns(const TropMatrix& a) {
  std::vector<TropVector> out;
  for (std::size_t j = 0; j < a.cols(); ++j) out.push_back(column(a, j));
  return out;
}

std::vector<TropVector> rows(const TropMatrix& a) {
  std::vector<TropVector> out;
  for (std::size_t i = 0; i < a.rows(); ++i) out.push_back(row(a, i));
  return out;
}

ExtMatrix identity(std::size_t n) {
  MatrixBuilder<ExtScalar> b(n, n);
  for (std::size_t i = 0; i < n; ++i) b(i, i) = Scalar(0);
  return std::move(b).build();
}

ExtMatrix to_ext(const TropMatrix& a) {
  MatrixBuilder<ExtScalar> b(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) b(i, j) = a(i, j);
  return std::move(b).build();
}

TropMatrix to_finite(const ExtMatrix& a) {
  MatrixBuilder<Scalar> b(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) b(i, j) = a(i, j).finite();
  return std::move(b).build();
}

TropMatrix mat_mul(const TropMatrix& a, const TropMatrix& b) {
  require_product_shape(a, b);
  if (a.cols() == 0) throw DimensionError("mat_mul: empty inner dimension");
  MatrixBuilder<Scalar> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Scalar best = a(i, 0) + b(0, j);
      for (std::size_t l = 1; l < a.cols(); ++l) best = trop_add(best, a(i, l) + b(l, j));
      out(i, j) = std::move(best);
    }
  return std::move(out).build();
}

ExtMatrix mat_mul(const ExtMatrix& a, const ExtMatrix& b) {
  require_product_shape(a, b);
  MatrixBuilder<ExtScalar> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      ExtScalar best;
      for (std::size_t l = 0; l < a.cols(); ++l) best = trop_add(best, trop_mul(a(i, l), b(l, j)));
      out(i, j) = std::move(best);
    }
  return std::move(out).build();
}

TropVector mat_vec(const TropMatrix& a, const TropVector& x) {
  if (a.cols() != x.size() || a.cols() == 0)
    throw DimensionError("mat_vec: matrix has " + std::to_string(a.cols()) + " columns, vector has " +
                         std::to_string(x.size()) + " entries");
  std::vector<Scalar> out;
  out.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Scalar best = a(i, 0) + x[0];
    for (std::size_t l = 1; l < a.cols(); ++l) best = trop_add(best, a(i, l) + x[l]);
    out.push_back(std::move(best));
  }
  return TropVector(std::move(out));
}

template <class T>
static Matrix<T> entrywise_max(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("mat_add: shapes differ");
  MatrixBuilder<T> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = trop_add(a(i, j), b(i, j));
  return std::move(out).build();
}

TropMatrix mat_add(const TropMatrix& a, const TropMatrix& b) { return entrywise_max(a, b); }
ExtMatrix mat_add(const ExtMatrix& a, const ExtMatrix& b) { return entrywise_max(a, b); }

TropMatrix scale(const Scalar& lambda, const TropMatrix& a) {
  MatrixBuilder<Scalar> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = lambda + a(i, j);
  return std::move(out).build();
}

TropMatrix negate(const TropMatrix& a) {
  MatrixBuilder<Scalar> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = -a(i, j);
  return std::move(out).build();
}

TropVector scale(const Scalar& lambda, const TropVector& x) {
  std::vector<Scalar> out;
  out.reserve(x.size());
  for (const auto& v : x) out.push_back(lambda + v);
  return TropVector(std::move(out));
}

TropVector negate(const TropVector& x) {
  std::vector<Scalar> out;
  out.reserve(x.size());
  for (const auto& v : x) out.push_back(-v);
  return TropVector(std::move(out));
}

TropVector vec_add(const TropVector& x, const TropVector& y) {
  require_same_length(x, y, "vec_add");
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(trop_add(x[i], y[i]));
  return TropVector(std::move(out));
}

TropVector vec_min(const TropVector& x, const TropVector& y) {
  require_same_length(x, y, "vec_min");
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(std::min(x[i], y[i]));
  return TropVector(std::move(out));
}

bool leq(const TropVector& x, const TropVector& y) {
  require_same_length(x, y, "leq");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (y[i] < x[i]) return false;
  return true;
}

Scalar residuation(const TropVector& x, const TropVector& y) {
  require_same_length(x, y, "residuation");
  if (x.size() == 0) throw DimensionError("residuation: empty vectors");
  Scalar best = y[0] - x[0];
  for (std::size_t i = 1; i < x.size(); ++i) best = std::min(best, y[i] - x[i]);
  return best;
}

std::vector<Scalar> projectivize(const TropVector& x) {
  if (x.size() < 2) throw DimensionError("projectivize: needs at least 2 coordinates");
  std::vector<Scalar> out;
  const Scalar& last = x[x.size() - 1];
  for (std::size_t i = 0; i + 1 < x.size(); ++i) out.push_back(x[i] - last);
  return out;
}

bool same_ray(const TropVector& x, const TropVector& y) {
  require_same_length(x, y, "same_ray");
  if (x.size() == 0) return true;
  const Scalar shift = y[0] - x[0];
  for (std::size_t i = 1; i < x.size(); ++i)
    if (y[i] - x[i] != shift) return false;
  return true;
}

bool is_symmetric(const TropMatrix& a) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (a(i, j) != a(j, i)) return false;
  return true;
}

void require_square(const TropMatrix& a, const char* op) {
  if (!a.is_square() || a.rows() == 0)
    throw DimensionError(std::string(op) + ": expected a non-empty square matrix, got " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

}  // namespace tropical
