#include "tropical/metric.hpp"

#include "tropical/polytope.hpp"
#include "tropical/regularity.hpp"
#include "tropical/spectral.hpp"

namespace tropical {

DistanceTable::DistanceTable(TropMatrix d) : d_(std::move(d)) {
  if (!d_.is_square() || d_.rows() == 0) throw PreconditionError("distance table must be square and non-empty");
  for (std::size_t i = 0; i < d_.rows(); ++i)
    if (!d_(i, i).is_zero())
      throw PreconditionError("distance table: d(" + std::to_string(i + 1) + "," + std::to_string(i + 1) +
                              ") must be 0");
}

std::string to_string(DistanceClass c) {
  switch (c) {
    case DistanceClass::not_triangle: return "not_triangle";
    case DistanceClass::pre_semimetric: return "pre_semimetric";
    case DistanceClass::semimetric: return "semimetric";
    case DistanceClass::metric: return "metric";
  }
  return "unknown";
}

Validation validate(const DistanceTable& d) {
  const std::size_t n = d.size();
  Validation v;

  std::optional<Scalar> worst;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar excess = d(i, j) - d(i, k) - d(k, j);
        if (excess.sign() > 0 && (!worst || *worst < excess)) {
          worst = std::move(excess);
          v.triangle_witness = std::array<std::size_t, 3>{i, k, j};
        }
      }
  if (worst) return v;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && d(i, j).sign() <= 0) {
        v.cls = DistanceClass::pre_semimetric;
        v.pair_witness = std::array<std::size_t, 2>{i, j};
        return v;
      }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (d(i, j) != d(j, i)) {
        v.cls = DistanceClass::semimetric;
        v.pair_witness = std::array<std::size_t, 2>{i, j};
        return v;
      }

  v.cls = DistanceClass::metric;
  return v;
}

TropMatrix to_matrix(const DistanceTable& d) { return negate(d.table()); }

DistanceTable from_matrix(const TropMatrix& m) {
  require_square(m, "from_matrix");
  if (!has_zero_diagonal(m)) throw PreconditionError("from_matrix: diagonal is not all zero");
  return DistanceTable(negate(m));
}

namespace {

bool off_diagonal_negative(const TropMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j && a(i, j).sign() >= 0) return false;
  return true;
}

bool sums_to_zero(const std::vector<TropVector>& vs) {
  TropVector sum = vs.front();
  for (std::size_t k = 1; k < vs.size(); ++k) sum = vec_add(sum, vs[k]);
  return sum == TropVector::zero(sum.size());
}

void agree(bool expected, bool actual, const char* what) {
  if (expected != actual) throw ConsistencyError(std::string("classify: ") + what);
}

}  // namespace

ClassificationReport classify(const TropMatrix& a) {
  require_square(a, "classify");
  ClassificationReport r;
  r.n = a.rows();
  r.idempotent = is_idempotent(a);
  r.zero_diagonal = has_zero_diagonal(a);
  const StarResult star = kleene_star(a);
  r.kleene_fixed = star.converges && *star.star == a;
  r.strongly_regular = is_strongly_regular(a);
  r.off_diagonal_negative = off_diagonal_negative(a);
  r.symmetric = is_symmetric(a);
  r.columns_sum_to_zero = sums_to_zero(columns(a));
  r.rows_sum_to_zero = sums_to_zero(rows(a));

  const bool sr_idempotent = r.strongly_regular && r.idempotent;
  const TropVector origin = TropVector::zero(r.n);
  if (sr_idempotent) {
    if (in_column_space(a, origin)) r.origin_in_interior = interior_point(a, origin);
    if (in_row_space(a, origin)) r.origin_in_row_interior = interior_point(a.transpose(), origin);
  }

  // Distance side, evaluated without any matrix algebra.
  std::optional<Validation> v;
  if (r.zero_diagonal) v = validate(DistanceTable(negate(a)));
  r.is_semimetric_matrix = v && v->at_least_semimetric();
  r.is_metric_matrix = v && v->cls == DistanceClass::metric;

  const bool triangle = v && v->cls != DistanceClass::not_triangle;
  agree(triangle, r.idempotent && r.zero_diagonal, "triangle inequality vs idempotent with zero diagonal");
  agree(triangle, r.kleene_fixed, "triangle inequality vs D = D*");

  const bool semi = r.is_semimetric_matrix;
  agree(semi, sr_idempotent && r.off_diagonal_negative, "semimetric vs strongly regular idempotent, negative off diagonal");
  agree(semi, r.kleene_fixed && r.off_diagonal_negative, "semimetric vs D = D*, negative off diagonal");
  agree(semi, sr_idempotent && r.origin_in_interior, "semimetric vs 0 interior to the column space");
  agree(semi, sr_idempotent && r.columns_sum_to_zero && r.origin_in_interior, "semimetric vs columns sum to interior 0");
  agree(semi, sr_idempotent && r.origin_in_row_interior, "semimetric vs 0 interior to the row space");
  agree(semi, sr_idempotent && r.rows_sum_to_zero && r.origin_in_row_interior, "semimetric vs rows sum to interior 0");

  agree(r.is_metric_matrix, semi && r.symmetric, "metric vs symmetric semimetric");
  agree(r.is_metric_matrix, sr_idempotent && r.symmetric, "metric vs strongly regular symmetric idempotent");
  agree(r.is_metric_matrix, r.kleene_fixed && r.symmetric && r.off_diagonal_negative,
        "metric vs D = D* = D^T, negative off diagonal");
  return r;
}

Scalar residuation_distance(const TropVector& x, const TropVector& y) { return -residuation(x, y); }

Scalar hilbert_distance(const TropVector& x, const TropVector& y) {
  return (residuation_distance(x, y) + residuation_distance(y, x)) / Scalar(2);
}

bool is_antichain(std::span<const TropVector> points) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (points[i].size() != points[j].size()) throw DimensionError("is_antichain: points differ in length");
      if (i != j && points[i] != points[j] && leq(points[i], points[j])) return false;
    }
  return true;
}

std::vector<TropVector> embed(const DistanceTable& d) {
  const Validation v = validate(d);
  if (!v.at_least_semimetric())
    throw PreconditionError("embed: distance table is " + to_string(v.cls) + ", not a semimetric");

  const auto points = columns(to_matrix(d));
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (residuation_distance(points[i], points[j]) != d(i, j))
        throw ConsistencyError("embed: residuation distance does not reproduce d");
      if (v.cls == DistanceClass::metric && hilbert_distance(points[i], points[j]) != d(i, j))
        throw ConsistencyError("embed: Hilbert distance does not reproduce d");
    }
  if (!is_antichain(points)) throw ConsistencyError("embed: embedded points are not an antichain");
  return points;
}

bool residuation_bound_check(const TropMatrix& e) {
  require_square(e, "residuation_bound_check");
  if (!is_idempotent(e)) throw PreconditionError("residuation_bound_check: matrix is not idempotent");
  const auto r = rows(e);
  const auto c = columns(e);
  for (std::size_t i = 0; i < e.rows(); ++i)
    for (std::size_t j = 0; j < e.cols(); ++j) {
      const Scalar by_rows = residuation(r[j], r[i]);
      const Scalar by_cols = residuation(c[i], c[j]);
      if (std::min(by_rows, by_cols) < e(i, j))
        throw ConsistencyError("residuation_bound_check: E(i,j) exceeds a residual");
      if (e(j, j).is_zero() && by_rows != e(i, j))
        throw ConsistencyError("residuation_bound_check: row equality fails for a zero diagonal entry");
      if (e(i, i).is_zero() && by_cols != e(i, j))
        throw ConsistencyError("residuation_bound_check: column equality fails for a zero diagonal entry");
    }
  return true;
}

}  // namespace tropical
