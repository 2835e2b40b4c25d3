#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tropical/matrix.hpp"

namespace tropical {

/// A distance function d : [n] × [n] → ℚ with d(i, i) = 0. The remaining
/// axioms are reported by validate(), not assumed.
class DistanceTable {
 public:
  /// Throws PreconditionError on a non-square table or a nonzero self-distance.
  explicit DistanceTable(TropMatrix d);

  std::size_t size() const noexcept { return d_.rows(); }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return d_(i, j); }
  const TropMatrix& table() const noexcept { return d_; }

  friend bool operator==(const DistanceTable&, const DistanceTable&) = default;

 private:
  TropMatrix d_;
};

enum class DistanceClass { not_triangle, pre_semimetric, semimetric, metric };

std::string to_string(DistanceClass c);

struct Validation {
  DistanceClass cls = DistanceClass::not_triangle;
  /// For not_triangle: (i, k, j) with d(i, j) > d(i, k) + d(k, j).
  std::optional<std::array<std::size_t, 3>> triangle_witness;
  /// For pre_semimetric: a pair i ≠ j with d(i, j) ≤ 0.
  /// For semimetric: a pair with d(i, j) ≠ d(j, i).
  std::optional<std::array<std::size_t, 2>> pair_witness;

  bool at_least_semimetric() const {
    return cls == DistanceClass::semimetric || cls == DistanceClass::metric;
  }
};

Validation validate(const DistanceTable& d);

/// D = (−d(i, j)).
TropMatrix to_matrix(const DistanceTable& d);
/// d(i, j) = −D(i, j). Throws PreconditionError if the diagonal is not zero.
DistanceTable from_matrix(const TropMatrix& m);

/// Independent evaluation of every condition in the semimetric and metric
/// characterisations of a square matrix.
struct ClassificationReport {
  std::size_t n = 0;
  bool idempotent = false;
  bool zero_diagonal = false;
  bool kleene_fixed = false;
  bool strongly_regular = false;
  bool off_diagonal_negative = false;
  bool symmetric = false;
  bool origin_in_interior = false;      // of C(A); false unless A is a strongly regular idempotent
  bool origin_in_row_interior = false;  // of R(A); same proviso
  bool columns_sum_to_zero = false;
  bool rows_sum_to_zero = false;
  bool is_semimetric_matrix = false;
  bool is_metric_matrix = false;
};

/// Throws ConsistencyError if any two equivalent conditions disagree.
ClassificationReport classify(const TropMatrix& a);

/// δ(x, y) = −⟨x|y⟩ = max_i (x_i − y_i).
Scalar residuation_distance(const TropVector& x, const TropVector& y);

/// d_H(x, y) = (δ(x, y) + δ(y, x)) / 2.
Scalar hilbert_distance(const TropVector& x, const TropVector& y);

bool is_antichain(std::span<const TropVector> points);

/// Columns of D = (−d): δ between them reproduces d, and d_H does too when d
/// is a metric. Throws PreconditionError unless d is a semimetric.
std::vector<TropVector> embed(const DistanceTable& d);

/// Checks E(i, j) ≤ min(⟨r_j|r_i⟩, ⟨c_i|c_j⟩) everywhere, with
/// E(i, j) = ⟨r_j|r_i⟩ when E(j, j) = 0 and E(i, j) = ⟨c_i|c_j⟩ when
/// E(i, i) = 0. Throws ConsistencyError on failure.
bool residuation_bound_check(const TropMatrix& e);

}  // namespace tropical
