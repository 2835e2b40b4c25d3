#pragma once

#include <array>
#include <span>
#include <vector>

#include "tropical/matrix.hpp"

namespace tropical {

/// Result of projecting x onto the tropical span of a generator list.
struct SpanMembership {
  bool member = false;
  /// Maximal representation: coefficients[j] = ⟨c_j | x⟩.
  std::vector<Scalar> coefficients;
  /// ⊕_j coefficients[j] ⊗ c_j; always ≤ x, equal iff member.
  TropVector projection;
};

SpanMembership membership(std::span<const TropVector> generators, const TropVector& x);

/// Membership in the column space of A.
bool in_column_space(const TropMatrix& a, const TropVector& x);
bool in_row_space(const TropMatrix& a, const TropVector& x);

/// E ⊗ x for a strongly regular idempotent E: a point of C(E), on its
/// boundary whenever x lies outside.
TropVector project_onto(const TropMatrix& e, const TropVector& x);

/// Whether x ∈ C(E) has a unique representation as a combination of the
/// columns of E (equivalently, is a topological interior point).
bool interior_point(const TropMatrix& e, const TropVector& x);

/// 0-based indices of the zero-diagonal columns of an idempotent that are
/// extremal in C(E); one index (the smallest) per scaling class.
std::vector<std::size_t> extremal_columns(const TropMatrix& e);

/// θ_A(x) = A ⊗ (−x) for x in the row space of A.
TropVector duality_map(const TropMatrix& a, const TropVector& x);

/// C(E) = −C(E), decided both by symmetry of E and by membership of the
/// negated extremals. Throws ConsistencyError if the two disagree.
bool negation_closed(const TropMatrix& e);

/// C(E) as {x : x_i − x_j ≥ E(i, j) for all i, j}.
struct PolytropeHRep {
  std::size_t n = 0;
  TropMatrix bounds;

  bool contains(const TropVector& x) const;
  /// All off-diagonal constraints strict.
  bool strictly_contains(const TropVector& x) const;
};

PolytropeHRep halfspace_rep(const TropMatrix& e);

using Point2 = std::array<Scalar, 2>;

/// Vertices of the projectivised polytrope of a 3×3 strongly regular
/// idempotent in coordinates (x1 − x3, x2 − x3), counterclockwise, starting
/// from the lexicographically smallest vertex.
std::vector<Point2> polytrope_vertices_2d(const TropMatrix& e);

/// Throws PreconditionError unless E is a strongly regular idempotent.
void require_strongly_regular_idempotent(const TropMatrix& e, const char* op);

}  // namespace tropical
