#pragma once

#include <optional>

#include "tropical/matrix.hpp"

namespace tropical {

struct StarResult {
  bool converges = false;
  std::optional<TropMatrix> star;  // present iff converges
  Scalar eigenvalue;
};

/// Maximum cycle mean of the complete digraph weighted by A (Karp's
/// recurrence, exact).
Scalar eigenvalue(const TropMatrix& a);

/// A* = I ⊕ A ⊕ A² ⊕ …, computed by a Floyd–Warshall closure. Defined
/// exactly when eigenvalue(A) ≤ 0.
StarResult kleene_star(const TropMatrix& a);

bool is_idempotent(const TropMatrix& a);

bool has_zero_diagonal(const TropMatrix& a);

/// True iff A is idempotent with zero diagonal, i.e. A = A*. Throws
/// ConsistencyError if the two characterisations disagree.
bool star_fixed_point_check(const TropMatrix& a);

}  // namespace tropical
