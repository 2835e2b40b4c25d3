#pragma once

#include <vector>

#include "tropical/matrix.hpp"
#include "tropical/metric.hpp"
#include "tropical/permutation.hpp"

namespace tropical {

/// G = S ⊗ P_perm with S = diag(diagonal).
struct UnitDecomposition {
  std::vector<Scalar> diagonal;
  Permutation perm;

  ExtMatrix reconstruct() const;
};

/// Units of M_n(T): exactly one finite entry in every row and every column.
bool is_unit(const ExtMatrix& g);
/// Throws PreconditionError if g is not a unit.
UnitDecomposition unit_decompose(const ExtMatrix& g);

struct IsometryGroup {
  std::vector<Permutation> elements;  // sorted; elements.front() is the identity
  std::size_t order() const noexcept { return elements.size(); }
};

/// All σ with d(σ(i), σ(j)) = d(i, j). Backtracking search pruned by the
/// sorted out- and in-distance profiles of each point. Requires d to be at
/// least a semimetric.
IsometryGroup isometry_group(const DistanceTable& d);

/// G ⊗ D = D ⊗ G, exactly.
bool commutes_with(const ExtMatrix& g, const TropMatrix& d);

/// λ ⊗ P_σ ⊗ D for a metric matrix D and an isometry σ. The map
/// (σ, λ) ↦ λ P_σ D is an isomorphism from I × ℝ onto the H-class of D.
TropMatrix hclass_element(const TropMatrix& d, const Permutation& sigma, const Scalar& lambda);

/// Whether N lies in the maximal subgroup of the R-class of M: C(N) = C(M)
/// and R(N) = −C(M). M must have the column space of a strongly regular
/// idempotent; throws PreconditionError otherwise.
bool hclass_contains(const TropMatrix& m, const TropMatrix& n);

/// The unique candidate idempotent with C(E) ⊇ C(M):
/// E(i, j) = min_k (M(i, k) − M(j, k)).
TropMatrix column_space_idempotent(const TropMatrix& m);

}  // namespace tropical
