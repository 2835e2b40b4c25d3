#pragma once

#include "tropical/matrix.hpp"
#include "tropical/permutation.hpp"

namespace tropical {

struct PermanentResult {
  Scalar value;
  bool attaining_unique = false;
  Permutation witness;  // witness(i) is the column chosen by row i
};

/// perm(A) = max over σ of Σ_i A(i, σ(i)), by an exact Hungarian assignment.
/// Uniqueness is decided on the equality subgraph of the optimal dual
/// solution: a second optimal permutation exists iff that subgraph holds an
/// alternating cycle with respect to the witness.
PermanentResult permanent(const TropMatrix& a);

/// Full tropical rank: the permanent is attained by exactly one permutation.
bool is_strongly_regular(const TropMatrix& a);

/// For an idempotent with zero diagonal: rank < n iff E(i,j) = −E(j,i) for
/// some i ≠ j. Cross-checked against is_strongly_regular.
bool zero_diag_regularity(const TropMatrix& e);

/// Number of extremal points (up to scaling) of the column space of an
/// idempotent.
std::size_t idempotent_rank(const TropMatrix& e);

/// The idempotent E(λ): E with its last redundant column scaled by λ < 0.
/// Same column space as E, and distinct for distinct λ.
TropMatrix idempotent_family(const TropMatrix& e, const Scalar& lambda);

}  // namespace tropical
