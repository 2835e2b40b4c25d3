#include "tropical/spectral.hpp"

#include <algorithm>

namespace tropical {

Scalar eigenvalue(const TropMatrix& a) {
  require_square(a, "eigenvalue");
  const std::size_t n = a.rows();

  // walk[k][v]: heaviest walk of exactly k edges from vertex 0 to v. The
  // digraph is complete, so every vertex is reachable for every k ≥ 1.
  std::vector<std::vector<std::optional<Scalar>>> walk(n + 1, std::vector<std::optional<Scalar>>(n));
  walk[0][0] = Scalar(0);
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t u = 0; u < n; ++u) {
        if (!walk[k - 1][u]) continue;
        Scalar w = *walk[k - 1][u] + a(u, v);
        if (!walk[k][v] || *walk[k][v] < w) walk[k][v] = std::move(w);
      }

  std::optional<Scalar> best;
  for (std::size_t v = 0; v < n; ++v) {
    std::optional<Scalar> worst;
    for (std::size_t k = 0; k < n; ++k) {
      if (!walk[k][v]) continue;
      Scalar mean = (*walk[n][v] - *walk[k][v]) / Scalar(static_cast<long>(n - k));
      if (!worst || mean < *worst) worst = std::move(mean);
    }
    if (worst && (!best || *best < *worst)) best = std::move(worst);
  }
  return *best;
}

StarResult kleene_star(const TropMatrix& a) {
  StarResult result;
  result.eigenvalue = eigenvalue(a);
  if (result.eigenvalue.sign() > 0) return result;

  const std::size_t n = a.rows();
  MatrixBuilder<Scalar> s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i, j) = a(i, j);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Scalar through = s(i, k) + s(k, j);
        if (s(i, j) < through) s(i, j) = std::move(through);
      }
  // Join I_n. No cycle is positive, so the diagonal of the closure is ≤ 0.
  for (std::size_t i = 0; i < n; ++i) s(i, i) = Scalar(0);

  result.converges = true;
  result.star = std::move(s).build();
  return result;
}

bool is_idempotent(const TropMatrix& a) {
  require_square(a, "is_idempotent");
  return mat_mul(a, a) == a;
}

bool has_zero_diagonal(const TropMatrix& a) {
  require_square(a, "has_zero_diagonal");
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (!a(i, i).is_zero()) return false;
  return true;
}

bool star_fixed_point_check(const TropMatrix& a) {
  const bool fixed = is_idempotent(a) && has_zero_diagonal(a);
  const StarResult star = kleene_star(a);
  const bool star_equal = star.converges && *star.star == a;
  if (fixed != star_equal)
    throw ConsistencyError("star_fixed_point_check: idempotent-with-zero-diagonal and A* = A disagree");
  return fixed;
}

}  // namespace tropical
