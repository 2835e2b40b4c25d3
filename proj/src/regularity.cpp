#include "tropical/regularity.hpp"

#include <optional>

#include "tropical/polytope.hpp"
#include "tropical/spectral.hpp"

namespace tropical {

namespace {

// Optimal assignment for min Σ cost(i, σ(i)) with potentials u, v such that
// u_i + v_j ≤ cost(i, j), tight on the assignment. 1-based internally; the
// classical O(n³) shortest-augmenting-path formulation.
struct Assignment {
  std::vector<std::size_t> row_to_col;
  std::vector<Scalar> u, v;  // 0-based
};

Assignment solve_assignment(const TropMatrix& cost) {
  const std::size_t n = cost.rows();
  std::vector<Scalar> u(n + 1), v(n + 1);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);

  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<std::optional<Scalar>> minv(n + 1);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      std::optional<Scalar> delta;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        Scalar cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (!minv[j] || cur < *minv[j]) {
          minv[j] = std::move(cur);
          way[j] = j0;
        }
        if (!delta || *minv[j] < *delta) {
          delta = *minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] = u[p[j]] + *delta;
          v[j] = v[j] - *delta;
        } else {
          minv[j] = *minv[j] - *delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Assignment out;
  out.row_to_col.assign(n, 0);
  for (std::size_t j = 1; j <= n; ++j) out.row_to_col[p[j] - 1] = j - 1;
  out.u.assign(u.begin() + 1, u.end());
  out.v.assign(v.begin() + 1, v.end());
  return out;
}

// Directed graph on columns: j → k when the row matched to j could move to
// column k along a tight edge. A cycle is an alternating cycle.
bool has_alternating_cycle(const std::vector<std::vector<std::size_t>>& succ) {
  const std::size_t n = succ.size();
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (state[s] != 0) continue;
    stack.emplace_back(s, 0);
    state[s] = 1;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next < succ[node].size()) {
        const std::size_t t = succ[node][next++];
        if (state[t] == 1) return true;
        if (state[t] == 0) {
          state[t] = 1;
          stack.emplace_back(t, 0);
        }
      } else {
        state[node] = 2;
        stack.pop_back();
      }
    }
  }
  return false;
}

void require_idempotent(const TropMatrix& e, const char* op) {
  require_square(e, op);
  if (!is_idempotent(e)) throw PreconditionError(std::string(op) + ": matrix is not idempotent");
}

}  // namespace

PermanentResult permanent(const TropMatrix& a) {
  require_square(a, "permanent");
  const std::size_t n = a.rows();
  const Assignment sol = solve_assignment(negate(a));

  PermanentResult result;
  result.witness = Permutation(sol.row_to_col);
  Scalar total;
  for (std::size_t i = 0; i < n; ++i) total = total + a(i, sol.row_to_col[i]);
  result.value = total;

  // Complementary slackness: every optimal permutation uses only edges with
  // u_i + v_j = −A(i, j).
  std::vector<std::vector<std::size_t>> succ(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (j == sol.row_to_col[i]) continue;
      if (sol.u[i] + sol.v[j] == -a(i, j)) succ[sol.row_to_col[i]].push_back(j);
    }
  result.attaining_unique = !has_alternating_cycle(succ);
  return result;
}

bool is_strongly_regular(const TropMatrix& a) { return permanent(a).attaining_unique; }

bool zero_diag_regularity(const TropMatrix& e) {
  require_idempotent(e, "zero_diag_regularity");
  if (!has_zero_diagonal(e)) throw PreconditionError("zero_diag_regularity: diagonal is not all zero");
  bool full = true;
  for (std::size_t i = 0; i < e.rows() && full; ++i)
    for (std::size_t j = i + 1; j < e.cols(); ++j)
      if (e(i, j) == -e(j, i)) {
        full = false;
        break;
      }
  if (full != is_strongly_regular(e))
    throw ConsistencyError("zero_diag_regularity: antisymmetric-pair test disagrees with the permanent");
  return full;
}

std::size_t idempotent_rank(const TropMatrix& e) {
  require_idempotent(e, "idempotent_rank");
  return extremal_columns(e).size();
}

TropMatrix idempotent_family(const TropMatrix& e, const Scalar& lambda) {
  require_idempotent(e, "idempotent_family");
  if (lambda.sign() >= 0) throw PreconditionError("idempotent_family: lambda must be negative");

  const std::size_t n = e.rows();
  const auto cols = columns(e);
  std::vector<std::size_t> zero_diag;
  for (std::size_t i = 0; i < n; ++i)
    if (e(i, i).is_zero()) zero_diag.push_back(i);

  for (std::size_t j = n; j-- > 0;) {
    std::vector<TropVector> others;
    for (std::size_t i : zero_diag)
      if (i != j) others.push_back(cols[i]);
    if (others.empty() || !membership(others, cols[j]).member) continue;

    MatrixBuilder<Scalar> out(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) out(r, c) = c == j ? lambda + e(r, c) : e(r, c);
    return std::move(out).build();
  }
  throw PreconditionError("idempotent_family: matrix is strongly regular (no redundant column)");
}

}  // namespace tropical
