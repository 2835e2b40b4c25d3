#include "tropical/polytope.hpp"

#include <algorithm>
#include <map>

#include "tropical/regularity.hpp"
#include "tropical/spectral.hpp"

namespace tropical {

SpanMembership membership(std::span<const TropVector> generators, const TropVector& x) {
  if (generators.empty()) throw PreconditionError("membership: empty generator list");
  SpanMembership out;
  std::optional<TropVector> proj;
  for (const auto& g : generators) {
    if (g.size() != x.size()) throw DimensionError("membership: generator and point differ in length");
    Scalar lambda = residuation(g, x);
    TropVector term = scale(lambda, g);
    proj = proj ? vec_add(*proj, term) : std::move(term);
    out.coefficients.push_back(std::move(lambda));
  }
  out.projection = std::move(*proj);
  out.member = out.projection == x;
  return out;
}

bool in_column_space(const TropMatrix& a, const TropVector& x) {
  const auto cols = columns(a);
  return membership(cols, x).member;
}

bool in_row_space(const TropMatrix& a, const TropVector& x) { return in_column_space(a.transpose(), x); }

void require_strongly_regular_idempotent(const TropMatrix& e, const char* op) {
  require_square(e, op);
  if (!is_idempotent(e)) throw PreconditionError(std::string(op) + ": matrix is not idempotent");
  if (!is_strongly_regular(e)) throw PreconditionError(std::string(op) + ": matrix is not strongly regular");
}

TropVector project_onto(const TropMatrix& e, const TropVector& x) {
  require_strongly_regular_idempotent(e, "project_onto");
  return mat_vec(e, x);
}

bool interior_point(const TropMatrix& e, const TropVector& x) {
  require_strongly_regular_idempotent(e, "interior_point");
  const auto cols = columns(e);
  const SpanMembership m = membership(cols, x);
  if (!m.member) throw PreconditionError("interior_point: point is not in the column space");

  // The maximal representation is the only one iff every term attains some
  // coordinate that no other term attains.
  const std::size_t n = e.rows();
  for (std::size_t j = 0; j < n; ++j) {
    bool owns_coordinate = false;
    for (std::size_t i = 0; i < n && !owns_coordinate; ++i) {
      if (m.coefficients[j] + e(i, j) != x[i]) continue;
      owns_coordinate = true;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j && m.coefficients[k] + e(i, k) == x[i]) {
          owns_coordinate = false;
          break;
        }
    }
    if (!owns_coordinate) return false;
  }
  return true;
}

std::vector<std::size_t> extremal_columns(const TropMatrix& e) {
  require_square(e, "extremal_columns");
  if (!is_idempotent(e)) throw PreconditionError("extremal_columns: matrix is not idempotent");

  // One representative per scaling class, keyed by the column normalised to
  // a zero last coordinate.
  const auto cols = columns(e);
  std::map<TropVector, std::size_t> classes;
  for (std::size_t j = 0; j < e.cols(); ++j) {
    if (!e(j, j).is_zero()) continue;
    const Scalar& last = cols[j][cols[j].size() - 1];
    classes.emplace(scale(-last, cols[j]), j);
  }
  std::vector<std::size_t> reps;
  for (const auto& [key, j] : classes) reps.push_back(j);
  std::sort(reps.begin(), reps.end());

  std::vector<std::size_t> out;
  for (std::size_t j : reps) {
    std::vector<TropVector> others;
    for (std::size_t k : reps)
      if (k != j) others.push_back(cols[k]);
    if (others.empty() || !membership(others, cols[j]).member) out.push_back(j);
  }
  return out;
}

TropVector duality_map(const TropMatrix& a, const TropVector& x) {
  if (x.size() != a.cols()) throw DimensionError("duality_map: point length does not match the row length");
  if (!in_row_space(a, x)) throw PreconditionError("duality_map: point is not in the row space");
  return mat_vec(a, negate(x));
}

bool negation_closed(const TropMatrix& e) {
  require_strongly_regular_idempotent(e, "negation_closed");
  const bool symmetric = is_symmetric(e);
  const auto cols = columns(e);
  bool closed = true;
  for (std::size_t j : extremal_columns(e))
    if (!membership(cols, negate(cols[j])).member) {
      closed = false;
      break;
    }
  if (symmetric != closed)
    throw ConsistencyError("negation_closed: symmetry of E and closure of the extremals disagree");
  return closed;
}

bool PolytropeHRep::contains(const TropVector& x) const {
  if (x.size() != n) throw DimensionError("PolytropeHRep: point has the wrong length");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (x[i] - x[j] < bounds(i, j)) return false;
  return true;
}

bool PolytropeHRep::strictly_contains(const TropVector& x) const {
  if (x.size() != n) throw DimensionError("PolytropeHRep: point has the wrong length");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && x[i] - x[j] <= bounds(i, j)) return false;
  return true;
}

PolytropeHRep halfspace_rep(const TropMatrix& e) {
  require_square(e, "halfspace_rep");
  if (!is_idempotent(e) || !has_zero_diagonal(e))
    throw PreconditionError("halfspace_rep: expected an idempotent with zero diagonal");
  return PolytropeHRep{e.rows(), e};
}

namespace {

// a·u + b·v = c
struct Line {
  Scalar a, b, c;
};

std::optional<Point2> intersect(const Line& p, const Line& q) {
  const Scalar det = p.a * q.b - p.b * q.a;
  if (det.is_zero()) return std::nullopt;
  return Point2{(p.c * q.b - p.b * q.c) / det, (p.a * q.c - p.c * q.a) / det};
}

// Half-plane index: 0 for angles in [0, π), 1 for [π, 2π).
int half(const Scalar& x, const Scalar& y) { return (y.sign() < 0 || (y.is_zero() && x.sign() < 0)) ? 1 : 0; }

}  // namespace

std::vector<Point2> polytrope_vertices_2d(const TropMatrix& e) {
  if (e.rows() != 3 || e.cols() != 3) throw PreconditionError("polytrope_vertices_2d: expected a 3x3 matrix");
  require_strongly_regular_idempotent(e, "polytrope_vertices_2d");

  // u = x1 − x3, v = x2 − x3; the six boundary lines.
  const std::vector<Line> lines = {
      {1, 0, e(0, 2)}, {1, 0, -e(2, 0)},   // vertical
      {0, 1, e(1, 2)}, {0, 1, -e(2, 1)},   // horizontal
      {1, -1, e(0, 1)}, {1, -1, -e(1, 0)}, // slope 1
  };
  const PolytropeHRep h = halfspace_rep(e);

  std::vector<Point2> pts;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto p = intersect(lines[i], lines[j]);
      if (!p || !h.contains(TropVector{(*p)[0], (*p)[1], Scalar(0)})) continue;
      if (std::find(pts.begin(), pts.end(), *p) == pts.end()) pts.push_back(*p);
    }

  Scalar cu, cv;
  for (const auto& p : pts) {
    cu = cu + p[0];
    cv = cv + p[1];
  }
  const Scalar count(static_cast<long>(pts.size()));
  cu = cu / count;
  cv = cv / count;

  std::sort(pts.begin(), pts.end(), [&](const Point2& p, const Point2& q) {
    const Scalar px = p[0] - cu, py = p[1] - cv, qx = q[0] - cu, qy = q[1] - cv;
    const int hp = half(px, py), hq = half(qx, qy);
    if (hp != hq) return hp < hq;
    return (px * qy - py * qx).sign() > 0;
  });
  const auto first = std::min_element(pts.begin(), pts.end());
  std::rotate(pts.begin(), first, pts.end());
  return pts;
}

}  // namespace tropical
