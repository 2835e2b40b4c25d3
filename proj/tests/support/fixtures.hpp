#pragma once

#include "tropical/matrix.hpp"
#include "tropical/metric.hpp"

namespace fixtures {

using tropical::Scalar;
using tropical::TropMatrix;

inline Scalar q(const char* s) { return Scalar::parse(s); }

// The three 3x3 idempotents whose column spaces are the triangle, the
// off-centre hexagon and the centred hexagon.
inline TropMatrix EA() { return {{0, 0, 0}, {-3, 0, 0}, {-3, -3, 0}}; }
inline TropMatrix EB() { return {{0, -1, -1}, {-3, 0, -2}, {-2, -1, 0}}; }
inline TropMatrix EC() { return {{0, q("-1.5"), q("-1.5")}, {q("-1.5"), 0, -1}, {q("-1.5"), -1, 0}}; }

// Four points a, b, c, d: d at distance 1 from each of the others, which are
// mutually at distance 2.
inline tropical::DistanceTable cube() {
  return tropical::DistanceTable(TropMatrix{{0, 2, 2, 1}, {2, 0, 2, 1}, {2, 2, 0, 1}, {1, 1, 1, 0}});
}

inline tropical::DistanceTable discrete(std::size_t n) {
  tropical::MatrixBuilder<Scalar> b(n, n, Scalar(1));
  for (std::size_t i = 0; i < n; ++i) b(i, i) = 0;
  return tropical::DistanceTable(std::move(b).build());
}

}  // namespace fixtures
