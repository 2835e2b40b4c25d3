#include "tropical/symmetry.hpp"

#include <algorithm>

#include "tropical/polytope.hpp"
#include "tropical/regularity.hpp"
#include "tropical/spectral.hpp"

namespace tropical {

ExtMatrix UnitDecomposition::reconstruct() const {
  const std::size_t n = diagonal.size();
  MatrixBuilder<ExtScalar> s(n, n);
  for (std::size_t i = 0; i < n; ++i) s(i, i) = diagonal[i];
  return mat_mul(std::move(s).build(), perm.matrix());
}

bool is_unit(const ExtMatrix& g) {
  if (!g.is_square()) throw DimensionError("is_unit: matrix is not square");
  const std::size_t n = g.rows();
  std::vector<int> per_col(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    int per_row = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (g(i, j).is_finite()) {
        ++per_row;
        ++per_col[j];
      }
    if (per_row != 1) return false;
  }
  return std::all_of(per_col.begin(), per_col.end(), [](int c) { return c == 1; });
}

UnitDecomposition unit_decompose(const ExtMatrix& g) {
  if (!is_unit(g)) throw PreconditionError("unit_decompose: matrix is not a unit");
  const std::size_t n = g.rows();
  UnitDecomposition out;
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g(i, j).is_finite()) {
        out.diagonal.push_back(g(i, j).finite());
        images[j] = i;  // P(σ(j), j) = 0
      }
  out.perm = Permutation(std::move(images));
  return out;
}

namespace {

struct Profile {
  std::vector<Scalar> out, in;
  friend bool operator==(const Profile&, const Profile&) = default;
};

class IsometrySearch {
 public:
  explicit IsometrySearch(const DistanceTable& d) : d_(d), n_(d.size()), image_(n_), used_(n_, false) {
    for (std::size_t i = 0; i < n_; ++i) {
      Profile p;
      for (std::size_t j = 0; j < n_; ++j) {
        p.out.push_back(d(i, j));
        p.in.push_back(d(j, i));
      }
      std::sort(p.out.begin(), p.out.end());
      std::sort(p.in.begin(), p.in.end());
      profiles_.push_back(std::move(p));
    }
  }

  std::vector<Permutation> run() {
    extend(0);
    return std::move(found_);
  }

 private:
  void extend(std::size_t i) {
    if (i == n_) {
      found_.emplace_back(image_);
      return;
    }
    for (std::size_t t = 0; t < n_; ++t) {
      if (used_[t] || !(profiles_[t] == profiles_[i]) || !consistent(i, t)) continue;
      used_[t] = true;
      image_[i] = t;
      extend(i + 1);
      used_[t] = false;
    }
  }

  bool consistent(std::size_t i, std::size_t t) const {
    for (std::size_t k = 0; k < i; ++k)
      if (d_(t, image_[k]) != d_(i, k) || d_(image_[k], t) != d_(k, i)) return false;
    return true;
  }

  const DistanceTable& d_;
  std::size_t n_;
  std::vector<Profile> profiles_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
  std::vector<Permutation> found_;
};

void require_metric_matrix(const TropMatrix& d, const char* op) {
  require_square(d, op);
  if (!has_zero_diagonal(d) || validate(from_matrix(d)).cls != DistanceClass::metric)
    throw PreconditionError(std::string(op) + ": matrix is not a metric matrix");
}

bool column_spaces_equal(const TropMatrix& a, const TropMatrix& b) {
  for (const auto& c : columns(a))
    if (!in_column_space(b, c)) return false;
  for (const auto& c : columns(b))
    if (!in_column_space(a, c)) return false;
  return true;
}

}  // namespace

IsometryGroup isometry_group(const DistanceTable& d) {
  const Validation v = validate(d);
  if (!v.at_least_semimetric())
    throw PreconditionError("isometry_group: distance table is " + to_string(v.cls) + ", not a semimetric");

  IsometryGroup g{IsometrySearch(d).run()};
  std::sort(g.elements.begin(), g.elements.end());

  auto contains = [&](const Permutation& p) { return std::binary_search(g.elements.begin(), g.elements.end(), p); };
  if (g.elements.empty() || !g.elements.front().is_identity())
    throw ConsistencyError("isometry_group: identity missing");
  for (const auto& a : g.elements) {
    if (!contains(a.inverse())) throw ConsistencyError("isometry_group: not closed under inverse");
    for (const auto& b : g.elements)
      if (!contains(a.compose(b))) throw ConsistencyError("isometry_group: not closed under composition");
  }
  return g;
}

bool commutes_with(const ExtMatrix& g, const TropMatrix& d) {
  if (g.rows() != d.rows() || g.cols() != d.cols()) throw DimensionError("commutes_with: sizes differ");
  const ExtMatrix de = to_ext(d);
  return mat_mul(g, de) == mat_mul(de, g);
}

TropMatrix hclass_element(const TropMatrix& d, const Permutation& sigma, const Scalar& lambda) {
  require_metric_matrix(d, "hclass_element");
  if (sigma.size() != d.rows()) throw DimensionError("hclass_element: permutation has the wrong degree");
  const DistanceTable table = from_matrix(d);
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (table(sigma(i), sigma(j)) != table(i, j))
        throw PreconditionError("hclass_element: " + sigma.cycles() + " is not an isometry");
  return scale(lambda, to_finite(mat_mul(sigma.matrix(), to_ext(d))));
}

TropMatrix column_space_idempotent(const TropMatrix& m) {
  require_square(m, "column_space_idempotent");
  const auto r = rows(m);
  MatrixBuilder<Scalar> e(m.rows(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) e(i, j) = residuation(r[j], r[i]);
  return std::move(e).build();
}

bool hclass_contains(const TropMatrix& m, const TropMatrix& n) {
  require_square(m, "hclass_contains");
  if (n.rows() != m.rows() || n.cols() != m.cols()) throw DimensionError("hclass_contains: sizes differ");

  const TropMatrix e = column_space_idempotent(m);
  if (!is_idempotent(e) || !is_strongly_regular(e) || !column_spaces_equal(e, m))
    throw PreconditionError("hclass_contains: M is not regular of full rank");

  if (!column_spaces_equal(m, n)) return false;
  // R(N) = −C(M). Rows of N must lie in −C(M); conversely −C(M) = −C(E) =
  // R(E) is generated by the rows of E, so those must lie in R(N).
  for (const auto& r : rows(n))
    if (!in_column_space(e, negate(r))) return false;
  for (const auto& r : rows(e))
    if (!in_row_space(n, r)) return false;
  return true;
}

}  // namespace tropical
