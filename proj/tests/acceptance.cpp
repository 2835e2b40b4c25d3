// Acceptance suite: one PASS/FAIL line per criterion, all checks exact.
//
// usage: acceptance <path-to-tropmetric> <tests-directory>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "tropical/matrix_io.hpp"
#include "tropical/metric.hpp"
#include "tropical/polytope.hpp"
#include "tropical/regularity.hpp"
#include "tropical/spectral.hpp"
#include "tropical/svg.hpp"
#include "tropical/symmetry.hpp"

using namespace tropical;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  long checks = 0;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

fs::path g_cli;
fs::path g_tests;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args) {
  const std::string cmd = "\"" + g_cli.string() + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path data(const std::string& name) { return g_tests / "data" / (name + ".tmat"); }

// Zero-diagonal idempotents and strongly regular idempotents used across
// criteria 8 and 10.
std::vector<TropMatrix> corpus() {
  std::vector<TropMatrix> out{fixtures::EA(), fixtures::EB(), fixtures::EC(), to_matrix(fixtures::cube()),
                              to_matrix(fixtures::discrete(4)), TropMatrix{{0}}};
  gen::Rng rng(1001);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = gen::size(rng, 1, 6);
    out.push_back(t % 3 == 0   ? gen::zero_diag_idempotent(rng, n)
                  : t % 3 == 1 ? gen::semimetric_matrix(rng, n)
                               : gen::metric_matrix(rng, n));
  }
  return out;
}

Outcome ac1() {
  Outcome o;
  for (const auto& [name, e] : {std::pair{"EA", fixtures::EA()}, {"EB", fixtures::EB()}, {"EC", fixtures::EC()}}) {
    o.expect(is_idempotent(e), std::string(name) + " not idempotent");
    o.expect(is_strongly_regular(e), std::string(name) + " not strongly regular");
  }
  o.expect(!classify(fixtures::EA()).is_semimetric_matrix, "EA classified as semimetric");
  const auto b = classify(fixtures::EB());
  o.expect(b.is_semimetric_matrix && !b.is_metric_matrix, "EB not semimetric-not-metric");
  o.expect(classify(fixtures::EC()).is_metric_matrix, "EC not metric");
  return o;
}

Outcome ac2() {
  Outcome o;
  o.expect(polytrope_vertices_2d(fixtures::EA()) == std::vector<Point2>{{0, 0}, {3, 0}, {3, 3}}, "EA vertices");
  const auto vs = polytrope_vertices_2d(fixtures::EB());
  for (const Point2& g : std::vector<Point2>{{-1, -2}, {0, 1}, {2, -1}})
    o.expect(std::find(vs.begin(), vs.end(), g) != vs.end(), "EB generator projection missing");
  o.expect(vs.size() == 6, "EB is not a hexagon");
  const auto origin = TropVector::zero(3);
  o.expect(interior_point(fixtures::EB(), origin), "origin not interior for EB");
  o.expect(interior_point(fixtures::EC(), origin), "origin not interior for EC");
  o.expect(!interior_point(fixtures::EA(), origin), "origin interior for EA");
  return o;
}

Outcome ac3() {
  Outcome o;
  const auto d = fixtures::cube();
  const auto pts = embed(d);
  const std::vector<TropVector> expected{
      TropVector{0, -2, -2, -1}, TropVector{-2, 0, -2, -1}, TropVector{-2, -2, 0, -1}, TropVector{-1, -1, -1, 0}};
  o.expect(pts == expected, "embedded points differ");
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      o.expect(residuation_distance(pts[i], pts[j]) == d(i, j), "delta differs from d");
      o.expect(residuation_distance(pts[j], pts[i]) == d(j, i), "delta differs from d");
      o.expect(hilbert_distance(pts[i], pts[j]) == d(i, j), "d_H differs from d");
    }
  return o;
}

Outcome ac4() {
  Outcome o;
  gen::Rng rng(1004);
  for (int t = 0; t < 400; ++t) {
    const std::size_t n = gen::size(rng, 1, 6);
    TropMatrix a = t % 2 ? gen::semimetric_matrix(rng, n, t % 4 == 1) : gen::zero_diag_idempotent(rng, n);
    if (t % 3 == 0 && n > 1) {
      const std::size_t i = rng() % n, j = (i + 1 + rng() % (n - 1)) % n;
      a = a.with(i, j, a(i, j) + gen::scalar(rng, -2, 2));
    }
    const auto r = classify(a);
    const bool tri = oracle::triangle(negate(a));
    const bool idem = r.idempotent && r.zero_diagonal;
    o.expect(tri == idem && idem == r.kleene_fixed, "three triangle conditions disagree");
    const bool semi = r.is_semimetric_matrix;
    o.expect(semi == (r.strongly_regular && r.off_diagonal_negative && r.idempotent), "SR ∧ negative ∧ idempotent");
    o.expect(semi == (r.kleene_fixed && r.off_diagonal_negative), "star fixed ∧ negative");
    o.expect(semi == (r.strongly_regular && r.idempotent && r.origin_in_interior), "origin interior of C(A)");
    o.expect(semi == (r.strongly_regular && r.idempotent && r.origin_in_row_interior), "origin interior of R(A)");
    o.expect(semi == validate(from_matrix(a)).at_least_semimetric(), "distance validation");
    if (semi) o.expect(r.columns_sum_to_zero && r.rows_sum_to_zero, "column or row sums");
    o.expect(r.is_metric_matrix == (semi && r.symmetric), "metric condition");
  }
  return o;
}

Outcome ac5() {
  Outcome o;
  gen::Rng rng(1005);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = gen::size(rng, 1, 7);
    const auto a = gen::matrix(rng, n, n, -3, 3, 1 + static_cast<long>(rng() % 2));
    const auto p = permanent(a);
    const auto b = oracle::permanent(a);
    o.expect(p.value == b.value, "permanent value");
    o.expect(p.attaining_unique == (b.attaining == 1), "uniqueness flag");
  }
  return o;
}

Outcome ac6() {
  Outcome o;
  gen::Rng rng(1006);
  for (int t = 0; t < 150; ++t) {
    const auto a = gen::nonpositive_eigenvalue(rng, gen::size(rng, 1, 6));
    const auto s = kleene_star(a);
    o.expect(s.converges, "star diverged on nonpositive eigenvalue");
    if (!s.converges) continue;
    o.expect(*s.star == oracle::series_star(a), "star differs from series");
    const auto ss = kleene_star(*s.star);
    o.expect(ss.converges && *ss.star == *s.star, "star not idempotent under star");
  }
  return o;
}

Outcome ac7() {
  Outcome o;
  gen::Rng rng(1007);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = gen::size(rng, 1, 5);
    const bool sym = t < 60;
    const auto e = gen::semimetric_matrix(rng, n, sym);
    for (const auto& r : rows(e)) {
      const auto neg = negate(r);
      o.expect(mat_vec(e, neg) == neg, "E ⊗ (−r) ≠ −r");
      o.expect(in_column_space(e, neg), "−r not in C(E)");
    }
    o.expect(negation_closed(e) == is_symmetric(e), "negation closure vs symmetry");
  }
  return o;
}

Outcome ac8() {
  Outcome o;
  gen::Rng rng(1008);
  for (int t = 0; t < 1500; ++t) {
    const std::size_t n = gen::size(rng, 1, 6);
    const auto x = gen::vector(rng, n), y = gen::vector(rng, n), z = gen::vector(rng, n);
    o.expect(residuation_distance(x, z) <= residuation_distance(x, y) + residuation_distance(y, z), "delta triangle");
  }
  int antichains = 0;
  for (int t = 0; t < 400; ++t) {
    const std::size_t n = gen::size(rng, 2, 5);
    std::vector<TropVector> pts;
    for (std::size_t k = 0; k < gen::size(rng, 2, 5); ++k) pts.push_back(gen::vector(rng, n, -3, 3));
    if (t % 2) pts = columns(gen::semimetric_matrix(rng, n));
    if (!is_antichain(pts)) continue;
    ++antichains;
    for (const auto& p : pts)
      for (const auto& q : pts)
        if (p != q) o.expect(residuation_distance(p, q) > 0, "delta not positive on antichain");
  }
  o.expect(antichains >= 200, "too few antichains generated");
  for (const auto& e : corpus()) {
    if (!has_zero_diagonal(e)) continue;
    const std::size_t n = e.rows();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        o.expect(e(i, j) == residuation(row(e, j), row(e, i)), "E_ij ≠ ⟨r_j|r_i⟩");
        o.expect(e(i, j) == residuation(column(e, i), column(e, j)), "E_ij ≠ ⟨c_i|c_j⟩");
      }
  }
  return o;
}

Outcome ac9() {
  Outcome o;
  gen::Rng rng(1009);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = gen::size(rng, 1, 6);
    TropMatrix d = gen::metric_matrix(rng, n);
    if (t % 2) {
      MatrixBuilder<Scalar> b(n, n, Scalar(0));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) b(i, j) = b(j, i) = Scalar(1 + static_cast<long>(rng() % 2));
      d = to_matrix(DistanceTable(std::move(b).build()));
    }
    o.expect(isometry_group(from_matrix(d)).elements == oracle::isometries(d), "isometry group vs brute force");
  }
  for (const auto& d : {fixtures::EC(), to_matrix(fixtures::cube())}) {
    const auto group = isometry_group(from_matrix(d));
    const std::vector<Scalar> lambdas{0, 1, fixtures::q("-5/2")};
    for (const auto& s : group.elements)
      for (const auto& l : lambdas)
        for (const auto& u : group.elements)
          for (const auto& m : lambdas)
            o.expect(mat_mul(hclass_element(d, s, l), hclass_element(d, u, m)) ==
                         hclass_element(d, s.compose(u), l + m),
                     "homomorphism law");
  }
  o.expect(isometry_group(from_matrix(fixtures::EC())).order() == 2, "EC order");
  o.expect(isometry_group(fixtures::cube()).order() == 6, "cube order");
  o.expect(isometry_group(fixtures::discrete(3)).order() == 6, "discrete order");
  return o;
}

Outcome ac10() {
  Outcome o;
  gen::Rng rng(1010);
  int tested = 0;
  for (const auto& e : corpus()) {
    if (!is_strongly_regular(e)) continue;
    ++tested;
    for (int s = 0; s < 20; ++s) {
      const auto x = mat_vec(e, gen::vector(rng, e.rows())), y = mat_vec(e, gen::vector(rng, e.rows()));
      o.expect(in_column_space(e, vec_min(x, y)), "min of members left C(E)");
    }
  }
  o.expect(tested >= 40, "too few strongly regular idempotents");
  return o;
}

Outcome ac11() {
  Outcome o;
  gen::Rng rng(1011);
  for (int t = 0; t < 200; ++t) {
    const auto m = gen::matrix(rng, gen::size(rng, 1, 6), gen::size(rng, 1, 6), -20, 20, 7);
    o.expect(parse_matrix(serialize(m)) == m, "round trip");
  }
  const fs::path tmp = fs::temp_directory_path() / "tropical_acceptance";
  fs::create_directories(tmp);
  for (const std::string name : {"ea", "eb", "ec"}) {
    const auto golden = slurp(g_tests / "golden" / (name + ".svg"));
    o.expect(!golden.empty(), "missing golden " + name);
    o.expect(render_svg(read_matrix_file(data(name))) == golden, "library SVG differs for " + name);
    const auto out = tmp / (name + ".svg");
    o.expect(run_cli("render \"" + data(name).string() + "\" -o \"" + out.string() + "\"") == 0, "render exit");
    o.expect(slurp(out) == golden, "CLI SVG differs for " + name);
  }
  fs::remove_all(tmp);
  o.expect(run_cli("classify \"" + data("ec").string() + "\"") == 0, "exit 0 on success");
  o.expect(run_cli("") == 1, "exit 1 without subcommand");
  o.expect(run_cli("classify --bogus-flag \"" + data("ec").string() + "\"") == 1, "exit 1 on bad flag");
  o.expect(run_cli("classify \"" + data("ragged").string() + "\"") == 2, "exit 2 on ragged file");
  o.expect(run_cli("render \"" + data("discrete4").string() + "\" -o /dev/null") == 3, "exit 3 on precondition");
  o.expect(run_cli("hclass \"" + data("ec").string() + "\" --perm \"2 1 3\" --lambda 0") == 3,
           "exit 3 on non-isometry");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <tropmetric> <tests-dir>\n";
    return 2;
  }
  g_cli = argv[1];
  g_tests = argv[2];

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"golden idempotents and classification", ac1},
      {"projectivised polytrope geometry", ac2},
      {"cube metric embedding", ac3},
      {"triangle and semimetric condition agreement", ac4},
      {"permanent vs brute force", ac5},
      {"Kleene star vs series", ac6},
      {"row duality and negation closure", ac7},
      {"residuation distance properties", ac8},
      {"isometry groups and H-class law", ac9},
      {"min-plus closure of column spaces", ac10},
      {"IO round trip, SVG goldens, exit codes", ac11},
  };

  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] AC%zu %s (%ld checks)%s%s\n", o.ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                o.checks, o.ok ? "" : ": ", o.detail.c_str());
    failed += !o.ok;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
