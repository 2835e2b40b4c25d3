#include <doctest.h>

#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "tropical/polytope.hpp"
#include "tropical/regularity.hpp"
#include "tropical/spectral.hpp"

using namespace tropical;
using fixtures::q;

namespace {

bool same_column_space(const TropMatrix& a, const TropMatrix& b) {
  for (const auto& c : columns(a))
    if (!in_column_space(b, c)) return false;
  for (const auto& c : columns(b))
    if (!in_column_space(a, c)) return false;
  return true;
}

}  // namespace

TEST_SUITE("regularity-rank") {
  TEST_CASE("permanent examples") {
    const auto eb = permanent(fixtures::EB());
    const auto eb_brute = oracle::permanent(fixtures::EB());
    CHECK(eb_brute.value == Scalar(0));
    CHECK(eb_brute.attaining == 1);
    CHECK(eb.value == Scalar(0));
    CHECK(eb.attaining_unique);
    CHECK(eb.witness.is_identity());

    const auto zeros = permanent(TropMatrix{{0, 0}, {0, 0}});
    CHECK(zeros.value == Scalar(0));
    CHECK_FALSE(zeros.attaining_unique);

    const auto ec = permanent(fixtures::EC());
    CHECK(oracle::permanent(fixtures::EC()).attaining == 1);
    CHECK(ec.value == Scalar(0));
    CHECK(ec.attaining_unique);

    CHECK_THROWS_AS(permanent(TropMatrix{{1, 2}}), DimensionError);
  }

  TEST_CASE("permanent witness attains the value") {
    const TropMatrix a{{1, 7, 3}, {2, 4, 9}, {8, 5, 6}};
    const auto p = permanent(a);
    Scalar w;
    for (std::size_t i = 0; i < 3; ++i) w = w + a(i, p.witness(i));
    CHECK(w == p.value);
    CHECK(p.value == Scalar(24));  // 7 + 9 + 8
  }

  TEST_CASE("permanent agrees with brute force over S_n") {
    gen::Rng rng(31);
    for (int t = 0; t < 150; ++t) {
      const std::size_t n = gen::size(rng, 1, 7);
      // Coarse entries make ties between permutations common.
      const auto a = t % 2 ? gen::matrix(rng, n, n, -2, 2, 1) : gen::matrix(rng, n, n, -6, 6, 4);
      const auto fast = permanent(a);
      const auto brute = oracle::permanent(a);
      CHECK(fast.value == brute.value);
      CHECK(fast.attaining_unique == (brute.attaining == 1));
    }
  }

  TEST_CASE("is_strongly_regular examples") {
    CHECK(oracle::permanent(fixtures::EA()).attaining == 1);
    CHECK(is_strongly_regular(fixtures::EA()));
    CHECK_FALSE(is_strongly_regular(TropMatrix{{0, 0}, {0, 0}}));
    CHECK(is_strongly_regular(fixtures::EC()));
  }

  TEST_CASE("zero_diag_regularity examples") {
    CHECK(zero_diag_regularity(fixtures::EA()));
    CHECK_FALSE(zero_diag_regularity(TropMatrix{{0, 0}, {0, 0}}));
    CHECK(zero_diag_regularity(fixtures::EC()));
    CHECK_THROWS_AS(zero_diag_regularity(TropMatrix{{0, 0}, {-1, -1}}), PreconditionError);
    CHECK_THROWS_AS(zero_diag_regularity(TropMatrix{{0, 1}, {1, 0}}), PreconditionError);
  }

  TEST_CASE("zero_diag_regularity matches the permanent on random idempotents") {
    gen::Rng rng(32);
    int deficient = 0;
    for (int t = 0; t < 150; ++t) {
      const auto e = gen::zero_diag_idempotent(rng, gen::size(rng, 1, 5), t % 3 == 0 ? -1 : -3);
      const bool full = zero_diag_regularity(e);
      CHECK(full == (oracle::permanent(e).attaining == 1));
      deficient += !full;
    }
    CHECK(deficient > 10);
  }

  TEST_CASE("idempotent_rank examples") {
    CHECK(idempotent_rank(fixtures::EB()) == 3);
    CHECK(idempotent_rank(TropMatrix{{0, 0}, {0, 0}}) == 1);
    CHECK(idempotent_rank(TropMatrix{{0, -1}, {0, -1}}) == 1);
    CHECK_THROWS_AS(idempotent_rank(TropMatrix{{0, 0}, {0, -1}}), PreconditionError);
  }

  TEST_CASE("idempotent_family examples") {
    const TropMatrix zeros{{0, 0}, {0, 0}};
    const TropMatrix f1 = idempotent_family(zeros, Scalar(-1));
    CHECK(f1 == TropMatrix{{0, -1}, {0, -1}});
    CHECK(oracle::naive_mul(f1, f1) == f1);
    CHECK(same_column_space(f1, zeros));
    CHECK(idempotent_family(zeros, Scalar(-2)) == TropMatrix{{0, -2}, {0, -2}});
    CHECK_THROWS_AS(idempotent_family(fixtures::EA(), Scalar(-1)), PreconditionError);
    CHECK_THROWS_AS(idempotent_family(zeros, Scalar(0)), PreconditionError);
    CHECK_THROWS_AS(idempotent_family(zeros, Scalar(1)), PreconditionError);
  }

  TEST_CASE("rank bounds and the E(λ) family on random idempotents") {
    gen::Rng rng(33);
    int families = 0;
    for (int t = 0; t < 120; ++t) {
      const std::size_t n = gen::size(rng, 2, 5);
      const auto e = gen::zero_diag_idempotent(rng, n, t % 2 ? -1 : -3);
      const std::size_t rank = idempotent_rank(e);
      CHECK(rank <= n);
      CHECK((rank == n) == is_strongly_regular(e));
      if (rank == n) continue;

      ++families;
      const Scalar l1 = -gen::scalar(rng, 1, 4), l2 = l1 - gen::scalar(rng, 1, 3);
      const auto f1 = idempotent_family(e, l1);
      const auto f2 = idempotent_family(e, l2);
      CHECK(is_idempotent(f1));
      CHECK(is_idempotent(f2));
      CHECK(same_column_space(f1, e));
      CHECK(f1 != e);
      CHECK(f1 != f2);

      // f1 has a diagonal entry λ < 0, so it exercises the general bound.
      std::size_t zeros = 0;
      for (std::size_t i = 0; i < n; ++i) zeros += f1(i, i).is_zero();
      CHECK(idempotent_rank(f1) <= zeros);
      CHECK(idempotent_rank(f1) == rank);
    }
    CHECK(families > 20);
  }
}
