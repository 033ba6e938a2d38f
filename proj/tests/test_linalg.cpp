#include "doctest.h"

#include <vector>

#include "nilorb/linalg.hpp"
#include "nilorb/rational.hpp"
#include "nilorb/rng.hpp"

using namespace nilorb;

namespace {

RatMat rat_of(const IntMat& m) {
  RatMat out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    out[i].assign(m[i].begin(), m[i].end());
  }
  return out;
}

int rank_rref(const IntMat& m) {
  RatMat r = rat_of(m);
  return static_cast<int>(linalg::rref(r).size());
}

IntMat random_matrix(SplitMix64& rng, int rows, int cols, long lo, long hi) {
  IntMat m(rows, IntVec(cols));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      m[i][j] = lo + static_cast<long>(rng.below(hi - lo + 1));
    }
  }
  return m;
}

// rank <= r by construction: product of (rows x r) and (r x cols).
IntMat low_rank(SplitMix64& rng, int rows, int cols, int r) {
  IntMat a = random_matrix(rng, rows, r, -3, 3);
  IntMat b = random_matrix(rng, r, cols, -3, 3);
  IntMat m(rows, IntVec(cols, 0));
  for (int i = 0; i < rows; ++i) {
    for (int k = 0; k < r; ++k) {
      for (int j = 0; j < cols; ++j) m[i][j] += a[i][k] * b[k][j];
    }
  }
  return m;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("rref identifies pivots and normalizes") {
  RatMat m = {{Rat(2), Rat(4), Rat(-2)},
              {Rat(1), Rat(2), Rat(0)},
              {Rat(0), Rat(0), Rat(3)}};
  const auto pivots = linalg::rref(m);
  CHECK(pivots == std::vector<int>{0, 2});
  CHECK(m[0][0] == Rat(1));
  CHECK(m[0][1] == Rat(2));
  CHECK(m[0][2] == Rat(0));
  CHECK(m[1][2] == Rat(1));
  for (int j = 0; j < 3; ++j) CHECK(m[2][j] == Rat(0));
}

TEST_CASE("solve returns exact solutions and detects inconsistency") {
  RatMat a = {{Rat(1), Rat(2)}, {Rat(3), Rat(5)}};
  const auto x = linalg::solve(a, {Rat(5), Rat(13)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rat(1));
  CHECK((*x)[1] == Rat(2));

  RatMat bad = {{Rat(1), Rat(1)}, {Rat(2), Rat(2)}};
  CHECK_FALSE(linalg::solve(bad, {Rat(0), Rat(1)}).has_value());
  CHECK_FALSE(linalg::solvable(bad, {Rat(0), Rat(1)}));
  CHECK(linalg::solvable(bad, {Rat(1), Rat(2)}));
}

TEST_CASE("free chooser changes the particular solution, not solvability") {
  RatMat a = {{Rat(1), Rat(1), Rat(0)}};  // x + y = 2, z free
  const RatVec b = {Rat(2)};
  const auto x0 = linalg::solve(a, b);
  REQUIRE(x0.has_value());
  CHECK((*x0)[2] == Rat(0));  // default free value

  linalg::set_free_chooser([](int) { return Rat(7); });
  const auto x7 = linalg::solve(a, b);
  linalg::set_free_chooser({});
  REQUIRE(x7.has_value());
  CHECK((*x7)[2] == Rat(7));
  CHECK((*x7)[0] + (*x7)[1] == Rat(2));
}

TEST_CASE("nullspace satisfies rank-nullity and back-substitution") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const IntMat m = low_rank(rng, 6, 8, 3);
    const RatMat a = rat_of(m);
    const std::vector<RatVec> ns = linalg::nullspace(a);
    RatMat copy = a;
    const int rank = static_cast<int>(linalg::rref(copy).size());
    CHECK(static_cast<int>(ns.size()) == 8 - rank);
    for (const RatVec& v : ns) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        Rat acc(0);
        for (std::size_t j = 0; j < v.size(); ++j) acc += a[i][j] * v[j];
        CHECK(acc == Rat(0));
      }
    }
  }
}

TEST_CASE("Bareiss rank agrees with rref rank") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 12; ++trial) {
    IntMat m;
    if (trial % 2 == 0) {
      m = random_matrix(rng, 7, 7, -5, 5);
    } else {
      m = low_rank(rng, 7, 9, 2 + static_cast<int>(rng.below(3)));
    }
    CHECK(linalg::rank_exact(m) == rank_rref(m));
  }
}

TEST_CASE("modular rank agrees with exact rank on random matrices") {
  SplitMix64 rng(37);
  for (int trial = 0; trial < 12; ++trial) {
    const IntMat m = low_rank(rng, 8, 8, 1 + static_cast<int>(rng.below(7)));
    const int exact = linalg::rank_exact(m);
    const std::uint64_t p = linalg::kPrimes[0];
    CHECK(linalg::rank_mod(linalg::reduce_mod(m, p), p) == exact);
  }
}

TEST_CASE("rational reduction mod p inverts denominators") {
  const std::uint64_t p = linalg::kPrimes[0];
  RatMat m = {{Rat(3, 4), Rat(-5, 7)}};
  const auto red = linalg::reduce_mod(m, p);
  REQUIRE(red.has_value());
  CHECK((__uint128_t)(*red)[0][0] * 4 % p == 3);
  CHECK(((__uint128_t)(*red)[0][1] * 7 + 5) % p == 0);

  // Denominator divisible by p has no image.
  RatMat bad = {{Rat(Int(1), Int(p))}};
  CHECK_FALSE(linalg::reduce_mod(bad, p).has_value());
}

TEST_CASE("rank_equals_capped certifies under both kernels") {
  SplitMix64 rng(41);
  const IntMat m = low_rank(rng, 10, 10, 4);
  const int exact = linalg::rank_exact(m);

  for (auto kernel : {linalg::RankKernel::Exact, linalg::RankKernel::Modular}) {
    linalg::set_rank_kernel(kernel);
    CHECK(linalg::rank_equals_capped(m, exact));
    CHECK_FALSE(linalg::rank_equals_capped(m, exact + 1));
  }
  linalg::set_rank_kernel(linalg::RankKernel::Modular);
}

TEST_CASE("nullity_exact on degenerate inputs") {
  IntMat id(5, IntVec(5, 0));
  for (int i = 0; i < 5; ++i) id[i][i] = 1;
  CHECK(linalg::nullity_exact(id) == 0);
  IntMat zero(4, IntVec(6, 0));
  CHECK(linalg::nullity_exact(zero) == 6);
  CHECK(linalg::rank_exact(IntMat{}) == 0);
}

}  // TEST_SUITE
