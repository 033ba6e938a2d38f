#include "doctest.h"

#include <vector>

#include "nilorb/chevalley.hpp"
#include "nilorb/rng.hpp"

using namespace nilorb;

namespace {

// Largest p with b - p*a a root (either sign), the string length entering
// |N(a,b)| = p + 1.
int string_down(const RootSystem& rs, Root a, Root b) {
  int p = 0;
  Root cur = b;
  while (true) {
    for (std::size_t x = 0; x < cur.size(); ++x) cur[x] -= a[x];
    Root neg = cur;
    for (int& v : neg) v = -v;
    if (rs.index_of(cur) < 0 && rs.index_of(neg) < 0) break;
    ++p;
  }
  return p;
}

void check_jacobi_exhaustive(const Algebra& alg) {
  const int n = alg.dim();
  for (int a = 0; a < n; ++a) {
    RatVec ea = alg.basis(a);
    for (int b = a + 1; b < n; ++b) {
      RatVec eb = alg.basis(b);
      RatVec ab = alg.bracket(ea, eb);
      for (int c = b + 1; c < n; ++c) {
        RatVec ec = alg.basis(c);
        RatVec t1 = alg.bracket(ab, ec);
        RatVec t2 = alg.bracket(alg.bracket(eb, ec), ea);
        RatVec t3 = alg.bracket(alg.bracket(ec, ea), eb);
        for (int i = 0; i < n; ++i) {
          REQUIRE(t1[i] + t2[i] + t3[i] == Rat(0));
        }
      }
    }
  }
}

void check_jacobi_random(const Algebra& alg, int samples, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const int n = alg.dim();
  for (int t = 0; t < samples; ++t) {
    const int a = static_cast<int>(rng.below(n));
    const int b = static_cast<int>(rng.below(n));
    const int c = static_cast<int>(rng.below(n));
    RatVec ea = alg.basis(a), eb = alg.basis(b), ec = alg.basis(c);
    RatVec t1 = alg.bracket(alg.bracket(ea, eb), ec);
    RatVec t2 = alg.bracket(alg.bracket(eb, ec), ea);
    RatVec t3 = alg.bracket(alg.bracket(ec, ea), eb);
    for (int i = 0; i < n; ++i) REQUIRE(t1[i] + t2[i] + t3[i] == Rat(0));
  }
}

void check_magnitudes(const Algebra& alg) {
  const RootSystem& rs = alg.rs();
  // All signed pairs (a, b) with a + b a root: extract N(a, b) from the
  // bracket [x_a, x_b] and compare |N| with the string length + 1.
  const int npos = rs.npos();
  auto signed_root = [&](int s, int k) {
    Root r = rs.pos(k);
    if (s) {
      for (int& v : r) v = -v;
    }
    return r;
  };
  auto vec_of = [&](int s, int k) {
    return alg.basis(s ? alg.xm(k) : alg.xp(k));
  };
  for (int sa = 0; sa < 2; ++sa) {
    for (int ka = 0; ka < npos; ++ka) {
      for (int sb = 0; sb < 2; ++sb) {
        for (int kb = 0; kb < npos; ++kb) {
          if (sa == sb && ka == kb) continue;
          const Root a = signed_root(sa, ka), b = signed_root(sb, kb);
          Root sum(rs.rank());
          for (int x = 0; x < rs.rank(); ++x) sum[x] = a[x] + b[x];
          Root neg = sum;
          for (int& v : neg) v = -v;
          int target = -1;
          if (rs.index_of(sum) >= 0) {
            target = alg.xp(rs.index_of(sum));
          } else if (rs.index_of(neg) >= 0) {
            target = alg.xm(rs.index_of(neg));
          } else {
            continue;  // a + b not a root (or zero): no N constant
          }
          const RatVec br = alg.bracket(vec_of(sa, ka), vec_of(sb, kb));
          Rat n = br[target];
          REQUIRE(!is_zero(n));
          const int p = string_down(rs, a, b);
          Rat mag = n < 0 ? -n : n;
          REQUIRE(mag == Rat(p + 1));
        }
      }
    }
  }
}

}  // namespace

TEST_SUITE("chevalley") {

TEST_CASE("Jacobi identity, exhaustive: A1, A2, A3, B2, G2") {
  check_jacobi_exhaustive(algebra_for('A', 1));
  check_jacobi_exhaustive(algebra_for('A', 2));
  check_jacobi_exhaustive(algebra_for('A', 3));
  check_jacobi_exhaustive(algebra_for('B', 2));
  check_jacobi_exhaustive(algebra_for('G', 2));
}

TEST_CASE("Jacobi identity, randomized: F4, E6, C3, D4") {
  check_jacobi_random(algebra_for('F', 4), 300, 101);
  check_jacobi_random(algebra_for('E', 6), 200, 103);
  check_jacobi_random(algebra_for('C', 3), 300, 107);
  check_jacobi_random(algebra_for('D', 4), 300, 109);
}

TEST_CASE("structure constant magnitudes |N(a,b)| = p+1: G2 and F4") {
  check_magnitudes(algebra_for('G', 2));
  check_magnitudes(algebra_for('F', 4));
}

TEST_CASE("antisymmetry of the positive-pair constants") {
  const Algebra& alg = algebra_for('F', 4);
  for (int i = 0; i < alg.npos(); ++i) {
    for (int j = 0; j < alg.npos(); ++j) {
      CHECK(alg.n_constant(i, j) == -alg.n_constant(j, i));
    }
  }
}

TEST_CASE("coroot bracket [x_b, x_-b] = h_b") {
  for (const Algebra* palg : {&algebra_for('G', 2), &algebra_for('F', 4)}) {
    const Algebra& alg = *palg;
    for (int k = 0; k < alg.npos(); ++k) {
      const RatVec br = alg.bracket(alg.basis(alg.xp(k)), alg.basis(alg.xm(k)));
      const std::vector<long>& co = alg.coroot(k);
      for (int i = 0; i < alg.dim(); ++i) {
        Rat want(0);
        if (i >= 2 * alg.npos()) want = Rat(co[i - 2 * alg.npos()]);
        CHECK(br[i] == want);
      }
      // Simple coroots are the h basis vectors themselves.
      if (alg.rs().height(k) == 1) {
        int simple = -1;
        for (int x = 0; x < alg.rank(); ++x) {
          if (alg.rs().pos(k)[x] == 1) simple = x;
        }
        for (int x = 0; x < alg.rank(); ++x) {
          CHECK(co[x] == (x == simple ? 1 : 0));
        }
      }
    }
  }
}

TEST_CASE("Cartan grading [h_i, x_b] = <b, a_i-check> x_b") {
  const Algebra& alg = algebra_for('F', 4);
  const RootSystem& rs = alg.rs();
  for (int i = 0; i < alg.rank(); ++i) {
    Root ai(rs.rank(), 0);
    ai[i] = 1;
    for (int k = 0; k < alg.npos(); ++k) {
      const long w = rs.cartan_int(rs.pos(k), ai);
      const RatVec up = alg.bracket(alg.basis(alg.hh(i)), alg.basis(alg.xp(k)));
      const RatVec dn = alg.bracket(alg.basis(alg.hh(i)), alg.basis(alg.xm(k)));
      for (int x = 0; x < alg.dim(); ++x) {
        CHECK(up[x] == (x == alg.xp(k) ? Rat(w) : Rat(0)));
        CHECK(dn[x] == (x == alg.xm(k) ? Rat(-w) : Rat(0)));
      }
    }
  }
}

TEST_CASE("the Cartan subalgebra is abelian") {
  const Algebra& alg = algebra_for('E', 6);
  for (int i = 0; i < alg.rank(); ++i) {
    for (int j = 0; j < alg.rank(); ++j) {
      const RatVec br = alg.bracket(alg.basis(alg.hh(i)), alg.basis(alg.hh(j)));
      for (int x = 0; x < alg.dim(); ++x) CHECK(br[x] == Rat(0));
    }
  }
}

TEST_CASE("algebra cache returns one instance per type") {
  CHECK(&algebra_for('F', 4) == &algebra_for('F', 4));
  CHECK(&algebra_for(parse_type("A2+A1")) == &algebra_for(parse_type("A2+A1")));
}

TEST_CASE("ad matches bracket, integer and rational") {
  const Algebra& alg = algebra_for('G', 2);
  SplitMix64 rng(13);
  std::vector<long> ui(alg.dim());
  RatVec u = alg.zero(), v = alg.zero();
  for (int i = 0; i < alg.dim(); ++i) {
    ui[i] = static_cast<long>(rng.below(7)) - 3;
    u[i] = Rat(ui[i]);
    v[i] = Rat(static_cast<long>(rng.below(7)) - 3);
  }
  const RatMat m = alg.ad(u);
  const IntMat mi = alg.ad_int(ui);
  const RatVec bv = alg.bracket(u, v);
  for (int i = 0; i < alg.dim(); ++i) {
    Rat acc(0);
    for (int j = 0; j < alg.dim(); ++j) {
      CHECK(m[i][j] == Rat(mi[i][j]));
      acc += m[i][j] * v[j];
    }
    CHECK(acc == bv[i]);
  }
}

}  // TEST_SUITE
