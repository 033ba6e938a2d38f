#include "nilorb/linalg.hpp"

#include <cassert>
#include <cstdlib>
#include <utility>

namespace nilorb::linalg {

namespace {
bool g_verify = false;
FreeChooser g_chooser;
RankKernel g_kernel = RankKernel::Modular;

void check(bool ok, const char* what) {
  if (!ok) {
    std::fprintf(stderr, "linalg verification failed: %s\n", what);
    std::abort();
  }
}
}  // namespace

void set_verify(bool on) { g_verify = on; }
bool verify_enabled() { return g_verify; }

void set_free_chooser(FreeChooser chooser) { g_chooser = std::move(chooser); }

Rat free_value(int column) {
  if (g_chooser) return g_chooser(column);
  return Rat(0);
}

void set_rank_kernel(RankKernel k) { g_kernel = k; }
RankKernel rank_kernel() { return g_kernel; }

std::vector<int> rref(RatMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i) {
      if (!is_zero(m[i][c])) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    const Rat inv = 1 / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      const Rat f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank_exact(IntMat m) {
  if (m.empty() || m[0].empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  Int prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i) {
      if (sgn(m[i][c]) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        Int t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        // Bareiss: division by the previous pivot is exact.
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

int rank_exact(const RatMat& m) {
  IntMat z(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    const Int d = denominator_lcm(m[i]);
    z[i].reserve(m[i].size());
    for (const Rat& q : m[i]) {
      Rat s = q * Rat(d);
      assert(s.get_den() == 1);
      z[i].push_back(s.get_num());
    }
  }
  return rank_exact(std::move(z));
}

namespace {
// Forward elimination on [A|b] tracking whether any pivot lands in the last
// column (which would mean inconsistency).
bool consistency(RatMat aug) {
  if (aug.empty()) return true;
  const int rows = static_cast<int>(aug.size());
  const int cols = static_cast<int>(aug[0].size());
  int r = 0;
  for (int c = 0; c < cols - 1 && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i) {
      if (!is_zero(aug[i][c])) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(aug[r], aug[p]);
    for (int i = r + 1; i < rows; ++i) {
      if (is_zero(aug[i][c])) continue;
      const Rat f = aug[i][c] / aug[r][c];
      for (int j = c; j < cols; ++j) aug[i][j] -= f * aug[r][j];
    }
    ++r;
  }
  for (int i = r; i < rows; ++i) {
    if (!is_zero(aug[i][cols - 1])) return false;
  }
  return true;
}
}  // namespace

bool solvable(const RatMat& a, const RatVec& b) {
  assert(a.size() == b.size());
  RatMat aug(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    aug[i] = a[i];
    aug[i].push_back(b[i]);
  }
  return consistency(std::move(aug));
}

std::optional<RatVec> solve(const RatMat& a, const RatVec& b) {
  assert(a.size() == b.size());
  if (a.empty()) return RatVec{};
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  RatMat aug(rows);
  for (int i = 0; i < rows; ++i) {
    aug[i] = a[i];
    aug[i].push_back(b[i]);
  }
  const std::vector<int> pivots = rref(aug);
  // A pivot in the augmented column means the system is inconsistent.
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  RatVec x(cols, Rat(0));
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  for (int c = 0; c < cols; ++c) {
    if (!is_pivot[c]) x[c] = free_value(c);
  }
  for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
    const int c = pivots[r];
    Rat v = aug[r][cols];
    for (int j = c + 1; j < cols; ++j) {
      if (!is_zero(aug[r][j])) v -= aug[r][j] * x[j];
    }
    x[c] = v;  // pivot entry is 1 after rref
  }
  if (g_verify) {
    for (int i = 0; i < rows; ++i) {
      Rat acc(0);
      for (int j = 0; j < cols; ++j) acc += a[i][j] * x[j];
      check(acc == b[i], "solve back-substitution");
    }
  }
  return x;
}

std::vector<RatVec> nullspace(const RatMat& a) {
  if (a.empty()) return {};
  const int cols = static_cast<int>(a[0].size());
  RatMat m = a;
  const std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    RatVec v(cols, Rat(0));
    v[c] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -m[r][c];
    }
    if (g_verify) {
      for (const RatVec& row : a) {
        Rat acc(0);
        for (int j = 0; j < cols; ++j) acc += row[j] * v[j];
        check(is_zero(acc), "nullspace vector");
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<std::uint64_t>> reduce_mod(const IntMat& m,
                                                   std::uint64_t p) {
  std::vector<std::vector<std::uint64_t>> out(m.size());
  Int q;
  for (std::size_t i = 0; i < m.size(); ++i) {
    out[i].resize(m[i].size());
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      mpz_mod_ui(q.get_mpz_t(), m[i][j].get_mpz_t(), p);
      out[i][j] = q.get_ui();
    }
  }
  return out;
}

namespace {
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // Fermat: p is prime and a != 0 (mod p).
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = (__uint128_t)result * base % p;
    base = (__uint128_t)base * base % p;
    e >>= 1;
  }
  return result;
}
}  // namespace

std::optional<std::vector<std::vector<std::uint64_t>>> reduce_mod(
    const RatMat& m, std::uint64_t p) {
  std::vector<std::vector<std::uint64_t>> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    out[i].resize(m[i].size());
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      const Rat& x = m[i][j];
      const std::uint64_t den = mpz_fdiv_ui(x.get_den().get_mpz_t(), p);
      if (den == 0) return std::nullopt;  // entry has no image mod p
      const std::uint64_t num = mpz_fdiv_ui(x.get_num().get_mpz_t(), p);
      out[i][j] = (__uint128_t)num * inv_mod(den, p) % p;
    }
  }
  return out;
}

int rank_mod(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
  if (m.empty() || m[0].empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (m[i][c] % p != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    const std::uint64_t inv = inv_mod(m[r][c], p);
    for (int i = r + 1; i < rows; ++i) {
      const std::uint64_t f = (__uint128_t)(m[i][c] % p) * inv % p;
      if (f == 0) continue;
      for (int j = c; j < cols; ++j) {
        const std::uint64_t sub = (__uint128_t)f * m[r][j] % p;
        m[i][j] = (m[i][j] + p - sub) % p;
      }
    }
    ++r;
  }
  return r;
}

bool rank_equals_capped(const IntMat& m, int cap) {
  if (g_kernel == RankKernel::Exact) return rank_exact(m) == cap;
  for (std::size_t attempt = 0; attempt < 2; ++attempt) {
    const std::uint64_t p = kPrimes[attempt];
    if (rank_mod(reduce_mod(m, p), p) == cap) return true;  // certified
  }
  return false;
}

int nullity_exact(const IntMat& m) {
  if (m.empty()) return 0;
  return static_cast<int>(m[0].size()) - rank_exact(m);
}

}  // namespace nilorb::linalg
