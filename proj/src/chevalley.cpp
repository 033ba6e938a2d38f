#include "nilorb/chevalley.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <stdexcept>

namespace nilorb {

Algebra::Algebra(TypeSpec spec) : rs_(spec) {
  npos_ = rs_.npos();
  dim_ = 2 * npos_ + rs_.rank();
  build_constants();
  build_table();
}

long Algebra::n_constant(int i, int j) const {
  auto it = nconst_.find({i, j});
  return it == nconst_.end() ? 0 : it->second;
}

namespace {
// Largest p with b - p*a still a root (the down-string through b along a).
int down_string(const RootSystem& rs, const Root& a, const Root& b) {
  // Largest p with b - p*a a root; the string may run through negative
  // roots, so test both signs.
  int p = 0;
  Root cur = b;
  while (true) {
    for (std::size_t x = 0; x < cur.size(); ++x) cur[x] -= a[x];
    bool isroot = rs.index_of(cur) >= 0;
    if (!isroot) {
      Root neg = cur;
      for (int& v : neg) v = -v;
      isroot = rs.index_of(neg) >= 0;
    }
    if (!isroot) break;
    ++p;
  }
  return p;
}
}  // namespace

void Algebra::build_constants() {
  const int l = rs_.rank();
  // Coroots: h_b = sum_j (2 b_j d_j / (b,b)) h_j, integral in a Chevalley
  // basis.
  coroot_.resize(npos_);
  for (int k = 0; k < npos_; ++k) {
    const Root& b = rs_.pos(k);
    const long n2 = rs_.norm2(b);
    coroot_[k].resize(l);
    for (int j = 0; j < l; ++j) {
      const long num = 2L * b[j] * rs_.d(j);
      assert(num % n2 == 0);
      coroot_[k][j] = num / n2;
    }
  }

  // Positive-pair constants by the extraspecial-pair recursion, in order of
  // increasing height of the sum (the internal order is height-sorted).
  for (int g = 0; g < npos_; ++g) {
    if (rs_.height(g) < 2) continue;
    const Root& gamma = rs_.pos(g);
    std::vector<std::pair<int, int>> special;
    for (int ia = 0; ia < npos_; ++ia) {
      Root rest = gamma;
      bool ok = true;
      for (int x = 0; x < l; ++x) {
        rest[x] -= rs_.pos(ia)[x];
        if (rest[x] < 0) ok = false;
      }
      if (!ok) continue;
      const int ib = rs_.index_of(rest);
      if (ib < 0 || ia >= ib) continue;
      special.emplace_back(ia, ib);
    }
    assert(!special.empty());
    std::sort(special.begin(), special.end());
    const auto [a1, b1] = special.front();
    const int p0 = down_string(rs_, rs_.pos(a1), rs_.pos(b1));
    nconst_[{a1, b1}] = p0 + 1;
    nconst_[{b1, a1}] = -(p0 + 1);
    for (std::size_t s = 1; s < special.size(); ++s) {
      const auto [ia, ib] = special[s];
      const Root& a = rs_.pos(ia);
      const Root& b = rs_.pos(ib);
      // Jacobi identity on (x_{a1}, x_{-a}, x_{-b}); every term lands on
      // x_{-b1} and all other constants involve sums of smaller height.
      long t = 0;
      Root d1 = rs_.pos(a1);
      for (int x = 0; x < l; ++x) d1[x] -= a[x];
      bool d1_root = rs_.index_of(d1) >= 0;
      if (!d1_root) {
        Root neg = d1;
        for (int& v : neg) v = -v;
        d1_root = rs_.index_of(neg) >= 0;
      }
      if (d1_root) {
        const int s1 = rs_.index_of(d1) >= 0 ? 1 : -1;
        Root abs1 = d1;
        if (s1 < 0)
          for (int& v : abs1) v = -v;
        t += resolve(1, a1, -1, ia) * resolve(s1, rs_.index_of(abs1), -1, ib);
      }
      Root d2 = rs_.pos(a1);
      for (int x = 0; x < l; ++x) d2[x] -= b[x];
      bool d2_root = rs_.index_of(d2) >= 0;
      if (!d2_root) {
        Root neg = d2;
        for (int& v : neg) v = -v;
        d2_root = rs_.index_of(neg) >= 0;
      }
      if (d2_root) {
        const int s2 = rs_.index_of(d2) >= 0 ? 1 : -1;
        Root abs2 = d2;
        if (s2 < 0)
          for (int& v : abs2) v = -v;
        t += resolve(-1, ib, 1, a1) * resolve(s2, rs_.index_of(abs2), -1, ia);
      }
      const long denom = resolve(-1, g, 1, a1);
      assert(denom != 0 && t % denom == 0);
      const long value = t / denom;
      const int p = down_string(rs_, a, b);
      if (std::abs(value) != p + 1) {
        throw std::logic_error(
            "structure constant magnitude check failed: " + rs_.name() +
            " pair (" + std::to_string(ia) + "," + std::to_string(ib) +
            ") sum " + std::to_string(g) + " value " + std::to_string(value) +
            " expected magnitude " + std::to_string(p + 1));
      }
      nconst_[{ia, ib}] = value;
      nconst_[{ib, ia}] = -value;
    }
  }
}

// N value for the signed pair (sa * b_ia, sb * b_ib); both roots nonzero,
// their sum a (signed) root.  Reduces to the positive-pair table.
long Algebra::resolve(int sa, int ia, int sb, int ib) const {
  if (sa > 0 && sb > 0) {
    auto it = nconst_.find({ia, ib});
    assert(it != nconst_.end());
    return it->second;
  }
  if (sa < 0 && sb < 0) return -resolve(1, ia, 1, ib);
  if (sa < 0) return -resolve(sb, ib, sa, ia);
  // sa > 0, sb < 0: z = a - b (as vectors), a triple a + (-b) + (-z) = 0.
  const Root& a = rs_.pos(ia);
  const Root& b = rs_.pos(ib);
  Root z = a;
  for (std::size_t x = 0; x < z.size(); ++x) z[x] -= b[x];
  const int zi = rs_.index_of(z);
  if (zi >= 0) {
    const long num = -resolve(1, ib, 1, zi) * rs_.norm2(rs_.pos(zi));
    const long den = rs_.norm2(a);
    assert(num % den == 0);
    return num / den;
  }
  Root nz = z;
  for (int& v : nz) v = -v;
  const int ni = rs_.index_of(nz);
  assert(ni >= 0);
  const long num = resolve(1, ni, 1, ia) * rs_.norm2(rs_.pos(ni));
  const long den = rs_.norm2(b);
  assert(num % den == 0);
  return num / den;
}

void Algebra::build_table() {
  const int l = rs_.rank();
  table_.assign(static_cast<std::size_t>(dim_) * dim_, {});
  auto at = [&](int i, int j) -> std::vector<std::pair<int, long>>& {
    return table_[static_cast<std::size_t>(i) * dim_ + j];
  };
  // Signed root of basis index k: (+1, k) or (-1, k - npos).
  auto sroot = [&](int k) -> std::pair<int, int> {
    return k < npos_ ? std::make_pair(1, k) : std::make_pair(-1, k - npos_);
  };
  for (int i = 0; i < 2 * npos_; ++i) {
    const auto [si, ri] = sroot(i);
    for (int j = 0; j < 2 * npos_; ++j) {
      if (i == j) continue;
      const auto [sj, rj] = sroot(j);
      if (ri == rj && si != sj) {
        // [x_b, x_{-b}] = h_b (and the opposite order gives -h_b).
        for (int t = 0; t < l; ++t) {
          const long c = si * coroot_[ri][t];
          if (c != 0) at(i, j).emplace_back(hh(t), c);
        }
        continue;
      }
      Root sum(l, 0);
      for (int x = 0; x < l; ++x) {
        sum[x] = si * rs_.pos(ri)[x] + sj * rs_.pos(rj)[x];
      }
      int sgn_sum = 1;
      int idx = rs_.index_of(sum);
      if (idx < 0) {
        Root neg = sum;
        for (int& v : neg) v = -v;
        idx = rs_.index_of(neg);
        sgn_sum = -1;
      }
      if (idx < 0) continue;  // sum is not a root: bracket vanishes
      const long c = resolve(si, ri, sj, rj);
      at(i, j).emplace_back(sgn_sum > 0 ? xp(idx) : xm(idx), c);
    }
  }
  // [h_i, x_b] = <b, a_i-check> x_b; [x_b, h_i] = -...; [h, h] = 0.
  for (int t = 0; t < l; ++t) {
    for (int j = 0; j < 2 * npos_; ++j) {
      const auto [sj, rj] = sroot(j);
      long w = 0;
      for (int x = 0; x < l; ++x) w += rs_.pos(rj)[x] * rs_.cartan(x, t);
      w *= sj;
      if (w != 0) {
        at(hh(t), j).emplace_back(j, w);
        at(j, hh(t)).emplace_back(j, -w);
      }
    }
  }
  // Antisymmetry sanity on the root-pair part.
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < i; ++j) {
      const auto& fwd = at(i, j);
      const auto& bwd = at(j, i);
      assert(fwd.size() == bwd.size());
      (void)fwd;
      (void)bwd;
    }
  }
}

RatVec Algebra::basis(int k) const {
  RatVec v = zero();
  v[k] = 1;
  return v;
}

RatVec Algebra::bracket(const RatVec& u, const RatVec& v) const {
  RatVec out = zero();
  for (int i = 0; i < dim_; ++i) {
    if (is_zero(u[i])) continue;
    for (int j = 0; j < dim_; ++j) {
      if (is_zero(v[j])) continue;
      for (const auto& [k, c] : table(i, j)) out[k] += u[i] * v[j] * c;
    }
  }
  return out;
}

RatMat Algebra::ad(const RatVec& u) const {
  RatMat m(dim_, RatVec(dim_, Rat(0)));
  for (int i = 0; i < dim_; ++i) {
    if (is_zero(u[i])) continue;
    for (int j = 0; j < dim_; ++j) {
      for (const auto& [k, c] : table(i, j)) m[k][j] += u[i] * c;
    }
  }
  return m;
}

IntMat Algebra::ad_int(const std::vector<long>& u) const {
  IntMat m(dim_, IntVec(dim_, 0));
  for (int i = 0; i < dim_; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      for (const auto& [k, c] : table(i, j)) m[k][j] += u[i] * c;
    }
  }
  return m;
}

std::vector<RatVec> Algebra::centralizer(const RatVec& u) const {
  return linalg::nullspace(ad(u));
}

bool Algebra::is_nilpotent(const RatVec& u) const {
  bool all_zero = true;
  for (const Rat& q : u) {
    if (!is_zero(q)) {
      all_zero = false;
      break;
    }
  }
  if (all_zero) return true;
  const RatMat m = ad(u);
  RatMat m2(dim_, RatVec(dim_, Rat(0)));
  for (int i = 0; i < dim_; ++i) {
    for (int k = 0; k < dim_; ++k) {
      if (is_zero(m[i][k])) continue;
      for (int j = 0; j < dim_; ++j) {
        if (!is_zero(m[k][j])) m2[i][j] += m[i][k] * m[k][j];
      }
    }
  }
  RatVec rhs(dim_);
  for (int i = 0; i < dim_; ++i) rhs[i] = -2 * u[i];
  return linalg::solvable(m2, rhs);
}

namespace {
std::map<std::string, std::unique_ptr<Algebra>> g_cache;
std::mutex g_cache_mu;
}  // namespace

const Algebra& algebra_for(const TypeSpec& spec) {
  std::lock_guard<std::mutex> lock(g_cache_mu);
  auto& slot = g_cache[spec.name()];
  if (!slot) slot = std::make_unique<Algebra>(spec);
  return *slot;
}

const Algebra& algebra_for(char family, int rank) {
  TypeSpec spec;
  spec.parts.emplace_back(family, rank);
  return algebra_for(spec);
}

}  // namespace nilorb
