#include "nilorb/orbits.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "nilorb/rng.hpp"

#ifdef NILORB_HAVE_OPENMP
#include <omp.h>
#endif

namespace nilorb {

namespace {
int weight_of(const RootSystem& rs, int k, const std::vector<int>& wdd) {
  const Root& r = rs.pos(k);
  int acc = 0;
  for (int x = 0; x < rs.rank(); ++x) acc += r[x] * wdd[x];
  return acc;
}

void trim(Signature& s) {
  while (s.size() > 1 && s.back() == 0) s.pop_back();
}
}  // namespace

Signature signature_from_wdd(const RootSystem& rs,
                             const std::vector<int>& wdd) {
  int maxw = 0;
  std::vector<int> counts;
  for (int k = 0; k < rs.npos(); ++k) {
    const int w = weight_of(rs, k, wdd);
    if (w >= static_cast<int>(counts.size())) counts.resize(w + 1, 0);
    counts[w] += 1;
    maxw = std::max(maxw, w);
  }
  Signature sig(std::max(1, maxw + 1), 0);
  for (int w = 0; w <= maxw; ++w) sig[w] = counts[w];
  sig[0] = rs.rank() + 2 * counts[0];
  trim(sig);
  return sig;
}

int orbit_dim_from_signature(int dim_g, const Signature& sig) {
  const int c0 = sig.empty() ? dim_g : sig[0];
  const int c1 = sig.size() > 1 ? sig[1] : 0;
  return dim_g - c0 - c1;
}

int orbit_dim_from_wdd(const RootSystem& rs, const std::vector<int>& wdd) {
  const int dim_g = 2 * rs.npos() + rs.rank();
  return orbit_dim_from_signature(dim_g, signature_from_wdd(rs, wdd));
}

RatVec characteristic_coords(const RootSystem& rs, const std::vector<int>& wdd) {
  const int l = rs.rank();
  RatMat a(l, RatVec(l, Rat(0)));
  RatVec b(l);
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) a[i][j] = rs.cartan(i, j);
    b[i] = wdd[i];
  }
  const auto c = linalg::solve(a, b);
  assert(c.has_value());  // the Cartan matrix is invertible
  return *c;
}

namespace {
// Consistency of an integer augmented system mod p (last column = rhs).
bool consistent_mod(std::vector<std::vector<long>> aug, std::uint64_t p) {
  const int rows = static_cast<int>(aug.size());
  if (rows == 0) return true;
  const int cols = static_cast<int>(aug[0].size());
  const long sp = static_cast<long>(p);
  for (auto& row : aug) {
    for (long& v : row) {
      v %= sp;
      if (v < 0) v += sp;
    }
  }
  int r = 0;
  for (int c = 0; c < cols - 1 && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (aug[i][c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(aug[r], aug[piv]);
    // Inverse of the pivot by Fermat.
    std::uint64_t inv = 1, base = static_cast<std::uint64_t>(aug[r][c]),
                  e = p - 2;
    while (e) {
      if (e & 1) inv = (__uint128_t)inv * base % p;
      base = (__uint128_t)base * base % p;
      e >>= 1;
    }
    for (int i = r + 1; i < rows; ++i) {
      if (aug[i][c] == 0) continue;
      const std::uint64_t f =
          (__uint128_t)static_cast<std::uint64_t>(aug[i][c]) * inv % p;
      for (int j = c; j < cols; ++j) {
        const std::uint64_t sub =
            (__uint128_t)f * static_cast<std::uint64_t>(aug[r][j]) % p;
        aug[i][j] = static_cast<long>(
            (static_cast<std::uint64_t>(aug[i][j]) + p - sub) % p);
      }
    }
    ++r;
  }
  for (int i = r; i < rows; ++i) {
    if (aug[i][cols - 1] != 0) return false;
  }
  return true;
}
}  // namespace

bool admits_triple(const Algebra& alg, const std::vector<int>& wdd,
                   std::uint64_t seed) {
  const RootSystem& rs = alg.rs();
  const int l = rs.rank();
  std::vector<int> g2;
  std::vector<int> row_of(alg.dim(), -1);
  int nrows = 0;
  for (int k = 0; k < rs.npos(); ++k) {
    const int w = weight_of(rs, k, wdd);
    if (w == 2) g2.push_back(k);
    if (w == 0) {
      row_of[alg.xp(k)] = nrows++;
      row_of[alg.xm(k)] = nrows++;
    }
  }
  for (int t = 0; t < l; ++t) row_of[alg.hh(t)] = nrows++;

  bool zero = true;
  for (int x : wdd) {
    if (x != 0) zero = false;
  }
  if (zero) return true;  // the zero orbit
  if (g2.empty()) return false;

  // Integer rhs: scale the characteristic coordinates by their common
  // denominator, and scale matrix rows to match.
  const RatVec c = characteristic_coords(rs, wdd);
  const Int den = denominator_lcm(c);
  assert(den.fits_slong_p());
  const long scale = den.get_si();
  std::vector<long> rhs(nrows, 0);
  for (int t = 0; t < l; ++t) {
    Rat s = c[t] * Rat(den);
    assert(s.get_den() == 1 && s.get_num().fits_slong_p());
    rhs[row_of[alg.hh(t)]] = s.get_num().get_si();
  }

  const int cols = static_cast<int>(g2.size());
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<long> coeff(cols, 1);
    if (attempt > 0) {
      bool nonzero = false;
      for (int i = 0; i < cols; ++i) {
        coeff[i] = static_cast<long>(rng.below(11));
        if (coeff[i]) nonzero = true;
      }
      if (!nonzero) continue;
    }
    // System [e, y] = h_w with y supported on x_{-b}, w(b) = 2; every bracket
    // [e, x_{-b}] lands in g(0), so only those coordinate rows are kept.
    // The whole system is integral; rows are pre-scaled by the rhs
    // denominator.
    std::vector<std::vector<long>> aug(nrows, std::vector<long>(cols + 1, 0));
    for (int col = 0; col < cols; ++col) {
      const int ym = alg.xm(g2[col]);
      for (int ei = 0; ei < cols; ++ei) {
        if (coeff[ei] == 0) continue;
        const int xe = alg.xp(g2[ei]);
        for (const auto& [k, cc] : alg.table(xe, ym)) {
          const int r = row_of[k];
          assert(r >= 0 && "bracket left the g(0) block");
          aug[r][col] += scale * coeff[ei] * cc;
        }
      }
    }
    for (int r = 0; r < nrows; ++r) aug[r][cols] = rhs[r];
    // Two-prime modular screen: if the system is inconsistent modulo both
    // primes, this attempt cannot succeed (up to vanishing minors, which the
    // retry loop absorbs).  A modular pass is then certified exactly.
    if (!consistent_mod(aug, linalg::kPrimes[0]) &&
        !consistent_mod(aug, linalg::kPrimes[1])) {
      continue;
    }
    RatMat a(nrows, RatVec(cols, Rat(0)));
    RatVec b(nrows, Rat(0));
    for (int r = 0; r < nrows; ++r) {
      for (int col = 0; col < cols; ++col) a[r][col] = aug[r][col];
      b[r] = aug[r][cols];
    }
    if (linalg::solvable(a, b)) return true;
  }
  return false;
}

std::vector<std::vector<int>> enumerate_orbit_wdds(const Algebra& alg,
                                                   std::uint64_t seed,
                                                   int jobs) {
  const int l = alg.rank();
  long total = 1;
  for (int i = 0; i < l; ++i) total *= 3;
  std::vector<char> accepted(total, 0);

  auto candidate = [&](long id) {
    std::vector<int> w(l);
    for (int i = 0; i < l; ++i) {
      w[i] = static_cast<int>(id % 3);
      id /= 3;
    }
    return w;
  };
  auto run_one = [&](long id) {
    const std::vector<int> w = candidate(id);
    std::string key = "wdd/" + alg.rs().name() + "/";
    for (int x : w) key += static_cast<char>('0' + x);
    accepted[id] = admits_triple(alg, w, derive_seed(seed, key)) ? 1 : 0;
  };

#ifdef NILORB_HAVE_OPENMP
  if (jobs != 1) {
#pragma omp parallel for schedule(dynamic) num_threads(jobs > 0 ? jobs : omp_get_max_threads())
    for (long id = 0; id < total; ++id) run_one(id);
  } else {
    for (long id = 0; id < total; ++id) run_one(id);
  }
#else
  (void)jobs;
  for (long id = 0; id < total; ++id) run_one(id);
#endif

  std::vector<std::vector<int>> out;
  for (long id = 0; id < total; ++id) {
    if (accepted[id]) out.push_back(candidate(id));
  }
  std::sort(out.begin(), out.end(),
            [&](const std::vector<int>& a, const std::vector<int>& b) {
              const int da = orbit_dim_from_wdd(alg.rs(), a);
              const int db = orbit_dim_from_wdd(alg.rs(), b);
              if (da != db) return da < db;
              return a < b;
            });
  return out;
}

namespace {
// Eigenspace dimensions of ad(h) at integer eigenvalues 0, 1, 2, ... with
// modular certification: nullity_p >= nullity, so a family of counts summing
// to the full dimension is exact.  The rational entries of ad(h) are reduced
// mod p directly (h often has large denominators).
std::optional<Signature> eig_dims_mod(const RatMat& m, int dim,
                                      std::uint64_t p) {
  auto red = linalg::reduce_mod(m, p);
  if (!red) return std::nullopt;
  Signature dims;
  int total = 0;
  for (long k = 0; total < dim; ++k) {
    if (k > 4L * dim) return std::nullopt;  // runaway: bad prime
    auto shifted = *red;
    const std::uint64_t off = static_cast<std::uint64_t>(k) % p;
    for (std::size_t i = 0; i < shifted.size(); ++i) {
      shifted[i][i] = (shifted[i][i] + p - off) % p;
    }
    const int nullity = dim - linalg::rank_mod(std::move(shifted), p);
    dims.push_back(nullity);
    total += (k == 0 ? nullity : 2 * nullity);
  }
  if (total != dim) return std::nullopt;
  return dims;
}
}  // namespace

Signature signature_of_element(const Algebra& alg, const RatVec& e) {
  const auto h = neutral_element(alg, e);
  if (!h) throw std::invalid_argument("element is not nilpotent");
  const RatMat adh = alg.ad(*h);

  if (linalg::rank_kernel() == linalg::RankKernel::Modular) {
    for (std::uint64_t p : linalg::kPrimes) {
      auto dims = eig_dims_mod(adh, alg.dim(), p);
      if (dims) {
        trim(*dims);
        return *dims;
      }
    }
  }
  // Exact fallback / reference path.  Clear denominators: den*ad(h) has
  // integer entries and spectrum den*k, k = 0, 1, 2, ...
  const Int den = denominator_lcm(*h);
  IntMat m(alg.dim(), IntVec(alg.dim(), 0));
  for (int i = 0; i < alg.dim(); ++i) {
    for (int j = 0; j < alg.dim(); ++j) {
      if (is_zero(adh[i][j])) continue;
      Rat s = adh[i][j] * Rat(den);
      assert(s.get_den() == 1);
      m[i][j] = s.get_num();
    }
  }
  Signature dims;
  int total = 0;
  for (long k = 0; total < alg.dim(); ++k) {
    IntMat shifted = m;
    for (int i = 0; i < alg.dim(); ++i) shifted[i][i] -= k * den;
    const int nullity = linalg::nullity_exact(shifted);
    dims.push_back(nullity);
    total += (k == 0 ? nullity : 2 * nullity);
    if (k > 4L * alg.dim()) throw std::logic_error("eigenvalue scan overflow");
  }
  assert(total == alg.dim());
  trim(dims);
  return dims;
}

OrbitCatalog::OrbitCatalog(const Algebra& alg,
                           std::vector<std::vector<int>> wdds,
                           const std::map<std::vector<int>, std::string>& labels) {
  for (auto& w : wdds) {
    OrbitInfo info;
    info.signature = signature_from_wdd(alg.rs(), w);
    info.dim = orbit_dim_from_signature(alg.dim(), info.signature);
    auto it = labels.find(w);
    if (it != labels.end()) info.label = it->second;
    info.wdd = std::move(w);
    by_wdd_[info.wdd] = static_cast<int>(orbits_.size());
    by_sig_[info.signature].push_back(static_cast<int>(orbits_.size()));
    orbits_.push_back(std::move(info));
  }
}

OrbitCatalog::OrbitCatalog(std::vector<OrbitInfo> rows) {
  for (OrbitInfo& info : rows) {
    by_wdd_[info.wdd] = static_cast<int>(orbits_.size());
    by_sig_[info.signature].push_back(static_cast<int>(orbits_.size()));
    orbits_.push_back(std::move(info));
  }
}

std::vector<const OrbitInfo*> OrbitCatalog::by_signature(
    const Signature& sig) const {
  std::vector<const OrbitInfo*> out;
  auto it = by_sig_.find(sig);
  if (it != by_sig_.end()) {
    for (int idx : it->second) out.push_back(&orbits_[idx]);
  }
  return out;
}

const OrbitInfo* OrbitCatalog::unique_by_signature(const Signature& sig) const {
  auto matches = by_signature(sig);
  return matches.size() == 1 ? matches[0] : nullptr;
}

const OrbitInfo* OrbitCatalog::by_wdd(const std::vector<int>& wdd) const {
  auto it = by_wdd_.find(wdd);
  return it == by_wdd_.end() ? nullptr : &orbits_[it->second];
}

bool OrbitCatalog::signatures_unique() const {
  for (const auto& [sig, idxs] : by_sig_) {
    if (idxs.size() != 1) return false;
  }
  return true;
}

OrbitCatalog build_catalog(const Algebra& alg, std::uint64_t seed, int jobs,
                           const std::map<std::vector<int>, std::string>& labels) {
  return OrbitCatalog(alg, enumerate_orbit_wdds(alg, seed, jobs), labels);
}

}  // namespace nilorb
