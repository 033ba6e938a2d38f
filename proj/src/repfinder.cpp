#include "nilorb/repfinder.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

#include "nilorb/linalg.hpp"
#include "nilorb/rng.hpp"

namespace nilorb {

DiagramSpec diagram_of(const RootSystem& rs, const std::vector<int>& roots) {
  DiagramSpec spec;
  spec.node_count = static_cast<int>(roots.size());
  for (int i = 0; i < spec.node_count; ++i) {
    const Root& a = rs.pos(roots[i]);
    for (int j = i + 1; j < spec.node_count; ++j) {
      const Root& b = rs.pos(roots[j]);
      const long ip = rs.ip(a, b);
      if (ip == 0) continue;
      const int lines = rs.cartan_int(a, b) * rs.cartan_int(b, a);
      spec.bonds.push_back({i, j, lines, ip > 0});
    }
    if (rs.two_lengths() && rs.is_long(roots[i])) spec.blacks.push_back(i);
  }
  return spec;
}

namespace {
int diagram_weight(const RootSystem& rs, const std::vector<int>& diagram,
                   int root) {
  const Root& r = rs.pos(root);
  int w = 0;
  for (int x = 0; x < rs.rank(); ++x) w += r[x] * diagram[x];
  return w;
}

// Incremental fraction-free echelon over root coefficient vectors; returns
// false when v is dependent on the rows already absorbed.
struct Echelon {
  std::vector<std::vector<long>> rows;  // echelon, each with a pivot column
  std::vector<int> pivots;

  bool absorb(std::vector<long> v) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const int p = pivots[r];
      if (v[p] == 0) continue;
      const long a = rows[r][p], b = v[p];
      for (std::size_t x = 0; x < v.size(); ++x) {
        v[x] = v[x] * a - rows[r][x] * b;
      }
    }
    int p = -1;
    for (std::size_t x = 0; x < v.size(); ++x) {
      if (v[x] != 0) {
        p = static_cast<int>(x);
        break;
      }
    }
    if (p < 0) return false;
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }

  void pop() {
    rows.pop_back();
    pivots.pop_back();
  }
};

std::vector<long> root_vec(const RootSystem& rs, int k) {
  const Root& r = rs.pos(k);
  return std::vector<long>(r.begin(), r.end());
}
}  // namespace

RepReport verify_representative(const Algebra& alg,
                                const std::vector<int>& diagram,
                                const std::vector<int>& roots,
                                const Signature& expected_sig) {
  RepReport rep;
  rep.in_u = true;
  for (int k : roots) {
    if (diagram_weight(alg.rs(), diagram, k) < 2) rep.in_u = false;
  }
  RatVec e = alg.zero();
  for (int k : roots) e[alg.xp(k)] += 1;
  rep.signature = signature_of_element(alg, e);
  rep.orbit_match = rep.signature == expected_sig;
  return rep;
}

namespace {
bool evaluate_candidate(const Algebra& alg, const std::vector<int>& pick,
                        const Signature& expected_sig, int target_dim) {
  std::vector<long> coords(alg.dim(), 0);
  for (int k : pick) coords[alg.xp(k)] = 1;
  if (!linalg::rank_equals_capped(alg.ad_int(coords), target_dim)) {
    return false;
  }
  RatVec e = alg.zero();
  for (int k : pick) e[alg.xp(k)] = 1;
  return signature_of_element(alg, e) == expected_sig;
}
}  // namespace

std::optional<std::vector<int>> find_representative(
    const Algebra& alg, const std::vector<int>& diagram,
    const Signature& expected_sig, int target_dim, const DiagramSpec* spec,
    std::uint64_t seed, long budget) {
  const RootSystem& rs = alg.rs();
  if (target_dim == 0) {
    return std::vector<int>{};
  }
  const std::vector<int> u = u_roots(rs, diagram);
  const int n = static_cast<int>(u.size());

  if (spec) {
    const int m = spec->node_count;
    if (m > n || m == 0) return std::nullopt;
    std::vector<std::vector<std::pair<int, bool>>> want(
        m, std::vector<std::pair<int, bool>>(m, {0, false}));
    for (const Bond& b : spec->bonds) {
      want[b.i][b.j] = want[b.j][b.i] = {b.lines, b.dotted};
    }
    std::vector<char> want_black(m, 0);
    for (int i : spec->blacks) want_black[i] = 1;

    // Assign a distinct u-root to each spec node; node order is free, so the
    // assignment is injective, not an ascending subset.
    std::vector<int> pick;
    std::optional<std::vector<int>> found;
    std::function<bool()> rec = [&]() {
      const int p = static_cast<int>(pick.size());
      if (p == m) {
        if (evaluate_candidate(alg, pick, expected_sig, target_dim)) {
          found = pick;
          return true;
        }
        return false;
      }
      for (int c = 0; c < n; ++c) {
        const int rk = u[c];
        if (std::find(pick.begin(), pick.end(), rk) != pick.end()) continue;
        const bool black = rs.two_lengths() && rs.is_long(rk);
        if (black != static_cast<bool>(want_black[p])) continue;
        bool okb = true;
        for (int q = 0; q < p && okb; ++q) {
          const Root& a = rs.pos(pick[q]);
          const Root& b = rs.pos(rk);
          const long ip = rs.ip(a, b);
          const int lines = ip == 0 ? 0 : rs.cartan_int(a, b) * rs.cartan_int(b, a);
          if (lines != want[q][p].first ||
              (lines != 0 && (ip > 0) != want[q][p].second)) {
            okb = false;
          }
        }
        if (!okb) continue;
        pick.push_back(rk);
        if (rec()) return true;
        pick.pop_back();
      }
      return false;
    };
    rec();
    return found;
  }

  // Spec-free search: ascending support size with an evaluation budget, then
  // random independent subsets of each size.
  const int kmax = std::min(rs.rank(), n);
  long used = 0;
  const long slice = std::max<long>(500, budget / (2 * std::max(1, kmax)));
  for (int k = 1; k <= kmax; ++k) {
    long here = 0;
    Echelon ech;
    std::vector<int> pick;
    std::optional<std::vector<int>> found;
    std::function<bool(int)> rec = [&](int start) {
      if (static_cast<int>(pick.size()) == k) {
        ++used;
        ++here;
        if (evaluate_candidate(alg, pick, expected_sig, target_dim)) {
          found = pick;
          return true;
        }
        return here >= slice;  // stop this k, move on
      }
      for (int c = start; c < n; ++c) {
        if (!ech.absorb(root_vec(rs, u[c]))) continue;
        pick.push_back(u[c]);
        const bool stop = rec(c + 1);
        pick.pop_back();
        ech.pop();
        if (stop) return true;
      }
      return false;
    };
    rec(0);
    if (found) return found;
  }

  SplitMix64 rng(seed);
  for (int k = 1; k <= kmax; ++k) {
    for (long t = 0; t < slice; ++t) {
      Echelon ech;
      std::vector<int> pick;
      for (int guard = 0; static_cast<int>(pick.size()) < k && guard < 20 * k;
           ++guard) {
        const int c = static_cast<int>(rng.below(n));
        const int rk = u[c];
        if (std::find(pick.begin(), pick.end(), rk) != pick.end()) continue;
        if (!ech.absorb(root_vec(rs, rk))) continue;
        pick.push_back(rk);
      }
      if (static_cast<int>(pick.size()) != k) continue;
      std::sort(pick.begin(), pick.end());
      if (evaluate_candidate(alg, pick, expected_sig, target_dim)) {
        return pick;
      }
    }
  }
  return std::nullopt;
}

bool is_admissible(const RootSystem& rs, const std::vector<int>& roots) {
  const int n = static_cast<int>(roots.size());
  Echelon ech;
  for (int k : roots) {
    if (!ech.absorb(root_vec(rs, k))) return false;
  }
  // Odd cycle in the bond graph == graph is not bipartite.
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w) {
        if (w == v || rs.ip(rs.pos(roots[v]), rs.pos(roots[w])) == 0) continue;
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

int minimal_support_size(const Algebra& alg, const Triple& t,
                         std::uint64_t seed) {
  const int dim = alg.dim();
  // Kernel of the stacked maps ad e, ad h, ad f = centralizer of the triple
  // (the reductive part of the centralizer of e).
  const RatMat ade = alg.ad(t.e), adh = alg.ad(t.h), adf = alg.ad(t.f);
  RatMat big;
  big.reserve(3 * dim);
  for (const RatVec& r : ade) big.push_back(r);
  for (const RatVec& r : adh) big.push_back(r);
  for (const RatVec& r : adf) big.push_back(r);
  const std::vector<RatVec> basis = linalg::nullspace(big);
  const int m = static_cast<int>(basis.size());
  if (m == 0) return alg.rank();

  SplitMix64 rng(seed);
  int torus = m;
  for (int sample = 0; sample < 6; ++sample) {
    RatVec z(dim, Rat(0));
    bool nonzero = false;
    for (int j = 0; j < m; ++j) {
      const long c = static_cast<long>(rng.below(41)) - 20;
      if (c == 0) continue;
      nonzero = true;
      for (int i = 0; i < dim; ++i) z[i] += Rat(c) * basis[j][i];
    }
    if (!nonzero) continue;
    // Centralizer of z inside the reductive part: kernel of b -> [z, b].
    RatMat cols(dim, RatVec(m, Rat(0)));
    for (int j = 0; j < m; ++j) {
      const RatVec br = alg.bracket(z, basis[j]);
      for (int i = 0; i < dim; ++i) cols[i][j] = br[i];
    }
    torus = std::min(torus, m - linalg::rank_exact(cols));
  }
  return alg.rank() - torus;
}

}  // namespace nilorb
