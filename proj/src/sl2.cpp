#include "nilorb/sl2.hpp"

#include <cassert>

namespace nilorb {

namespace {
RatVec scaled(const RatVec& v, const Rat& c) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * c;
  return out;
}

RatVec minus(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool vec_zero(const RatVec& v) {
  for (const Rat& q : v) {
    if (!is_zero(q)) return false;
  }
  return true;
}
}  // namespace

std::optional<RatVec> neutral_element(const Algebra& alg, const RatVec& e) {
  const int n = alg.dim();
  const RatMat m = alg.ad(e);
  RatMat m2(n, RatVec(n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (is_zero(m[i][k])) continue;
      for (int j = 0; j < n; ++j) {
        if (!is_zero(m[k][j])) m2[i][j] += m[i][k] * m[k][j];
      }
    }
  }
  const auto z = linalg::solve(m2, scaled(e, Rat(-2)));
  if (!z) return std::nullopt;
  return alg.bracket(e, *z);
}

std::optional<Triple> complete_triple(const Algebra& alg, const RatVec& e) {
  const int n = alg.dim();
  const RatMat m = alg.ad(e);
  RatMat m2(n, RatVec(n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (is_zero(m[i][k])) continue;
      for (int j = 0; j < n; ++j) {
        if (!is_zero(m[k][j])) m2[i][j] += m[i][k] * m[k][j];
      }
    }
  }
  const auto z = linalg::solve(m2, scaled(e, Rat(-2)));
  if (!z) return std::nullopt;
  const RatVec h = alg.bracket(e, *z);
  // Correct z into a genuine f: u0 = [h,z] + 2z lies in ker(ad e); subtract
  // the unique u1 in ker(ad e) with (ad h + 2) u1 = u0.
  RatVec u0 = alg.bracket(h, *z);
  for (int i = 0; i < n; ++i) u0[i] += 2 * (*z)[i];
  RatVec f = *z;
  if (!vec_zero(u0)) {
    const std::vector<RatVec> ker = alg.centralizer(e);
    const RatMat adh = alg.ad(h);
    RatMat cols(n, RatVec(ker.size(), Rat(0)));
    for (std::size_t c = 0; c < ker.size(); ++c) {
      for (int i = 0; i < n; ++i) {
        Rat acc = 2 * ker[c][i];
        for (int j = 0; j < n; ++j) {
          if (!is_zero(adh[i][j])) acc += adh[i][j] * ker[c][j];
        }
        cols[i][c] = acc;
      }
    }
    const auto coeff = linalg::solve(cols, u0);
    if (!coeff) return std::nullopt;  // cannot happen for nilpotent e
    RatVec u1(n, Rat(0));
    for (std::size_t c = 0; c < ker.size(); ++c) {
      if (is_zero((*coeff)[c])) continue;
      for (int i = 0; i < n; ++i) u1[i] += (*coeff)[c] * ker[c][i];
    }
    f = minus(f, u1);
  }
  Triple t{e, h, f};
  if (linalg::verify_enabled()) {
    assert(verify_triple(alg, t));
  }
  return t;
}

bool verify_triple(const Algebra& alg, const Triple& t) {
  const RatVec he = alg.bracket(t.h, t.e);
  const RatVec ef = alg.bracket(t.e, t.f);
  const RatVec hf = alg.bracket(t.h, t.f);
  for (int i = 0; i < alg.dim(); ++i) {
    if (he[i] != 2 * t.e[i]) return false;
    if (ef[i] != t.h[i]) return false;
    if (hf[i] != -2 * t.f[i]) return false;
  }
  return true;
}

}  // namespace nilorb
