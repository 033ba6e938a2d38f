#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "nilorb/linalg.hpp"
#include "nilorb/rational.hpp"
#include "nilorb/rootsystem.hpp"

namespace nilorb {

// Semisimple Lie algebra over Q in a Chevalley basis with integer structure
// constants.  Basis order: x_{+b_0} .. x_{+b_{N-1}}, x_{-b_0} .. x_{-b_{N-1}},
// h_1 .. h_l, where b_k runs over the positive roots in internal order.
class Algebra {
 public:
  explicit Algebra(TypeSpec spec);

  const RootSystem& rs() const { return rs_; }
  int rank() const { return rs_.rank(); }
  int npos() const { return rs_.npos(); }
  int dim() const { return dim_; }

  int xp(int k) const { return k; }
  int xm(int k) const { return npos_ + k; }
  int hh(int i) const { return 2 * npos_ + i; }

  // Structure table: [b_i, b_j] = sum of c * b_k over the returned (k, c).
  const std::vector<std::pair<int, long>>& table(int i, int j) const {
    return table_[i * dim_ + j];
  }

  // N(b_i, b_j) for positive-root indices with b_i + b_j a root; 0 otherwise.
  long n_constant(int i, int j) const;

  // Coordinates of the coroot h_{b_k} over h_1..h_l (integers).
  const std::vector<long>& coroot(int k) const { return coroot_[k]; }

  RatVec zero() const { return RatVec(dim_, Rat(0)); }
  RatVec basis(int k) const;

  RatVec bracket(const RatVec& u, const RatVec& v) const;
  RatMat ad(const RatVec& u) const;
  // ad matrix of an integer-coordinate element, as an integer matrix.
  IntMat ad_int(const std::vector<long>& u) const;

  // Basis of the centralizer of u (kernel of ad u).
  std::vector<RatVec> centralizer(const RatVec& u) const;

  // Exact nilpotency test: u is nilpotent iff (ad u)^2 z = -2u is solvable
  // (Morozov: an h = [u,z] in the image of ad u with [h,u] = 2u exists iff
  // u is nilpotent).
  bool is_nilpotent(const RatVec& u) const;

 private:
  void build_constants();
  void build_table();
  long resolve(int sa, int ia, int sb, int ib) const;  // signed-pair N value

  RootSystem rs_;
  int npos_ = 0;
  int dim_ = 0;
  std::map<std::pair<int, int>, long> nconst_;     // positive-pair N values
  std::vector<std::vector<long>> coroot_;          // per positive root
  std::vector<std::vector<std::pair<int, long>>> table_;
};

// Shared per-type algebra cache (algebras are immutable once built).
const Algebra& algebra_for(const TypeSpec& spec);
const Algebra& algebra_for(char family, int rank);

}  // namespace nilorb
