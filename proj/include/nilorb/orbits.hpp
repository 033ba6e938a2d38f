#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilorb/chevalley.hpp"
#include "nilorb/sl2.hpp"

namespace nilorb {

// Signature of a nilpotent orbit: dims[k] = dim of the ad-h eigenspace for
// eigenvalue k >= 0, where h is the (dominant) neutral element.  Trailing
// zeros are trimmed; dims[0] counts the full centralizer level.
using Signature = std::vector<int>;

Signature signature_from_wdd(const RootSystem& rs, const std::vector<int>& wdd);
int orbit_dim_from_signature(int dim_g, const Signature& sig);
int orbit_dim_from_wdd(const RootSystem& rs, const std::vector<int>& wdd);

// Coordinates c (over h_1..h_l) of the element h_w with weights
// sum_j C[i][j] c_j = w_i.
RatVec characteristic_coords(const RootSystem& rs, const std::vector<int>& wdd);

// Whether the candidate weighting w is the weighted diagram of a nilpotent
// orbit: test whether [e, y] = h_w has a solution y in g(-2) for a generic
// e in g(2) (the all-ones element first, then seeded random retries).
bool admits_triple(const Algebra& alg, const std::vector<int>& wdd,
                   std::uint64_t seed);

// All weighted diagrams with labels in {0,1,2}, sorted by (dim, wdd).
std::vector<std::vector<int>> enumerate_orbit_wdds(const Algebra& alg,
                                                   std::uint64_t seed,
                                                   int jobs);

// Signature of a nilpotent element (exact; modular eigencounts are accepted
// only when they sum to dim g, which certifies them).
Signature signature_of_element(const Algebra& alg, const RatVec& e);

struct OrbitInfo {
  std::vector<int> wdd;
  Signature signature;
  int dim = 0;
  std::string label;  // empty when no published name is attached
};

class OrbitCatalog {
 public:
  OrbitCatalog() = default;
  OrbitCatalog(const Algebra& alg, std::vector<std::vector<int>> wdds,
               const std::map<std::vector<int>, std::string>& labels);
  // From precomputed rows (cache load).
  explicit OrbitCatalog(std::vector<OrbitInfo> rows);

  const std::vector<OrbitInfo>& orbits() const { return orbits_; }
  // All orbits carrying this signature (more than one only for the very-even
  // pairs in type D).
  std::vector<const OrbitInfo*> by_signature(const Signature& sig) const;
  const OrbitInfo* unique_by_signature(const Signature& sig) const;
  const OrbitInfo* by_wdd(const std::vector<int>& wdd) const;
  bool signatures_unique() const;

 private:
  std::vector<OrbitInfo> orbits_;
  std::map<Signature, std::vector<int>> by_sig_;
  std::map<std::vector<int>, int> by_wdd_;
};

// Enumerate and assemble the catalog for one algebra.
OrbitCatalog build_catalog(const Algebra& alg, std::uint64_t seed, int jobs,
                           const std::map<std::vector<int>, std::string>& labels);

}  // namespace nilorb
