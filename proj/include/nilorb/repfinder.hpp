#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nilorb/induction.hpp"
#include "nilorb/orbits.hpp"

namespace nilorb {

// Bond between two chosen roots: `lines` = <b_i,b_j^vee><b_j,b_i^vee> in
// {1,2,3}; dotted when the scalar product is positive.
struct Bond {
  int i = 0;
  int j = 0;  // i < j, positions within the root list
  int lines = 0;
  bool dotted = false;
};

inline bool operator==(const Bond& a, const Bond& b) {
  return a.i == b.i && a.j == b.j && a.lines == b.lines && a.dotted == b.dotted;
}

// Shape of a representative diagram: node count, bonds, and which nodes are
// long roots (drawn black in two-length types).
struct DiagramSpec {
  int node_count = 0;
  std::vector<Bond> bonds;  // sorted by (i, j)
  std::vector<int> blacks;  // sorted node positions
};

inline bool operator==(const DiagramSpec& a, const DiagramSpec& b) {
  return a.node_count == b.node_count && a.bonds == b.bonds &&
         a.blacks == b.blacks;
}

// Diagram of a concrete list of positive roots (internal indices).
DiagramSpec diagram_of(const RootSystem& rs, const std::vector<int>& roots);

struct RepReport {
  bool in_u = false;        // every root has diagram weight >= 2
  bool orbit_match = false; // signature of the sum equals the expected one
  Signature signature;      // computed signature of the sum
  bool ok() const { return in_u && orbit_match; }
};

// Check a candidate representative (internal root indices) against a sheet:
// membership in u(diagram) and orbit identity via the exact signature.
RepReport verify_representative(const Algebra& alg,
                                const std::vector<int>& diagram,
                                const std::vector<int>& roots,
                                const Signature& expected_sig);

// Search u(diagram) for a subset whose element sum lies in the induced orbit
// (certified by rank == target_dim, then signature-checked).  With a
// DiagramSpec, backtrack over subsets matching the shape exactly and return
// the lexicographically least verified one.  Without one, search by
// ascending support size with an evaluation budget, then fall back to
// seeded random subsets.  Returns internal root indices.
std::optional<std::vector<int>> find_representative(
    const Algebra& alg, const std::vector<int>& diagram,
    const Signature& expected_sig, int target_dim, const DiagramSpec* spec,
    std::uint64_t seed, long budget = 60000);

// Linearly independent roots whose bond graph has no odd cycle.
bool is_admissible(const RootSystem& rs, const std::vector<int>& roots);

// rank g minus the torus rank of the reductive centralizer of the triple
// (the centralizer dimension of a generic element of it; several samples,
// smallest value kept).
int minimal_support_size(const Algebra& alg, const Triple& t,
                         std::uint64_t seed);

}  // namespace nilorb
