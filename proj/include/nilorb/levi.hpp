#pragma once

#include <string>
#include <vector>

#include "nilorb/chevalley.hpp"
#include "nilorb/orbits.hpp"

namespace nilorb {

// Conjugacy class of Levi subalgebras generated by a subset of the simple
// roots.  Classes are keyed by the ambient signature of the principal
// nilpotent of the Levi (injective for the supported ambient types by the
// Bala-Carter correspondence together with signature uniqueness).
struct LeviClass {
  std::vector<int> rep;                      // lex-least member
  std::vector<std::vector<int>> members;     // all subsets in the class
  std::vector<Component> comps;              // components of rep
  Signature signature;                       // ambient signature, class key
  std::vector<int> ambient_wdd;              // dominant ambient weights
  std::string name;                          // e.g. "A2+~A1", "(3A1)'"
  int ssrank = 0;                            // |rep|
};

// Coordinates (over h_1..h_l) of the principal neutral element of the Levi
// on subset S: sum_{j in S} C[i][j] c_j = 2 for all i in S, c = 0 off S.
RatVec principal_coords(const RootSystem& rs, const std::vector<int>& s);

// Ambient signature of that element, by counting ad-eigenvalues on root
// spaces (no linear algebra).
Signature levi_signature(const RootSystem& rs, const std::vector<int>& s);

// All classes, ordered by first appearance when subsets are scanned in
// increasing bitmask order (this order also fixes the prime decorations in
// names).  Includes the empty subset and the full set.
std::vector<LeviClass> enumerate_levi_classes(const Algebra& alg);

// Display name for a component list: components sorted by (rank desc, long
// before short, family), multiplicities collapsed; short components in a
// two-length ambient carry a tilde.
std::string levi_base_name(const RootSystem& rs,
                           const std::vector<Component>& comps);

}  // namespace nilorb
