#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilorb/levi.hpp"
#include "nilorb/orbits.hpp"

namespace nilorb {

// Raised when a randomized search exhausts its retry budget (CLI exit 3).
struct RetryExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchOptions {
  std::uint64_t seed = 20240;
  int n_initial = 10;  // initial coefficient bound for sampled elements
  int jobs = 1;
  bool with_reps = true;
};

struct SheetRow {
  std::vector<int> subset;          // presentation subset of simple nodes
  std::vector<int> rigid_labels;    // labels on `subset` (same order)
  int rigid_dim = 0;                // dim of the rigid orbit in the Levi
  std::vector<int> diagram;         // sheet diagram over all ambient nodes
  int rank = 0;                     // number of 2-labels outside the Levi
  std::vector<int> induced_wdd;
  Signature induced_sig;
  int induced_dim = 0;
  std::string induced_label;        // empty if uncataloged
  int sheet_dim = 0;                // induced_dim + rank
  bool dixmier = false;             // no 1-labels in the diagram
  std::string levi_name;
  std::vector<int> levi_rep;        // canonical class representative
  std::vector<int> representative;  // internal root indices; empty if absent
  bool rep_verified = false;
};

struct InductionTable {
  std::vector<SheetRow> sheets;
};

// Sheet diagram for a subset with rigid labels (2 outside the subset).
std::vector<int> sheet_diagram(const RootSystem& rs,
                               const std::vector<int>& subset,
                               const std::vector<int>& rigid_labels);

// Positive roots b with weight sum_x b_x * diagram_x >= 2.
std::vector<int> u_roots(const RootSystem& rs, const std::vector<int>& diagram);

// Dimension of the orbit induced from a Levi orbit of dimension rigid_dim on
// `subset`: rigid_dim + 2 * (npos - npos_of_subset).
int induced_dim(const RootSystem& rs, const std::vector<int>& subset,
                int rigid_dim);

struct InducedOrbit {
  std::vector<int> wdd;
  Signature signature;
  std::vector<int> sample;  // integer coordinates of the accepted element
};

// Identify the orbit induced from the given sheet data by sampling elements
// of u(diagram) until one of full rank `target_dim` is certified.
InducedOrbit induce_orbit(const Algebra& alg, const std::vector<int>& diagram,
                          int target_dim, const OrbitCatalog& catalog,
                          std::uint64_t seed, int n_initial);

// Weighted diagrams of the rigid orbits (not induced from any proper Levi).
// Memoized per simple type; recursion runs over the Levi classes.
std::vector<std::vector<int>> rigid_orbit_wdds(char family, int rank,
                                               std::uint64_t seed);

// Rigid orbit data for one simple algebra, via the shared per-type catalog.
struct RigidOrbitData {
  std::vector<int> wdd;
  int dim = 0;
};
const std::vector<RigidOrbitData>& rigid_orbit_data(char family, int rank,
                                                    std::uint64_t seed);

// Full induction table of the ambient algebra.
InductionTable build_induction_table(const Algebra& alg,
                                     const OrbitCatalog& catalog,
                                     const SearchOptions& opts);

// Published tables present a few sheets through an alternative conjugate
// subset; keyed by (ambient name, canonical class representative).
const std::vector<int>* published_subset_override(
    const std::string& ambient, const std::vector<int>& class_rep);

}  // namespace nilorb
