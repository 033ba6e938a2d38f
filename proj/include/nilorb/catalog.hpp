#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilorb/orbits.hpp"
#include "nilorb/repfinder.hpp"

namespace nilorb {

// One golden-corpus sheet row, parsed from the line format
// "type | sheet_diagram | rank | induced_wdd | dim | rep_root_indices | spec_edges"
// where spec_edges uses tokens "i-j:k" (solid k-fold bond), "i~j:k" (dotted)
// and "!i" (black node), all 0-based into the representative list; "." means
// an empty shape and "-" that no shape was recorded.
struct CorpusRow {
  std::string type_name;
  std::vector<int> diagram;
  int rank = 0;
  std::vector<int> induced_wdd;
  int dim = 0;
  std::vector<int> rep_published;  // 1-based published root indices
  DiagramSpec spec;
  bool has_spec = false;
};

std::vector<CorpusRow> parse_corpus(const std::string& path);

// "w1 ... wl | label" line files: rigid tables and orbit label maps.
std::map<std::vector<int>, std::string> parse_labeled_wdds(
    const std::string& path);

// Orbit-catalog cache, line format "labels | dims | dim | label" under a
// version header that pins the structure-constant conventions.
std::optional<std::vector<OrbitInfo>> load_catalog_cache(
    const std::string& dir, const std::string& type_name);
void store_catalog_cache(const std::string& dir, const std::string& type_name,
                         const OrbitCatalog& cat);

// Catalog via the cache when cache_dir is nonempty; labels are overlaid on
// cached rows so stale label maps cannot poison results.
OrbitCatalog catalog_for(const Algebra& alg, std::uint64_t seed, int jobs,
                         const std::map<std::vector<int>, std::string>& labels,
                         const std::string& cache_dir);

}  // namespace nilorb
