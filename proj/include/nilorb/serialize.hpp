#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "nilorb/induction.hpp"
#include "nilorb/levi.hpp"
#include "nilorb/orbits.hpp"

namespace nilorb {

// Insertion-ordered documents so emitted JSON is byte-deterministic.
using Json = nlohmann::ordered_json;

Json roots_json(const RootSystem& rs);
Json orbits_json(const Algebra& alg, const OrbitCatalog& cat);
Json levis_json(const Algebra& alg, const std::vector<LeviClass>& classes);
Json rigid_json(const Algebra& alg, const std::vector<RigidOrbitData>& rigid,
                const OrbitCatalog& cat);
Json table_json(const Algebra& alg, const InductionTable& table);

std::string roots_text(const RootSystem& rs);
std::string orbits_text(const Algebra& alg, const OrbitCatalog& cat);
std::string levis_text(const Algebra& alg,
                       const std::vector<LeviClass>& classes);
std::string rigid_text(const Algebra& alg,
                       const std::vector<RigidOrbitData>& rigid,
                       const OrbitCatalog& cat);
std::string table_text(const Algebra& alg, const InductionTable& table);

std::string table_latex(const Algebra& alg, const InductionTable& table);
std::string rigid_latex(const Algebra& alg,
                        const std::vector<RigidOrbitData>& rigid,
                        const OrbitCatalog& cat);
std::string orbits_latex(const Algebra& alg, const OrbitCatalog& cat);

// Multiplication table dump: lines "i j k c" meaning [b_i, b_j] has
// coefficient c on b_k; basis indices are 1-based in the published root
// numbering (x_roots first, then negatives, then h_1..h_l).
std::string mult_table_text(const Algebra& alg);

}  // namespace nilorb
