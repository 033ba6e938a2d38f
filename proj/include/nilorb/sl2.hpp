#pragma once

#include <optional>

#include "nilorb/chevalley.hpp"

namespace nilorb {

struct Triple {
  RatVec e, h, f;
};

// The neutral element h of an sl2-triple through nilpotent e: solve
// (ad e)^2 z = -2 e and set h = [e, z].  Returns nullopt when the system is
// inconsistent (equivalently, when e is not nilpotent).
std::optional<RatVec> neutral_element(const Algebra& alg, const RatVec& e);

// Full Jacobson-Morozov completion (e, h, f).  The result is verified
// exactly when linalg verification is enabled.
std::optional<Triple> complete_triple(const Algebra& alg, const RatVec& e);

// Exact check of the defining relations [h,e]=2e, [e,f]=h, [h,f]=-2f.
bool verify_triple(const Algebra& alg, const Triple& t);

}  // namespace nilorb
