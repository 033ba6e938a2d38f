#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "nilorb/rational.hpp"

namespace nilorb::linalg {

// ---------------------------------------------------------------------------
// Test hooks.
//
// verify: when enabled, every solve/nullspace result is checked by
// back-substitution before being returned (aborts on failure).
//
// free chooser: value assigned to free variables when a solve is
// underdetermined.  The default (0) gives canonical solutions; tests inject
// alternatives to confirm downstream results do not depend on the choice.
// ---------------------------------------------------------------------------
void set_verify(bool on);
bool verify_enabled();

using FreeChooser = std::function<Rat(int column)>;
void set_free_chooser(FreeChooser chooser);  // empty resets to default
Rat free_value(int column);

// ---------------------------------------------------------------------------
// Exact arithmetic over Q.
// ---------------------------------------------------------------------------

// In-place reduced row echelon form; returns the pivot columns in order.
std::vector<int> rref(RatMat& m);

// Rank via fraction-free Bareiss elimination (serial reference kernel).
int rank_exact(IntMat m);
int rank_exact(const RatMat& m);

// Consistency of A x = b (no solution vector materialized).
bool solvable(const RatMat& a, const RatVec& b);

// Any solution of A x = b, or nullopt when inconsistent.  Free variables take
// free_value(col).
std::optional<RatVec> solve(const RatMat& a, const RatVec& b);

// Basis of the right nullspace of A (each entry has size = #columns of A).
std::vector<RatVec> nullspace(const RatMat& a);

// ---------------------------------------------------------------------------
// Modular arithmetic kernel (acceleration; accepts are certified by callers
// that know a proven upper bound for the exact rank).
// ---------------------------------------------------------------------------
inline constexpr std::uint64_t kPrimes[] = {2147483629ULL, 2147483563ULL,
                                            2147483249ULL};

std::vector<std::vector<std::uint64_t>> reduce_mod(const IntMat& m,
                                                   std::uint64_t p);
// Rational variant; nullopt when some entry's denominator vanishes mod p.
std::optional<std::vector<std::vector<std::uint64_t>>> reduce_mod(
    const RatMat& m, std::uint64_t p);
int rank_mod(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p);

enum class RankKernel { Exact, Modular };
void set_rank_kernel(RankKernel k);
RankKernel rank_kernel();

// True iff rank(m) == cap, where cap is a *proven* upper bound for rank(m).
// Modular kernel: rank_p == cap certifies equality (rank_p <= rank <= cap);
// a smaller modular rank is double-checked with a second prime before
// answering false (an uncertified but overwhelmingly likely answer).
// Exact kernel: Bareiss, always certified.
bool rank_equals_capped(const IntMat& m, int cap);

// Exact nullity of an integer matrix (n - rank).
int nullity_exact(const IntMat& m);

}  // namespace nilorb::linalg
