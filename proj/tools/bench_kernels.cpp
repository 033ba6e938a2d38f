// Micro-benchmark for the two rank kernels (exact Bareiss vs modular) and for
// the serial vs OpenMP orbit/table scans.  Usage:
//
//   bench_kernels [TYPE] [JOBS]
//
// TYPE defaults to F4, JOBS to the OpenMP default thread count.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#ifdef NILORB_HAVE_OPENMP
#include <omp.h>
#endif

#include "nilorb/catalog.hpp"
#include "nilorb/chevalley.hpp"
#include "nilorb/induction.hpp"
#include "nilorb/linalg.hpp"
#include "nilorb/orbits.hpp"
#include "nilorb/rng.hpp"
#include "nilorb/sl2.hpp"

using namespace nilorb;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// A batch of ad-matrices of random nilpotent elements: the workload both rank
// kernels see in production.
std::vector<RatMat> sample_matrices(const Algebra& alg, int count,
                                    std::uint64_t seed) {
  std::vector<RatMat> out;
  SplitMix64 rng(seed);
  while (static_cast<int>(out.size()) < count) {
    RatVec e = alg.zero();
    bool nonzero = false;
    for (int k = 0; k < alg.npos(); ++k) {
      const long c = static_cast<long>(rng.below(5));
      if (c > 2) {
        e[alg.xp(k)] = Rat(c - 2);
        nonzero = true;
      }
    }
    if (!nonzero) continue;
    out.push_back(alg.ad(e));
  }
  return out;
}

double time_ranks(const std::vector<RatMat>& mats, linalg::RankKernel kernel) {
  linalg::set_rank_kernel(kernel);
  const auto t0 = Clock::now();
  long acc = 0;
  for (const RatMat& m : mats) acc += linalg::rank_exact(m);
  const double dt = seconds_since(t0);
  if (acc < 0) std::abort();  // keep the loop observable
  return dt;
}

}  // namespace

int main(int argc, char** argv) {
  std::string type_name = argc > 1 ? argv[1] : "F4";
  int jobs = 0;
#ifdef NILORB_HAVE_OPENMP
  jobs = omp_get_max_threads();
#endif
  if (argc > 2) jobs = std::atoi(argv[2]);
  if (jobs < 1) jobs = 1;

  const Algebra& alg = algebra_for(parse_type(type_name));
  std::cout << "type " << type_name << "  dim " << alg.dim() << "  jobs "
            << jobs << "\n\n";

  // Rank kernels on ad-matrices.
  const auto mats = sample_matrices(alg, 24, 20240);
  const double t_exact = time_ranks(mats, linalg::RankKernel::Exact);
  const double t_mod = time_ranks(mats, linalg::RankKernel::Modular);
  std::cout << "rank kernel, " << mats.size() << " ad-matrices (" << alg.dim()
            << "x" << alg.dim() << "):\n"
            << "  exact (Bareiss)     " << t_exact << " s\n"
            << "  modular (3 primes)  " << t_mod << " s\n"
            << "  speedup             " << t_exact / t_mod << "x\n\n";
  linalg::set_rank_kernel(linalg::RankKernel::Modular);

  // Orbit enumeration: serial vs parallel.
  {
    auto t0 = Clock::now();
    const auto serial = enumerate_orbit_wdds(alg, 20240, 1);
    const double t1 = seconds_since(t0);
    t0 = Clock::now();
    const auto parallel = enumerate_orbit_wdds(alg, 20240, jobs);
    const double t2 = seconds_since(t0);
    std::cout << "orbit scan, " << serial.size() << " orbits:\n"
              << "  serial    " << t1 << " s\n"
              << "  jobs=" << jobs << "    " << t2 << " s\n"
              << "  match     " << (serial == parallel ? "yes" : "NO") << "\n\n";
  }

  // Full induction table (without representative search): serial vs parallel.
  {
    const OrbitCatalog cat = build_catalog(alg, 20240, jobs, {});
    SearchOptions opts;
    opts.with_reps = false;
    opts.jobs = 1;
    auto t0 = Clock::now();
    const InductionTable serial = build_induction_table(alg, cat, opts);
    const double t1 = seconds_since(t0);
    opts.jobs = jobs;
    t0 = Clock::now();
    const InductionTable parallel = build_induction_table(alg, cat, opts);
    const double t2 = seconds_since(t0);
    std::cout << "induction table, " << serial.sheets.size() << " sheets:\n"
              << "  serial    " << t1 << " s\n"
              << "  jobs=" << jobs << "    " << t2 << " s\n"
              << "  match     "
              << (serial.sheets.size() == parallel.sheets.size() ? "yes" : "NO")
              << "\n";
  }
  return 0;
}
