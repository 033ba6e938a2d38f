#include "nilorb/induction.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>

#include "nilorb/repfinder.hpp"
#include "nilorb/rng.hpp"

#ifdef NILORB_HAVE_OPENMP
#include <omp.h>
#endif

namespace nilorb {

std::vector<int> sheet_diagram(const RootSystem& rs,
                               const std::vector<int>& subset,
                               const std::vector<int>& rigid_labels) {
  std::vector<int> d(rs.rank(), 2);
  assert(subset.size() == rigid_labels.size());
  for (std::size_t i = 0; i < subset.size(); ++i) {
    d[subset[i]] = rigid_labels[i];
  }
  return d;
}

std::vector<int> u_roots(const RootSystem& rs,
                         const std::vector<int>& diagram) {
  std::vector<int> out;
  for (int k = 0; k < rs.npos(); ++k) {
    int w = 0;
    const Root& r = rs.pos(k);
    for (int x = 0; x < rs.rank(); ++x) w += r[x] * diagram[x];
    if (w >= 2) out.push_back(k);
  }
  return out;
}

int induced_dim(const RootSystem& rs, const std::vector<int>& subset,
                int rigid_dim) {
  int inside = 0;
  for (int k = 0; k < rs.npos(); ++k) {
    const Root& r = rs.pos(k);
    bool supported = true;
    for (int x = 0; x < rs.rank() && supported; ++x) {
      if (r[x] != 0 &&
          std::find(subset.begin(), subset.end(), x) == subset.end()) {
        supported = false;
      }
    }
    if (supported) ++inside;
  }
  return rigid_dim + 2 * (rs.npos() - inside);
}

InducedOrbit induce_orbit(const Algebra& alg, const std::vector<int>& diagram,
                          int target_dim, const OrbitCatalog& catalog,
                          std::uint64_t seed, int n_initial) {
  if (target_dim == 0) {
    InducedOrbit out;
    out.wdd.assign(alg.rank(), 0);
    out.signature = signature_from_wdd(alg.rs(), out.wdd);
    out.sample.assign(alg.dim(), 0);
    return out;
  }
  const std::vector<int> u = u_roots(alg.rs(), diagram);
  SplitMix64 rng(seed);
  long bound = std::max(1, n_initial);
  for (int round = 0; round < 4; ++round, bound *= 2) {
    for (int attempt = 0; attempt < 50; ++attempt) {
      std::vector<long> coords(alg.dim(), 0);
      bool nonzero = false;
      for (int k : u) {
        const long v = static_cast<long>(rng.below(bound + 1));
        coords[alg.xp(k)] = v;
        if (v) nonzero = true;
      }
      if (!nonzero) continue;
      const IntMat m = alg.ad_int(coords);
      // rank(ad e') <= target_dim holds for every element of u, so modular
      // equality at the cap is a certificate.
      if (!linalg::rank_equals_capped(m, target_dim)) continue;
      RatVec e = alg.zero();
      for (int i = 0; i < alg.dim(); ++i) e[i] = Rat(coords[i]);
      InducedOrbit out;
      out.signature = signature_of_element(alg, e);
      out.sample.assign(coords.begin(), coords.end());
      const auto matches = catalog.by_signature(out.signature);
      if (matches.empty()) {
        std::string msg = "induced signature missing from catalog: " +
                          alg.rs().name() + " diagram";
        for (int x : diagram) msg += " " + std::to_string(x);
        msg += " target " + std::to_string(target_dim) + " sig";
        for (int x : out.signature) msg += " " + std::to_string(x);
        throw std::logic_error(msg);
      }
      out.wdd = matches.front()->wdd;
      return out;
    }
  }
  throw RetryExhausted("induction sampling exhausted for " + alg.rs().name());
}

namespace {
std::map<std::string, std::vector<RigidOrbitData>> g_rigid_cache;
std::map<std::string, OrbitCatalog> g_catalog_cache;
std::mutex g_rigid_mu;

const OrbitCatalog& component_catalog(const Algebra& alg, std::uint64_t seed) {
  // Callers hold g_rigid_mu.
  const std::string key =
      alg.rs().name() + "#" + std::to_string(seed);
  auto it = g_catalog_cache.find(key);
  if (it == g_catalog_cache.end()) {
    OrbitCatalog cat =
        build_catalog(alg, derive_seed(seed, "catalog/" + alg.rs().name()),
                      /*jobs=*/1, {});
    it = g_catalog_cache.emplace(key, std::move(cat)).first;
  }
  return it->second;
}

std::vector<RigidOrbitData> compute_rigid(char family, int rank,
                                          std::uint64_t seed);

const std::vector<RigidOrbitData>& rigid_locked(char family, int rank,
                                                std::uint64_t seed) {
  const std::string key = std::string(1, family) + std::to_string(rank) + "#" +
                          std::to_string(seed);
  auto it = g_rigid_cache.find(key);
  if (it == g_rigid_cache.end()) {
    it = g_rigid_cache.emplace(key, compute_rigid(family, rank, seed)).first;
  }
  return it->second;
}

std::vector<RigidOrbitData> compute_rigid(char family, int rank,
                                          std::uint64_t seed) {
  const Algebra& alg = algebra_for(family, rank);
  const OrbitCatalog& catalog = component_catalog(alg, seed);
  // Collect the signatures of every properly induced orbit; the signature
  // captures the full very-even pair in type D, which is what we want (both
  // partners are induced whenever either is identified).
  std::vector<Signature> induced;
  const std::vector<LeviClass> classes = enumerate_levi_classes(alg);
  for (const LeviClass& cls : classes) {
    if (cls.ssrank == alg.rank()) continue;  // improper: the algebra itself
    std::vector<std::vector<RigidOrbitData>> menus;
    for (const Component& comp : cls.comps) {
      menus.push_back(rigid_locked(comp.family, comp.rank, seed));
    }
    std::vector<std::size_t> pick(menus.size(), 0);
    while (true) {
      std::vector<int> labels(cls.rep.size(), 0);
      int rigid_dim = 0;
      for (std::size_t ci = 0; ci < menus.size(); ++ci) {
        const RigidOrbitData& r = menus[ci][pick[ci]];
        rigid_dim += r.dim;
        const Component& comp = cls.comps[ci];
        for (int i = 0; i < comp.rank; ++i) {
          const auto pos = std::find(cls.rep.begin(), cls.rep.end(),
                                     comp.nodes[i]) -
                           cls.rep.begin();
          labels[pos] = r.wdd[i];
        }
      }
      const std::vector<int> diag = sheet_diagram(alg.rs(), cls.rep, labels);
      const int s = induced_dim(alg.rs(), cls.rep, rigid_dim);
      const std::string key_tag = alg.rs().name() + "/rigid-ind/" +
                                  std::to_string(&cls - classes.data()) + "/" +
                                  std::to_string(rigid_dim);
      std::string diag_key;
      for (int x : diag) diag_key += static_cast<char>('0' + x);
      InducedOrbit got =
          induce_orbit(alg, diag, s, catalog,
                       derive_seed(seed, key_tag + "/" + diag_key),
                       /*n_initial=*/10);
      induced.push_back(got.signature);
      // Next combination.
      std::size_t ci = 0;
      while (ci < menus.size() && ++pick[ci] == menus[ci].size()) {
        pick[ci] = 0;
        ++ci;
      }
      if (ci == menus.size()) break;
    }
  }
  std::vector<RigidOrbitData> rigid;
  for (const OrbitInfo& o : catalog.orbits()) {
    bool is_induced = false;
    for (const Signature& sig : induced) {
      if (sig == o.signature) {
        is_induced = true;
        break;
      }
    }
    if (!is_induced) rigid.push_back({o.wdd, o.dim});
  }
  return rigid;
}
}  // namespace

std::vector<std::vector<int>> rigid_orbit_wdds(char family, int rank,
                                               std::uint64_t seed) {
  std::lock_guard<std::mutex> lock(g_rigid_mu);
  std::vector<std::vector<int>> out;
  for (const RigidOrbitData& r : rigid_locked(family, rank, seed)) {
    out.push_back(r.wdd);
  }
  return out;
}

const std::vector<RigidOrbitData>& rigid_orbit_data(char family, int rank,
                                                    std::uint64_t seed) {
  std::lock_guard<std::mutex> lock(g_rigid_mu);
  return rigid_locked(family, rank, seed);
}

const std::vector<int>* published_subset_override(
    const std::string& ambient, const std::vector<int>& class_rep) {
  static const std::map<std::pair<std::string, std::vector<int>>,
                        std::vector<int>>
      overrides = {
          {{"E6", {0}}, {3}},
          {{"E6", {0, 1}}, {2, 4}},
          {{"E6", {0, 1, 4}}, {1, 2, 4}},
          {{"E6", {0, 2, 3}}, {2, 3, 4}},
      };
  auto it = overrides.find({ambient, class_rep});
  return it == overrides.end() ? nullptr : &it->second;
}

InductionTable build_induction_table(const Algebra& alg,
                                     const OrbitCatalog& catalog,
                                     const SearchOptions& opts) {
  const RootSystem& rs = alg.rs();
  std::vector<SheetRow> rows;
  const std::vector<LeviClass> classes = enumerate_levi_classes(alg);
  for (const LeviClass& cls : classes) {
    if (cls.ssrank == rs.rank()) continue;
    std::vector<std::vector<RigidOrbitData>> menus;
    for (const Component& comp : cls.comps) {
      menus.push_back(rigid_orbit_data(comp.family, comp.rank, opts.seed));
    }
    std::vector<std::size_t> pick(menus.size(), 0);
    while (true) {
      SheetRow row;
      row.levi_name = cls.name;
      row.levi_rep = cls.rep;
      row.subset = cls.rep;
      row.rigid_labels.assign(cls.rep.size(), 0);
      row.rigid_dim = 0;
      for (std::size_t ci = 0; ci < menus.size(); ++ci) {
        const RigidOrbitData& r = menus[ci][pick[ci]];
        row.rigid_dim += r.dim;
        const Component& comp = cls.comps[ci];
        for (int i = 0; i < comp.rank; ++i) {
          const auto pos = std::find(cls.rep.begin(), cls.rep.end(),
                                     comp.nodes[i]) -
                           cls.rep.begin();
          row.rigid_labels[pos] = r.wdd[i];
        }
      }
      const bool zero_rigid =
          std::all_of(row.rigid_labels.begin(), row.rigid_labels.end(),
                      [](int x) { return x == 0; });
      if (zero_rigid) {
        if (const auto* alt = published_subset_override(rs.name(), cls.rep)) {
          row.subset = *alt;
          row.rigid_labels.assign(alt->size(), 0);
        }
      }
      row.diagram = sheet_diagram(rs, row.subset, row.rigid_labels);
      row.rank = rs.rank() - static_cast<int>(row.subset.size());
      row.induced_dim = induced_dim(rs, row.subset, row.rigid_dim);
      row.sheet_dim = row.induced_dim + row.rank;
      row.dixmier = std::none_of(row.diagram.begin(), row.diagram.end(),
                                 [](int x) { return x == 1; });
      rows.push_back(std::move(row));
      std::size_t ci = 0;
      while (ci < menus.size() && ++pick[ci] == menus[ci].size()) {
        pick[ci] = 0;
        ++ci;
      }
      if (menus.empty() || ci == menus.size()) break;
    }
  }

  // Resolve the induced orbit of each sheet (the expensive part) in parallel;
  // seeds are derived per row so the schedule cannot influence results.
  auto resolve_row = [&](SheetRow& row) {
    std::string key = rs.name() + "/induce/";
    for (int x : row.diagram) key += static_cast<char>('0' + x);
    InducedOrbit got =
        induce_orbit(alg, row.diagram, row.induced_dim, catalog,
                     derive_seed(opts.seed, key), opts.n_initial);
    row.induced_wdd = got.wdd;
    row.induced_sig = got.signature;
    if (const OrbitInfo* info = catalog.by_wdd(got.wdd)) {
      row.induced_label = info->label;
      assert(info->dim == row.induced_dim);
    }
    if (opts.with_reps) {
      auto rep = find_representative(alg, row.diagram, row.induced_sig,
                                     row.induced_dim, nullptr,
                                     derive_seed(opts.seed, key + "/rep"));
      if (rep) {
        row.representative = *rep;
        row.rep_verified = verify_representative(alg, row.diagram,
                                                 row.representative,
                                                 row.induced_sig)
                               .ok();
      }
    }
  };
  const int n = static_cast<int>(rows.size());
#ifdef NILORB_HAVE_OPENMP
  if (opts.jobs != 1) {
#pragma omp parallel for schedule(dynamic) num_threads(opts.jobs > 0 ? opts.jobs : omp_get_max_threads())
    for (int i = 0; i < n; ++i) resolve_row(rows[i]);
  } else {
    for (int i = 0; i < n; ++i) resolve_row(rows[i]);
  }
#else
  for (int i = 0; i < n; ++i) resolve_row(rows[i]);
#endif

  std::sort(rows.begin(), rows.end(), [](const SheetRow& a, const SheetRow& b) {
    if (a.induced_dim != b.induced_dim) return a.induced_dim > b.induced_dim;
    if (a.induced_wdd != b.induced_wdd) return a.induced_wdd < b.induced_wdd;
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.diagram < b.diagram;
  });
  return {std::move(rows)};
}

}  // namespace nilorb
