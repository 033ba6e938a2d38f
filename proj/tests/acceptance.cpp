// Acceptance gate: one line "[criterion N] PASS/FAIL" per criterion.
// Criteria 1-9 run by default (G2, F4, E6 golden data, algebra correctness,
// determinism).  Criterion 10 covers E7/E8 and runs only with --allow-long.

#include <algorithm>
#include <cstring>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "nilorb/catalog.hpp"
#include "nilorb/chevalley.hpp"
#include "nilorb/induction.hpp"
#include "nilorb/levi.hpp"
#include "nilorb/linalg.hpp"
#include "nilorb/orbits.hpp"
#include "nilorb/repfinder.hpp"
#include "nilorb/rng.hpp"
#include "nilorb/serialize.hpp"
#include "nilorb/sl2.hpp"

using namespace nilorb;

namespace {

constexpr std::uint64_t kSeed = 20240;
int g_failures = 0;
std::vector<std::string> g_notes;

void report(int criterion, bool pass, const std::string& note = "") {
  std::cout << "[criterion " << criterion << "] " << (pass ? "PASS" : "FAIL");
  if (!pass && !note.empty()) std::cout << "  (" << note << ")";
  std::cout << "\n" << std::flush;
  if (!pass) ++g_failures;
}

void skip(int criterion, const std::string& why) {
  std::cout << "[criterion " << criterion << "] SKIP  (" << why << ")\n"
            << std::flush;
}

struct Expect {
  bool ok = true;
  std::string note;
  void fail(const std::string& what) {
    ok = false;
    if (!note.empty()) note += "; ";
    note += what;
  }
};

std::string data_path(const std::string& file) {
  return std::string(NILORB_DATA_DIR) + "/" + file;
}

std::map<std::vector<int>, std::string> labels_for(const std::string& name) {
  try {
    return parse_labeled_wdds(data_path("labels_" + name + ".txt"));
  } catch (const std::exception&) {
    return {};
  }
}

using RowKey = std::tuple<std::vector<int>, int, std::vector<int>, int>;

std::multiset<RowKey> keys_of_table(const InductionTable& t) {
  std::multiset<RowKey> out;
  for (const SheetRow& r : t.sheets) {
    out.insert({r.diagram, r.rank, r.induced_wdd, r.induced_dim});
  }
  return out;
}

std::multiset<RowKey> keys_of_corpus(const std::vector<CorpusRow>& rows) {
  std::multiset<RowKey> out;
  for (const CorpusRow& r : rows) {
    out.insert({r.diagram, r.rank, r.induced_wdd, r.dim});
  }
  return out;
}

// Golden-table comparison for one algebra: rigid set against the rigid file,
// sheet rows against the corpus, plus representative verification flags.
Expect check_golden(const std::string& name, std::size_t rigid_count,
                    std::size_t sheet_count, const InductionTable& table) {
  Expect e;
  const Algebra& alg = algebra_for(parse_type(name));

  const auto rigid_want = parse_labeled_wdds(data_path("rigid_" + name + ".txt"));
  const auto& rigid_got = rigid_orbit_data(name[0], alg.rank(), kSeed);
  std::set<std::vector<int>> got_set;
  for (const RigidOrbitData& r : rigid_got) {
    if (std::count(r.wdd.begin(), r.wdd.end(), 0) !=
        static_cast<long>(r.wdd.size())) {
      got_set.insert(r.wdd);
    }
  }
  std::set<std::vector<int>> want_set;
  for (const auto& [wdd, label] : rigid_want) want_set.insert(wdd);
  if (got_set != want_set) e.fail(name + " rigid set mismatch");
  if (got_set.size() != rigid_count) e.fail(name + " rigid count");

  const auto corpus = parse_corpus(data_path("corpus_" + name + ".txt"));
  if (corpus.size() != sheet_count) e.fail(name + " corpus size");
  if (table.sheets.size() != sheet_count) e.fail(name + " sheet count");
  if (keys_of_table(table) != keys_of_corpus(corpus)) {
    e.fail(name + " sheet rows differ from the published table");
  }
  for (const SheetRow& row : table.sheets) {
    if (row.representative.empty() && row.induced_dim != 0) {
      e.fail(name + " missing representative");
    }
    if (!row.rep_verified) e.fail(name + " unverified representative");
  }
  return e;
}

Expect check_reps(const std::string& name) {
  Expect e;
  const Algebra& alg = algebra_for(parse_type(name));
  for (const CorpusRow& row : parse_corpus(data_path("corpus_" + name + ".txt"))) {
    std::vector<int> roots;
    for (int p : row.rep_published) {
      roots.push_back(alg.rs().internal_of_published(p));
    }
    const Signature sig = signature_from_wdd(alg.rs(), row.induced_wdd);
    const RepReport rep = verify_representative(alg, row.diagram, roots, sig);
    if (!rep.ok()) {
      std::ostringstream what;
      what << name << " rep for diagram";
      for (int x : row.diagram) what << " " << x;
      e.fail(what.str());
    }
    if (row.has_spec && !(diagram_of(alg.rs(), roots) == row.spec)) {
      e.fail(name + " rep diagram shape");
    }
  }
  return e;
}

Expect check_signature_uniqueness(const OrbitCatalog& cat,
                                  const std::string& name) {
  Expect e;
  if (!cat.signatures_unique()) e.fail(name + " signatures collide");
  return e;
}

Expect check_dim_law(const Algebra& alg, const InductionTable& table,
                     const std::string& name) {
  Expect e;
  for (const SheetRow& row : table.sheets) {
    const int from_sig =
        orbit_dim_from_signature(alg.dim(), row.induced_sig);
    const int npos_levi =
        alg.npos() - (induced_dim(alg.rs(), row.subset, 0) / 2);
    const int dim_n = alg.npos() - npos_levi;
    if (from_sig != row.rigid_dim + 2 * dim_n) e.fail(name + " dim law");
    if (from_sig != row.induced_dim) e.fail(name + " dim bookkeeping");
  }
  return e;
}

Expect check_rigid_labels(char family, int rank, const std::string& name) {
  Expect e;
  for (const auto& wdd : rigid_orbit_wdds(family, rank, kSeed)) {
    for (int label : wdd) {
      if (label != 0 && label != 1) e.fail(name + " rigid label outside {0,1}");
    }
  }
  return e;
}

bool jacobi_ok(const Algebra& alg) {
  const int n = alg.dim();
  for (int a = 0; a < n; ++a) {
    const RatVec ea = alg.basis(a);
    for (int b = a + 1; b < n; ++b) {
      const RatVec eb = alg.basis(b);
      const RatVec ab = alg.bracket(ea, eb);
      for (int c = b + 1; c < n; ++c) {
        const RatVec ec = alg.basis(c);
        const RatVec t1 = alg.bracket(ab, ec);
        const RatVec t2 = alg.bracket(alg.bracket(eb, ec), ea);
        const RatVec t3 = alg.bracket(alg.bracket(ec, ea), eb);
        for (int i = 0; i < n; ++i) {
          if (t1[i] + t2[i] + t3[i] != 0) return false;
        }
      }
    }
  }
  return true;
}

bool magnitudes_ok(const Algebra& alg) {
  const RootSystem& rs = alg.rs();
  const int npos = rs.npos();
  auto string_down = [&](const Root& a, const Root& b) {
    int p = 0;
    Root cur = b;
    while (true) {
      for (std::size_t x = 0; x < cur.size(); ++x) cur[x] -= a[x];
      Root neg = cur;
      for (int& v : neg) v = -v;
      if (rs.index_of(cur) < 0 && rs.index_of(neg) < 0) break;
      ++p;
    }
    return p;
  };
  for (int sa = 0; sa < 2; ++sa) {
    for (int ka = 0; ka < npos; ++ka) {
      for (int sb = 0; sb < 2; ++sb) {
        for (int kb = 0; kb < npos; ++kb) {
          if (sa == sb && ka == kb) continue;
          Root a = rs.pos(ka), b = rs.pos(kb);
          if (sa) {
            for (int& v : a) v = -v;
          }
          if (sb) {
            for (int& v : b) v = -v;
          }
          Root sum(rs.rank());
          for (int x = 0; x < rs.rank(); ++x) sum[x] = a[x] + b[x];
          Root neg = sum;
          for (int& v : neg) v = -v;
          int target;
          if (rs.index_of(sum) >= 0) {
            target = alg.xp(rs.index_of(sum));
          } else if (rs.index_of(neg) >= 0) {
            target = alg.xm(rs.index_of(neg));
          } else {
            continue;
          }
          const RatVec br =
              alg.bracket(alg.basis(sa ? alg.xm(ka) : alg.xp(ka)),
                          alg.basis(sb ? alg.xm(kb) : alg.xp(kb)));
          Rat n = br[target];
          if (n < 0) n = -n;
          if (n != Rat(string_down(a, b) + 1)) return false;
        }
      }
    }
  }
  return true;
}

bool random_triples_ok(int want) {
  SplitMix64 rng(987654321);
  const std::pair<char, int> types[] = {{'G', 2}, {'A', 3}, {'B', 3},
                                        {'C', 3}, {'F', 4}, {'B', 2}};
  int done = 0;
  for (int round = 0; done < want; ++round) {
    const auto [family, rank] = types[round % 6];
    const Algebra& alg = algebra_for(family, rank);
    RatVec e = alg.zero();
    bool nonzero = false;
    for (int k = 0; k < alg.npos(); ++k) {
      const long c = static_cast<long>(rng.below(6));
      if (c > 2) {
        e[alg.xp(k)] = Rat(c - 2);
        nonzero = true;
      }
    }
    if (!nonzero) continue;
    const auto t = complete_triple(alg, e);
    if (!t || !verify_triple(alg, *t)) return false;
    ++done;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  bool allow_long = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--allow-long") == 0) allow_long = true;
  }
  linalg::set_verify(true);  // criterion 8: back-substitution on all solves

  const Algebra& g2 = algebra_for('G', 2);
  const Algebra& f4 = algebra_for('F', 4);
  const Algebra& e6 = algebra_for('E', 6);

  const OrbitCatalog cat_g2 = build_catalog(g2, kSeed, 1, labels_for("G2"));
  const OrbitCatalog cat_f4 = build_catalog(f4, kSeed, 1, labels_for("F4"));
  const OrbitCatalog cat_e6 = build_catalog(e6, kSeed, 1, labels_for("E6"));

  SearchOptions opts;
  opts.seed = kSeed;
  const InductionTable table_g2 = build_induction_table(g2, cat_g2, opts);
  const InductionTable table_f4 = build_induction_table(f4, cat_f4, opts);
  const InductionTable table_e6 = build_induction_table(e6, cat_e6, opts);

  // 1-3: golden tables for G2, F4, E6.
  {
    Expect e = check_golden("G2", 2, 3, table_g2);
    report(1, e.ok, e.note);
  }
  {
    Expect e = check_golden("F4", 5, 14, table_f4);
    report(2, e.ok, e.note);
  }
  {
    Expect e = check_golden("E6", 3, 20, table_e6);
    report(3, e.ok, e.note);
  }

  // 4: published representatives verify.
  {
    Expect e;
    for (const char* name : {"G2", "F4", "E6"}) {
      Expect part = check_reps(name);
      if (!part.ok) e.fail(part.note);
    }
    report(4, e.ok, e.note);
  }

  // 5: signature uniqueness.
  {
    Expect e;
    for (auto [cat, name] : {std::pair<const OrbitCatalog*, const char*>{
                                 &cat_g2, "G2"},
                             {&cat_f4, "F4"},
                             {&cat_e6, "E6"}}) {
      Expect part = check_signature_uniqueness(*cat, name);
      if (!part.ok) e.fail(part.note);
    }
    report(5, e.ok, e.note);
  }

  // 6: dimension law on every emitted sheet.
  {
    Expect e;
    Expect a = check_dim_law(g2, table_g2, "G2");
    Expect b = check_dim_law(f4, table_f4, "F4");
    Expect c = check_dim_law(e6, table_e6, "E6");
    for (const Expect* part : {&a, &b, &c}) {
      if (!part->ok) e.fail(part->note);
    }
    report(6, e.ok, e.note);
  }

  // 7: rigid labels land in {0,1}.
  {
    Expect e;
    Expect a = check_rigid_labels('G', 2, "G2");
    Expect b = check_rigid_labels('F', 4, "F4");
    Expect c = check_rigid_labels('E', 6, "E6");
    for (const Expect* part : {&a, &b, &c}) {
      if (!part->ok) e.fail(part->note);
    }
    report(7, e.ok, e.note);
  }

  // 8: algebra correctness suite.
  {
    Expect e;
    if (!jacobi_ok(algebra_for('G', 2))) e.fail("Jacobi G2");
    if (!jacobi_ok(algebra_for('A', 1))) e.fail("Jacobi A1");
    if (!jacobi_ok(algebra_for('A', 2))) e.fail("Jacobi A2");
    if (!jacobi_ok(algebra_for('A', 3))) e.fail("Jacobi A3");
    if (!magnitudes_ok(algebra_for('G', 2))) e.fail("|N| vs strings G2");
    if (!magnitudes_ok(algebra_for('F', 4))) e.fail("|N| vs strings F4");
    if (!random_triples_ok(100)) e.fail("random sl2 triples");
    report(8, e.ok, e.note);
  }

  // 9: determinism.
  {
    Expect e;
    SearchOptions again = opts;
    const Json a = table_json(f4, build_induction_table(f4, cat_f4, again));
    const Json b = table_json(f4, build_induction_table(f4, cat_f4, again));
    if (a.dump(2) != b.dump(2)) e.fail("same-seed bytes differ");

    SearchOptions other = opts;
    other.seed = 555;
    const Json c = table_json(f4, build_induction_table(f4, cat_f4, other));
    Json an = a, cn = c;
    for (Json* doc : {&an, &cn}) {
      for (Json& sheet : (*doc)["sheets"]) sheet.erase("representative");
    }
    if (an.dump(2) != cn.dump(2)) e.fail("cross-seed normalized tables differ");
    for (const Json& sheet : c["sheets"]) {
      if (sheet["representative"].is_null() ||
          sheet["representative"]["verified"] != true) {
        e.fail("cross-seed representative unverified");
      }
    }
    report(9, e.ok, e.note);
  }

  // 10: E7/E8, long-running, property-based.
  if (!allow_long) {
    skip(10, "pass --allow-long to run the E7/E8 checks");
  } else {
    Expect e;
    for (int rank : {7, 8}) {
      const std::string name = "E" + std::to_string(rank);
      std::cerr << "[acceptance] " << name << " rigid recursion...\n";
      const auto rigid_want = parse_labeled_wdds(data_path("rigid_" + name + ".txt"));
      const auto& rigid_got = rigid_orbit_data('E', rank, kSeed);
      std::set<std::vector<int>> got;
      for (const RigidOrbitData& r : rigid_got) {
        if (std::count(r.wdd.begin(), r.wdd.end(), 0) !=
            static_cast<long>(r.wdd.size())) {
          got.insert(r.wdd);
        }
      }
      std::set<std::vector<int>> want;
      for (const auto& [wdd, label] : rigid_want) want.insert(wdd);
      if (got != want) e.fail(name + " rigid table");
      if (rank == 7 && got.size() != 7) e.fail("E7 rigid count");
      if (rank == 8 && got.size() != 17) e.fail("E8 rigid count");

      const Algebra& alg = algebra_for('E', rank);
      std::cerr << "[acceptance] " << name << " catalog...\n";
      const OrbitCatalog cat = build_catalog(alg, kSeed, 1, labels_for(name));
      if (rank == 7 && cat.orbits().size() != 45) e.fail("E7 orbit count");
      if (rank == 8 && cat.orbits().size() != 70) e.fail("E8 orbit count");
      Expect uniq = check_signature_uniqueness(cat, name);
      if (!uniq.ok) e.fail(uniq.note);

      std::cerr << "[acceptance] " << name << " induction table...\n";
      SearchOptions long_opts;
      long_opts.seed = kSeed;
      long_opts.with_reps = false;
      const InductionTable table = build_induction_table(alg, cat, long_opts);
      Expect law = check_dim_law(alg, table, name);
      if (!law.ok) e.fail(law.note);
      Expect labels = check_rigid_labels('E', rank, name);
      if (!labels.ok) e.fail(labels.note);
    }
    report(10, e.ok, e.note);
  }

  if (g_failures == 0) {
    std::cout << (allow_long ? "all criteria pass\n"
                             : "criteria 1-9 pass (10 skipped)\n");
  }
  return g_failures == 0 ? 0 : 1;
}
