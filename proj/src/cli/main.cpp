#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "nilorb/catalog.hpp"
#include "nilorb/chevalley.hpp"
#include "nilorb/induction.hpp"
#include "nilorb/levi.hpp"
#include "nilorb/orbits.hpp"
#include "nilorb/repfinder.hpp"
#include "nilorb/rng.hpp"
#include "nilorb/serialize.hpp"

namespace {

using namespace nilorb;

std::string join_digits(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(v[i]);
  }
  return out;
}

struct Options {
  std::uint64_t seed = 20240;
  int n_initial = 10;
  int jobs = 1;
  std::string format = "text";
  std::string cache_dir;
  std::string data_dir;
  bool allow_long = false;
  bool no_reps = false;
};

std::string env_or(const char* name, const std::string& fallback) {
  const char* v = std::getenv(name);
  return v ? std::string(v) : fallback;
}

bool is_long_type(const TypeSpec& spec) {
  for (const auto& [family, rank] : spec.parts) {
    if (family == 'E' && rank >= 7) return true;
  }
  return false;
}

void require_long_ok(const TypeSpec& spec, const Options& opt) {
  if (is_long_type(spec) && !opt.allow_long) {
    throw CLI::ValidationError(
        "type " + spec.name() +
        " is long-running; pass --allow-long to compute it");
  }
}

void progress(const TypeSpec& spec, const std::string& phase) {
  if (is_long_type(spec)) {
    std::cerr << "[" << spec.name() << "] " << phase << "...\n";
  }
}

std::map<std::vector<int>, std::string> load_labels(const Options& opt,
                                                    const std::string& name) {
  try {
    return parse_labeled_wdds(opt.data_dir + "/labels_" + name + ".txt");
  } catch (const std::exception&) {
    return {};  // labels are decoration; missing files are fine
  }
}

OrbitCatalog make_catalog(const Algebra& alg, const Options& opt) {
  progress(alg.rs().type(), "enumerating weighted Dynkin diagrams");
  return catalog_for(alg, opt.seed, opt.jobs,
                     load_labels(opt, alg.rs().name()), opt.cache_dir);
}

void emit(const Options& opt, const Json& doc, const std::string& text,
          const std::string& latex) {
  if (opt.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else if (opt.format == "latex") {
    std::cout << latex;
  } else {
    std::cout << text;
  }
}

int cmd_roots(const std::string& type, const Options& opt) {
  const Algebra& alg = algebra_for(parse_type(type));
  emit(opt, roots_json(alg.rs()), roots_text(alg.rs()), roots_text(alg.rs()));
  return 0;
}

int cmd_mult_table(const std::string& type, const Options&) {
  const Algebra& alg = algebra_for(parse_type(type));
  std::cout << mult_table_text(alg);
  return 0;
}

int cmd_orbits(const std::string& type, const Options& opt) {
  const TypeSpec spec = parse_type(type);
  require_long_ok(spec, opt);
  const Algebra& alg = algebra_for(spec);
  const OrbitCatalog cat = make_catalog(alg, opt);
  emit(opt, orbits_json(alg, cat), orbits_text(alg, cat),
       orbits_latex(alg, cat));
  return 0;
}

int cmd_levis(const std::string& type, const Options& opt) {
  const Algebra& alg = algebra_for(parse_type(type));
  const auto classes = enumerate_levi_classes(alg);
  emit(opt, levis_json(alg, classes), levis_text(alg, classes),
       levis_text(alg, classes));
  return 0;
}

int cmd_rigid(const std::string& type, const Options& opt) {
  const TypeSpec spec = parse_type(type);
  require_long_ok(spec, opt);
  if (spec.parts.size() != 1) {
    throw CLI::ValidationError("rigid expects a simple type, got " + type);
  }
  const Algebra& alg = algebra_for(spec);
  const OrbitCatalog cat = make_catalog(alg, opt);
  progress(spec, "running the rigid-orbit recursion");
  const auto& rigid =
      rigid_orbit_data(spec.parts[0].first, spec.parts[0].second, opt.seed);
  emit(opt, rigid_json(alg, rigid, cat), rigid_text(alg, rigid, cat),
       rigid_latex(alg, rigid, cat));
  return 0;
}

int cmd_table(const std::string& type, const Options& opt) {
  const TypeSpec spec = parse_type(type);
  require_long_ok(spec, opt);
  if (spec.parts.size() != 1) {
    throw CLI::ValidationError("table expects a simple type, got " + type);
  }
  const Algebra& alg = algebra_for(spec);
  const OrbitCatalog cat = make_catalog(alg, opt);
  SearchOptions sopts;
  sopts.seed = opt.seed;
  sopts.n_initial = opt.n_initial;
  sopts.jobs = opt.jobs;
  sopts.with_reps = !opt.no_reps;
  progress(spec, "building the induction table");
  const InductionTable table = build_induction_table(alg, cat, sopts);
  emit(opt, table_json(alg, table), table_text(alg, table),
       table_latex(alg, table));
  return 0;
}

int cmd_verify(const std::string& type, const std::string& corpus_path,
               const Options& opt) {
  const TypeSpec spec = parse_type(type);
  require_long_ok(spec, opt);
  const Algebra& alg = algebra_for(spec);
  const RootSystem& rs = alg.rs();
  const OrbitCatalog cat = make_catalog(alg, opt);
  SearchOptions sopts;
  sopts.seed = opt.seed;
  sopts.n_initial = opt.n_initial;
  sopts.jobs = opt.jobs;
  sopts.with_reps = false;
  const InductionTable table = build_induction_table(alg, cat, sopts);
  const std::vector<CorpusRow> corpus = parse_corpus(corpus_path);

  int failures = 0;
  auto report = [&](bool ok, const std::string& what) {
    if (!ok) ++failures;
    std::cout << (ok ? "   ok  " : " FAIL  ") << what << "\n";
  };

  // The computed sheet set must equal the corpus row set.
  using Key = std::tuple<std::vector<int>, int, std::vector<int>, int>;
  std::multiset<Key> got, want;
  for (const SheetRow& row : table.sheets) {
    got.insert({row.diagram, row.rank, row.induced_wdd, row.induced_dim});
  }
  for (const CorpusRow& row : corpus) {
    want.insert({row.diagram, row.rank, row.induced_wdd, row.dim});
  }
  report(got == want, "sheet set (" + std::to_string(table.sheets.size()) +
                          " computed vs " + std::to_string(corpus.size()) +
                          " corpus rows)");

  for (const CorpusRow& row : corpus) {
    const std::string tag =
        "sheet (" + join_digits(row.diagram) + ") rank " +
        std::to_string(row.rank);
    if (row.rep_published.empty()) continue;
    std::vector<int> internal;
    for (int p : row.rep_published) {
      internal.push_back(rs.internal_of_published(p));
    }
    const Signature expect = signature_from_wdd(rs, row.induced_wdd);
    const RepReport rr =
        verify_representative(alg, row.diagram, internal, expect);
    report(rr.ok(), "representative of " + tag);
    if (row.has_spec) {
      report(diagram_of(rs, internal) == row.spec, "diagram shape of " + tag);
    }
  }
  if (failures == 0) {
    std::cout << "verified: all " << corpus.size() << " corpus rows\n";
    return 0;
  }
  std::cout << "verification failures: " << failures << "\n";
  return 1;
}

int cmd_rep(const std::string& type, const std::vector<int>& diagram,
            const Options& opt) {
  const TypeSpec spec = parse_type(type);
  require_long_ok(spec, opt);
  const Algebra& alg = algebra_for(spec);
  const RootSystem& rs = alg.rs();
  if (static_cast<int>(diagram.size()) != rs.rank()) {
    throw CLI::ValidationError("--diagram needs " + std::to_string(rs.rank()) +
                               " labels for " + rs.name());
  }
  for (int x : diagram) {
    if (x < 0 || x > 2) {
      throw CLI::ValidationError("--diagram labels must be 0, 1 or 2");
    }
  }
  const OrbitCatalog cat = make_catalog(alg, opt);
  // Dimension of the Levi orbit encoded by the non-2 labels.
  std::vector<int> subset;
  for (int i = 0; i < rs.rank(); ++i) {
    if (diagram[i] != 2) subset.push_back(i);
  }
  int rigid_dim = 0;
  for (const Component& comp : rs.components(subset)) {
    std::vector<int> w;
    for (int node : comp.nodes) w.push_back(diagram[node]);
    rigid_dim += orbit_dim_from_wdd(algebra_for(comp.family, comp.rank).rs(), w);
  }
  const int s = induced_dim(rs, subset, rigid_dim);
  const InducedOrbit ind = induce_orbit(
      alg, diagram, s, cat, derive_seed(opt.seed, "rep/" + rs.name()),
      opt.n_initial);
  auto rep = find_representative(alg, diagram, ind.signature, s, nullptr,
                                 derive_seed(opt.seed, "rep2/" + rs.name()));
  Json doc;
  doc["algebra"] = rs.name();
  doc["sheet_diagram"] = diagram;
  Json induced;
  induced["wdd"] = ind.wdd;
  induced["dim"] = s;
  const OrbitInfo* info = cat.by_wdd(ind.wdd);
  induced["label"] =
      (info && !info->label.empty()) ? Json(info->label) : Json(nullptr);
  doc["induced"] = std::move(induced);
  if (rep) {
    std::vector<int> pub;
    for (int k : *rep) pub.push_back(rs.published_index(k));
    std::sort(pub.begin(), pub.end());
    const RepReport rr = verify_representative(alg, diagram, *rep,
                                               ind.signature);
    Json r;
    r["roots"] = pub;
    r["verified"] = rr.ok();
    r["admissible"] = is_admissible(rs, *rep);
    doc["representative"] = std::move(r);
  } else {
    doc["representative"] = nullptr;
  }
  if (opt.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "sheet (" << join_digits(diagram) << ") of " << rs.name()
              << ": induced (" << join_digits(ind.wdd) << ") dim " << s;
    if (info && !info->label.empty()) std::cout << " [" << info->label << "]";
    std::cout << "\n";
    if (rep) {
      std::cout << "representative: x[";
      const Json& r = doc["representative"];
      const auto pub = r["roots"].get<std::vector<int>>();
      for (std::size_t i = 0; i < pub.size(); ++i) {
        std::cout << (i ? "+" : "") << pub[i];
      }
      std::cout << "]  verified=" << (r["verified"].get<bool>() ? "yes" : "no")
                << "  admissible="
                << (r["admissible"].get<bool>() ? "yes" : "no") << "\n";
    } else {
      std::cout << "representative: not found\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "nilorb: nilpotent orbits, Levi classes, rigid orbits and induction "
      "tables for semisimple Lie algebras"};
  app.require_subcommand(1);

  Options opt;
  opt.cache_dir = env_or("NILORB_CACHE_DIR", "");
  opt.data_dir = env_or("NILORB_DATA_DIR", "data");
  app.add_option("--seed", opt.seed, "master random seed")
      ->capture_default_str();
  app.add_option("--n-initial", opt.n_initial,
                 "initial coefficient bound for sampling")
      ->capture_default_str();
  app.add_option("--jobs", opt.jobs, "worker threads (1 = serial)")
      ->capture_default_str();
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "text", "latex"}))
      ->capture_default_str();
  app.add_option("--cache-dir", opt.cache_dir,
                 "orbit-catalog cache directory (also NILORB_CACHE_DIR)");
  app.add_option("--data-dir", opt.data_dir,
                 "label/corpus data directory (also NILORB_DATA_DIR)");
  app.add_flag("--allow-long", opt.allow_long, "permit E7/E8 computations");
  app.add_flag("--no-reps", opt.no_reps, "skip representative search");

  std::string type, corpus_path;
  std::vector<int> diagram;

  auto* roots = app.add_subcommand("roots", "positive-root numbering table");
  roots->add_option("type", type, "algebra type, e.g. G2 or A2+A1")
      ->required();
  auto* mult = app.add_subcommand("mult-table", "Chevalley multiplication table");
  mult->add_option("type", type)->required();
  auto* orbits = app.add_subcommand("orbits", "nilpotent orbit catalog");
  orbits->add_option("type", type)->required();
  auto* levis = app.add_subcommand("levis", "Levi conjugacy classes");
  levis->add_option("type", type)->required();
  auto* rigid = app.add_subcommand("rigid", "rigid nilpotent orbits");
  rigid->add_option("type", type)->required();
  auto* table = app.add_subcommand("table", "full induction table");
  table->add_option("type", type)->required();
  auto* verify = app.add_subcommand("verify", "compare against a corpus file");
  verify->add_option("type", type)->required();
  verify->add_option("corpus", corpus_path, "corpus file path")->required();
  auto* rep = app.add_subcommand("rep", "find a sheet representative");
  rep->add_option("type", type)->required();
  rep->add_option("--diagram", diagram, "sheet diagram labels")
      ->required()
      ->delimiter(',');

  // Let global flags (--format, --seed, ...) appear after the subcommand.
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
    if (roots->parsed()) return cmd_roots(type, opt);
    if (mult->parsed()) return cmd_mult_table(type, opt);
    if (orbits->parsed()) return cmd_orbits(type, opt);
    if (levis->parsed()) return cmd_levis(type, opt);
    if (rigid->parsed()) return cmd_rigid(type, opt);
    if (table->parsed()) return cmd_table(type, opt);
    if (verify->parsed()) return cmd_verify(type, corpus_path, opt);
    if (rep->parsed()) return cmd_rep(type, diagram, opt);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const nilorb::RetryExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
