#include "nilorb/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nilorb {

namespace {
constexpr const char* kCacheMagic =
    "nilorb-orbit-cache 1 conventions=chevalley-extraspecial/bfs-order";

std::vector<std::string> split_fields(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  for (std::string& f : out) {
    const auto a = f.find_first_not_of(" \t");
    const auto b = f.find_last_not_of(" \t");
    f = a == std::string::npos ? "" : f.substr(a, b - a + 1);
  }
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  int v;
  while (in >> v) out.push_back(v);
  return out;
}

DiagramSpec parse_spec(const std::string& text, int node_count) {
  DiagramSpec spec;
  spec.node_count = node_count;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == ".") continue;
    if (tok[0] == '!') {
      spec.blacks.push_back(std::stoi(tok.substr(1)));
      continue;
    }
    const auto sep = tok.find_first_of("-~");
    const auto colon = tok.find(':');
    if (sep == std::string::npos || colon == std::string::npos) {
      throw std::runtime_error("bad spec token: " + tok);
    }
    Bond b;
    b.i = std::stoi(tok.substr(0, sep));
    b.j = std::stoi(tok.substr(sep + 1, colon - sep - 1));
    b.lines = std::stoi(tok.substr(colon + 1));
    b.dotted = tok[sep] == '~';
    if (b.i > b.j) std::swap(b.i, b.j);
    spec.bonds.push_back(b);
  }
  std::sort(spec.bonds.begin(), spec.bonds.end(),
            [](const Bond& a, const Bond& b) {
              return std::tie(a.i, a.j) < std::tie(b.i, b.j);
            });
  std::sort(spec.blacks.begin(), spec.blacks.end());
  return spec;
}
}  // namespace

std::vector<CorpusRow> parse_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);
  std::vector<CorpusRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split_fields(line, '|');
    if (fields.size() != 7) {
      throw std::runtime_error("corpus line needs 7 fields: " + line);
    }
    CorpusRow row;
    row.type_name = fields[0];
    row.diagram = parse_ints(fields[1]);
    row.rank = std::stoi(fields[2]);
    row.induced_wdd = parse_ints(fields[3]);
    row.dim = std::stoi(fields[4]);
    if (fields[5] != "-") row.rep_published = parse_ints(fields[5]);
    if (fields[6] != "-") {
      row.spec = parse_spec(fields[6],
                            static_cast<int>(row.rep_published.size()));
      row.has_spec = true;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::map<std::vector<int>, std::string> parse_labeled_wdds(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open wdd file: " + path);
  std::map<std::vector<int>, std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split_fields(line, '|');
    if (fields.size() != 2) {
      throw std::runtime_error("wdd line needs 2 fields: " + line);
    }
    out[parse_ints(fields[0])] = fields[1];
  }
  return out;
}

std::optional<std::vector<OrbitInfo>> load_catalog_cache(
    const std::string& dir, const std::string& type_name) {
  std::ifstream in(dir + "/orbits_" + type_name + ".cache");
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != kCacheMagic) return std::nullopt;
  std::vector<OrbitInfo> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split_fields(line, '|');
    if (fields.size() != 4) return std::nullopt;
    OrbitInfo info;
    info.wdd = parse_ints(fields[0]);
    info.signature = parse_ints(fields[1]);
    info.dim = std::stoi(fields[2]);
    if (fields[3] != "-") info.label = fields[3];
    rows.push_back(std::move(info));
  }
  return rows;
}

void store_catalog_cache(const std::string& dir, const std::string& type_name,
                         const OrbitCatalog& cat) {
  std::ofstream out(dir + "/orbits_" + type_name + ".cache");
  if (!out) return;  // cache is best-effort
  out << kCacheMagic << "\n";
  for (const OrbitInfo& o : cat.orbits()) {
    for (std::size_t i = 0; i < o.wdd.size(); ++i) {
      out << (i ? " " : "") << o.wdd[i];
    }
    out << " | ";
    for (std::size_t i = 0; i < o.signature.size(); ++i) {
      out << (i ? " " : "") << o.signature[i];
    }
    out << " | " << o.dim << " | " << (o.label.empty() ? "-" : o.label)
        << "\n";
  }
}

OrbitCatalog catalog_for(const Algebra& alg, std::uint64_t seed, int jobs,
                         const std::map<std::vector<int>, std::string>& labels,
                         const std::string& cache_dir) {
  if (!cache_dir.empty()) {
    if (auto rows = load_catalog_cache(cache_dir, alg.rs().name())) {
      for (OrbitInfo& info : *rows) {
        auto it = labels.find(info.wdd);
        if (it != labels.end()) info.label = it->second;
      }
      return OrbitCatalog(std::move(*rows));
    }
  }
  OrbitCatalog cat = build_catalog(alg, seed, jobs, labels);
  if (!cache_dir.empty()) {
    store_catalog_cache(cache_dir, alg.rs().name(), cat);
  }
  return cat;
}

}  // namespace nilorb
