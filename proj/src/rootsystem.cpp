#include "nilorb/rootsystem.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace nilorb {

std::string TypeSpec::name() const {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += '+';
    out += parts[i].first;
    out += std::to_string(parts[i].second);
  }
  return out;
}

int TypeSpec::rank() const {
  int r = 0;
  for (auto& [f, n] : parts) r += n;
  return r;
}

TypeSpec parse_type(std::string_view text) {
  TypeSpec spec;
  std::size_t i = 0;
  while (i < text.size()) {
    char fam = static_cast<char>(std::toupper(text[i]));
    if (fam < 'A' || fam > 'G') {
      throw std::invalid_argument("bad type family in '" + std::string(text) +
                                  "'");
    }
    ++i;
    std::size_t j = i;
    while (j < text.size() && std::isdigit(text[j])) ++j;
    if (j == i) throw std::invalid_argument("missing rank in type expression");
    int rank = std::stoi(std::string(text.substr(i, j - i)));
    const bool ok =
        (fam == 'A' && rank >= 1) || (fam == 'B' && rank >= 2) ||
        (fam == 'C' && rank >= 2) || (fam == 'D' && rank >= 3) ||
        (fam == 'E' && rank >= 6 && rank <= 8) || (fam == 'F' && rank == 4) ||
        (fam == 'G' && rank == 2);
    if (!ok) {
      throw std::invalid_argument("unsupported type " + std::string(1, fam) +
                                  std::to_string(rank));
    }
    spec.parts.emplace_back(fam, rank);
    i = j;
    if (i < text.size()) {
      if (text[i] != '+') throw std::invalid_argument("expected '+' in type");
      ++i;
      if (i == text.size()) throw std::invalid_argument("trailing '+' in type");
    }
  }
  if (spec.parts.empty()) throw std::invalid_argument("empty type expression");
  return spec;
}

void canonical_cartan(char family, int rank, std::vector<std::vector<int>>& c,
                      std::vector<int>& d) {
  c.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) c[i][i] = 2;
  auto chain = [&](const std::vector<int>& order) {
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
      c[order[k]][order[k + 1]] = -1;
      c[order[k + 1]][order[k]] = -1;
    }
  };
  d.assign(rank, 1);
  switch (family) {
    case 'A': {
      std::vector<int> order(rank);
      std::iota(order.begin(), order.end(), 0);
      chain(order);
      break;
    }
    case 'B': {
      std::vector<int> order(rank);
      std::iota(order.begin(), order.end(), 0);
      chain(order);
      c[rank - 2][rank - 1] = -2;
      c[rank - 1][rank - 2] = -1;
      d.assign(rank, 2);
      d[rank - 1] = 1;
      break;
    }
    case 'C': {
      std::vector<int> order(rank);
      std::iota(order.begin(), order.end(), 0);
      chain(order);
      c[rank - 2][rank - 1] = -1;
      c[rank - 1][rank - 2] = -2;
      d.assign(rank, 1);
      d[rank - 1] = 2;
      break;
    }
    case 'D': {
      std::vector<int> order(rank - 1);
      std::iota(order.begin(), order.end(), 0);
      chain(order);
      c[rank - 3][rank - 1] = -1;
      c[rank - 1][rank - 3] = -1;
      break;
    }
    case 'E': {
      // Bourbaki numbering: chain 1-3-4-5-6(-7-8), node 2 attached to node 4.
      std::vector<int> order = {0};
      for (int k = 2; k < rank; ++k) order.push_back(k);
      chain(order);
      c[1][3] = -1;
      c[3][1] = -1;
      break;
    }
    case 'F': {
      // Chain a1 - a3 => a4 - a2 with a1, a3 short.
      c[0][2] = c[2][0] = -1;
      c[2][3] = -1;
      c[3][2] = -2;
      c[3][1] = c[1][3] = -1;
      d = {1, 2, 1, 2};
      break;
    }
    case 'G': {
      c[0][1] = -1;
      c[1][0] = -3;
      d = {1, 3};
      break;
    }
    default:
      throw std::invalid_argument("unknown family");
  }
}

RootSystem::RootSystem(const TypeSpec& spec) : spec_(spec), name_(spec.name()) {
  rank_ = spec.rank();
  cartan_.assign(rank_, std::vector<int>(rank_, 0));
  d_.assign(rank_, 1);
  int base = 0;
  for (auto& [fam, r] : spec_.parts) {
    std::vector<std::vector<int>> c;
    std::vector<int> d;
    canonical_cartan(fam, r, c, d);
    for (int i = 0; i < r; ++i) {
      d_[base + i] = d[i];
      for (int j = 0; j < r; ++j) cartan_[base + i][base + j] = c[i][j];
    }
    base += r;
  }
  build_roots();
  min_norm_ = max_norm_ = norm2(pos_[0]);
  for (const Root& r : pos_) {
    min_norm_ = std::min(min_norm_, norm2(r));
    max_norm_ = std::max(max_norm_, norm2(r));
  }
  build_published_order();
}

void RootSystem::build_roots() {
  // Breadth-first closure by height; the visit order within each level
  // (parents in index order, simple roots ascending) defines the internal
  // numbering of the positive roots.
  pos_.clear();
  height_.clear();
  index_.clear();
  std::vector<int> level;
  for (int i = 0; i < rank_; ++i) {
    Root r(rank_, 0);
    r[i] = 1;
    index_[r] = static_cast<int>(pos_.size());
    pos_.push_back(r);
    height_.push_back(1);
    level.push_back(i);
  }
  int h = 1;
  while (!level.empty()) {
    std::vector<int> next;
    for (int k : level) {
      const Root r = pos_[k];
      for (int i = 0; i < rank_; ++i) {
        // Root string: r + a_i is a root iff p - <r, a_i-check> >= 1 where
        // p counts the consecutive roots r - a_i, r - 2 a_i, ...
        int p = 0;
        Root down = r;
        while (true) {
          down[i] -= 1;
          bool neg = std::all_of(down.begin(), down.end(),
                                 [](int x) { return x == 0; });
          if (neg) break;  // reached zero; r was a_i itself
          if (!index_.count(down)) break;
          ++p;
        }
        int c = 0;
        for (int x = 0; x < rank_; ++x) c += r[x] * cartan_[x][i];
        if (p - c < 1) continue;
        Root up = r;
        up[i] += 1;
        if (index_.count(up)) continue;
        index_[up] = static_cast<int>(pos_.size());
        pos_.push_back(up);
        height_.push_back(h + 1);
        next.push_back(static_cast<int>(pos_.size()) - 1);
      }
    }
    level = std::move(next);
    ++h;
  }
}

void RootSystem::build_published_order() {
  const int n = npos();
  published_.resize(n);
  for (int k = 0; k < n; ++k) published_[k] = k + 1;
  // The reference numbering used by the published tables agrees with the
  // breadth-first order except for two transpositions in F4.
  if (spec_.parts.size() == 1 && spec_.parts[0].first == 'F') {
    std::swap(published_[16], published_[17]);
    std::swap(published_[18], published_[19]);
  }
  for (int k = 0; k < n; ++k) from_published_[published_[k]] = k;
}

int RootSystem::index_of(const Root& r) const {
  auto it = index_.find(r);
  return it == index_.end() ? -1 : it->second;
}

long RootSystem::ip(const Root& a, const Root& b) const {
  long acc = 0;
  for (int x = 0; x < rank_; ++x) {
    if (a[x] == 0) continue;
    for (int y = 0; y < rank_; ++y) {
      if (b[y] == 0 || cartan_[x][y] == 0) continue;
      acc += static_cast<long>(a[x]) * b[y] * d_[y] * cartan_[x][y];
    }
  }
  return acc;
}

long RootSystem::norm2(const Root& r) const { return ip(r, r); }

int RootSystem::cartan_int(const Root& a, const Root& b) const {
  const long t = 2 * ip(a, b);
  const long n = norm2(b);
  assert(t % n == 0);
  return static_cast<int>(t / n);
}

namespace {
// Lexicographically-least permutation matching the sub-Cartan onto the
// canonical Cartan of (family, rank), or empty if none exists.
std::vector<int> match_family(const std::vector<std::vector<int>>& sub,
                              char family, int rank) {
  std::vector<std::vector<int>> c;
  std::vector<int> d;
  canonical_cartan(family, rank, c, d);
  std::vector<int> perm(rank);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < rank && ok; ++i) {
      for (int j = 0; j < rank && ok; ++j) {
        if (sub[perm[i]][perm[j]] != c[i][j]) ok = false;
      }
    }
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {};
}
}  // namespace

std::vector<Component> RootSystem::components(
    const std::vector<int>& nodes) const {
  std::vector<Component> out;
  std::vector<bool> seen(nodes.size(), false);
  for (std::size_t s = 0; s < nodes.size(); ++s) {
    if (seen[s]) continue;
    // Flood fill one connected component.
    std::vector<std::size_t> comp{s};
    seen[s] = true;
    for (std::size_t q = 0; q < comp.size(); ++q) {
      for (std::size_t t = 0; t < nodes.size(); ++t) {
        if (!seen[t] && cartan_[nodes[comp[q]]][nodes[t]] != 0) {
          seen[t] = true;
          comp.push_back(t);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    const int m = static_cast<int>(comp.size());
    std::vector<std::vector<int>> sub(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        sub[i][j] = cartan_[nodes[comp[i]]][nodes[comp[j]]];
      }
    }
    Component c;
    c.rank = m;
    const char candidates[] = {'A', 'B', 'C', 'D', 'E', 'F', 'G'};
    std::vector<int> perm;
    for (char fam : candidates) {
      const bool valid = (fam == 'A') || (fam == 'B' && m >= 2) ||
                         (fam == 'C' && m >= 3) || (fam == 'D' && m >= 4) ||
                         (fam == 'E' && m >= 6 && m <= 8) ||
                         (fam == 'F' && m == 4) || (fam == 'G' && m == 2);
      if (!valid) continue;
      perm = match_family(sub, fam, m);
      if (!perm.empty()) {
        c.family = fam;
        break;
      }
    }
    assert(!perm.empty() && "component classification failed");
    for (int i = 0; i < m; ++i) c.nodes.push_back(nodes[comp[perm[i]]]);
    if (two_lengths()) {
      // All simples short implies the whole component is short (a component
      // with its own long roots, like B2 inside F4, has a long simple node).
      bool all_short = true;
      for (int node : c.nodes) {
        Root r(rank_, 0);
        r[node] = 1;
        if (norm2(r) == max_norm_) all_short = false;
      }
      c.short_in_ambient = all_short;
    }
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Component& a, const Component& b) {
    return a.nodes.front() < b.nodes.front();
  });
  return out;
}

}  // namespace nilorb
