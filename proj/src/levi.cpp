#include "nilorb/levi.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>

namespace nilorb {

RatVec principal_coords(const RootSystem& rs, const std::vector<int>& s) {
  const int m = static_cast<int>(s.size());
  RatVec c(rs.rank(), Rat(0));
  if (m == 0) return c;
  RatMat a(m, RatVec(m, Rat(0)));
  RatVec b(m, Rat(2));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) a[i][j] = rs.cartan(s[i], s[j]);
  }
  const auto sol = linalg::solve(a, b);
  assert(sol.has_value());
  for (int j = 0; j < m; ++j) c[s[j]] = (*sol)[j];
  return c;
}

Signature levi_signature(const RootSystem& rs, const std::vector<int>& s) {
  const RatVec c = principal_coords(rs, s);
  // Eigenvalue of ad h on x_b is sum_x b_x * (C c)_x; integral because h is
  // the neutral element of an ambient sl2-triple.
  RatVec w(rs.rank(), Rat(0));
  for (int i = 0; i < rs.rank(); ++i) {
    for (int j = 0; j < rs.rank(); ++j) {
      if (rs.cartan(i, j) != 0) w[i] += Rat(rs.cartan(i, j)) * c[j];
    }
  }
  std::map<long, int> counts;
  for (int k = 0; k < rs.npos(); ++k) {
    Rat acc(0);
    const Root& r = rs.pos(k);
    for (int x = 0; x < rs.rank(); ++x) {
      if (r[x] != 0) acc += Rat(r[x]) * w[x];
    }
    assert(acc.get_den() == 1);
    counts[std::abs(acc.get_num().get_si())] += 1;
  }
  long maxw = counts.empty() ? 0 : counts.rbegin()->first;
  Signature sig(maxw + 1, 0);
  for (const auto& [ev, n] : counts) sig[ev] += n;
  sig[0] = rs.rank() + 2 * sig[0];
  while (sig.size() > 1 && sig.back() == 0) sig.pop_back();
  return sig;
}

namespace {
struct NamePart {
  int rank;
  bool short_root;  // tilde component
  char family;
  bool operator<(const NamePart& o) const {
    if (rank != o.rank) return rank > o.rank;           // rank descending
    if (short_root != o.short_root) return !short_root;  // long first
    return family < o.family;
  }
  bool operator==(const NamePart& o) const {
    return rank == o.rank && short_root == o.short_root &&
           family == o.family;
  }
};
}  // namespace

std::string levi_base_name(const RootSystem& rs,
                           const std::vector<Component>& comps) {
  (void)rs;
  if (comps.empty()) return "0";
  std::vector<NamePart> parts;
  for (const Component& c : comps) {
    parts.push_back({c.rank, c.short_in_ambient, c.family});
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (!out.empty()) out += '+';
    const std::size_t mult = j - i;
    if (mult > 1) out += std::to_string(mult);
    if (parts[i].short_root) out += '~';
    out += parts[i].family;
    out += std::to_string(parts[i].rank);
    i = j;
  }
  return out;
}

std::vector<LeviClass> enumerate_levi_classes(const Algebra& alg) {
  const RootSystem& rs = alg.rs();
  const int l = rs.rank();
  std::vector<LeviClass> classes;
  std::map<Signature, int> index_by_sig;
  for (unsigned mask = 0; mask < (1u << l); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < l; ++i) {
      if (mask & (1u << i)) s.push_back(i);
    }
    Signature sig = levi_signature(rs, s);
    auto it = index_by_sig.find(sig);
    if (it == index_by_sig.end()) {
      LeviClass cls;
      cls.rep = s;
      cls.members.push_back(s);
      cls.signature = sig;
      cls.ssrank = static_cast<int>(s.size());
      index_by_sig.emplace(std::move(sig),
                           static_cast<int>(classes.size()));
      classes.push_back(std::move(cls));
    } else {
      classes[it->second].members.push_back(s);
    }
  }
  // Finish each class: components, dominant ambient weights, base names.
  for (LeviClass& cls : classes) {
    cls.comps = rs.components(cls.rep);
    RatVec c = principal_coords(rs, cls.rep);
    const std::vector<Rat> w = rs.dominant_weights(std::move(c));
    cls.ambient_wdd.resize(l);
    for (int i = 0; i < l; ++i) {
      assert(w[i].get_den() == 1);
      cls.ambient_wdd[i] = static_cast<int>(w[i].get_num().get_si());
    }
    cls.name = levi_base_name(rs, cls.comps);
  }
  // Prime decorations for repeated base names, in order of first appearance.
  std::map<std::string, std::vector<LeviClass*>> groups;
  for (LeviClass& cls : classes) groups[cls.name].push_back(&cls);
  for (auto& [base, group] : groups) {
    if (group.size() < 2) continue;
    const bool wrap = base.find('+') != std::string::npos ||
                      (std::isdigit(static_cast<unsigned char>(base[0])) != 0);
    for (std::size_t k = 0; k < group.size(); ++k) {
      std::string decorated = wrap ? "(" + base + ")" : base;
      decorated += std::string(k + 1, '\'');
      group[k]->name = std::move(decorated);
    }
  }
  return classes;
}

}  // namespace nilorb
