#include "nilorb/serialize.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace nilorb {

namespace {
std::string join_ints(const std::vector<int>& v, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::vector<int> published_roots(const RootSystem& rs,
                                 const std::vector<int>& internal) {
  std::vector<int> out;
  for (int k : internal) out.push_back(rs.published_index(k));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> one_based(const std::vector<int>& nodes) {
  std::vector<int> out;
  for (int n : nodes) out.push_back(n + 1);
  return out;
}

std::string component_type(const Component& c) {
  std::string s = c.short_in_ambient ? "~" : "";
  s += c.family;
  s += std::to_string(c.rank);
  return s;
}

std::vector<std::string> component_types(const RootSystem& rs,
                                         const std::vector<int>& subset) {
  std::vector<Component> comps = rs.components(subset);
  // Same ordering as the class name: rank descending, long before short,
  // family ascending.
  std::sort(comps.begin(), comps.end(), [](const Component& a, const Component& b) {
    if (a.rank != b.rank) return a.rank > b.rank;
    if (a.short_in_ambient != b.short_in_ambient) return !a.short_in_ambient;
    return a.family < b.family;
  });
  std::vector<std::string> out;
  for (const Component& c : comps) out.push_back(component_type(c));
  return out;
}

const char* yn(bool b) { return b ? "yes" : "no"; }
}  // namespace

Json roots_json(const RootSystem& rs) {
  Json doc;
  doc["algebra"] = rs.name();
  Json rows = Json::array();
  for (int k = 0; k < rs.npos(); ++k) {
    Json row;
    row["index"] = rs.published_index(k);
    row["coords"] = rs.pos(k);
    row["height"] = rs.height(k);
    row["long"] = !rs.two_lengths() || rs.is_long(k);
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const Json& a, const Json& b) {
    return a["index"].get<int>() < b["index"].get<int>();
  });
  doc["roots"] = std::move(rows);
  return doc;
}

std::string roots_text(const RootSystem& rs) {
  const Json doc = roots_json(rs);
  std::ostringstream out;
  out << "# positive roots of " << rs.name()
      << " (index, coordinates, height, length)\n";
  for (const Json& row : doc["roots"]) {
    out << std::setw(3) << row["index"].get<int>() << "  ";
    std::vector<int> coords = row["coords"].get<std::vector<int>>();
    out << join_ints(coords) << "  h=" << row["height"].get<int>() << "  "
        << (row["long"].get<bool>() ? "long" : "short") << "\n";
  }
  return out.str();
}

Json orbits_json(const Algebra& alg, const OrbitCatalog& cat) {
  Json doc;
  doc["algebra"] = alg.rs().name();
  Json rows = Json::array();
  for (const OrbitInfo& o : cat.orbits()) {
    Json row;
    row["wdd"] = o.wdd;
    row["signature"] = o.signature;
    row["dim"] = o.dim;
    row["label"] = o.label.empty() ? Json(nullptr) : Json(o.label);
    rows.push_back(std::move(row));
  }
  doc["orbits"] = std::move(rows);
  return doc;
}

std::string orbits_text(const Algebra& alg, const OrbitCatalog& cat) {
  std::ostringstream out;
  out << "# nilpotent orbits of " << alg.rs().name()
      << " (wdd, dim, label, signature)\n";
  for (const OrbitInfo& o : cat.orbits()) {
    out << join_ints(o.wdd) << "  dim=" << std::setw(3) << o.dim << "  "
        << std::setw(10) << std::left << (o.label.empty() ? "-" : o.label)
        << std::right << "  sig=" << join_ints(o.signature) << "\n";
  }
  return out.str();
}

Json levis_json(const Algebra& alg, const std::vector<LeviClass>& classes) {
  Json doc;
  doc["algebra"] = alg.rs().name();
  Json rows = Json::array();
  for (const LeviClass& cls : classes) {
    Json row;
    row["name"] = cls.name;
    row["pi"] = one_based(cls.rep);
    row["types"] = component_types(alg.rs(), cls.rep);
    row["center_dim"] = alg.rank() - cls.ssrank;
    row["principal_wdd"] = cls.ambient_wdd;
    row["class_size"] = static_cast<int>(cls.members.size());
    rows.push_back(std::move(row));
  }
  doc["levis"] = std::move(rows);
  return doc;
}

std::string levis_text(const Algebra& alg,
                       const std::vector<LeviClass>& classes) {
  std::ostringstream out;
  out << "# Levi classes of " << alg.rs().name()
      << " (name, pi, types, center dim, principal characteristic)\n";
  for (const LeviClass& cls : classes) {
    std::string types;
    for (const std::string& t : component_types(alg.rs(), cls.rep)) {
      if (!types.empty()) types += "+";
      types += t;
    }
    if (types.empty()) types = "0";
    out << std::setw(12) << std::left << cls.name << std::right << "  pi={"
        << join_ints(one_based(cls.rep), ",") << "}  " << std::setw(12)
        << std::left << types << std::right
        << "  z=" << alg.rank() - cls.ssrank << "  char=("
        << join_ints(cls.ambient_wdd) << ")\n";
  }
  return out.str();
}

Json rigid_json(const Algebra& alg, const std::vector<RigidOrbitData>& rigid,
                const OrbitCatalog& cat) {
  Json doc;
  doc["algebra"] = alg.rs().name();
  Json rows = Json::array();
  for (const RigidOrbitData& r : rigid) {
    if (std::all_of(r.wdd.begin(), r.wdd.end(),
                    [](int x) { return x == 0; })) {
      continue;  // the zero orbit is reported separately
    }
    Json row;
    row["wdd"] = r.wdd;
    row["dim"] = r.dim;
    const OrbitInfo* info = cat.by_wdd(r.wdd);
    row["label"] = (info && !info->label.empty()) ? Json(info->label)
                                                  : Json(nullptr);
    rows.push_back(std::move(row));
  }
  doc["rigid"] = std::move(rows);
  doc["zero_orbit_rigid"] = true;
  return doc;
}

std::string rigid_text(const Algebra& alg,
                       const std::vector<RigidOrbitData>& rigid,
                       const OrbitCatalog& cat) {
  const Json doc = rigid_json(alg, rigid, cat);
  std::ostringstream out;
  out << "# rigid nilpotent orbits of " << alg.rs().name()
      << " (nonzero; the zero orbit is always rigid)\n";
  if (doc["rigid"].empty()) {
    out << "(zero orbit only)\n";
    return out.str();
  }
  for (const Json& row : doc["rigid"]) {
    out << join_ints(row["wdd"].get<std::vector<int>>())
        << "  dim=" << std::setw(3) << row["dim"].get<int>() << "  "
        << (row["label"].is_null() ? "-" : row["label"].get<std::string>())
        << "\n";
  }
  return out.str();
}

Json table_json(const Algebra& alg, const InductionTable& table) {
  Json doc;
  doc["algebra"] = alg.rs().name();
  Json sheets = Json::array();
  for (const SheetRow& row : table.sheets) {
    Json s;
    Json levi;
    levi["pi"] = one_based(row.subset);
    levi["types"] = component_types(alg.rs(), row.subset);
    levi["name"] = row.levi_name;
    s["levi"] = std::move(levi);
    s["rigid_wdd"] = row.rigid_labels;
    s["sheet_diagram"] = row.diagram;
    s["rank"] = row.rank;
    Json induced;
    induced["wdd"] = row.induced_wdd;
    induced["dim"] = row.induced_dim;
    induced["label"] = row.induced_label.empty() ? Json(nullptr)
                                                 : Json(row.induced_label);
    s["induced"] = std::move(induced);
    s["sheet_dim"] = row.sheet_dim;
    s["dixmier"] = row.dixmier;
    if (row.representative.empty() && !row.rep_verified) {
      s["representative"] = nullptr;
    } else {
      Json rep;
      rep["roots"] = published_roots(alg.rs(), row.representative);
      rep["verified"] = row.rep_verified;
      s["representative"] = std::move(rep);
    }
    sheets.push_back(std::move(s));
  }
  doc["sheets"] = std::move(sheets);
  return doc;
}

std::string table_text(const Algebra& alg, const InductionTable& table) {
  std::ostringstream out;
  out << "# induction table of " << alg.rs().name()
      << " (levi, rigid labels, sheet diagram, rank, induced orbit, "
         "dims, representative)\n";
  for (const SheetRow& row : table.sheets) {
    out << std::setw(12) << std::left << row.levi_name << std::right
        << "  rigid=(" << join_ints(row.rigid_labels) << ")  D=("
        << join_ints(row.diagram) << ")  rk=" << row.rank << "  -> "
        << std::setw(8) << std::left
        << (row.induced_label.empty() ? "?" : row.induced_label) << std::right
        << " (" << join_ints(row.induced_wdd) << ")  dim=" << std::setw(3)
        << row.induced_dim << "  sheet_dim=" << std::setw(3) << row.sheet_dim
        << "  dixmier=" << yn(row.dixmier);
    if (!row.representative.empty() || row.rep_verified) {
      out << "  e=x[" << join_ints(published_roots(alg.rs(), row.representative), "+")
          << "]" << (row.rep_verified ? "" : " (UNVERIFIED)");
    }
    out << "\n";
  }
  return out.str();
}

namespace {
std::string latex_escape(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '~') {
      if (i + 1 < s.size()) {
        out += "\\tilde{";
        out += s[++i];
        out += '}';
      } else {
        out += "\\tilde{\\ }";
      }
    } else if (s[i] == '\'') {
      out += "$'$";
    } else {
      out += s[i];
    }
  }
  return out;
}
}  // namespace

std::string table_latex(const Algebra& alg, const InductionTable& table) {
  std::ostringstream out;
  out << "\\begin{longtable}{llllrlrr}\n"
      << "\\hline\nLevi & rigid & sheet diagram & rank & induced & wdd & dim &"
      << " sheet dim \\\\\n\\hline\n";
  for (const SheetRow& row : table.sheets) {
    out << latex_escape(row.levi_name) << " & " << join_ints(row.rigid_labels)
        << " & " << join_ints(row.diagram) << " & " << row.rank << " & "
        << latex_escape(row.induced_label.empty() ? "-" : row.induced_label)
        << " & " << join_ints(row.induced_wdd) << " & " << row.induced_dim
        << " & " << row.sheet_dim << " \\\\\n";
  }
  out << "\\hline\n\\end{longtable}\n";
  return out.str();
}

std::string rigid_latex(const Algebra& alg,
                        const std::vector<RigidOrbitData>& rigid,
                        const OrbitCatalog& cat) {
  const Json doc = rigid_json(alg, rigid, cat);
  std::ostringstream out;
  out << "\\begin{longtable}{llr}\n\\hline\nlabel & characteristic & dim "
      << "\\\\\n\\hline\n";
  for (const Json& row : doc["rigid"]) {
    out << latex_escape(row["label"].is_null()
                            ? "-"
                            : row["label"].get<std::string>())
        << " & " << join_ints(row["wdd"].get<std::vector<int>>()) << " & "
        << row["dim"].get<int>() << " \\\\\n";
  }
  out << "\\hline\n\\end{longtable}\n";
  return out.str();
}

std::string orbits_latex(const Algebra& alg, const OrbitCatalog& cat) {
  std::ostringstream out;
  out << "\\begin{longtable}{llr}\n\\hline\nlabel & characteristic & dim "
      << "\\\\\n\\hline\n";
  for (const OrbitInfo& o : cat.orbits()) {
    out << latex_escape(o.label.empty() ? "-" : o.label) << " & "
        << join_ints(o.wdd) << " & " << o.dim << " \\\\\n";
  }
  out << "\\hline\n\\end{longtable}\n";
  return out.str();
}

std::string mult_table_text(const Algebra& alg) {
  const RootSystem& rs = alg.rs();
  const int npos = alg.npos();
  const int dim = alg.dim();
  // Published basis numbering: x_{beta} at its published index, then the
  // negatives shifted by npos, then h_1..h_l.
  std::vector<int> pub(dim), inv(dim + 1);
  for (int k = 0; k < npos; ++k) {
    pub[alg.xp(k)] = rs.published_index(k);
    pub[alg.xm(k)] = npos + rs.published_index(k);
  }
  for (int i = 0; i < alg.rank(); ++i) pub[alg.hh(i)] = 2 * npos + i + 1;
  for (int t = 0; t < dim; ++t) inv[pub[t]] = t;

  std::ostringstream out;
  out << "# [b_i, b_j] = sum c * b_k, one line \"i j k c\" per nonzero term\n"
      << "# basis: x_beta (1.." << npos << "), x_-beta (" << npos + 1 << ".."
      << 2 * npos << "), h (" << 2 * npos + 1 << ".." << dim << ")\n";
  for (int pi = 1; pi <= dim; ++pi) {
    for (int pj = pi + 1; pj <= dim; ++pj) {
      const auto& terms = alg.table(inv[pi], inv[pj]);
      std::vector<std::pair<int, long>> rows;
      for (const auto& [k, c] : terms) rows.emplace_back(pub[k], c);
      std::sort(rows.begin(), rows.end());
      for (const auto& [pk, c] : rows) {
        out << pi << " " << pj << " " << pk << " " << c << "\n";
      }
    }
  }
  return out.str();
}

}  // namespace nilorb
