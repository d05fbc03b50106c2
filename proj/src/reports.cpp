#include "momentcone/reports.hpp"

#include <algorithm>
#include <sstream>

#include "momentcone/golden.hpp"

namespace momentcone {

namespace {

std::vector<Inequality> golden_su22_rows() {
  std::vector<Inequality> rows;
  for (const auto& coeffs : golden::kSu22Inequalities) {
    RatVec v(6);
    for (int i = 0; i < 6; ++i) v[i] = coeffs[i];
    rows.push_back({v, 0});
  }
  std::sort(rows.begin(), rows.end(), ineq_less);
  return rows;
}

}  // namespace

std::string horn_table_text(int n) {
  std::ostringstream out;
  out << "Horn-Klyachko triples for SU(" << n << ")\n";
  for (int k = 1; 2 * k <= n; ++k) {
    auto triples = horn_triples(n, k);
    // One representative per I<->J swap.
    std::vector<HornTriple> rows;
    for (const auto& t : triples)
      if (t.I <= t.J) rows.push_back(t);
    std::sort(rows.begin(), rows.end(), [](const HornTriple& a, const HornTriple& b) {
      return std::tie(a.I, a.J, a.K) < std::tie(b.I, b.J, b.K);
    });
    auto swap_canonical = [](HornTriple t) {
      if (t.J < t.I) std::swap(t.I, t.J);
      return t;
    };
    out << "k=" << k << "\n";
    if (2 * k < n) {
      for (const auto& t : rows)
        out << t.str() << "  " << swap_canonical(dual_triple(t)).str() << "\n";
    } else {
      // Self-paired cardinality: list the lexicographic representative of
      // each dual pair once.
      for (const auto& t : rows) {
        HornTriple d = swap_canonical(dual_triple(t));
        if (d == t) out << t.str() << "  self-dual\n";
        else if (std::tie(t.I, t.J, t.K) < std::tie(d.I, d.J, d.K))
          out << t.str() << "  " << d.str() << "\n";
      }
    }
  }
  return out.str();
}

nlohmann::json horn_json(int n) {
  nlohmann::json j;
  j["n"] = n;
  j["triples"] = nlohmann::json::array();
  for (int k = 1; k < n; ++k) {
    auto triples = horn_triples(n, k);
    std::sort(triples.begin(), triples.end(),
              [](const HornTriple& a, const HornTriple& b) {
                return std::tie(a.K, a.I, a.J) < std::tie(b.K, b.I, b.J);
              });
    for (const auto& t : triples) {
      nlohmann::json jt;
      jt["k"] = k;
      jt["I"] = t.I;
      jt["J"] = t.J;
      jt["K"] = t.K;
      jt["dual"] = dual_triple(t).str();
      jt["text"] = t.str();
      j["triples"].push_back(jt);
    }
  }
  return j;
}

std::string rootsys_text(const RootSystem& rs) {
  std::ostringstream out;
  out << "root system " << rs.name << "\n";
  out << "ambient dim: " << rs.ambient_dim << "\n";
  out << "Weyl order: " << rs.weyl_order << "\n";
  out << "simple roots:\n";
  for (const auto& a : rs.simple_roots) out << "  " << str(a) << "\n";
  out << "positive roots (" << rs.positive_roots.size() << "):\n";
  for (const auto& a : rs.positive_roots) out << "  " << str(a) << "\n";
  return out.str();
}

nlohmann::json rootsys_json(const RootSystem& rs) {
  nlohmann::json j;
  j["name"] = rs.name;
  j["ambient_dim"] = rs.ambient_dim;
  j["rank"] = rs.rank;
  j["weyl_order"] = rs.weyl_order;
  auto vecs = [](const std::vector<RatVec>& vs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : vs) {
      nlohmann::json jv = nlohmann::json::array();
      for (Eigen::Index i = 0; i < v.size(); ++i) jv.push_back(v[i].str());
      arr.push_back(jv);
    }
    return arr;
  };
  j["simple_roots"] = vecs(rs.simple_roots);
  j["positive_roots"] = vecs(rs.positive_roots);
  return j;
}

std::string pair_text(const SymmetricPair& pair) {
  std::ostringstream out;
  out << "pair " << pair.label.str() << "\n";
  out << "ambient: " << pair.ambient.name << " on " << pair.t_dim << " coords\n";
  out << "restricted: " << pair.restricted.name << " on " << pair.a_dim << " coords\n";
  out << "restricted Weyl order: " << pair.restricted.weyl_order << "\n";
  out << "embedding (columns are restricted basis images):\n";
  for (int i = 0; i < pair.t_dim; ++i) {
    out << " ";
    for (int j = 0; j < pair.a_dim; ++j) out << " " << pair.embed_map(i, j).str();
    out << "\n";
  }
  return out.str();
}

nlohmann::json pair_json(const SymmetricPair& pair) {
  nlohmann::json j;
  j["label"] = pair.label.str();
  j["ambient"] = rootsys_json(pair.ambient);
  j["restricted"] = rootsys_json(pair.restricted);
  auto mat = [](const RatMat& m) {
    nlohmann::json arr = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
      arr.push_back(row);
    }
    return arr;
  };
  j["embed"] = mat(pair.embed_map);
  j["restrict"] = mat(pair.restrict_map);
  return j;
}

std::string polytope_text(const Polytope& p) {
  std::ostringstream out;
  out << "dim: " << p.dim << "\n";
  out << "inequalities (" << p.hrep.size() << "), rows a | b meaning a.x <= b:\n";
  out << hrep_text(p);
  if (p.vrep) {
    out << "vertices (" << p.vrep->size() << "):\n";
    for (const auto& v : *p.vrep) out << "  " << str(v) << "\n";
  }
  return out.str();
}

nlohmann::json polytope_json(const Polytope& p) {
  nlohmann::json j;
  j["dim"] = p.dim;
  j["inequalities"] = nlohmann::json::array();
  for (const auto& raw : p.hrep) {
    Inequality q = normalize(raw);
    nlohmann::json jq;
    jq["a"] = nlohmann::json::array();
    for (Eigen::Index i = 0; i < q.normal.size(); ++i) jq["a"].push_back(q.normal[i].str());
    jq["b"] = q.offset.str();
    j["inequalities"].push_back(jq);
  }
  if (p.vrep) {
    j["vertices"] = nlohmann::json::array();
    for (const auto& v : *p.vrep) {
      nlohmann::json jv = nlohmann::json::array();
      for (Eigen::Index i = 0; i < v.size(); ++i) jv.push_back(v[i].str());
      j["vertices"].push_back(jv);
    }
  }
  return j;
}

std::string vertex_csv(const Polytope& p) {
  std::ostringstream out;
  if (!p.vrep) return "";
  for (const auto& v : *p.vrep) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (i) out << ",";
      out << v[i].str();
    }
    out << "\n";
  }
  return out.str();
}

std::string render_su22_inequality(const Inequality& raw) {
  static const char* kNames[6] = {"lambda1", "lambda2", "mu1", "mu2", "nu1", "nu2"};
  Inequality q = normalize(raw);
  if (q.normal.size() != 6 || q.offset != 0)
    throw parameter_error("renderer expects homogeneous 6-variable rows");
  auto combo = [&](const RatVec& v, int from, int to) {
    std::string s;
    for (int i = from; i < to; ++i) {
      if (v[i] == 0) continue;
      Rational c = v[i];
      if (s.empty()) {
        if (c < 0) s += "-";
      } else {
        s += c < 0 ? " - " : " + ";
      }
      Rational m = abs(c);
      if (m != 1) s += m.str() + " ";
      s += kNames[i];
    }
    return s;
  };
  bool nu_zero = q.normal[4] == 0 && q.normal[5] == 0;
  if (nu_zero) {
    RatVec neg = -q.normal;
    return combo(neg, 0, 6) + " >= 0";
  }
  bool leading_positive = q.normal[4] > 0 || (q.normal[4] == 0 && q.normal[5] > 0);
  if (leading_positive) {
    RatVec rhs = -q.normal;
    std::string right = combo(rhs, 0, 4);
    return combo(q.normal, 4, 6) + " <= " + (right.empty() ? "0" : right);
  }
  RatVec lhs = -q.normal;
  std::string right = combo(q.normal, 0, 4);
  return combo(lhs, 4, 6) + " >= " + (right.empty() ? "0" : right);
}

namespace {

std::string su22_block_text(const std::vector<Inequality>& chamber,
                            const std::vector<Inequality>& extra) {
  std::ostringstream out;
  out << "chamber:\n";
  for (const auto& q : chamber) out << render_su22_inequality(q) << "\n";
  out << "inequalities (" << extra.size() << "):\n";
  for (const auto& q : extra) out << render_su22_inequality(q) << "\n";
  return out.str();
}

}  // namespace

Su22Report su22_report() {
  Su22Report rep;
  rep.system = su22_symbolic_system();
  auto chamber = su22_chamber_rows();
  std::vector<Inequality> chamber_norm;
  for (const auto& q : chamber) chamber_norm.push_back(normalize(q));
  for (const auto& q : rep.system.hrep) {
    bool is_chamber = false;
    for (const auto& c : chamber_norm)
      if (q == c) { is_chamber = true; break; }
    if (!is_chamber) rep.extra.push_back(q);
  }
  std::sort(rep.extra.begin(), rep.extra.end(), ineq_less);
  rep.matches_golden = rep.extra == golden_su22_rows() &&
                       rep.system.hrep.size() == chamber.size() + rep.extra.size();
  rep.text = su22_block_text(chamber, rep.extra);
  return rep;
}

std::string su22_golden_text() {
  return su22_block_text(su22_chamber_rows(), golden_su22_rows());
}

std::string oracle_report_text(const OracleReport& report, const Polytope& p) {
  std::ostringstream out;
  out << "trials: " << report.trials << "\n";
  out << "seed: " << report.seed << "\n";
  out << "tol: " << report.tol << "\n";
  if (report.aligned_gap >= 0)
    out << "aligned-frame gap to lambda+mu: " << report.aligned_gap << "\n";
  out << "violations: " << report.violations.size() << "\n";
  std::size_t shown = 0;
  for (const auto& v : report.violations) {
    if (shown++ >= 5) {
      out << "  ...\n";
      break;
    }
    out << "  trial " << v.trial << " inequality " << v.inequality
        << " margin " << v.margin << "\n";
  }
  if (p.vrep && !report.vertex_min_dist.empty()) {
    out << "vertex coverage (min distance over trials):\n";
    for (std::size_t i = 0; i < report.vertex_min_dist.size(); ++i)
      out << "  " << str((*p.vrep)[i]) << ": " << report.vertex_min_dist[i] << "\n";
  }
  return out.str();
}

}  // namespace momentcone
