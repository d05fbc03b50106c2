#pragma once

#include <string>

#include "json.hpp"
#include "momentcone/klyachko.hpp"
#include "momentcone/spectra.hpp"

namespace momentcone {

// Triple table in the two-column presentation: one row per I<->J family,
// dual triples paired, self-dual rows marked. For n = 4 this reproduces the
// reference table byte for byte.
std::string horn_table_text(int n);

// Raw canonical enumeration (lexicographic by K, I, J) for machine use.
nlohmann::json horn_json(int n);

std::string rootsys_text(const RootSystem& rs);
nlohmann::json rootsys_json(const RootSystem& rs);

std::string pair_text(const SymmetricPair& pair);
nlohmann::json pair_json(const SymmetricPair& pair);

// H-representation plus vertices when available.
std::string polytope_text(const Polytope& p);
nlohmann::json polytope_json(const Polytope& p);

// Vertex list as plot-ready coordinate rows ("x,y" per line).
std::string vertex_csv(const Polytope& p);

// Pretty form of a homogeneous 6-variable row over
// (lambda1, lambda2, mu1, mu2, nu1, nu2), nu terms on the left.
std::string render_su22_inequality(const Inequality& q);

struct Su22Report {
  Polytope system;                  // reduced, chamber rows included
  std::vector<Inequality> extra;    // reduced rows beyond the chamber, sorted
  bool matches_golden = false;
  std::string text;                 // chamber block + extra block
};

Su22Report su22_report();

// Renders the golden reference list with the same formatting (fixture text).
std::string su22_golden_text();

std::string oracle_report_text(const OracleReport& report, const Polytope& p);

}  // namespace momentcone
