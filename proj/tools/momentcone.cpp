#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "momentcone/golden.hpp"
#include "momentcone/reports.hpp"

namespace {

using namespace momentcone;

constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitInvariant = 4;

struct Output {
  std::string format = "text";
  std::string path;

  void emit(const std::string& text, const nlohmann::json& json) const {
    std::string payload = format == "json" ? json.dump(2) + "\n" : text;
    if (path.empty()) {
      std::cout << payload;
      return;
    }
    std::ofstream f(path);
    if (!f) throw parameter_error("cannot open output file: " + path);
    f << payload;
  }
};

void add_output_flags(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", out.path, "write the report to a file");
}

Family parse_family(const std::string& name) {
  if (name == "A") return Family::A;
  if (name == "B") return Family::B;
  if (name == "C") return Family::C;
  if (name == "D") return Family::D;
  if (name == "BC") return Family::BC;
  throw parameter_error("unsupported family: " + name + " (use A, B, C, D, BC)");
}

std::uint64_t resolve_seed(const CLI::Option* seed_opt, std::uint64_t seed_flag) {
  if (seed_opt->count() > 0) return seed_flag;
  if (const char* env = std::getenv("MOMENTCONE_SEED")) return std::strtoull(env, nullptr, 10);
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

WeylElement parse_weyl_word(const SymmetricPair& pair, const std::string& word) {
  return pair.weyl->elements[pair.weyl->parse_word(word)];
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"moment polytopes of real flag varieties"};
  app.require_subcommand(1);

  // rootsys FAMILY RANK
  std::string rs_family;
  int rs_rank = 0;
  Output rs_out;
  auto* cmd_rootsys = app.add_subcommand("rootsys", "print a root system");
  cmd_rootsys->add_option("family", rs_family)->required();
  cmd_rootsys->add_option("rank", rs_rank)->required();
  add_output_flags(cmd_rootsys, rs_out);

  // pair LABEL
  std::string pair_label;
  Output pair_out;
  auto* cmd_pair = app.add_subcommand("pair", "print symmetric pair data");
  cmd_pair->add_option("label", pair_label, "AI:4 | AIII:2,2 | BDI:2,3 | Torus:3 | Diag:A3")
      ->required();
  add_output_flags(cmd_pair, pair_out);

  // kostant LABEL --lambda
  std::string ko_label, ko_lambda;
  Output ko_out;
  auto* cmd_kostant = app.add_subcommand("kostant", "orbit hull of a dominant weight");
  cmd_kostant->add_option("label", ko_label)->required();
  cmd_kostant->add_option("--lambda", ko_lambda, "exact fractions, e.g. 3/2,1")->required();
  add_output_flags(cmd_kostant, ko_out);

  // horn N
  int horn_n = 0;
  Output horn_out;
  auto* cmd_horn = app.add_subcommand("horn", "triple table for SU(n)");
  cmd_horn->add_option("n", horn_n)->required()->check(CLI::PositiveNumber);
  add_output_flags(cmd_horn, horn_out);

  // klyachko LABEL --lambda --mu [--w WORD] [--figure]
  std::string kl_label, kl_lambda, kl_mu, kl_word;
  bool kl_figure = false;
  Output kl_out;
  auto* cmd_klyachko = app.add_subcommand("klyachko", "sum polytope of two orbits");
  cmd_klyachko->add_option("label", kl_label)->required();
  cmd_klyachko->add_option("--lambda", kl_lambda)->required();
  cmd_klyachko->add_option("--mu", kl_mu)->required();
  cmd_klyachko->add_option("--w", kl_word, "orbit-closure subpolytope for this Weyl word");
  cmd_klyachko->add_flag("--figure", kl_figure, "emit vertices as coordinate rows");
  add_output_flags(cmd_klyachko, kl_out);

  // su22-table
  Output su22_out;
  auto* cmd_su22 = app.add_subcommand("su22-table", "minimal SU(2,2) system");
  add_output_flags(cmd_su22, su22_out);

  // bruhat LABEL [--v WORD --w WORD]
  std::string br_label, br_v, br_w;
  Output br_out;
  auto* cmd_bruhat = app.add_subcommand("bruhat", "restricted Bruhat order");
  cmd_bruhat->add_option("label", br_label)->required();
  cmd_bruhat->add_option("--v", br_v, "left element, e.g. s1s2");
  cmd_bruhat->add_option("--w", br_w, "right element");
  add_output_flags(cmd_bruhat, br_out);

  // sample LABEL --lambda --mu [--trials N] [--seed S] [--tol T]
  std::string sm_label, sm_lambda, sm_mu;
  long sm_trials = 10000;
  std::uint64_t sm_seed = 0;
  double sm_tol = 1e-8;
  Output sm_out;
  auto* cmd_sample = app.add_subcommand("sample", "Monte-Carlo spectrum check");
  cmd_sample->add_option("label", sm_label)->required();
  cmd_sample->add_option("--lambda", sm_lambda)->required();
  cmd_sample->add_option("--mu", sm_mu)->required();
  cmd_sample->add_option("--trials", sm_trials);
  auto* seed_opt = cmd_sample->add_option("--seed", sm_seed);
  cmd_sample->add_option("--tol", sm_tol);
  add_output_flags(cmd_sample, sm_out);

  // check LABEL --lambda --mu --nu
  std::string ck_label, ck_lambda, ck_mu, ck_nu;
  Output ck_out;
  auto* cmd_check = app.add_subcommand("check", "exact membership of a spectrum");
  cmd_check->add_option("label", ck_label)->required();
  cmd_check->add_option("--lambda", ck_lambda)->required();
  cmd_check->add_option("--mu", ck_mu)->required();
  cmd_check->add_option("--nu", ck_nu)->required();
  add_output_flags(cmd_check, ck_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cmd_rootsys->parsed()) {
      Family fam = parse_family(rs_family);
      // Labels use the Bourbaki rank; family A_r is realized on r+1 coords.
      int size = fam == Family::A ? rs_rank + 1 : rs_rank;
      RootSystem rs = build_root_system(fam, size);
      rs_out.emit(rootsys_text(rs), rootsys_json(rs));
    } else if (cmd_pair->parsed()) {
      SymmetricPair pair = build_pair(pair_label);
      pair_out.emit(pair_text(pair), pair_json(pair));
    } else if (cmd_kostant->parsed()) {
      SymmetricPair pair = build_pair(ko_label);
      RatVec lambda = parse_rational_vector(ko_lambda);
      Polytope p = kostant_polytope(pair, lambda);
      ko_out.emit(polytope_text(p), polytope_json(p));
    } else if (cmd_horn->parsed()) {
      std::string text = horn_table_text(horn_n);
      if (horn_n == 4) {
        bool match = text == golden::kTripleTableSu4;
        text += match ? "golden: match\n" : "golden: MISMATCH\n";
        horn_out.emit(text, horn_json(horn_n));
        if (!match) return kExitInvariant;
      } else {
        horn_out.emit(text, horn_json(horn_n));
      }
    } else if (cmd_klyachko->parsed()) {
      SymmetricPair pair = build_pair(kl_label);
      RatVec lambda = parse_rational_vector(kl_lambda);
      RatVec mu = parse_rational_vector(kl_mu);
      Polytope p = kl_word.empty()
                       ? klyachko_polytope(pair, lambda, mu)
                       : orbit_closure_polytope(pair, lambda, mu,
                                                parse_weyl_word(pair, kl_word));
      if (kl_figure) {
        kl_out.emit(vertex_csv(p), polytope_json(p)["vertices"]);
      } else {
        kl_out.emit(polytope_text(p), polytope_json(p));
      }
    } else if (cmd_su22->parsed()) {
      Su22Report rep = su22_report();
      std::string text = rep.text;
      text += rep.matches_golden ? "golden: match\n" : "golden: MISMATCH\n";
      nlohmann::json j = polytope_json(rep.system);
      j["golden_match"] = rep.matches_golden;
      su22_out.emit(text, j);
      if (!rep.matches_golden) return kExitInvariant;
    } else if (cmd_bruhat->parsed()) {
      SymmetricPair pair = build_pair(br_label);
      if (br_v.empty() && br_w.empty()) {
        std::ostringstream out;
        nlohmann::json j = nlohmann::json::array();
        out << "restricted Weyl group of " << pair.label.str() << " ("
            << pair.weyl->elements.size() << " elements)\n";
        for (const auto& e : pair.weyl->elements) {
          std::string word = "e";
          if (!e.word.empty()) {
            word.clear();
            for (int s : e.word) word += "s" + std::to_string(s);
          }
          out << "  " << word << " (length " << e.word.size() << ")\n";
          j.push_back(word);
        }
        br_out.emit(out.str(), j);
      } else {
        WeylElement v = parse_weyl_word(pair, br_v);
        WeylElement w = parse_weyl_word(pair, br_w);
        bool leq = bruhat_leq(pair, v, w);
        nlohmann::json j;
        j["v"] = br_v.empty() ? "e" : br_v;
        j["w"] = br_w.empty() ? "e" : br_w;
        j["leq"] = leq;
        br_out.emit(std::string(leq ? "true" : "false") + "\n", j);
      }
    } else if (cmd_sample->parsed()) {
      SymmetricPair pair = build_pair(sm_label);
      RatVec lambda = parse_rational_vector(sm_lambda);
      RatVec mu = parse_rational_vector(sm_mu);
      Polytope p = klyachko_polytope(pair, lambda, mu);
      MonteCarloOptions opts;
      opts.trials = sm_trials;
      opts.tol = sm_tol;
      opts.seed = resolve_seed(seed_opt, sm_seed);
      OracleReport report = monte_carlo_check(pair, lambda, mu, p, opts);
      sm_out.emit(oracle_report_text(report, p),
                  nlohmann::json::parse(report.to_json()));
      if (!report.violations.empty()) return kExitInvariant;
    } else if (cmd_check->parsed()) {
      SymmetricPair pair = build_pair(ck_label);
      RatVec lambda = parse_rational_vector(ck_lambda);
      RatVec mu = parse_rational_vector(ck_mu);
      RatVec nu = parse_rational_vector(ck_nu);
      Polytope p = klyachko_polytope(pair, lambda, mu);
      bool member = membership(p, nu);
      std::ostringstream out;
      nlohmann::json j;
      out << "member: " << (member ? "true" : "false") << "\n";
      j["member"] = member;
      if (member) {
        auto tight = tight_facets(p, nu);
        out << "tight facets: " << tight.size() << "\n";
        j["tight_facets"] = tight;
      }
      ck_out.emit(out.str(), j);
    }
  } catch (const parameter_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const precondition_error& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const unsupported_error& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return 0;
}
