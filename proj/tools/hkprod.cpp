// Command-line front end for the hkprod library.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "hkprod/errors.hpp"
#include "hkprod/hilbert_kunz.hpp"
#include "hkprod/parse.hpp"
#include "hkprod/session.hpp"
#include "hkprod/verify.hpp"

namespace {

using namespace hkprod;

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

std::optional<StarSpreadMode> parse_mode(const std::string& text) {
  if (text == "auto") return std::nullopt;
  if (text == "regular") return StarSpreadMode::regular();
  if (text == "parameter") return StarSpreadMode::parameter_equivalent();
  if (text.rfind("user:", 0) == 0) {
    std::size_t used = 0;
    auto k = std::stoul(text.substr(5), &used);
    if (used + 5 != text.size()) throw ParseError("bad mode '" + text + "'");
    return StarSpreadMode::user_supplied(k);
  }
  throw ParseError("unknown mode '" + text + "' (regular, parameter, user:K, auto)");
}

int cmd_colength(const std::string& file, const std::string& name) {
  auto session = load_session(file);
  std::cout << colength(session.ideal(name)).to_string() << '\n';
  return kPass;
}

int cmd_hk(const std::string& file, const std::string& name, unsigned qmax, bool json_out, bool csv_out,
           const std::string& method) {
  auto session = load_session(file);
  auto mode = parse_estimate_mode(method);
  if (!mode) throw ParseError("unknown estimate method '" + method + "'");
  auto est = hk_estimate(session.ideal(name), qmax, *mode);
  const auto& table = est.table;
  if (json_out) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["ideal"] = table.ideal.to_string();
    j["ring"] = session.ring().describe();
    j["d"] = table.d;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : table.rows) {
      nlohmann::ordered_json row;
      row["q"] = r.q;
      row["colength"] = r.colength;
      row["normalized"] = to_string(r.normalized);
      rows.push_back(row);
    }
    j["rows"] = rows;
    j["estimate"] = {{"value", to_string(est.value)}, {"method", method_name(est.method)}, {"resolved", est.resolved}};
    std::cout << j.dump() << '\n';
  } else if (csv_out) {
    std::cout << "q,colength,normalized_num,normalized_den\n";
    for (const auto& r : table.rows)
      std::cout << r.q << ',' << r.colength << ',' << r.normalized.numerator() << ',' << r.normalized.denominator()
                << '\n';
    std::cout << "# estimate," << to_string(est.value) << ',' << method_name(est.method) << ','
              << (est.resolved ? "resolved" : "unresolved") << '\n';
  } else {
    std::cout << "q\tcolength\tnormalized\n";
    for (const auto& r : table.rows) std::cout << r.q << '\t' << r.colength << '\t' << to_string(r.normalized) << '\n';
    std::cout << "estimate " << to_string(est.value) << " (" << method_name(est.method)
              << (est.resolved ? "" : ", unresolved as a limit") << ")\n";
  }
  return kPass;
}

struct VerifyArgs {
  std::string file;
  std::string check;
  std::size_t trials = 10;
  std::uint64_t seed = 0;
  unsigned qmax = 1;
  unsigned bound = 2;
  std::uint64_t n = 2;
  std::string family;
  std::string ideal_i;
  std::string ideal_j;
  std::string mode = "auto";
  bool csv = false;
};

int cmd_verify(const VerifyArgs& args) {
  auto session = load_session(args.file);
  std::vector<CheckKind> checks;
  if (args.check == "all") {
    checks = all_checks();
  } else {
    auto k = parse_check(args.check);
    if (!k) throw ParseError("unknown check '" + args.check + "'");
    checks.push_back(*k);
  }
  SuiteConfig config;
  config.seed = args.seed;
  config.trials = args.trials;
  config.e_max = args.qmax;
  config.degree_bound = args.bound;
  config.n = args.n;
  config.mode = parse_mode(args.mode);
  if (!args.family.empty()) {
    config.family = parse_family(args.family);
    if (!config.family) throw ParseError("unknown family '" + args.family + "'");
  }

  std::vector<TrialRecord> records;
  const bool fixed = !args.ideal_i.empty() || !args.ideal_j.empty();
  for (auto k : checks) {
    if (fixed) {
      const auto& i = session.ideal(args.ideal_i.empty() ? args.ideal_j : args.ideal_i);
      const auto& j = session.ideal(args.ideal_j.empty() ? args.ideal_i : args.ideal_j);
      records.push_back(run_check(k, i, j, config));
    } else {
      auto batch = run_trials(k, session.ring(), config);
      records.insert(records.end(), batch.begin(), batch.end());
    }
  }
  std::cout << (args.csv ? to_csv(records) : to_json_lines(records));

  std::size_t reports = 0, violations = 0, inconclusive = 0;
  for (const auto& rec : records) {
    if (rec.inconclusive) ++inconclusive;
    for (const auto& r : rec.reports) {
      ++reports;
      if (!r.holds) ++violations;
    }
  }
  std::cerr << reports << " reports, " << violations << " violations, " << inconclusive << " inconclusive\n";
  return violations == 0 ? kPass : kViolation;
}

int cmd_probe(const std::string& file, const std::string& z, const std::string& name, const std::string& c,
              unsigned qmax) {
  auto session = load_session(file);
  const auto& ring = session.ring();
  auto verdict = tc_probe(parse_polynomial(z, ring), session.ideal(name), parse_polynomial(c, ring), qmax);
  std::cout << verdict.to_string();
  if (verdict.witness()) std::cout << " witness " << verdict.witness()->to_string();
  std::cout << '\n';
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert-Kunz and colength computations over prime fields"};
  app.require_subcommand(1);

  std::string file, name;
  auto* colength_cmd = app.add_subcommand("colength", "print lambda(R/I) or 'infinite'");
  colength_cmd->add_option("file", file, "session file")->required();
  colength_cmd->add_option("ideal", name, "ideal name")->required();

  unsigned qmax = 1;
  bool json_out = false, csv_out = false;
  std::string method = "auto";
  auto* hk_cmd = app.add_subcommand("hk", "Hilbert-Kunz table lambda(R/I^[q]) for q = p^0 .. p^E");
  hk_cmd->add_option("file", file, "session file")->required();
  hk_cmd->add_option("ideal", name, "ideal name")->required();
  hk_cmd->add_option("--qmax", qmax, "largest Frobenius exponent E");
  auto* json_flag = hk_cmd->add_flag("--json", json_out, "JSON output");
  hk_cmd->add_flag("--csv", csv_out, "CSV output")->excludes(json_flag);
  hk_cmd->add_option("--method", method, "auto, regular, monomial, last, extrapolated");

  VerifyArgs vargs;
  auto* verify_cmd = app.add_subcommand("verify", "run a checker on fixed ideals or seeded random trials");
  verify_cmd->add_option("file", vargs.file, "session file")->required();
  verify_cmd->add_option("check", vargs.check, "checker name or 'all'")->required();
  verify_cmd->add_option("--trials", vargs.trials, "number of random trials");
  verify_cmd->add_option("--seed", vargs.seed, "random seed");
  verify_cmd->add_option("--qmax", vargs.qmax, "largest Frobenius exponent E");
  verify_cmd->add_option("--bound", vargs.bound, "degree bound for random generators");
  verify_cmd->add_option("-n", vargs.n, "power for cor-power checks");
  verify_cmd->add_option("--family", vargs.family, "monomial, binomial, dense, parameter-powers");
  verify_cmd->add_option("-I", vargs.ideal_i, "fixed ideal I");
  verify_cmd->add_option("-J", vargs.ideal_j, "fixed ideal J");
  verify_cmd->add_option("--mode", vargs.mode, "*-spread mode: regular, parameter, user:K, auto");
  verify_cmd->add_flag("--csv", vargs.csv, "CSV summary instead of JSON lines");

  std::string z, c = "1";
  auto* probe_cmd = app.add_subcommand("probe", "test c*z^q in I^[q] for q = p .. p^E");
  probe_cmd->add_option("file", file, "session file")->required();
  probe_cmd->add_option("-z", z, "element z")->required();
  probe_cmd->add_option("-i", name, "ideal name")->required();
  probe_cmd->add_option("-c", c, "multiplier c");
  probe_cmd->add_option("--qmax", qmax, "largest Frobenius exponent E");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*colength_cmd) return cmd_colength(file, name);
    if (*hk_cmd) return cmd_hk(file, name, qmax, json_out, csv_out, method);
    if (*verify_cmd) return cmd_verify(vargs);
    if (*probe_cmd) return cmd_probe(file, z, name, c, qmax);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
