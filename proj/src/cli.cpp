#include "modeq/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "modeq/errors.hpp"
#include "modeq/grid.hpp"
#include "modeq/hypergeom.hpp"
#include "modeq/moduli.hpp"
#include "modeq/qseries.hpp"
#include "modeq/report.hpp"
#include "modeq/symbolic/proofs.hpp"

namespace modeq::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(key + " expects an integer, got '" + value + "'");
  }
}

std::vector<QPoint> parse_grid(const std::vector<std::string>& items) {
  std::vector<QPoint> out;
  for (const auto& s : items) {
    try {
      out.push_back(QPoint::parse(s));
    } catch (const DomainError& e) {
      throw ConfigError(e.what());
    }
  }
  return out;
}

std::vector<IdentityId> parse_ids(const std::vector<std::string>& items) {
  std::vector<IdentityId> out;
  for (const auto& s : items) {
    if (s == "all") return all_identities();
    const auto id = parse_tag(s);
    if (!id) throw ConfigError("unknown identity '" + s + "'");
    out.push_back(*id);
  }
  return out;
}

struct EvalArgs {
  std::string function;
  std::string q = "0";
  std::string a, b, x;
  int digits = 30;
  int n = 15;
  int n1 = 1;
  int n2 = 15;
};

ArbReal eval_function(const EvalArgs& args, Precision prec) {
  auto rational = [&](const std::string& name, const std::string& text) {
    if (text.empty()) throw ConfigError(args.function + " needs --" + name);
    return ArbReal::from_rational(parse_rational(text), prec);
  };
  const ArbReal q = QPoint::parse(args.q).at(prec);
  if (args.function == "phi") return qseries::phi(q);
  if (args.function == "psi") return qseries::psi(q);
  if (args.function == "f") return qseries::theta_f(rational("a", args.a), rational("b", args.b));
  if (args.function == "2f1") return hypergeom::hyp2f1_half(rational("x", args.x));
  if (args.function == "alpha") return moduli::alpha_from_q(q);
  if (args.function == "beta") {
    if (args.n < 1) throw DomainError("--n must be positive");
    return moduli::alpha_from_q(pow(q, args.n));
  }
  if (args.function == "m") return moduli::multiplier(q, DegreePair(args.n1, args.n2)).m;
  throw ConfigError("unknown function '" + args.function + "'");
}

struct VerifyArgs {
  bool all = false;
  std::vector<std::string> ids;
  std::vector<std::string> qs;
  bool json = false;
  int tolerance_exponent = 0;
  int digits = 100;
  std::string tier = "full";
  std::string config;
  bool full = false;
  bool serial = false;
};

int cmd_verify(const VerifyArgs& args, const CLI::App& sub, std::ostream& out) {
  RunConfig cfg = RunConfig::defaults();
  if (!args.config.empty()) {
    std::ifstream in(args.config);
    if (!in) throw ConfigError("cannot open config file '" + args.config + "'");
    cfg = parse_config(in, cfg);
  }
  if (sub.count("--digits")) cfg.precision_digits = args.digits;
  if (sub.count("--q")) cfg.grid = parse_grid(args.qs);
  if (sub.count("--id")) cfg.identities = parse_ids(args.ids);
  if (args.all) cfg.identities = all_identities();
  if (sub.count("--tolerance-exponent")) cfg.tolerance_exponent = args.tolerance_exponent;
  if (args.json) cfg.format = OutputFormat::Json;
  cfg.validate();

  const Precision prec = Precision::from_digits(cfg.precision_digits);
  const bool json = cfg.format == OutputFormat::Json;

  if (args.tier == "limits") {
    const auto checks = check_limit_anchors(prec);
    bool ok = true;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
      ok = ok && c.passed;
      if (json) {
        arr.push_back({{"id", std::string(tag(c.anchor.id))},
                       {"expected", c.anchor.expected.get_str()},
                       {"lhs", c.lhs.to_string(12)},
                       {"rhs", c.rhs.to_string(12)},
                       {"passed", c.passed}});
      } else {
        out << tag(c.anchor.id) << "  q=1/1000000  expected=" << c.anchor.expected.get_str()
            << "  lhs=" << c.lhs.to_string(12) << "  rhs=" << c.rhs.to_string(12) << (c.passed ? "  PASS" : "  FAIL")
            << "\n";
      }
    }
    if (json) out << arr.dump(2) << "\n";
    return ok ? kSuccess : kFailure;
  }

  const ArbReal tol = ArbReal::pow10(-cfg.effective_tolerance_exponent(), prec);
  const auto reports = args.serial ? verify_catalog_serial(cfg.identities, cfg.grid, prec, tol)
                                   : verify_catalog(cfg.identities, cfg.grid, prec, tol);
  if (json) {
    out << report::to_json(reports, args.full).dump(2) << "\n";
  } else {
    for (const auto& r : reports) out << report::to_text(r, args.full) << "\n";
    const auto passed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
    out << passed << "/" << reports.size() << " passed at tolerance 1e-" << cfg.effective_tolerance_exponent()
        << "\n";
  }
  return all_passed(reports) ? kSuccess : kFailure;
}

int cmd_prove(const std::string& step, int digits, bool json, std::ostream& out) {
  const auto& known = symbolic::proof_steps();
  std::vector<std::string> steps;
  if (step == "all") steps = known;
  else if (std::find(known.begin(), known.end(), step) != known.end()) steps = {step};
  else throw ConfigError("unknown proof step '" + step + "'");

  if (digits < 30) throw ConfigError("--digits must be at least 30");
  const Precision prec = Precision::from_digits(digits);
  bool ok = true;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& s : steps) {
    const auto cert = symbolic::run_step(s, prec);
    ok = ok && cert.passed();
    if (json) arr.push_back(report::to_json(cert));
    else out << report::to_text(cert) << "\n";
  }
  if (json) out << arr.dump(2) << "\n";
  return ok ? kSuccess : kFailure;
}

}  // namespace

RunConfig RunConfig::defaults() {
  RunConfig c;
  c.grid = default_grid();
  c.identities = all_identities();
  return c;
}

void RunConfig::validate() const {
  if (precision_digits < 30) throw ConfigError("precision_digits must be at least 30");
  if (grid.empty()) throw ConfigError("grid is empty");
  for (const auto& q : grid) {
    if (q.value <= 0 || q.value > mpq_class(1, 2)) throw ConfigError("grid value " + q.to_string() + " is outside (0, 1/2]");
  }
  if (identities.empty()) throw ConfigError("no identities selected");
  if (tolerance_exponent && *tolerance_exponent <= 0) throw ConfigError("tolerance_exponent must be positive");
}

RunConfig parse_config(std::istream& in, RunConfig base) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "precision_digits") base.precision_digits = parse_int(key, value);
    else if (key == "tolerance_exponent") base.tolerance_exponent = parse_int(key, value);
    else if (key == "grid") base.grid = parse_grid(split_list(value));
    else if (key == "identities") base.identities = parse_ids(split_list(value));
    else if (key == "format") {
      if (value == "text") base.format = OutputFormat::Text;
      else if (value == "json") base.format = OutputFormat::Json;
      else throw ConfigError("format must be text or json");
    } else {
      throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  return base;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Numeric and symbolic checks of modular equations of degrees 7, 23, 15 and 5/3", "modeq");
  app.require_subcommand(1);

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate one function to --digits significant digits");
  eval_cmd->add_option("function", eval.function, "phi | psi | f | 2f1 | alpha | beta | m")
      ->required()
      ->check(CLI::IsMember({"phi", "psi", "f", "2f1", "alpha", "beta", "m"}));
  eval_cmd->add_option("--q", eval.q, "Nome as an exact rational");
  eval_cmd->add_option("--a", eval.a, "First argument of f(a, b)");
  eval_cmd->add_option("--b", eval.b, "Second argument of f(a, b)");
  eval_cmd->add_option("--x", eval.x, "Argument of 2F1(1/2, 1/2; 1; x)");
  eval_cmd->add_option("--n", eval.n, "beta = alpha(q^n)");
  eval_cmd->add_option("--n1", eval.n1, "Multiplier numerator degree");
  eval_cmd->add_option("--n2", eval.n2, "Multiplier denominator degree");
  eval_cmd->add_option("--digits", eval.digits, "Significant digits")->check(CLI::Range(1, 100000));

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check catalog identities on a grid of q");
  auto* all_flag = verify_cmd->add_flag("--all", verify.all, "Every identity in the catalog");
  verify_cmd->add_option("--id", verify.ids, "Identity tag(s), e.g. EQ19")->delimiter(',')->excludes(all_flag);
  verify_cmd->add_option("--q", verify.qs, "Grid point(s) as exact rationals")->delimiter(',');
  verify_cmd->add_flag("--json", verify.json, "JSON report");
  verify_cmd->add_option("--tolerance-exponent", verify.tolerance_exponent, "Pass when |residual| < 10^-k");
  verify_cmd->add_option("--digits", verify.digits, "Working precision in decimal digits");
  verify_cmd->add_option("--tier", verify.tier, "full | limits")->check(CLI::IsMember({"full", "limits"}));
  verify_cmd->add_option("--config", verify.config, "key = value config file");
  verify_cmd->add_flag("--full", verify.full, "Print residuals at full precision");
  verify_cmd->add_flag("--serial", verify.serial, "Use the serial reference path");

  std::string step;
  bool prove_json = false;
  int prove_digits = 100;
  auto* prove_cmd = app.add_subcommand("prove", "Replay the exact symbolic proof steps");
  prove_cmd->add_option("step", step, "Step name or 'all'")->required();
  prove_cmd->add_flag("--json", prove_json, "JSON report");
  prove_cmd->add_option("--digits", prove_digits, "Precision of the numeric spot checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (*eval_cmd) {
      const int digits = std::max(eval.digits, 1);
      const Precision prec = Precision::from_digits(std::max(digits, 30));
      out << eval_function(eval, prec).to_string(digits) << "\n";
      return kSuccess;
    }
    if (*verify_cmd) return cmd_verify(verify, *verify_cmd, out);
    if (*prove_cmd) return cmd_prove(step, prove_digits, prove_json, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace modeq::cli
