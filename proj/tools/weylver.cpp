// weylver: verification front end.
//   weylver verify <suite> [--n --N --deg --cases --seed --format --override-caps]
//   weylver eval tau|moyal|theta <input> [<input>]
//   weylver report
// Exit status: 0 all cases pass, 1 some case failed, 2 usage or input error.

#include "weylver/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace weylver;

namespace {

void list_suites() {
  for (const auto& s : suite_table()) std::cout << s.name << "\t" << s.statement << "\n";
}

nlohmann::json element_json(const WeylElement& a) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : a.terms()) terms.push_back({{"exponents", e}, {"coefficient", scalar_to_json(c)}});
  return {{"text", a.to_string()}, {"terms", terms}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the Weyl-algebra cocycle tau_2n and the local Riemann-Roch identity"};
  app.require_subcommand(0, 1);

  SuiteParams params;
  int deg = -1, cases = -1;
  std::string format = "text";
  bool list = false, self_test = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--n", params.n, "Weyl algebra rank n")->capture_default_str();
    cmd->add_option("--N", params.N, "matrix size N")->capture_default_str();
    cmd->add_option("--deg", deg, "degree cap (suite default when omitted)");
    cmd->add_option("--cases", cases, "number of random cases (suite default when omitted)");
    cmd->add_option("--seed", params.seed, "random seed")->capture_default_str();
    cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    cmd->add_flag("--override-caps", params.override_caps, "allow n > 2 or N > 3");
  };
  app.add_flag("--list-suites", list, "list verification suites and exit");

  auto* verify = app.add_subcommand("verify", "run one verification suite");
  std::string suite;
  verify->add_option("suite", suite, "suite name");
  verify->add_flag("--list-suites", list, "list verification suites and exit");
  verify->add_flag("--self-test-fail", self_test, "append a deliberately failing case");
  add_common(verify);

  auto* eval = app.add_subcommand("eval", "evaluate tau, the Moyal product or Theta on parsed input");
  std::string what;
  std::vector<std::string> inputs;
  eval->add_option("what", what, "tau | moyal | theta")->required()->check(CLI::IsMember({"tau", "moyal", "theta"}));
  eval->add_option("inputs", inputs, "tau: tensor 'a0 | a1 | ..'; moyal: two expressions; theta: wedge and target");
  add_common(eval);

  auto* report = app.add_subcommand("report", "run every suite with default sizes");
  add_common(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (list) {
    list_suites();
    return 0;
  }
  if (deg >= 0) params.deg = deg;
  if (cases >= 0) params.cases = cases;
  params.inject_failure = self_test;
  const ReportFormat fmt = format == "json" ? ReportFormat::json : ReportFormat::text;

  try {
    if (*verify) {
      if (suite.empty()) {
        std::cerr << "verify: missing suite name (see --list-suites)\n";
        return 2;
      }
      const SuiteReport r = run_suite(suite, params);
      std::cout << emit_report(r, fmt);
      return r.ok() ? 0 : 1;
    }
    if (*eval) {
      const int n = params.n;
      nlohmann::json out;
      if (what == "tau") {
        if (inputs.size() != 1) throw std::invalid_argument("eval tau takes one tensor");
        const ChainTensor c = parse_tensor(inputs[0], n);
        out = {{"tau", scalar_to_json(tau_eval(n, c))}, {"text", tau_eval(n, c).to_string()}};
      } else if (what == "moyal") {
        if (inputs.size() != 2) throw std::invalid_argument("eval moyal takes two expressions");
        out = {{"moyal", element_json(moyal(parse_expression(inputs[0], n), parse_expression(inputs[1], n)))}};
      } else {
        if (inputs.empty() || inputs.size() > 2) throw std::invalid_argument("eval theta takes a wedge and an optional target");
        const WedgeTuple args = parse_wedge_tuple(inputs[0], n, params.N);
        const WeylElement target = inputs.size() == 2 ? parse_expression(inputs[1], n) : WeylElement(n, 1);
        const EpsScalar v = theta_eval(n, args, GlWeylElement::scalar(params.N, target));
        out = {{"theta", scalar_to_json(v)}, {"text", v.to_string()}};
      }
      if (fmt == ReportFormat::json)
        std::cout << out.dump(2) << "\n";
      else if (out.contains("moyal"))
        std::cout << out["moyal"]["text"].get<std::string>() << "\n";
      else
        std::cout << out["text"].get<std::string>() << "\n";
      return 0;
    }
    // report (also the default with no subcommand)
    bool all_ok = true;
    nlohmann::json combined = nlohmann::json::array();
    for (const auto& s : suite_table()) {
      SuiteParams p = params;
      if (s.name == "tau-closed-form" || s.name == "flat-trace") p.n = 1;
      const SuiteReport r = run_suite(s.name, p);
      all_ok = all_ok && r.ok();
      if (fmt == ReportFormat::json)
        combined.push_back(report_to_json(r));
      else
        std::cout << emit_report(r, fmt);
    }
    if (fmt == ReportFormat::json) std::cout << combined.dump(2) << "\n";
    return all_ok ? 0 : 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
