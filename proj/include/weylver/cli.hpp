#pragma once

#include "weylver/lie.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace weylver {

/// Syntax error or unknown variable; `position` is the 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar (whitespace-insensitive):
//   rational := int ['/' int]
//   atom     := rational | 'e' ['^' int] | var ['^' uint]
//   var      := ('p' | 'q') index
//   term     := atom ('*' atom)*
//   expr     := ['-'] term (('+' | '-') term)*
//   tensor   := expr ('|' expr)*
//   wedge    := tensor (';' tensor)*
// '*' multiplies symbols commutatively (normal-ordered monomials, as printed);
// 'e' is eps. Variables p_i, q_i with i > n are rejected.
WeylElement parse_expression(std::string_view text, int n);
/// One elementary tensor a_0 (x) .. (x) a_k.
ChainTensor parse_tensor(std::string_view text, int n);
/// Wedge slots, each a list of tensor factors.
std::vector<std::vector<WeylElement>> parse_wedge(std::string_view text, int n);
/// Wedge of scalar matrices 1 (x) a_i in gl_N(A); every slot must be a single expression.
WedgeTuple parse_wedge_tuple(std::string_view text, int n, int N);

/// {"<eps exponent>": "num/den", ...}
nlohmann::json scalar_to_json(const EpsScalar& x);
/// Inverse of scalar_to_json, going through parse_expression.
EpsScalar scalar_from_json(const nlohmann::json& j);

struct SuiteParams {
  int n = 1;
  int N = 1;
  /// Degree cap and case count; suite defaults when unset.
  std::optional<int> deg;
  std::optional<int> cases;
  std::uint64_t seed = 1;
  bool override_caps = false;
  /// Appends a deliberately wrong case (self-test of the reporting path).
  bool inject_failure = false;
};

using CaseValue = std::variant<EpsScalar, std::string>;

struct CaseResult {
  int index = 0;
  std::string input;
  CaseValue expected;
  CaseValue got;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  int n = 1;
  int N = 1;
  int deg = 0;
  int cases_requested = 0;
  std::uint64_t seed = 1;
  std::vector<CaseResult> cases;
  int passed = 0;
  int failed = 0;
  double wall_ms = 0;

  bool ok() const { return failed == 0 && !cases.empty(); }
};

struct SuiteInfo {
  std::string name;
  std::string statement;
  int default_deg;
  int default_cases;
};

const std::vector<SuiteInfo>& suite_table();

/// Throws std::invalid_argument for an unknown suite or parameters outside
/// n <= 2, N <= 3 (unless override_caps).
SuiteReport run_suite(const std::string& name, const SuiteParams& params);

enum class ReportFormat { json, text };

nlohmann::json report_to_json(const SuiteReport& r);
std::string emit_report(const SuiteReport& r, ReportFormat format);

}  // namespace weylver
