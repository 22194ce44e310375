#include "weylver/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <sys/wait.h>

using namespace weylver;

TEST(Parser, Examples) {
  const auto a = parse_expression("p1*q1 + 1/2*e", 1);
  WeylElement expected = WeylElement::monomial(1, {1, 1});
  expected += WeylElement(1, EpsScalar::monomial(1, make_rational(1, 2)));
  EXPECT_EQ(a, expected);

  const auto c = parse_tensor("1 | p1 | q1", 1);
  EXPECT_EQ(c, ChainTensor::elementary({WeylElement(1, 1), WeylElement::p(1, 1), WeylElement::q(1, 1)}));

  EXPECT_EQ(parse_expression(" - e^-1 * q2^3 + 2 ", 2),
            WeylElement::monomial(2, {0, 0, 0, 3}, EpsScalar::eps(-1)) * EpsScalar(-1) + WeylElement(2, 2));
  EXPECT_EQ(parse_expression("p1^2*p1", 1), WeylElement::monomial(1, {3, 0}));
  EXPECT_EQ(parse_wedge("p1 ; q1 | 1", 1).size(), 2u);
  EXPECT_EQ(parse_wedge_tuple("p1 ; q1", 1, 2)[1], GlWeylElement::scalar(2, WeylElement::q(1, 1)));
}

TEST(Parser, Errors) {
  try {
    parse_expression("e^-1*q2^3", 1);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
    EXPECT_NE(std::string(e.what()).find("unknown variable q2"), std::string::npos);
  }
  for (const char* bad : {"", "p1 +", "1/0", "x1", "p", "p1 ** q1", "p1 q1", "(p1)"})
    EXPECT_THROW(parse_expression(bad, 1), ParseError) << bad;
  EXPECT_THROW(parse_wedge_tuple("p1 | q1", 1, 1), ParseError);
  try {
    parse_expression("p1 + q1 $", 1);
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 8u);
  }
}

TEST(Parser, RendersRoundTrip) {
  RandomWeyl rng(81);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = rng.element(2, 0, 4, 3, -2, 2);
    ASSERT_EQ(parse_expression(a.to_string(), 2), a) << a.to_string();
  }
}

TEST(Json, ScalarRoundTrip) {
  RandomWeyl rng(82);
  for (int trial = 0; trial < 50; ++trial) {
    const EpsScalar x = rng.eps_coefficient(-2, 3) + rng.eps_coefficient(-2, 3);
    ASSERT_EQ(scalar_from_json(scalar_to_json(x)), x);
  }
  EXPECT_EQ(scalar_to_json(EpsScalar::monomial(1, make_rational(-1, 12))).dump(), R"({"1":"-1/12"})");
  EXPECT_EQ(scalar_to_json(EpsScalar(3)).dump(), R"({"0":"3/1"})");
  EXPECT_EQ(scalar_to_json(EpsScalar(0)).dump(), "{}");
}

TEST(Suites, Examples) {
  SuiteParams p;
  const auto norm = run_suite("tau-normalization", p);
  EXPECT_EQ(norm.cases.size(), 1u);
  EXPECT_TRUE(norm.ok());

  p.deg = 8;
  const auto cyc = run_suite("cycle-integrals", p);
  EXPECT_TRUE(cyc.ok());
  EXPECT_EQ(cyc.cases.size(), 9u);

  const auto rrh = run_suite("rrh", SuiteParams{});
  EXPECT_TRUE(rrh.ok());
  EXPECT_GE(rrh.cases.size(), 2u);
}

TEST(Suites, ErrorsAndCaps) {
  EXPECT_THROW(run_suite("no-such-suite", {}), std::invalid_argument);
  SuiteParams p;
  p.n = 3;
  EXPECT_THROW(run_suite("tau-normalization", p), std::invalid_argument);
  p.n = 1;
  p.N = 4;
  EXPECT_THROW(run_suite("theta-normalization", p), std::invalid_argument);
  p.override_caps = true;
  EXPECT_TRUE(run_suite("theta-normalization", p).ok());
}

TEST(Suites, SummaryAndDeterminism) {
  SuiteParams p;
  p.cases = 15;
  p.seed = 7;
  for (const char* name : {"moyal-assoc", "tau-cocycle", "theta-relative", "pn-crosscheck"}) {
    auto a = report_to_json(run_suite(name, p));
    auto b = report_to_json(run_suite(name, p));
    ASSERT_EQ(a["summary"]["total"], a["cases"].size());
    a.erase("wall_time_ms");
    b.erase("wall_time_ms");
    ASSERT_EQ(a.dump(), b.dump()) << name;
    ASSERT_EQ(a["summary"]["failed"], 0) << name;
  }
}

TEST(Suites, InjectedFailure) {
  SuiteParams p;
  p.inject_failure = true;
  const auto r = run_suite("tau-normalization", p);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.failed, 1);
  const auto text = emit_report(r, ReportFormat::text);
  EXPECT_NE(text.find("expected: 1"), std::string::npos);
  EXPECT_NE(text.find("got:      0"), std::string::npos);
  const auto j = report_to_json(r);
  EXPECT_EQ(scalar_from_json(j["cases"][1]["expected"]), EpsScalar(1));
}

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(WEYLVER_BIN) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Binary, ExitCodes) {
  EXPECT_EQ(run("verify tau-normalization"), 0);
  EXPECT_EQ(run("verify tau-normalization --format json"), 0);
  EXPECT_EQ(run("verify tau-normalization --self-test-fail"), 1);
  EXPECT_EQ(run("verify no-such-suite"), 2);
  EXPECT_EQ(run("verify tau-normalization --n 3"), 2);
  EXPECT_EQ(run("verify tau-normalization --format yaml"), 2);
  EXPECT_EQ(run("--list-suites"), 0);
  EXPECT_EQ(run("eval tau '1 | p1 | q1'"), 0);
  EXPECT_EQ(run("eval moyal p1 q1"), 0);
  EXPECT_EQ(run("eval theta 'p1 ; q1' --N 2"), 0);
  EXPECT_EQ(run("eval tau '1 | p1 | q2'"), 2);
}
