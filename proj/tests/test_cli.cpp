#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "planeauto/cli.hpp"
#include "cli_golden.hpp"
#include "support.hpp"

namespace planeauto {
namespace {

using cli::run_line;
using testing::Rng;

const BiPoly X = BiPoly::x();
const BiPoly Y = BiPoly::y();

TEST(Parse, Examples) {
  BiPoly p = parse_bipoly("y - x^7 + y^6");
  EXPECT_EQ(p.size(), 3u);
  EXPECT_EQ(p.coeff(0, 1), 1);
  EXPECT_EQ(p.coeff(7, 0), -1);
  EXPECT_EQ(p.coeff(0, 6), 1);
  EXPECT_EQ(parse_bipoly("3/2 x^2 y"), BiPoly::monomial(make_rat(3, 2), 2, 1));
  EXPECT_EQ(parse_bipoly("(x^7 - y^3)^2"),
            BiPoly::monomial(1, 14, 0) - BiPoly::monomial(2, 7, 3) + BiPoly::monomial(1, 0, 6));
  EXPECT_EQ(parse_bipoly("3x^2y"), BiPoly::monomial(3, 2, 1));
  EXPECT_EQ(parse_bipoly("-x^0 + x"), X - BiPoly(1));
  EXPECT_EQ(parse_bipoly("  2 * ( x + y ) ^ 2 "), (X + Y).pow(2) * Rat(2));
  EXPECT_EQ(parse_unipoly("t^3 - 1/3 t"), UniPoly({0, make_rat(-1, 3), 0, 1}));
  EXPECT_TRUE(std::holds_alternative<UniPoly>(parse_expression("t + 1")));
  EXPECT_TRUE(std::holds_alternative<BiPoly>(parse_expression("x + 1")));
}

TEST(Parse, Errors) {
  auto position_of = [](const std::string& text) -> std::string {
    try {
      parse_bipoly(text);
    } catch (const ParseError& e) {
      return e.what();
    }
    return "no error";
  };
  EXPECT_EQ(position_of("x + z"), "unknown variable 'z' at position 4");
  EXPECT_EQ(position_of("x +"), "unexpected end of input at position 3");
  EXPECT_EQ(position_of("(x + y"), "expected ')' at position 6");
  EXPECT_EQ(position_of("x^-1"), "expected a nonnegative integer at position 2");
  EXPECT_EQ(position_of("1/0 x"), "zero denominator at position 2");
  EXPECT_EQ(position_of("2/x"), "division is only allowed between integer literals at position 2");
  EXPECT_EQ(position_of("x/2"), "unexpected '/' at position 1");
  EXPECT_THROW(parse_expression("x + t"), MixedVariables);
  EXPECT_THROW(parse_unipoly("x"), MixedVariables);
  EXPECT_THROW(parse_bipoly("t"), MixedVariables);
}

TEST(Parse, RoundTrip) {
  Rng rng(81);
  for (int it = 0; it < 1000; ++it) {
    const BiPoly p = testing::random_bipoly(rng, 8, 8, 9, 4);
    EXPECT_EQ(parse_bipoly(p.to_string()), p) << p;
    const BiPoly n = normalize(p);
    EXPECT_EQ(parse_bipoly(n.to_string()), n) << n;
  }
  for (int it = 0; it < 200; ++it) {
    const UniPoly u = testing::random_unipoly(rng, 8);
    EXPECT_EQ(parse_unipoly(u.to_string("t")), u) << u.to_string("t");
  }
}

TEST(Cli, SpecExamples) {
  auto r = run_line(R"(equiv "x^2 - y^3" "(x+y)^2 - y^3")");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output.substr(0, 11), "Equivalent\n");
  EXPECT_NE(r.output.find("(x, y) -> (x + y, y)"), std::string::npos);

  r = run_line(R"(coord "x^2 - y^3")");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output, "not coordinate\n");

  r = run_line("family --k 2 --primes 7,2,3");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output,
            "f1 = -x^7 + y^6 + y  (degree 7)\n"
            "f2 = -x^14 + 2*x^7*y^3 - y^6 + y  (degree 14)\n"
            "f1 vs f2: inequivalent, canonical maximal degrees 7 and 14 differ\n"
            "f1 ~ f2 isomorphic: verified\n"
            "f1 irreducible by axis sum: yes\n");
}

TEST(Cli, JsonGolden) {
  for (const auto& [line, want] : testing::kJsonGolden) {
    const auto r = run_line(line);
    EXPECT_EQ(r.exit_code, 0) << line;
    EXPECT_EQ(r.output, std::string(want) + "\n") << line;
  }
}

TEST(Cli, JsonShapes) {
  auto j = Json::parse(run_line(R"(--json --trace canon "x + y^3 + y")").output);
  EXPECT_EQ(j["status"], "linear");
  ASSERT_TRUE(j["automorphism"]["steps"].is_array());
  EXPECT_EQ(j["automorphism"]["steps"].size(), j["automorphism"]["degrees"].size());
  EXPECT_EQ(j["intermediates"].back(), j["result"]);

  j = Json::parse(run_line(R"(--json --trace implicitize "t^3 + t^2" "t^3")").output);
  EXPECT_EQ(j["normalized"]["u"], "t^2");
  EXPECT_EQ(j["trace"]["steps"][0]["type"], "linear");

  j = Json::parse(run_line(R"(--json decomp "x + y^2" "y")").output);
  EXPECT_EQ(j["automorphism"]["steps"][0]["type"], "elem_x");
  EXPECT_EQ(j["automorphism"]["steps"][0]["mu"], "1");
  EXPECT_EQ(j["automorphism"]["steps"][0]["k"], 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_line(R"(coord "x^2 - y^4")").exit_code, 2);
  EXPECT_EQ(run_line(R"(canon "x + z")").exit_code, 1);
  EXPECT_EQ(run_line(R"(canon "x + z")").output, "ParseError: unknown variable 'z' at position 4\n");
  EXPECT_EQ(run_line(R"(--json canon "x +")").output,
            R"({"error":"ParseError","message":"unexpected end of input at position 3"})"
            "\n");
  EXPECT_EQ(run_line(R"(implicitize "t" "x")").exit_code, 1);
  EXPECT_EQ(run_line(R"(equiv "x")").exit_code, 1);
  EXPECT_EQ(run_line("family --k 2 --primes 5,2,3").exit_code, 1);
  EXPECT_EQ(run_line("frobnicate").exit_code, 1);
  EXPECT_EQ(run_line(R"(equiv "3" "x")").output.substr(0, 13), "ConstantInput");
}

TEST(Cli, BudgetExhaustion) {
  const auto r = run_line(R"(--budget 1 groebner "x^2 + y^2 - 1" "x*y - 2" "x^3 - y")");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(r.output.substr(0, 15), "BudgetExhausted");
}

TEST(Cli, Batch) {
  const std::string path = ::testing::TempDir() + "planeauto_batch.txt";
  {
    std::ofstream f(path);
    f << R"(coord "x^2 - y^3")" << "\n"
      << "\n"
      << R"(implicitize "t^2" "t^3")" << "\n"
      << R"(coord "x^2 - y^4")" << "\n";
  }
  auto r = run_line("--json --batch " + path);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(r.output,
            "{\"command\":\"coord\",\"coordinate\":false}\n"
            "{\"command\":\"implicitize\",\"p\":\"x^3 - y^2\",\"mult\":1}\n"
            "{\"command\":\"coord\",\"coordinate\":null}\n");
  {
    std::ofstream f(path, std::ios::app);
    f << R"(canon "x + z")" << "\n";
  }
  EXPECT_EQ(run_line("--batch " + path).exit_code, 1);
  std::remove(path.c_str());
}

TEST(Cli, ArgvEntry) {
  const auto r = cli::run_args({"--json", "coord", "x + y^3"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output, "{\"command\":\"coord\",\"coordinate\":true}\n");
}

}  // namespace
}  // namespace planeauto
