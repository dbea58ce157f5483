#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "rootfunc/cli.hpp"
#include "rootfunc/errors.hpp"
#include "rootfunc/io.hpp"
#include "rootfunc/reduce.hpp"
#include "support/gen.hpp"

using namespace rootfunc;
using rootfunc::testing::random_poly;
using rootfunc::testing::system_of;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "rootfunc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run_command(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(ROOTFUNC_TEST_DATA) + "/" + name; }

}  // namespace

TEST(Parse, Examples) {
  auto c2 = VarContext::make_default(2);
  FieldSpec Q;
  Polynomial p = io::parse_poly("x1^2 - 1", c2, Q);
  EXPECT_EQ(p, make_polynomial(c2, Q, {{{2, 0, 0, 0}, Scalar(1)}, {{0, 0, 0, 0}, Scalar(-1)}}));
  EXPECT_THROW(io::parse_poly("(x1 + x2)^2", c2, Q), ParseError);
  EXPECT_EQ(io::parse_poly("3/2*x1*x2", c2, Q),
            make_polynomial(c2, Q, {{{1, 1, 0, 0}, Scalar(3, 2)}}));
  EXPECT_EQ(io::parse_poly("  - x1 * ( x2 - 2 ) ", c2, Q), io::parse_poly("2*x1 - x1*x2", c2, Q));
}

TEST(Parse, Errors) {
  auto c2 = VarContext::make_default(2);
  FieldSpec Q;
  try {
    io::parse_poly("x1 + z", c2, Q);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  EXPECT_THROW(io::parse_poly("1/0", c2, Q), ParseError);
  EXPECT_THROW(io::parse_poly("x1^-1", c2, Q), ParseError);
  EXPECT_THROW(io::parse_poly("x1^1.5", c2, Q), ParseError);
  EXPECT_THROW(io::parse_poly("x1 +", c2, Q), ParseError);
  EXPECT_THROW(io::parse_poly("", c2, Q), ParseError);
  EXPECT_THROW(io::parse_poly("x1'", c2, Q), ParseError);
  EXPECT_THROW(io::parse_poly("1/7*x1", c2, FieldSpec::prime(7)), ParseError);
}

TEST(Parse, PrintRoundTrip) {
  std::mt19937_64 rng(97);
  for (const FieldSpec& F : {FieldSpec::rationals(), FieldSpec::prime(32003)}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      auto ctx = VarContext::make({"a", "b_2", "c"});
      if (n < 3) ctx = VarContext::make_default(n);
      for (int t = 0; t < 30; ++t) {
        Polynomial p = random_poly(ctx, F, 5, rng);
        EXPECT_EQ(io::parse_poly(io::format_polynomial(p), ctx, F), p);
        Polynomial q = p * p.swap_blocks();
        EXPECT_EQ(io::parse_poly(io::format_polynomial(q), ctx, F, true), q);
      }
    }
  }
}

TEST(SystemFile, ParsesAndValidates) {
  auto sf = io::parse_system_file("# tower\nvars: u v\nfield: Fp 101\nf1: u^2 - 1\nf2: v^2 - u  # tail\n");
  EXPECT_EQ(sf.context->names(), (std::vector<std::string>{"u", "v"}));
  EXPECT_EQ(sf.field, FieldSpec::prime(101));
  EXPECT_EQ(sf.labels, (std::vector<std::string>{"f1", "f2"}));
  EXPECT_EQ(sf.system.delta_f(), 2);
  EXPECT_THROW(io::parse_system_file("vars: x\nf1: x\nf2: x\n"), Error);
  EXPECT_THROW(io::parse_system_file("vars: x\nfield: R\nf1: x\n"), ParseError);
  EXPECT_THROW(io::parse_system_file("vars: x x\nf1: x\n"), Error);
  EXPECT_THROW(io::parse_system_file("f1: x\n"), Error);
  try {
    io::parse_system_file("vars: x\nf1: x + y\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 16u);
  }
}

TEST(Json, Schema) {
  auto c1 = VarContext::make_default(1);
  FieldSpec Q;
  EXPECT_EQ(io::to_json(Polynomial(c1, Q)).dump(), R"({"terms":[]})");
  EXPECT_EQ(io::to_json(io::parse_poly("x1", c1, Q)).dump(), R"({"terms":[{"coeff":"1","exps":[1]}]})");
  EXPECT_EQ(io::to_json(io::parse_poly("x1*x1' - 1/2", c1, Q, true)).dump(),
            R"({"terms":[{"coeff":"1","exps":[1,1]},{"coeff":"-1/2","exps":[0,0]}]})");
  auto f = system_of(c1, {"x1^2 - 1"});
  UnitFunctional E = unit_functional(f, 0);
  EXPECT_EQ(io::to_json(E.base).dump(), R"({"support":[{"exps":[1],"value":"1"}],"certified_degree":1})");
  EXPECT_EQ(io::to_json(E.base.without_certificate()).dump(),
            R"({"support":[{"exps":[1],"value":"1"}],"certified_degree":null})");
  Functional back = io::functional_from_json(nlohmann::json::parse(io::to_json(E.base).dump()), c1, Q);
  EXPECT_EQ(back, E.base);
  EXPECT_FALSE(back.certified_degree().has_value());
}

TEST(Cli, GoldenTranscripts) {
  CliRun r = run({"reduce", "--system", data("sys1.rf"), "--poly", "x1^3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x1\n");
  CliRun m = run({"member", "--system", data("sys1.rf"), "--poly", "x1"});
  EXPECT_EQ(m.code, 0);
  EXPECT_EQ(m.out, "false\n");
  CliRun u = run({"unit", "--system", data("degenerate.rf"), "--epsilon", "0"});
  EXPECT_EQ(u.code, 2);
  EXPECT_EQ(u.out, "");
  EXPECT_NE(u.err.find("infeasible"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"reduce", "--system", data("sys1.rf")}).code, 1);
  EXPECT_EQ(run({"reduce", "--system", data("sys1.rf"), "--poly", "x1^"}).code, 1);
  EXPECT_EQ(run({"reduce", "--system", data("missing.rf"), "--poly", "1"}).code, 1);
  EXPECT_EQ(run({"bezoutian", "--system", data("sys1.rf"), "--convention", "sideways"}).code, 1);
  EXPECT_EQ(run({"unit", "--system", data("degenerate.rf"), "--escalate", "2"}).code, 2);
  EXPECT_EQ(run({"reduce", "--system", data("sys1.rf"), "--poly", "x1^9", "--max-iters", "1"}).code, 3);
  CliRun help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("reduce"), std::string::npos);
}

TEST(Cli, Subcommands) {
  const std::string tower = data("tower.rf");
  EXPECT_EQ(run({"bezoutian", "--system", tower}).out, "x1*x2 + x2*x1' + x1*x2' + x1'*x2'\n");
  EXPECT_EQ(run({"unit", "--system", tower, "--json"}).out,
            "{\"epsilon\":0,\"free_parameters\":0,\"functional\":{\"support\":[{\"exps\":[1,1],\"value\":\"1\"}],"
            "\"certified_degree\":2}}\n");
  EXPECT_EQ(run({"reduce", "--system", tower, "--poly", "x2^4 + 3*x1*x2^3", "--trace"}).out,
            "step 0: 3*x1*x2^3 + x2^4\nstep 1: x1*x2^2 + 3*x2\nstep 2: 3*x2 + 1\nstep 3: 3*x2 + 1\n3*x2 + 1\n");
  EXPECT_EQ(run({"--json", "reduce", "--system", tower, "--poly", "x1^2"}).out,
            "{\"normal_form\":{\"terms\":[{\"coeff\":\"1\",\"exps\":[0,0]}]},\"iterations\":2,\"stabilized\":true}\n");
  EXPECT_EQ(run({"member", "--system", tower, "--poly", "x2^2*x1 - 1"}).out, "true\n");
  EXPECT_EQ(run({"quotient-basis", "--system", tower}).out,
            "dimension 4\n1 -> 1\nx2 -> x2\nx1 -> x1\nx1*x2 -> x1*x2\n");
  EXPECT_EQ(run({"slice", "--system", tower, "--degree", "2"}).out, "rank 2\nx1^2 - 1\nx2^2 - x1\n");
  CliRun ann = run({"annihilators", "--system", tower, "--degree", "2"});
  EXPECT_EQ(ann.out.substr(0, 12), "dimension 4\n");
  EXPECT_EQ(run({"star", "--system", data("sys1.rf"), "--functional", data("unit_sys1.json"), "--poly", "x1^3"}).out,
            "x1\n");
  EXPECT_EQ(run({"reduce", "--system", data("tower_fp.rf"), "--poly", "x2^4 + 3*x1*x2^3"}).out, "3*x2 + 1\n");
}

TEST(Cli, Deterministic) {
  std::vector<std::string> args{"reduce", "--system", data("tower.rf"), "--poly", "x1^5*x2^3 - 7/3*x2", "--json", "--trace"};
  CliRun a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}
