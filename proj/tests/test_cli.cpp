#include <gtest/gtest.h>

#include <sstream>

#include "campana/cli/dispatch.hpp"

using namespace campana;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(CAMPANA_SAMPLES_DIR) + "/" + name; }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(Cli, XaClassify) {
  const auto r = run({"xa", "classify", "2", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"weakly_special\":true,\"special\":false}\n");
  EXPECT_EQ(run({"xa", "classify", "2", "4"}).code, 2);
}

TEST(Cli, SemigroupCommands) {
  EXPECT_EQ(run({"semigroup", "atoms", "<2,3,4,7>"}).out, "[2,3]\n");
  EXPECT_EQ(run({"semigroup", "atoms", "<2,7>|<3>"}).out, "[[2,7],[3]]\n");
  EXPECT_EQ(run({"semigroup", "contains", "<2,7>", "5"}).out,
            "{\"semigroup\":\"<2,7>\",\"n\":5,\"contains\":false}\n");
  EXPECT_EQ(run({"semigroup", "elements", "<2,7>|<3>", "10"}).out, "[2,3,4,6,7,8,9,10]\n");
  EXPECT_EQ(run({"semigroup", "frobenius", "<2,7>"}).out, "5\n");
  EXPECT_EQ(run({"semigroup", "frobenius", "<2,4>"}).code, 2);
  EXPECT_EQ(run({"semigroup", "atoms", "<2,"}).code, 2);
}

TEST(Cli, FactorAndMFull) {
  EXPECT_EQ(run({"factor", "-9/8"}).out, "{\"sign\":-1,\"factors\":[[2,-3],[3,2]]}\n");
  EXPECT_EQ(run({"factor", "0"}).code, 2);
  EXPECT_EQ(run({"mfull", "list", "32", "--m", "3"}).out, "[1,8,16,27,32]\n");
  const auto rejected = run({"mfull", "check", "12", "--strict"});
  EXPECT_EQ(rejected.code, 1);
  EXPECT_NE(rejected.out.find("\"witness\":3"), std::string::npos);
  EXPECT_EQ(run({"mfull", "check", "12"}).code, 0);
  EXPECT_EQ(run({"mfull", "check", "1/3", "--s", "2"}).code, 2);
}

TEST(Cli, SearchIncludesTheKnownHit) {
  const auto r = run({"search", "2full", "--s", "2", "--bound", "4"});
  EXPECT_EQ(r.code, 0);
  const auto ls = lines(r.out);
  EXPECT_EQ(ls.size(), 18u);
  bool found = false;
  for (const auto& l : ls)
    if (l.find("\"x\":\"-8\"") != std::string::npos) {
      found = true;
      EXPECT_NE(l.find("\"lift\":[\"3\",\"1\"]"), std::string::npos);
    }
  EXPECT_TRUE(found);
  EXPECT_NE(r.err.find("18 units"), std::string::npos);
}

TEST(Cli, ConfigFileEqualsFlags) {
  const auto flags = run({"search", "2full", "--s", "2", "--bound", "4"});
  const auto file = run({"search", "2full", "--config", sample("search_s2.conf")});
  EXPECT_EQ(file.code, 0);
  EXPECT_EQ(file.out, flags.out);
  const auto overridden = run({"search", "2full", "--config", sample("search_s2.conf"), "--bound", "2"});
  EXPECT_EQ(overridden.out, run({"search", "2full", "--s", "2", "--bound", "2"}).out);
}

TEST(Cli, NegativeNumbersAsPositionals) {
  EXPECT_EQ(run({"point", "verify", "-3", "-1"}).code, 0);
  EXPECT_EQ(run({"point", "verify", "3", "1", "--s", "2"}).out,
            "{\"a\":\"3\",\"b\":\"1\",\"on_X\":true,\"on_Y\":true}\n");
  EXPECT_EQ(run({"point", "verify", "1", "1", "--strict"}).code, 1);
}

TEST(Cli, CPairAndConfiguration) {
  const auto ok = run({"cpair", "check", "D1: >=2; D2: >=3", "@" + sample("valuations.json")});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("\"accepted\":true"), std::string::npos);
  const auto bad =
      run({"cpair", "check", "D1: >=3; D2: >=3", "@" + sample("valuations.json"), "--strict", "--mode", "campana"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(run({"cpair", "check", "D1: >=3; D2: >=3", "@" + sample("valuations.json"), "--mode", "darmon"}).code,
            2);
  EXPECT_EQ(run({"cpair", "divisor", "A: >=2; B: inf; C: union <2>|<3>"}).out,
            "[{\"label\":\"A\",\"coefficient\":\"1/2\"},{\"label\":\"B\",\"coefficient\":\"1\"},"
            "{\"label\":\"C\",\"coefficient\":\"1/2\"}]\n");
  const std::string cfg = "@" + sample("configuration.json");
  EXPECT_EQ(run({"config", "check", "<2,7>|<3>", cfg, "--strict"}).code, 0);
  EXPECT_EQ(run({"config", "check", "<2>|<3,4,7>", cfg, "--strict"}).code, 1);
  EXPECT_EQ(run({"config", "check", "<2>|<3,4,7>", "@/nonexistent.json"}).code, 2);
}

TEST(Cli, FibreCommands) {
  EXPECT_EQ(run({"fibre", "classify", "2", "3"}).out,
            "{\"m_s\":2,\"m_s_plus\":1,\"inf_multiple\":true,\"divisible\":false}\n");
  EXPECT_EQ(run({"fibre", "classify", "empty"}).out,
            "{\"m_s\":\"inf\",\"m_s_plus\":\"inf\",\"inf_multiple\":true,\"divisible\":true}\n");
  const auto base = run({"fibre", "orbifold-base", "@" + sample("xy_fibres.json")});
  EXPECT_EQ(base.code, 0);
  EXPECT_NE(base.out.find("\"coefficient\":\"1/2\""), std::string::npos);
  const auto check = run({"fibre", "checklist", R"([{"mults":[2,3]}])", "--base-weakly-special", "true",
                          "--fibres-weakly-special", "true"});
  EXPECT_EQ(check.out, "{\"certified\":true,\"failing_condition\":null,\"witness_fibre\":null}\n");
  const auto fail = run({"fibre", "checklist", R"([{"mults":[1]},{"mults":[2,2]}])", "--base-weakly-special",
                         "true", "--fibres-weakly-special", "true", "--strict"});
  EXPECT_EQ(fail.code, 1);
  EXPECT_EQ(fail.out, "{\"certified\":false,\"failing_condition\":3,\"witness_fibre\":2}\n");
}

TEST(Cli, GeometryCommands) {
  EXPECT_EQ(run({"kodaira", "reduce", "IV*"}).out,
            "{\"type\":\"IV*\",\"mults\":[2,2,2,3],\"m_s\":2,\"m_s_plus\":1,\"inf_multiple\":true,"
            "\"divisible\":false}\n");
  EXPECT_EQ(run({"kodaira", "reduce", "I5"}).code, 2);
  EXPECT_EQ(run({"weights", "2", "3", "--blocks", "1|2"}).out,
            "{\"a\":[2,3],\"kernel_basis\":[[3,-2]],\"splitting\":[-1,1],\"blocks\":[[1],[2]],"
            "\"strata\":[[1,2]],\"inf\":2,\"gcd\":1}\n");
  const auto space = run({"space", "report", "div 2"});
  EXPECT_NE(space.out.find("\"divisible\":true"), std::string::npos);
  EXPECT_EQ(run({"space", "report", "inf"}).code, 2);
}

TEST(Cli, P1Enumerate) {
  const auto r = run({"p1", "enumerate", "0: >=2; 1: >=2; inf: >=2", "--height", "10"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"point\":\"9/8\""), std::string::npos);
  EXPECT_EQ(r.out.find("\"point\":\"2\""), std::string::npos);
  const auto all = run({"p1", "enumerate", "0: >=2; 1: >=2; inf: >=2", "--height", "10", "--all"});
  EXPECT_NE(all.out.find("\"point\":\"2\""), std::string::npos);
}

TEST(Cli, Formats) {
  const auto csv = run({"search", "2or3", "--s", "2", "--bound", "1", "--format", "csv"});
  const auto ls = lines(csv.out);
  ASSERT_FALSE(ls.empty());
  EXPECT_EQ(ls[0], "x,u,shift,verdict,witness,lift,target,flags");
  EXPECT_EQ(ls.size(), 7u);
  const auto table = run({"semigroup", "contains", "<2,7>", "9", "--format", "table"});
  EXPECT_EQ(table.out, "semigroup  n  contains\n<2,7>      9  true\n");
  EXPECT_EQ(run({"xa", "classify", "2", "3", "--format", "yaml"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({"search"}).code, 2);
  EXPECT_EQ(run({"search", "2full", "--bound", "-1"}).code, 2);
  EXPECT_EQ(run({"search", "2full", "--s", "4"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"search", "2or3", "--s", "2,3", "--bound", "5", "--jobs", "3"};
  EXPECT_EQ(run(args).out, run(args).out);
  EXPECT_EQ(run(args).out, run({"search", "2or3", "--s", "2,3", "--bound", "5"}).out);
}

TEST(Config, Parse) {
  const auto cfg = cli::parse_config("# comment\ns_primes = [2, 3]\nbound = 7 # trailing\nformat = csv\n");
  EXPECT_EQ(cfg.s_primes, (std::vector<BigInt>{2, 3}));
  EXPECT_EQ(cfg.bound, 7);
  EXPECT_EQ(cfg.format, cli::OutputFormat::Csv);
  EXPECT_FALSE(cfg.height);
  const auto empty = cli::parse_config("");
  EXPECT_EQ(empty.bound_or_default(), 4);
  EXPECT_TRUE(empty.s_primes_or_default().empty());
  EXPECT_EQ(empty.format_or_default(), cli::OutputFormat::Json);
}

TEST(Config, Errors) {
  auto error_at = [](const std::string& text) -> std::pair<int, int> {
    try {
      cli::parse_config(text);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  EXPECT_EQ(error_at("bound = 4\nbound = 5\n"), std::make_pair(2, 1));
  EXPECT_EQ(error_at("colour = red"), std::make_pair(1, 1));
  EXPECT_EQ(error_at("s_primes = [2, 4]"), std::make_pair(1, 16));
  EXPECT_EQ(error_at("bound = x"), std::make_pair(1, 9));
  EXPECT_EQ(error_at("  height = 0"), std::make_pair(1, 12));
  EXPECT_EQ(error_at("strict = maybe"), std::make_pair(1, 10));
  EXPECT_EQ(error_at("bound 4"), std::make_pair(1, 7));
  EXPECT_THROW(cli::load_config("/nonexistent/file.conf"), ParseError);
  const auto r = run({"search", "2full", "--config", "/nonexistent/file.conf"});
  EXPECT_EQ(r.code, 2);
}

TEST(Config, FileMatchesFlagsExactly) {
  const auto file = cli::load_config(sample("search_s2.conf"));
  cli::RunConfig flags;
  flags.s_primes = std::vector<BigInt>{2};
  flags.bound = 4;
  flags.format = cli::OutputFormat::Json;
  EXPECT_EQ(file.s_primes, flags.s_primes);
  EXPECT_EQ(file.bound, flags.bound);
  EXPECT_EQ(file.format, flags.format);
}
