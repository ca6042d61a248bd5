#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "fflambda/limits.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "fflambda");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = fflambda::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, LfunTable) {
  const auto r = run({"lfun", "--field", "5", "--poly", "T^3+T+1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("# field=F_5"), std::string::npos);
  EXPECT_NE(r.out.find("1 3 5"), std::string::npos);
  EXPECT_NE(r.out.find("functional equation  ok"), std::string::npos);
}

TEST(Cli, LambdaJson) {
  const auto r = run({"lambda", "--field", "5", "--poly", "T^5-T", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("L").at("c"), (std::vector<int>{1, 0, -10, 0, 25}));
  EXPECT_EQ(j.at("lambda").at("status"), "exact0");
  EXPECT_TRUE(j.at("double_root").get<bool>());
  EXPECT_EQ(j.at("config").at("t_floor"), -30.0);

  const auto neg = run({"lambda", "--field", "3", "--poly", "T^3+T", "--format", "json"});
  ASSERT_EQ(neg.code, 0);
  EXPECT_EQ(nlohmann::json::parse(neg.out).at("lambda").at("status"), "neginf");
}

TEST(Cli, ValidationExitCodes) {
  EXPECT_EQ(run({"lfun", "--field", "4", "--poly", "T^3+T"}).code, 2);
  EXPECT_EQ(run({"lfun", "--field", "6", "--poly", "T^3+T"}).code, 2);
  EXPECT_EQ(run({"lfun", "--field", "5", "--poly", "T^4+2"}).code, 2);
  EXPECT_EQ(run({"lfun", "--field", "5", "--poly", "T^3"}).code, 2);
  EXPECT_EQ(run({"lfun", "--field", "5", "--poly", "T^^3"}).code, 2);
  EXPECT_EQ(run({"lfun", "--field", "5"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, SizeExceeded) {
  const std::uint64_t before = fflambda::enumeration_limit();
  const auto r = run({"lfun", "--field", "5", "--poly", "T^5-T", "--max-enum", "100"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("SizeExceeded"), std::string::npos);
  EXPECT_EQ(fflambda::enumeration_limit(), before);
}

TEST(Cli, VerifySuites) {
  const auto katz = run({"verify", "katz", "--field", "5"});
  EXPECT_EQ(katz.code, 0) << katz.out << katz.err;
  EXPECT_NE(katz.out.find("PASS"), std::string::npos);
  const auto fe = run({"verify", "fe", "--field", "3", "--format", "json"});
  EXPECT_EQ(fe.code, 0);
  EXPECT_EQ(run({"verify", "nonsense"}).code, 2);
}

TEST(Cli, Super) {
  const auto r = run({"super", "--x011", "--bound", "100"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("19 29"), std::string::npos);
  const auto c = run({"super", "--certify", "7", "--format", "json"});
  EXPECT_EQ(c.code, 0) << c.err;
  EXPECT_NE(c.out.find("\"N_p2\": 64"), std::string::npos);
}

TEST(Cli, SweepJsonIsByteStable) {
  const std::vector<std::string> args{"sweep", "--kind", "fixed-degree", "--q", "3", "--deg", "3", "--format", "json"};
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j.at("summary").at("members"), 18);

  const auto csv = run({"sweep", "--kind", "fixed-degree", "--q", "3", "--deg", "3", "--format", "csv", "--jobs", "2"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_NE(csv.out.find("seq,q,D,c_vector,lambda_status"), std::string::npos);
}

TEST(Cli, SatoTateIsObservational) {
  for (const char* fmt : {"table", "json"}) {
    const auto r = run({"satotate", "--D", "T^3+T+1", "--p-max", "300", "--format", fmt});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.find("verif"), std::string::npos) << fmt;
    EXPECT_EQ(r.out.find("Verif"), std::string::npos) << fmt;
    EXPECT_NE(r.out.find("observational"), std::string::npos) << fmt;
  }
}

TEST(Cli, ExitCodeMapping) {
  using fflambda::Errc;
  using fflambda::cli::exit_code_for;
  EXPECT_EQ(exit_code_for(Errc::SizeExceeded), 3);
  EXPECT_EQ(exit_code_for(Errc::ClosedFormMismatch), 4);
  EXPECT_EQ(exit_code_for(Errc::NonIntegralCoefficient), 1);
  EXPECT_EQ(exit_code_for(Errc::IndeterminateNearBoundary), 1);
  EXPECT_EQ(exit_code_for(Errc::NotSquarefree), 2);
}
