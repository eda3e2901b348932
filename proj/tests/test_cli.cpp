#include "doctest.h"

#include "tornheim/cli.hpp"
#include "tornheim/descriptor.hpp"
#include "tornheim/even_zeta.hpp"
#include "tornheim/zeta_expr.hpp"

#include <json.hpp>

#include <sstream>

using namespace tornheim;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("reduce T 2 2 2") {
  const auto r = cli({"reduce", "T", "2", "2", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("T(2,2,2) = 4*z(2)*z(4) - 20/3*z(6)") != std::string::npos);
  CHECK(r.out.find("numeric: 0.339114353994816379904839309930") != std::string::npos);
}

TEST_CASE("reduce accepts the compact descriptor form") {
  const auto r = cli({"reduce", "E(1,2)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("E(1,2) = 2*z(3)") != std::string::npos);
}

TEST_CASE("divergent and invalid input exits 2 with one line") {
  auto r = cli({"reduce", "T", "1", "0", "1"});
  CHECK(r.code == 2);
  CHECK(r.err == "divergent: requires r+s+t>2\n");
  CHECK(r.out.empty());
  CHECK(cli({"reduce", "E", "2", "1"}).code == 2);
  CHECK(cli({"reduce", "X", "1", "2"}).code == 2);
  CHECK(cli({"reduce", "T", "2", "2", "20"}).code == 2);  // beyond the weight cap
  CHECK(cli({"verify", "no-such-id"}).code == 2);
  CHECK(cli({"eval", "T", "2", "2", "2", "--prec", "5"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"eval", "z(1)"}).code == 2);
}

TEST_CASE("json errors carry status error") {
  const auto r = cli({"--json", "reduce", "T", "1", "0", "1"});
  CHECK(r.code == 2);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("status") == "error");
  CHECK(j.at("query") == "T 1 0 1");
}

TEST_CASE("eval to D digits") {
  const auto r = cli({"eval", "T", "1", "1", "1", "--prec", "40"});
  CHECK(r.code == 0);
  CHECK(r.out == "T(1,1,1) = 2.404113806319188570799476323022899981530\n");
  const auto z = cli({"eval", "2*z(3)", "--prec", "40"});
  CHECK(z.out == "2*z(3) = 2.404113806319188570799476323022899981530\n");
}

TEST_CASE("verify exit codes") {
  const auto r = cli({"verify", "eq-lp5bakz"});
  CHECK(r.code == 0);
  CHECK(r.out.find("eq-lp5bakz: 24/24 passed (exact)") != std::string::npos);
  const auto m = cli({"verify", "thm-ryy2yk3", "--mu-max", "3"});
  CHECK(m.code == 0);
}

TEST_CASE("json output round-trips") {
  for (const std::vector<std::string> q :
       {std::vector<std::string>{"--json", "reduce", "T", "2", "2", "2"}, {"--json", "reduce", "E", "2", "6"},
        {"--json", "reduce", "T", "1", "3", "4"}}) {
    const auto r = cli(q);
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    const SumDescriptor d = SumDescriptor::parse(j.at("query").get<std::string>());
    CHECK(d.str() == j.at("query"));
    const ZetaExpr z = ZetaExpr::parse(j.at("zeta_expr").get<std::string>());
    CHECK(z.render() == j.at("zeta_expr"));
    CHECK(j.at("precision_digits") == 30);
    const std::string status = j.at("status");
    CHECK((status == "closed" || status == "basis"));
    for (const auto& b : j.at("basis")) {
      CHECK(SumDescriptor::parse(b.at("sum").get<std::string>()).str() == b.at("sum"));
      CHECK(Rational::parse(b.at("coefficient").get<std::string>()).str() == b.at("coefficient"));
    }
  }
  const auto r = cli({"--json", "reduce", "T", "2", "2", "2"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(equal_mod_even(ZetaExpr::parse(j.at("zeta_expr").get<std::string>()),
                       ZetaExpr::parse("4*z(2)*z(4) - 20/3*z(6)")));
  // weight 8 keeps one free generator
  const auto b = nlohmann::json::parse(cli({"--json", "reduce", "E", "2", "6"}).out);
  CHECK(b.at("status") == "basis");
}

TEST_CASE("table lists every unknown at the weight") {
  const auto r = cli({"table", "--weight", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("T(1,1,2) = ") != std::string::npos);
  CHECK(r.out.find("E(2,2) = ") != std::string::npos);
  const auto j = cli({"--json", "table", "--weight", "5"});
  std::istringstream in(j.out);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    CHECK(nlohmann::json::parse(line).at("status") == "closed");
    ++n;
  }
  CHECK(n == 12);
}

TEST_CASE("identical invocations give identical output") {
  for (const std::vector<std::string> q : {std::vector<std::string>{"table", "--weight", "6"},
                                           {"verify", "eq-srgz6mr"},
                                           {"--json", "eval", "E", "3", "4"}}) {
    const auto a = cli(q), b = cli(q);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}
