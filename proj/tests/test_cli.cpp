#include <doctest.h>

#include "chow/cli.hpp"
#include "chow/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace chow;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/chowcalc_test_" + name + ".json";
  std::ofstream(path) << content;
  return path;
}

} // namespace

TEST_CASE("serialization formats") {
  CHECK(to_json(Rational(-3, 2)) == "-3/2");
  CHECK(to_json(Rational(4)) == "4");
  CHECK(to_json(Polynomial({Rational(1), Rational(0), Rational(-1, 3)})).dump() == R"(["1","0","-1/3"])");
  CHECK(to_json(Partition({2, 1})).dump() == "[2,1]");
  const GrassmannianShape g(2, 4);
  const auto s1 = SchubertElement::schubert_class(g, Partition({1}));
  CHECK(to_json(lr_multiply(s1, s1)).dump() ==
        R"([{"partition":[1,1],"coefficient":"1"},{"partition":[2],"coefficient":"1"}])");
  const auto e = PresentedElement<Rational>::monomial(q_ring(), "R^2*H", Rational(2, 3));
  CHECK(to_json(e).dump() == R"([{"monomial":"R^2*H","coefficient":"2/3"}])");
  const std::set<RootVector> roots{{1, -1}, {0, 0}};
  CHECK(to_json(roots).dump() == "[[0,0],[1,-1]]");
}

TEST_CASE("chain spec parsing names the offending field") {
  const auto ok = parse_chain_spec_text(R"({"degrees":[2,2,3],"matrices":[[[3,1],[1,3]],[[4,0],[0,4]],[[9,0],[1,8]]]})");
  CHECK(ok.degrees == std::vector<std::int64_t>{2, 2, 3});
  REQUIRE(ok.matrices);
  CHECK((*ok.matrices)[2](1, 0) == 1);
  CHECK_FALSE(parse_chain_spec_text(R"({"degrees":[2]})").matrices);

  const auto message = [](const std::string& text) {
    try {
      parse_chain_spec_text(text);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message(R"({"degrees":[2,"x"]})").find("degrees[1]") != std::string::npos);
  CHECK(message(R"({"matrices":[]})").find("degrees") != std::string::npos);
  CHECK(message(R"({"degrees":[2],"matrices":[[[3,1],[1]]]})").find("matrices[0][1]") != std::string::npos);
  CHECK(message(R"({"degrees":[2],"matrices":[[[3,2],[1,3]]]})").find("matrices[0]") != std::string::npos);
  CHECK(message(R"({"degrees":[2],"extra":1})").find("extra") != std::string::npos);
  CHECK(message("{not json").find("JSON") != std::string::npos);
}

TEST_CASE("monad-verify --a 2") {
  const auto r = run({"monad-verify", "--a", "2", "--json"});
  CHECK(r.code == kSuccess);
  const auto j = Json::parse(r.out);
  CHECK(j["conclusion"] == "excluded_by_integrality");
  CHECK(j["chi_E"] == "-3/2");
  CHECK(j["d"] == "-1");
  CHECK(j["b"] == "2");
  const auto text = run({"monad-verify", "--a", "2"});
  CHECK(text.code == kSuccess);
  CHECK(text.out.find("conclusion: excluded_by_integrality") != std::string::npos);
}

TEST_CASE("monad-verify symbolic and ranges") {
  const auto r = run({"--json", "monad-verify"});
  CHECK(r.code == kSuccess);
  const auto j = Json::parse(r.out);
  CHECK(j["mode"] == "symbolic");
  CHECK(j["d"].dump() == R"(["0","-1/2"])");
  CHECK(j["chi_E"].dump() == R"(["2","-23/12","1/12"])");
  CHECK(j.contains("twist_e4"));
  CHECK(j.contains("monad_e"));

  const auto small = run({"monad-verify", "--a-max", "7"});
  CHECK(small.code == kSuccess);
  const auto wide = run({"monad-verify", "--a-max", "8", "--json"});
  CHECK(wide.code == kVerificationFailure);
  CHECK(Json::parse(wide.out)["verdicts"][7]["conclusion"] == "not_excluded");
  CHECK(run({"monad-verify", "--a", "8"}).code == kVerificationFailure);
}

TEST_CASE("input errors exit with 2") {
  CHECK(run({"monad-verify", "--a", "-1"}).code == kInputError);
  CHECK(run({"monad-verify", "--a-max", "0"}).code == kInputError);
  CHECK(run({"monad-verify", "--a", "2", "--a-max", "3"}).code == kInputError);
  CHECK(run({"monad-verify", "--a", "two"}).code == kInputError);
  CHECK(run({"no-such-command"}).code == kInputError);
  CHECK(run({}).code == kInputError);
  CHECK(run({"schubert-mult", "--lhs", "5", "--rhs", "V"}).code == kInputError);
  CHECK(run({"chain-check", "--spec", "/nonexistent/chain.json"}).code == kInputError);
  const auto bad = run({"chain-check", "--spec", temp_file("bad", R"({"degrees":[2],"matrices":[[[3,2],[1,3]]]})")});
  CHECK(bad.code == kInputError);
  CHECK(bad.err.find("matrices[0]") != std::string::npos);
  CHECK(run({"--help"}).code == kSuccess);
}

TEST_CASE("chain-check") {
  const auto path = temp_file("sym", R"({"degrees":[2,2,2],"matrices":[[[3,1],[1,3]],[[3,1],[1,3]],[[3,1],[1,3]]]})");
  const auto r = run({"chain-check", "--spec", path, "--bound", "1", "--json"});
  CHECK(r.code == kSuccess);
  const auto j = Json::parse(r.out);
  CHECK(j["delta"] == 8);
  CHECK(j["eigen_check"] == true);
  CHECK(j["product_matrix"].dump() == "[[36,28],[28,36]]");
  CHECK(j["feasible_c2"].size() == 9);
  CHECK(j["c1_forcing"].dump() == "[-8,0,8]");

  const auto h = run({"chain-check", "--spec", path, "--bound", "1", "--horizon", "1", "--json"});
  CHECK(Json::parse(h.out)["product_matrix"].dump() == "[[3,1],[1,3]]");
  CHECK(run({"chain-check", "--spec", path, "--horizon", "0"}).code == kInputError);

  const auto degrees_only = run({"chain-check", "--spec", temp_file("deg", R"({"degrees":[3,2]})"), "--bound", "1", "--json"});
  CHECK(degrees_only.code == kSuccess);
  CHECK(Json::parse(degrees_only.out)["c1_forcing"].dump() == "[-6,0,6]");
}

TEST_CASE("other subcommands") {
  const auto mult = run({"schubert-mult", "--k", "2", "--n", "4", "--lhs", "V", "--rhs", "V", "--json"});
  CHECK(mult.code == kSuccess);
  CHECK(Json::parse(mult.out)["product"].size() == 2);
  const auto ring = run({"q-ring", "--json"});
  CHECK(Json::parse(ring.out)["graded_dimensions"].dump() == "[1,2,3,2,1]");
  CHECK(Json::parse(ring.out)["classes"]["P_alpha*P_beta"].dump() == "[]");
  CHECK(run({"todd"}).out.find("td(T_Q) = 1 + 3/2*H + 1/2*R") != std::string::npos);
  const auto chi = Json::parse(run({"chi", "--json"}).out);
  CHECK(chi["chi_O_Q"] == "1");
  CHECK(Json::parse(run({"chi", "--a", "2", "--json"}).out)["chi_E"] == "-3/2");
}

TEST_CASE("identical invocations give identical output") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"monad-verify", "--json"}, {"monad-verify", "--a-max", "20", "--json"}, {"q-ring", "--json"}, {"selftest", "--json"}}) {
    const auto first = run(args), second = run(args);
    CHECK(first.out == second.out);
    CHECK(first.code == second.code);
  }
}

TEST_CASE("selftest reports every golden case") {
  const auto r = run({"selftest", "--json"});
  const auto j = Json::parse(r.out);
  CHECK(j["total"].get<int>() >= 31);
  CHECK((r.code == kSuccess) == (j["passed"] == j["total"]));
}
