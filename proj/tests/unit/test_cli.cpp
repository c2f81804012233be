#include <sstream>

#include "doctest.h"
#include "lsd/cli.hpp"
#include "lsd/report.hpp"
#include "support.hpp"

using namespace lsd;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(Command command, const std::string& input, bool oracle = false,
           Format format = Format::Json, std::uint64_t seed = 0) {
  RunConfig cfg;
  cfg.command = command;
  cfg.input = input;
  cfg.oracle = oracle;
  cfg.format = format;
  cfg.seed = seed;
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(cfg, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("decompose werner d=2 f=-0.5") {
  const auto r = invoke(Command::Decompose, R"({"family":"werner","d":2,"f":-0.5})");
  REQUIRE(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK_NOTHROW(validate_report(j));
  CHECK(std::abs(j["lambda"].get<double>() - 0.5) < 1e-12);
  CHECK(j["checks"]["ok"] == true);
}

TEST_CASE("separability of isotropic d=3 F=0.2") {
  const auto r = invoke(Command::Separability, R"({"family":"isotropic","d":3,"F":0.2})");
  REQUIRE(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK_NOTHROW(validate_report(j));
  CHECK(j["separability"]["status"] == "Separable");
}

TEST_CASE("decompose separable bd22 has no entangled part") {
  const auto r = invoke(Command::Decompose, R"({"family":"bd22","p":[0.3,0.3,0.2,0.2]})");
  REQUIRE(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j["lambda"].get<double>() == 1.0);
  CHECK(j["entangled"].is_null());
}

TEST_CASE("stdin input") {
  const auto r = invoke(Command::Decompose, "-");
  CHECK(r.code == kExitValidation);
  RunConfig cfg;
  cfg.input = "-";
  std::istringstream in(R"({"family":"horodecki33","alpha":4})");
  std::ostringstream out;
  std::ostringstream err;
  REQUIRE(run(cfg, in, out, err) == kExitOk);
  CHECK(std::abs(Json::parse(out.str())["lambda"].get<double>() - 0.5) < 1e-12);
}

TEST_CASE("decompose output round-trips through verify") {
  testing::Rng rng(139);
  std::vector<std::string> inputs = {
      R"({"family":"bd22","p":[0.7,0.1,0.1,0.1]})",
      R"({"family":"icd","theta":0.4,"p":[0.6,0.2,0.1,0.1]})",
      R"({"family":"bd23","p":[0.5,0.1,0.1,0.1,0.1,0.1]})",
      R"({"family":"werner","d":3,"f":-0.5})",
      R"({"family":"isotropic","d":4,"F":0.6})",
      R"({"family":"horodecki33","alpha":4.5})",
      R"({"family":"multi_iso","d":2,"n":3,"s":0.6})",
      R"({"family":"bd22","p":[0.3,0.3,0.2,0.2]})",
  };
  for (int i = 0; i < 5; ++i) {
    inputs.push_back(spec_to_json(RawSpec{{2, 2}, testing::random_density({2, 2}, rng).mat()}).dump());
  }
  for (const auto& input : inputs) {
    CAPTURE(input);
    const auto dec = invoke(Command::Decompose, input);
    REQUIRE(dec.code == kExitOk);
    const auto ver = invoke(Command::Verify, dec.out);
    CHECK(ver.code == kExitOk);
    const Json j = Json::parse(ver.out);
    CHECK_NOTHROW(validate_report(j));
    CHECK(j["checks"]["ok"] == true);
    CHECK(j["checks"]["separable_status"] == "Separable");
    CHECK(j["checks"]["reconstruction_error"].get<double>() <= 1e-10);
  }
}

TEST_CASE("verify flags a tampered lambda") {
  const auto dec = invoke(Command::Decompose, R"({"family":"bd22","p":[0.7,0.1,0.1,0.1]})");
  Json j = Json::parse(dec.out);
  j["lambda"] = j["lambda"].get<double>() + 0.01;
  const auto ver = invoke(Command::Verify, j.dump());
  CHECK(ver.code == kExitNumerical);
  const Json v = Json::parse(ver.out);
  CHECK(v["checks"]["ok"] == false);
  CHECK(v["checks"]["residual_min_eig"].get<double>() < 0.0);
}

TEST_CASE("reports are byte-identical across runs") {
  for (const char* input : {R"({"family":"icd","theta":0.4,"p":[0.6,0.2,0.1,0.1]})",
                            R"({"family":"bd23","p":[0.5,0.1,0.1,0.1,0.1,0.1]})"}) {
    const auto a = invoke(Command::Decompose, input, true, Format::Json, 7);
    const auto b = invoke(Command::Decompose, input, true, Format::Json, 7);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK(invoke(Command::Oracle, input, false, Format::Json, 7).out ==
          invoke(Command::Oracle, input, false, Format::Json, 7).out);
  }
}

TEST_CASE("oracle and concurrence commands emit valid reports") {
  const auto o = invoke(Command::Oracle, R"({"family":"bd22","p":[0.7,0.1,0.1,0.1]})");
  REQUIRE(o.code == kExitOk);
  const Json oj = Json::parse(o.out);
  CHECK_NOTHROW(validate_report(oj));
  CHECK(oj["oracle"]["agree"] == true);
  CHECK(std::abs(oj["oracle"]["lambda_numeric"].get<double>() - 0.6) < 1e-9);

  const auto c = invoke(Command::Concurrence, R"({"family":"bd22","p":[0.7,0.1,0.1,0.1]})");
  REQUIRE(c.code == kExitOk);
  const Json cj = Json::parse(c.out);
  CHECK_NOTHROW(validate_report(cj));
  CHECK(std::abs(cj["concurrence"]["value"].get<double>() - 0.4) < 1e-10);
  CHECK(invoke(Command::Concurrence, R"({"family":"werner","d":3,"f":0})").code ==
        kExitValidation);
}

TEST_CASE("decompose with oracle attaches the cross-check") {
  const auto r =
      invoke(Command::Decompose, R"({"family":"isotropic","d":3,"F":0.5})", true);
  REQUIRE(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK_NOTHROW(validate_report(j));
  CHECK(j["oracle"]["difference"].get<double>() <= 1e-6);
  CHECK(j["oracle"]["gap"].get<double>() <= 1e-6);
  CHECK(j["oracle"]["slackness"].get<double>() <= 1e-6);
}

TEST_CASE("exit codes") {
  CHECK(invoke(Command::Decompose, R"({"family":"werner","d":2)").code == kExitValidation);
  CHECK(invoke(Command::Decompose, R"({"family":"qutrit"})").code == kExitValidation);
  CHECK(invoke(Command::Decompose, R"({"family":"werner","d":2,"f":3})").code ==
        kExitValidation);
  CHECK(invoke(Command::Decompose, "/nonexistent/spec.json").code == kExitValidation);
  const auto raw9 = spec_to_json(RawSpec{{3, 3}, (1.0 / 9.0) * ComplexMat::identity(9)});
  CHECK(invoke(Command::Decompose, raw9.dump()).code == kExitValidation);
  CHECK(invoke(Command::Verify, R"({"family":"werner","d":2,"f":0})").code == kExitValidation);
  CHECK(exit_code_for(Errc::InvariantViolation) == kExitNumerical);
  CHECK(exit_code_for(Errc::ParseError) == kExitValidation);
  CHECK(exit_code_for(Errc::UnsupportedSpec) == kExitValidation);
}

TEST_CASE("selftest passes and text format is line oriented") {
  const auto s = invoke(Command::Selftest, "");
  CHECK(s.code == kExitOk);
  const Json j = Json::parse(s.out);
  CHECK_NOTHROW(validate_report(j));
  CHECK(j["passed"] == true);
  for (const auto& t : run_selftest()) {
    CAPTURE(t.name);
    CHECK(t.passed);
  }
  const auto text = invoke(Command::Decompose, R"({"family":"werner","d":2,"f":-0.5})", false,
                           Format::Text);
  CHECK(text.out.find("lambda: 0.5\n") != std::string::npos);
}
