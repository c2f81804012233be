// SPDX-License-Identifier: Apache-2.0
#include "lsd/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>

#include "lsd/decomposition.hpp"
#include "lsd/oracle.hpp"
#include "lsd/report.hpp"
#include "lsd/separability.hpp"
#include "lsd/wootters.hpp"

namespace lsd {

namespace {

constexpr double kDefaultCheckTol = 1e-10;
constexpr double kResidualSlack = 1e-9;
constexpr double kOracleAgreement = 1e-6;

std::string command_name(Command c) {
  switch (c) {
    case Command::Decompose: return "decompose";
    case Command::Separability: return "separability";
    case Command::Concurrence: return "concurrence";
    case Command::Oracle: return "oracle";
    case Command::Verify: return "verify";
    case Command::Selftest: return "selftest";
  }
  return "unknown";
}

Json read_json(const RunConfig& cfg, std::istream& in) {
  std::string text;
  const auto first = cfg.input.find_first_not_of(" \t\r\n");
  if (cfg.input == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else if (first != std::string::npos && cfg.input[first] == '{') {
    text = cfg.input;
  } else {
    std::ifstream file(cfg.input);
    if (!file) throw Error(Errc::ParseError, "cannot open input '" + cfg.input + "'");
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::ParseError, std::string("malformed JSON: ") + e.what());
  }
}

Json header(Command c) { return {{"schema", kReportSchema}, {"command", command_name(c)}}; }

Json verdict_json(const SeparabilityVerdict& v) {
  return {{"status", to_string(v.status)}, {"margin", v.margin}, {"detail", v.detail}};
}

Json checks_json(const VerificationReport& v, double tol) {
  const bool ok = v.residual_norm <= tol && v.residual_min_eig >= -kResidualSlack &&
                  v.separable_verdict.status == SeparabilityStatus::Separable;
  return {{"reconstruction_error", v.residual_norm},
          {"separable_status", to_string(v.separable_verdict.status)},
          {"separable_detail", v.separable_verdict.detail},
          {"residual_min_eig", v.residual_min_eig},
          {"residual_rank", v.residual_rank},
          {"residual_purity", v.purity ? Json(*v.purity) : Json(nullptr)},
          {"tolerance", tol},
          {"ok", ok}};
}

Json decomposition_json(const LSDecomposition& dec) {
  const auto& dims = dec.separable_part.dims();
  Json j;
  j["lambda"] = dec.lambda;
  j["method"] = dec.method;
  j["separable"] = matrix_to_json(dec.separable_part.mat(), dims);
  j["entangled"] =
      dec.entangled_normalized ? matrix_to_json(dec.entangled_part, dims) : Json(nullptr);
  j["separable_spec"] = dec.separable_spec ? spec_to_json(*dec.separable_spec) : Json(nullptr);
  return j;
}

Json concurrence_json(const DensityMatrix& rho, bool with_basis) {
  Json j;
  const auto lambdas = wootters_lambdas(rho);
  j["value"] = concurrence(rho);
  j["lambdas"] = lambdas;
  if (!with_basis) return j;
  try {
    const WoottersData w = wootters_basis(rho);
    j["weights"] = w.weights;
    j["k"] = w.k;
    j["k_defined"] = w.k_defined;
    Json xs = Json::array();
    for (const auto& x : w.x) xs.push_back(vector_to_json(x));
    j["x"] = std::move(xs);
  } catch (const Error& e) {
    if (e.code() != Errc::DegenerateBasis) throw;
    j["basis"] = nullptr;
  }
  return j;
}

struct OracleOutcome {
  Json json;
  bool agree;
};

OracleOutcome oracle_json(const StateSpec& spec, const DensityMatrix& rho,
                          const LSDecomposition& dec, std::uint64_t seed) {
  BsaOptions opt;
  opt.seed = seed;
  const SeparableFamily family = separable_family_for(spec);
  const BsaResult numeric = bsa_search(rho, family, opt);
  const DualityReport duality = duality_check(bsa_as_sdp(rho, dec.separable_part), {dec.lambda});
  const double diff = std::abs(numeric.lambda - dec.lambda);
  const bool agree = diff <= kOracleAgreement && duality.gap <= kOracleAgreement &&
                     duality.slackness_residual <= kOracleAgreement;
  Json j = {{"family", family.name},
            {"lambda_closed", dec.lambda},
            {"lambda_numeric", numeric.lambda},
            {"difference", diff},
            {"upper_bound", std::isfinite(numeric.upper_bound) ? Json(numeric.upper_bound)
                                                               : Json(nullptr)},
            {"iterations", numeric.iterations},
            {"gap", duality.gap},
            {"slackness", duality.slackness_residual},
            {"agree", agree}};
  return {std::move(j), agree};
}

struct Outcome {
  Json report;
  int code;
};

Outcome do_decompose(const RunConfig& cfg, const Json& input) {
  const StateSpec spec = spec_from_json(input);
  const DensityMatrix rho = build(spec);
  const LSDecomposition dec = decompose(spec);
  Json r = header(Command::Decompose);
  r["input"] = spec_to_json(spec);
  r.update(decomposition_json(dec));
  const double tol = cfg.tol.value_or(kDefaultCheckTol);
  r["checks"] = checks_json(verify(rho, dec), tol);
  if (rho.dims() == std::vector<std::size_t>{2, 2}) r["concurrence"] = concurrence_json(rho, false);
  int code = r["checks"]["ok"] ? kExitOk : kExitNumerical;
  if (cfg.oracle) {
    auto oracle = oracle_json(spec, rho, dec, cfg.seed);
    r["oracle"] = std::move(oracle.json);
    if (!oracle.agree) code = kExitNumerical;
  }
  return {std::move(r), code};
}

Outcome do_separability(const Json& input) {
  const StateSpec spec = spec_from_json(input);
  const DensityMatrix rho = build(spec);
  Json r = header(Command::Separability);
  r["input"] = spec_to_json(spec);
  if (std::holds_alternative<RawSpec>(spec)) {
    r["separability"] = verdict_json(ppt_check(rho));
  } else {
    r["separability"] = verdict_json(family_region(spec));
    if (rho.is_bipartite()) r["ppt"] = verdict_json(ppt_check(rho));
  }
  return {std::move(r), kExitOk};
}

Outcome do_concurrence(const Json& input) {
  const StateSpec spec = spec_from_json(input);
  const DensityMatrix rho = build(spec);
  if (rho.dims() != std::vector<std::size_t>{2, 2}) {
    throw Error(Errc::WrongDims, "concurrence needs a state on dims [2,2]");
  }
  Json r = header(Command::Concurrence);
  r["input"] = spec_to_json(spec);
  r["concurrence"] = concurrence_json(rho, true);
  return {std::move(r), kExitOk};
}

Outcome do_oracle(const RunConfig& cfg, const Json& input) {
  const StateSpec spec = spec_from_json(input);
  const DensityMatrix rho = build(spec);
  const LSDecomposition dec = decompose(spec);
  auto oracle = oracle_json(spec, rho, dec, cfg.seed);
  Json r = header(Command::Oracle);
  r["input"] = spec_to_json(spec);
  r["oracle"] = std::move(oracle.json);
  return {std::move(r), oracle.agree ? kExitOk : kExitNumerical};
}

Outcome do_verify(const RunConfig& cfg, const Json& input) {
  validate_report(input);
  if (input["command"] != "decompose" && input["command"] != "verify") {
    throw Error(Errc::ParseError, "verify expects a decompose report");
  }
  const StateSpec spec = spec_from_json(input["input"]);
  const DensityMatrix rho = build(spec);
  const LSDecomposition dec = decomposition_from_report(input);
  Json r = header(Command::Verify);
  r["input"] = input["input"];
  for (const char* key : {"lambda", "method", "separable", "entangled", "separable_spec"}) {
    if (input.contains(key)) r[key] = input[key];
  }
  r["checks"] = checks_json(verify(rho, dec), cfg.tol.value_or(kDefaultCheckTol));
  return {r, r["checks"]["ok"] ? kExitOk : kExitNumerical};
}

Outcome do_selftest() {
  Json r = header(Command::Selftest);
  Json results = Json::array();
  bool all = true;
  for (const auto& t : run_selftest()) {
    all = all && t.passed;
    results.push_back({{"name", t.name}, {"passed", t.passed}, {"detail", t.detail}});
  }
  r["results"] = std::move(results);
  r["passed"] = all;
  return {std::move(r), all ? kExitOk : kExitNumerical};
}

void write_text(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    if (j.contains("re") && j.contains("dims")) {
      out << prefix << ": " << j["re"].size() << "x" << j["re"].size() << " matrix\n";
      return;
    }
    for (const auto& [key, value] : j.items()) {
      write_text(value, prefix.empty() ? key : prefix + "." + key, out);
    }
  } else if (j.is_array() && !j.empty() && j.front().is_object()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      write_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
    }
  } else {
    out << prefix << ": " << j.dump() << "\n";
  }
}

}  // namespace

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::NoConvergence:
    case Errc::InvariantViolation:
    case Errc::BranchInfeasible:
    case Errc::InfeasiblePoint:
    case Errc::NoDualCertificate:
      return kExitNumerical;
    default:
      return kExitValidation;
  }
}

int run(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    Outcome o;
    if (cfg.command == Command::Selftest) {
      o = do_selftest();
    } else {
      const Json input = read_json(cfg, in);
      switch (cfg.command) {
        case Command::Decompose: o = do_decompose(cfg, input); break;
        case Command::Separability: o = do_separability(input); break;
        case Command::Concurrence: o = do_concurrence(input); break;
        case Command::Oracle: o = do_oracle(cfg, input); break;
        case Command::Verify: o = do_verify(cfg, input); break;
        case Command::Selftest: break;
      }
    }
    if (cfg.format == Format::Json) {
      out << o.report.dump(2) << "\n";
    } else {
      write_text(o.report, "", out);
    }
    if (o.code != kExitOk) err << "lsd: " << command_name(cfg.command) << ": checks failed\n";
    return o.code;
  } catch (const Error& e) {
    err << "lsd: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const Json::exception& e) {
    err << "lsd: ParseError: " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace lsd
