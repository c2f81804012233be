// SPDX-License-Identifier: Apache-2.0
#include "lsd/report.hpp"

#include <algorithm>
#include <set>

#include "lsd/error.hpp"

namespace lsd {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(Errc::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) parse_error(std::string("missing field '") + key + "'");
  return *it;
}

double real_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number()) parse_error(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    parse_error(std::string("field '") + key + "' must be a positive integer");
  }
  return v.get<std::size_t>();
}

template <std::size_t N>
std::array<double, N> probs_field(const Json& j) {
  const Json& v = field(j, "p");
  if (!v.is_array() || v.size() != N) {
    parse_error("field 'p' must be an array of " + std::to_string(N) + " numbers");
  }
  std::array<double, N> p{};
  for (std::size_t i = 0; i < N; ++i) {
    if (!v[i].is_number()) parse_error("field 'p' must contain numbers only");
    p[i] = v[i].get<double>();
  }
  return p;
}

std::vector<std::size_t> dims_of(const Json& v) {
  if (!v.is_array() || v.empty()) parse_error("field 'dims' must be a non-empty array");
  std::vector<std::size_t> dims;
  for (const auto& d : v) {
    if (!d.is_number_integer() || d.get<long long>() < 1) {
      parse_error("field 'dims' must contain positive integers");
    }
    dims.push_back(d.get<std::size_t>());
  }
  return dims;
}

void only_keys(const Json& j, std::initializer_list<const char*> allowed) {
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : j.items()) {
    if (!ok.contains(key)) parse_error("unknown field '" + key + "'");
  }
}

Json real_array(std::span<const double> v) { return Json(std::vector<double>(v.begin(), v.end())); }

void require(bool ok, const std::string& what) {
  if (!ok) parse_error("report: " + what);
}

void check_matrix(const Json& j, const std::string& name) {
  require(j.is_object(), name + " must be an object");
  try {
    matrix_from_json(j);
  } catch (const Error& e) {
    parse_error("report: " + name + ": " + e.what());
  }
}

void check_number(const Json& j, const char* key, const std::string& where) {
  require(j.contains(key) && j[key].is_number(), where + "." + key + " must be a number");
}

}  // namespace

StateSpec spec_from_json(const Json& j) {
  if (!j.is_object()) parse_error("state spec must be a JSON object");
  const Json& fam = field(j, "family");
  if (!fam.is_string()) parse_error("field 'family' must be a string");
  const std::string family = fam.get<std::string>();
  if (family == "bd22") {
    only_keys(j, {"family", "p"});
    return Bd22Spec{probs_field<4>(j)};
  }
  if (family == "icd") {
    only_keys(j, {"family", "theta", "p"});
    return IcdSpec{real_field(j, "theta"), probs_field<4>(j)};
  }
  if (family == "bd23") {
    only_keys(j, {"family", "p"});
    return Bd23Spec{probs_field<6>(j)};
  }
  if (family == "werner") {
    only_keys(j, {"family", "d", "f"});
    return WernerSpec{size_field(j, "d"), real_field(j, "f")};
  }
  if (family == "isotropic") {
    only_keys(j, {"family", "d", "F"});
    return IsotropicSpec{size_field(j, "d"), real_field(j, "F")};
  }
  if (family == "horodecki33") {
    only_keys(j, {"family", "alpha"});
    return Horodecki33Spec{real_field(j, "alpha")};
  }
  if (family == "multi_iso") {
    only_keys(j, {"family", "d", "n", "s"});
    return MultiIsoSpec{size_field(j, "d"), size_field(j, "n"), real_field(j, "s")};
  }
  if (family == "raw") {
    only_keys(j, {"family", "dims", "re", "im"});
    std::vector<std::size_t> dims;
    ComplexMat m = matrix_from_json(j, &dims);
    return RawSpec{std::move(dims), std::move(m)};
  }
  throw Error(Errc::UnsupportedSpec, "unknown family '" + family + "'");
}

Json spec_to_json(const StateSpec& spec) {
  struct Visitor {
    Json operator()(const Bd22Spec& s) const {
      return {{"family", "bd22"}, {"p", real_array(s.p)}};
    }
    Json operator()(const IcdSpec& s) const {
      return {{"family", "icd"}, {"theta", s.theta}, {"p", real_array(s.p)}};
    }
    Json operator()(const Bd23Spec& s) const {
      return {{"family", "bd23"}, {"p", real_array(s.p)}};
    }
    Json operator()(const WernerSpec& s) const {
      return {{"family", "werner"}, {"d", s.d}, {"f", s.f}};
    }
    Json operator()(const IsotropicSpec& s) const {
      return {{"family", "isotropic"}, {"d", s.d}, {"F", s.fidelity}};
    }
    Json operator()(const Horodecki33Spec& s) const {
      return {{"family", "horodecki33"}, {"alpha", s.alpha}};
    }
    Json operator()(const MultiIsoSpec& s) const {
      return {{"family", "multi_iso"}, {"d", s.d}, {"n", s.parties}, {"s", s.s}};
    }
    Json operator()(const RawSpec& s) const {
      Json j = matrix_to_json(s.matrix, s.dims);
      j["family"] = "raw";
      return j;
    }
  };
  return std::visit(Visitor{}, spec);
}

Json matrix_to_json(const ComplexMat& m, const std::vector<std::size_t>& dims) {
  Json re = Json::array();
  Json im = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<double> row_re(m.cols());
    std::vector<double> row_im(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      row_re[c] = m(r, c).real();
      row_im[c] = m(r, c).imag();
    }
    re.push_back(std::move(row_re));
    im.push_back(std::move(row_im));
  }
  return {{"dims", dims}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMat matrix_from_json(const Json& j, std::vector<std::size_t>* dims_out) {
  if (!j.is_object()) parse_error("matrix must be an object");
  const auto dims = dims_of(field(j, "dims"));
  std::size_t n = 1;
  for (std::size_t d : dims) {
    n *= d;
    if (n > kMaxDimension) parse_error("matrix dimension exceeds " + std::to_string(kMaxDimension));
  }
  auto read = [&](const Json& part, const char* key, std::vector<cplx>& out, bool imag) {
    if (!part.is_array() || part.size() != n) {
      parse_error(std::string("field '") + key + "' must have " + std::to_string(n) + " rows");
    }
    for (std::size_t r = 0; r < n; ++r) {
      const Json& row = part[r];
      if (!row.is_array() || row.size() != n) {
        parse_error(std::string("field '") + key + "' must have " + std::to_string(n) +
                    " columns");
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (!row[c].is_number()) parse_error(std::string("field '") + key + "' must be numeric");
        const double v = row[c].get<double>();
        out[r * n + c] += imag ? cplx(0.0, v) : cplx(v, 0.0);
      }
    }
  };
  std::vector<cplx> entries(n * n);
  read(field(j, "re"), "re", entries, false);
  if (j.contains("im")) read(j["im"], "im", entries, true);
  if (dims_out) *dims_out = dims;
  return ComplexMat(n, n, std::move(entries));
}

Json vector_to_json(const CVec& v) {
  std::vector<double> re(v.size());
  std::vector<double> im(v.size());
  std::transform(v.begin(), v.end(), re.begin(), [](cplx z) { return z.real(); });
  std::transform(v.begin(), v.end(), im.begin(), [](cplx z) { return z.imag(); });
  return {{"re", re}, {"im", im}};
}

LSDecomposition decomposition_from_report(const Json& report) {
  if (!report.is_object()) parse_error("report must be a JSON object");
  const double lambda = real_field(report, "lambda");
  std::vector<std::size_t> dims;
  ComplexMat sep = matrix_from_json(field(report, "separable"), &dims);
  const Json& ent = field(report, "entangled");
  ComplexMat ent_mat = ent.is_null() ? ComplexMat(sep.rows(), sep.cols()) : matrix_from_json(ent);
  if (ent_mat.rows() != sep.rows()) parse_error("separable and entangled shapes differ");
  std::string method;
  if (report.contains("method") && report["method"].is_string()) method = report["method"];
  LSDecomposition dec{lambda, DensityMatrix(std::move(sep), dims), ent_mat, std::nullopt, 0.0,
                      method, std::nullopt};
  if (report.contains("separable_spec") && !report["separable_spec"].is_null()) {
    dec.separable_spec = spec_from_json(report["separable_spec"]);
  }
  return dec;
}

void validate_report(const Json& r) {
  require(r.is_object(), "must be an object");
  require(r.contains("schema") && r["schema"] == kReportSchema,
          "schema must be \"" + std::string(kReportSchema) + "\"");
  require(r.contains("command") && r["command"].is_string(), "command must be a string");
  const std::string command = r["command"];
  auto input = [&] {
    require(r.contains("input"), "input is required");
    try {
      spec_from_json(r["input"]);
    } catch (const Error& e) {
      parse_error(std::string("report: input: ") + e.what());
    }
  };
  if (command == "decompose" || command == "verify") {
    input();
    check_number(r, "lambda", "report");
    require(r.contains("separable"), "separable is required");
    check_matrix(r["separable"], "separable");
    require(r.contains("entangled"), "entangled is required");
    if (!r["entangled"].is_null()) check_matrix(r["entangled"], "entangled");
    require(r.contains("checks") && r["checks"].is_object(), "checks must be an object");
    const Json& c = r["checks"];
    check_number(c, "reconstruction_error", "checks");
    check_number(c, "residual_min_eig", "checks");
    require(c.contains("residual_rank") && c["residual_rank"].is_number_unsigned(),
            "checks.residual_rank must be a non-negative integer");
    require(c.contains("separable_status") && c["separable_status"].is_string(),
            "checks.separable_status must be a string");
    require(c.contains("residual_purity") &&
                (c["residual_purity"].is_null() || c["residual_purity"].is_number()),
            "checks.residual_purity must be a number or null");
    require(c.contains("ok") && c["ok"].is_boolean(), "checks.ok must be a boolean");
    if (r.contains("concurrence")) {
      require(r["concurrence"].is_object(), "concurrence must be an object");
      check_number(r["concurrence"], "value", "concurrence");
    }
    if (r.contains("oracle")) {
      require(r["oracle"].is_object(), "oracle must be an object");
      for (const char* key : {"lambda_numeric", "gap", "slackness"}) {
        check_number(r["oracle"], key, "oracle");
      }
    }
  } else if (command == "separability") {
    input();
    require(r.contains("separability") && r["separability"].is_object(),
            "separability must be an object");
    require(r["separability"].contains("status") && r["separability"]["status"].is_string(),
            "separability.status must be a string");
    check_number(r["separability"], "margin", "separability");
  } else if (command == "concurrence") {
    input();
    require(r.contains("concurrence") && r["concurrence"].is_object(),
            "concurrence must be an object");
    check_number(r["concurrence"], "value", "concurrence");
    require(r["concurrence"].contains("lambdas") && r["concurrence"]["lambdas"].is_array() &&
                r["concurrence"]["lambdas"].size() == 4,
            "concurrence.lambdas must hold four numbers");
  } else if (command == "oracle") {
    input();
    require(r.contains("oracle") && r["oracle"].is_object(), "oracle must be an object");
    for (const char* key :
         {"lambda_closed", "lambda_numeric", "difference", "upper_bound", "gap", "slackness"}) {
      require(r["oracle"].contains(key) &&
                  (r["oracle"][key].is_number() || r["oracle"][key].is_null()),
              std::string("oracle.") + key + " must be a number");
    }
    require(r["oracle"].contains("agree") && r["oracle"]["agree"].is_boolean(),
            "oracle.agree must be a boolean");
  } else if (command == "selftest") {
    require(r.contains("results") && r["results"].is_array(), "results must be an array");
    for (const auto& item : r["results"]) {
      require(item.is_object() && item.contains("name") && item.contains("passed") &&
                  item["passed"].is_boolean(),
              "each result needs name and passed");
    }
    require(r.contains("passed") && r["passed"].is_boolean(), "passed must be a boolean");
  } else {
    parse_error("report: unknown command '" + command + "'");
  }
}

}  // namespace lsd
