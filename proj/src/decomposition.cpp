// SPDX-License-Identifier: Apache-2.0
#include "lsd/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lsd/error.hpp"
#include "lsd/wootters.hpp"

namespace lsd {

namespace {

constexpr double kZeroLambda = 1e-14;
constexpr double kConcurrenceTol = 1e-12;
constexpr double kWeightTol = 1e-12;
constexpr double kReconstructionTol = 1e-10;
constexpr double kEntangledPsdTol = 1e-9;
constexpr double kRankTol = 1e-8;

ComplexMat hermitian_part(const ComplexMat& a) { return 0.5 * (a + a.adjoint()); }

DensityMatrix normalized_state(const ComplexMat& m, const std::vector<std::size_t>& dims) {
  ComplexMat h = hermitian_part(m);
  h *= 1.0 / h.trace().real();
  return DensityMatrix(std::move(h), dims);
}

LSDecomposition assemble(const DensityMatrix& rho, double lambda, DensityMatrix sep,
                         ComplexMat entangled, std::string method,
                         std::optional<StateSpec> spec) {
  const ComplexMat residual = rho.mat() - lambda * sep.mat() - entangled;
  std::optional<DensityMatrix> normalized;
  const double weight = entangled.trace().real();
  if (weight > kZeroLambda) normalized = normalized_state(entangled, rho.dims());
  return LSDecomposition{lambda,
                         std::move(sep),
                         std::move(entangled),
                         std::move(normalized),
                         residual.frobenius_norm(),
                         std::move(method),
                         std::move(spec)};
}

LSDecomposition separable_input(const DensityMatrix& rho, std::optional<StateSpec> spec,
                                const std::string& family) {
  return assemble(rho, 1.0, rho, ComplexMat(rho.dim(), rho.dim()), family + "/separable-input",
                  std::move(spec));
}

template <std::size_t N>
std::array<double, N> clean(std::array<double, N> p) {
  for (auto& x : p) x = std::clamp(x, 0.0, 1.0);
  const double sum = std::accumulate(p.begin(), p.end(), 0.0);
  for (auto& x : p) x /= sum;
  return p;
}

template <std::size_t N>
bool in_unit_interval(const std::array<double, N>& p) {
  return std::all_of(p.begin(), p.end(),
                     [](double x) { return x >= -kWeightTol && x <= 1.0 + kWeightTol; });
}

template <std::size_t N>
ComplexMat mixture(const std::array<double, N>& p, const std::array<CVec, N>& basis) {
  ComplexMat out(basis[0].size(), basis[0].size());
  for (std::size_t i = 0; i < N; ++i) {
    if (p[i] != 0.0) out += p[i] * ComplexMat::projector(basis[i]);
  }
  return out;
}

/// Separable weights when the pure entangled part (1 - lambda)|b_k><b_k| is
/// removed from a mixture: p'_j = p_j / lambda, p'_k = (p_k - (1 - lambda)) / lambda.
template <std::size_t N>
std::array<double, N> rank_one_weights(const std::array<double, N>& p, std::size_t k,
                                       double lambda) {
  std::array<double, N> out{};
  if (lambda <= kZeroLambda) {
    out.fill(1.0 / static_cast<double>(N));
    return out;
  }
  for (std::size_t j = 0; j < N; ++j) out[j] = p[j] / lambda;
  out[k] = (p[k] - (1.0 - lambda)) / lambda;
  return out;
}

template <std::size_t N>
LSDecomposition rank_one_mixture(const DensityMatrix& rho, const std::array<CVec, N>& basis,
                                 std::size_t k, double lambda,
                                 const std::array<double, N>& weights, std::string method,
                                 StateSpec spec) {
  DensityMatrix sep = normalized_state(mixture(weights, basis), rho.dims());
  ComplexMat entangled = (1.0 - lambda) * ComplexMat::projector(basis[k]);
  return assemble(rho, lambda, std::move(sep), std::move(entangled), std::move(method),
                  std::move(spec));
}

bool decisive_dims(const std::vector<std::size_t>& dims) {
  if (dims.size() != 2) return false;
  const auto a = dims[0];
  const auto b = dims[1];
  return a == 1 || b == 1 || (a == 2 && (b == 2 || b == 3)) || (a == 3 && b == 2);
}

SeparabilityVerdict certify(const DensityMatrix& sep, const std::optional<StateSpec>& spec) {
  if (decisive_dims(sep.dims())) return ppt_check(sep);
  if (spec && !std::holds_alternative<RawSpec>(*spec)) {
    const DensityMatrix rebuilt = build(*spec);
    if (rebuilt.dims() == sep.dims() && distance(rebuilt.mat(), sep.mat()) <= 1e-9) {
      return family_region(*spec);
    }
  }
  if (sep.is_bipartite()) return ppt_check(sep);
  return {SeparabilityStatus::PptInconclusive, 0.0, "no-certificate"};
}

struct Bd23Candidate {
  double lambda;
  std::array<double, 6> weights;
  std::size_t k;
};

}  // namespace

LSDecomposition lsd_bd22(const std::array<double, 4>& raw) {
  const auto p = normalized_probabilities(raw);
  const DensityMatrix rho = make_bd22(p);
  if (bd22_region(p).status == SeparabilityStatus::Separable) {
    return separable_input(rho, Bd22Spec{p}, "bd22");
  }
  const auto k = static_cast<std::size_t>(std::max_element(p.begin(), p.end()) - p.begin());
  const double lambda = 2.0 * (1.0 - p[k]);
  const auto w = clean(rank_one_weights(p, k, lambda));
  return rank_one_mixture(rho, bell_basis_22(), k, lambda, w, "bd22", Bd22Spec{w});
}

LSDecomposition lsd_icd(double theta, const std::array<double, 4>& raw) {
  const auto p = normalized_probabilities(raw);
  const auto region = icd_region(theta, p);
  const DensityMatrix rho = make_icd(theta, p);
  if (region.status == SeparabilityStatus::Separable) {
    return separable_input(rho, IcdSpec{theta, p}, "icd");
  }
  // (dominant, partner, other pair)
  constexpr std::array<std::array<std::size_t, 4>, 4> kPairs{
      {{0, 1, 2, 3}, {1, 0, 2, 3}, {2, 3, 0, 1}, {3, 2, 0, 1}}};
  double worst = 0.0;
  std::size_t pick = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& [k, m, a, b] = kPairs[i];
    const double excess = p[k] - p[m] - icd_bound(theta, p[a], p[b]);
    if (excess > worst) {
      worst = excess;
      pick = i;
    }
  }
  const auto& [k, m, a, b] = kPairs[pick];
  const double lambda =
      std::clamp(1.0 - (p[k] - p[m]) + icd_bound(theta, p[a], p[b]), 0.0, 1.0);
  const auto w = clean(rank_one_weights(p, k, lambda));
  return rank_one_mixture(rho, icd_basis(theta), k, lambda, w,
                          "icd/ppt" + std::to_string(k + 1), IcdSpec{theta, w});
}

LSDecomposition lsd_wootters(const DensityMatrix& rho) {
  if (rho.dims() != std::vector<std::size_t>{2, 2}) {
    throw Error(Errc::WrongDims, "lsd_wootters needs a 2x2 state");
  }
  if (concurrence(rho) <= kConcurrenceTol) return separable_input(rho, std::nullopt, "wootters");
  const WoottersData w = wootters_basis(rho);
  const double l1 = w.lambdas[0];
  const double c = w.concurrence;
  const double lambda = std::clamp(1.0 - c * w.weights[0] / l1, 0.0, 1.0);
  ComplexMat entangled = (c / l1) * ComplexMat::projector(w.x[0]);
  if (lambda <= kZeroLambda) {
    return assemble(rho, 0.0, DensityMatrix::maximally_mixed({2, 2}), std::move(entangled),
                    "wootters", std::nullopt);
  }
  ComplexMat sep = ((w.lambdas[1] + w.lambdas[2] + w.lambdas[3]) / l1) *
                   ComplexMat::projector(w.x[0]);
  for (std::size_t i = 1; i < 4; ++i) sep += ComplexMat::projector(w.x[i]);
  return assemble(rho, lambda, normalized_state(sep, {2, 2}), std::move(entangled), "wootters",
                  std::nullopt);
}

LSDecomposition lsd_bd23(const std::array<double, 6>& raw) {
  const auto p = normalized_probabilities(raw);
  const DensityMatrix rho = make_bd23(p);
  if (bd23_region(p).status == SeparabilityStatus::Separable) {
    return separable_input(rho, Bd23Spec{p}, "bd23");
  }
  std::optional<Bd23Candidate> best;
  for (std::size_t pair = 0; pair < 3; ++pair) {
    const std::size_t i = 2 * pair;
    const std::size_t k = p[i] >= p[i + 1] ? i : i + 1;
    const std::size_t m = k == i ? i + 1 : i;
    const std::size_t o1 = 2 * ((pair + 1) % 3);
    const std::size_t o2 = 2 * ((pair + 2) % 3);
    const double root = std::sqrt((p[o1] + p[o1 + 1]) * (p[o2] + p[o2 + 1]));
    if (p[k] - p[m] <= root) continue;
    const double lambda = std::clamp(1.0 - (p[k] - p[m]) + root, 0.0, 1.0);
    const auto w = rank_one_weights(p, k, lambda);
    if (!in_unit_interval(w)) continue;
    const auto cw = clean(w);
    if (bd23_region(cw).status != SeparabilityStatus::Separable) continue;
    if (!best || lambda > best->lambda) best = Bd23Candidate{lambda, cw, k};
  }
  if (!best) {
    throw Error(Errc::BranchInfeasible,
                "no rank-one removal leaves a separable Bell-diagonal remainder");
  }
  return rank_one_mixture(rho, bell_basis_23(), best->k, best->lambda, best->weights,
                          "bd23/rank1-pair" + std::to_string(best->k / 2 + 1),
                          Bd23Spec{best->weights});
}

LSDecomposition lsd_bd23_rank3(const std::array<double, 6>& raw, Bd23Branch branch) {
  const auto p = normalized_probabilities(raw);
  const auto region = bd23_region(p);
  if (region.status == SeparabilityStatus::Separable) {
    throw Error(Errc::BranchInfeasible, "input is separable; no entangled remainder");
  }
  // Labels are used as given; no reordering.
  const auto& q = p;

  // Pinned weights keep q'_j = q_j / Lambda; the two free ones absorb the rest.
  std::array<double, 6> qs{};
  std::array<std::size_t, 2> free{};
  double big = 0.0;
  if (branch == Bd23Branch::A) {
    const double c = q[4] + q[5];
    big = 1.0 - (q[1] - q[0]) - (q[2] + q[3]) - c / 4.0;
    qs = {q[0], q[0] - c / 2.0, c / 4.0 - q[3], q[3], q[4], q[5]};
    free = {1, 2};
  } else {
    const double b = q[2] + q[3];
    big = 1.0 - (q[1] - q[0]) - (q[4] + q[5]) - b / 4.0;
    qs = {q[0], q[0] - b / 2.0, q[2], q[3], b / 4.0 - q[5], q[5]};
    free = {1, 4};
  }
  const char* name = branch == Bd23Branch::A ? "A" : "B";
  if (!(big > kZeroLambda && big <= 1.0 + kWeightTol)) {
    throw Error(Errc::BranchInfeasible, std::string("branch ") + name + ": Lambda = " +
                                            std::to_string(big) + " outside (0, 1]");
  }
  std::array<double, 6> w{};
  for (std::size_t j = 0; j < 6; ++j) w[j] = qs[j] / big;
  if (!in_unit_interval(w)) {
    throw Error(Errc::BranchInfeasible,
                std::string("branch ") + name + ": a separable weight leaves [0, 1]");
  }
  const auto cw = clean(w);
  if (bd23_region(cw).status != SeparabilityStatus::Separable) {
    throw Error(Errc::BranchInfeasible,
                std::string("branch ") + name + ": separable part violates the region");
  }
  const auto basis = bell_basis_23();
  ComplexMat entangled(6, 6);
  for (std::size_t f : free) {
    const double coeff = q[f] - qs[f];
    if (coeff < -kWeightTol) {
      throw Error(Errc::BranchInfeasible,
                  std::string("branch ") + name + ": entangled remainder is not PSD");
    }
    if (coeff > 0.0) entangled += coeff * ComplexMat::projector(basis[f]);
  }
  const DensityMatrix rho = make_bd23(p);
  const double lambda = std::min(big, 1.0);
  return assemble(rho, lambda, normalized_state(mixture(cw, basis), {2, 3}),
                  std::move(entangled), std::string("bd23/rank3-") + name, Bd23Spec{cw});
}

LSDecomposition lsd_werner(std::size_t d, double f) {
  const DensityMatrix rho = make_werner(d, f);
  if (f >= 0.0) return separable_input(rho, WernerSpec{d, f}, "werner");
  const double lambda = 1.0 + f;
  const double dd = static_cast<double>(d);
  ComplexMat entangled = (-f / (dd * dd - dd)) * (ComplexMat::identity(d * d) - flip_operator(d));
  return assemble(rho, lambda, make_werner(d, 0.0), std::move(entangled), "werner",
                  WernerSpec{d, 0.0});
}

LSDecomposition lsd_isotropic(std::size_t d, double fidelity) {
  const DensityMatrix rho = make_isotropic(d, fidelity);
  const double dd = static_cast<double>(d);
  if (fidelity <= 1.0 / dd) return separable_input(rho, IsotropicSpec{d, fidelity}, "isotropic");
  const double lambda = dd * (1.0 - fidelity) / (dd - 1.0);
  ComplexMat entangled = (1.0 - lambda) * ComplexMat::projector(maximally_entangled(d));
  return assemble(rho, lambda, make_isotropic(d, 1.0 / dd), std::move(entangled), "isotropic",
                  IsotropicSpec{d, 1.0 / dd});
}

LSDecomposition lsd_horodecki33(double alpha) {
  const DensityMatrix rho = make_horodecki33(alpha);
  if (alpha <= 3.0) return separable_input(rho, Horodecki33Spec{alpha}, "horodecki33");
  const double lambda = (5.0 - alpha) / 2.0;
  ComplexMat entangled = ((alpha - 3.0) / 2.0) * make_horodecki33(5.0).mat();
  return assemble(rho, lambda, make_horodecki33(3.0), std::move(entangled), "horodecki33",
                  Horodecki33Spec{3.0});
}

LSDecomposition lsd_multi_iso(std::size_t d, std::size_t parties, double s) {
  const DensityMatrix rho = make_multi_iso(d, parties, s);
  const double s0 = multi_iso_threshold(d, parties);
  if (s <= s0) return separable_input(rho, MultiIsoSpec{d, parties, s}, "multi_iso");
  const double lambda = (1.0 - s) / (1.0 - s0);
  ComplexMat entangled =
      (1.0 - lambda) * ComplexMat::projector(maximally_entangled(d, parties));
  return assemble(rho, lambda, make_multi_iso(d, parties, s0), std::move(entangled),
                  "multi_iso", MultiIsoSpec{d, parties, s0});
}

LSDecomposition decompose(const StateSpec& spec) {
  struct Visitor {
    LSDecomposition operator()(const Bd22Spec& s) const { return lsd_bd22(s.p); }
    LSDecomposition operator()(const IcdSpec& s) const { return lsd_icd(s.theta, s.p); }
    LSDecomposition operator()(const Bd23Spec& s) const { return lsd_bd23(s.p); }
    LSDecomposition operator()(const WernerSpec& s) const { return lsd_werner(s.d, s.f); }
    LSDecomposition operator()(const IsotropicSpec& s) const {
      return lsd_isotropic(s.d, s.fidelity);
    }
    LSDecomposition operator()(const Horodecki33Spec& s) const {
      return lsd_horodecki33(s.alpha);
    }
    LSDecomposition operator()(const MultiIsoSpec& s) const {
      return lsd_multi_iso(s.d, s.parties, s.s);
    }
    LSDecomposition operator()(const RawSpec& s) const {
      if (s.dims != std::vector<std::size_t>{2, 2}) {
        throw Error(Errc::UnsupportedRawDims, "raw input is decomposed only for dims [2,2]");
      }
      return lsd_wootters(build(s));
    }
  };
  LSDecomposition dec = std::visit(Visitor{}, spec);
  const DensityMatrix rho = build(spec);
  const VerificationReport report = verify(rho, dec);
  if (report.residual_norm > kReconstructionTol) {
    throw Error(Errc::InvariantViolation,
                "reconstruction error " + std::to_string(report.residual_norm));
  }
  if (!is_psd(dec.entangled_part, kEntangledPsdTol)) {
    throw Error(Errc::InvariantViolation, "entangled part is not PSD");
  }
  if (report.separable_verdict.status != SeparabilityStatus::Separable) {
    throw Error(Errc::InvariantViolation, "separable part not certified (" +
                                              report.separable_verdict.detail + ")");
  }
  return dec;
}

VerificationReport verify(const DensityMatrix& rho, const LSDecomposition& dec) {
  if (rho.dims() != dec.separable_part.dims() || dec.entangled_part.rows() != rho.dim() ||
      dec.entangled_part.cols() != rho.dim()) {
    throw Error(Errc::DimensionMismatch, "decomposition does not match the state's shape");
  }
  const ComplexMat residual = hermitian_part(rho.mat() - dec.lambda * dec.separable_part.mat());
  const auto ev = hermitian_eigenvalues(residual);
  const double trace = residual.trace().real();
  std::size_t rank = 0;
  if (trace > kZeroLambda) {
    rank = static_cast<std::size_t>(
        std::count_if(ev.begin(), ev.end(), [&](double x) { return x > kRankTol * trace; }));
  }
  std::optional<double> purity;
  const double et = dec.entangled_part.trace().real();
  if (et > kZeroLambda) {
    purity = (dec.entangled_part * dec.entangled_part).trace().real() / (et * et);
  }
  return VerificationReport{(residual - dec.entangled_part).frobenius_norm(),
                            certify(dec.separable_part, dec.separable_spec), ev.front(), rank,
                            purity};
}

}  // namespace lsd
