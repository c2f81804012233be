// SPDX-License-Identifier: Apache-2.0
#include "lsd/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <random>

#include "lsd/error.hpp"
#include "lsd/wootters.hpp"

namespace lsd {

namespace {

constexpr double kSupportTol = 1e-12;
constexpr double kBisectSlack = 1e-14;
constexpr double kKernelTol = 1e-9;
constexpr double kFeasibilityTol = 1e-9;

void require_same_shape(const ComplexMat& a, const ComplexMat& b) {
  if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(Errc::DimensionMismatch, "operators have different shapes");
  }
}

ComplexMat hermitian_part(const ComplexMat& a) { return 0.5 * (a + a.adjoint()); }

/// rho^-1/2 on the support of rho, and the projector onto its kernel.
struct Whitening {
  ComplexMat inv_sqrt;
  ComplexMat kernel;

  explicit Whitening(const ComplexMat& rho) {
    const auto eig = hermitian_eig(rho);
    const std::size_t n = rho.rows();
    const double cut = kSupportTol * std::max(eig.eigenvalues.back(), 0.0);
    inv_sqrt = ComplexMat(n, n);
    kernel = ComplexMat(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      const CVec v = eig.eigenvectors.column(k);
      const double mu = eig.eigenvalues[k];
      if (mu > cut) {
        inv_sqrt += (1.0 / std::sqrt(mu)) * ComplexMat::projector(v);
      } else {
        kernel += ComplexMat::projector(v);
      }
    }
  }

  double lambda_max(const ComplexMat& sigma) const {
    const double tr = sigma.trace().real();
    if (tr <= 0.0) return 0.0;
    if ((kernel * sigma).trace().real() > kSupportTol * tr) return 0.0;
    const double mu = hermitian_eigenvalues(hermitian_part(inv_sqrt * sigma * inv_sqrt)).back();
    return mu > 0.0 ? 1.0 / mu : std::numeric_limits<double>::infinity();
  }
};

/// Real symmetric solve by Gaussian elimination with partial pivoting.
std::vector<double> solve(std::vector<double> a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
    }
    for (std::size_t k = 0; k < n; ++k) std::swap(a[c * n + k], a[piv * n + k]);
    std::swap(b[c], b[piv]);
    const double d = a[c * n + c];
    if (d == 0.0) continue;
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r * n + c] / d;
      for (std::size_t k = c; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
      b[r] -= f * b[c];
    }
  }
  std::vector<double> x(n, 0.0);
  for (std::size_t c = n; c-- > 0;) {
    double s = b[c];
    for (std::size_t k = c + 1; k < n; ++k) s -= a[c * n + k] * x[k];
    x[c] = a[c * n + c] != 0.0 ? s / a[c * n + c] : 0.0;
  }
  return x;
}

/// G(y) = base + sum_k y_k terms[k] - shift * y_last * I when shifted.
struct Lmi {
  ComplexMat base;
  std::vector<ComplexMat> terms;
};

/// maximize b^T y subject to every LMI strictly positive, by a log-barrier
/// path-following method with damped Newton steps.
class Barrier {
 public:
  Barrier(std::vector<Lmi> lmis, std::vector<double> objective)
      : lmis_(std::move(lmis)), b_(std::move(objective)) {
    for (const auto& l : lmis_) degree_ += static_cast<double>(l.base.rows());
  }

  ComplexMat value(std::size_t i, const std::vector<double>& y) const {
    ComplexMat g = lmis_[i].base;
    for (std::size_t k = 0; k < y.size(); ++k) g += y[k] * lmis_[i].terms[k];
    return hermitian_part(g);
  }

  /// Inverses of every G(y); empty when some G(y) is not positive definite.
  std::optional<std::vector<ComplexMat>> inverses(const std::vector<double>& y,
                                                  double* log_det) const {
    std::vector<ComplexMat> inv;
    double ld = 0.0;
    for (std::size_t i = 0; i < lmis_.size(); ++i) {
      const auto eig = hermitian_eig(value(i, y));
      if (!(eig.eigenvalues.front() > 0.0)) return std::nullopt;
      const std::size_t m = eig.eigenvalues.size();
      ComplexMat g(m, m);
      for (std::size_t k = 0; k < m; ++k) {
        g += (1.0 / eig.eigenvalues[k]) * ComplexMat::projector(eig.eigenvectors.column(k));
        ld += std::log(eig.eigenvalues[k]);
      }
      inv.push_back(std::move(g));
    }
    if (log_det) *log_det = ld;
    return inv;
  }

  double merit(const std::vector<double>& y, double t) const {
    double ld = 0.0;
    if (!inverses(y, &ld)) return std::numeric_limits<double>::infinity();
    return -t * std::inner_product(b_.begin(), b_.end(), y.begin(), 0.0) - ld;
  }

  /// Central path from a strictly feasible y. `stop` may end the run early.
  /// Returns the duality-gap bound degree / t at the final point.
  template <class Stop>
  double run(std::vector<double>& y, double tol, std::size_t& iterations, std::size_t budget,
             Stop stop) const {
    const std::size_t n = y.size();
    double t = 1.0;
    while (iterations < budget) {
      for (int newton = 0; newton < 100 && iterations < budget; ++newton, ++iterations) {
        const auto inv = inverses(y, nullptr);
        if (!inv) return std::numeric_limits<double>::infinity();
        std::vector<double> g(n);
        std::vector<double> h(n * n, 0.0);
        for (std::size_t k = 0; k < n; ++k) g[k] = -t * b_[k];
        for (std::size_t i = 0; i < lmis_.size(); ++i) {
          std::vector<ComplexMat> w;
          for (std::size_t k = 0; k < n; ++k) w.push_back((*inv)[i] * lmis_[i].terms[k]);
          for (std::size_t k = 0; k < n; ++k) {
            g[k] -= w[k].trace().real();
            for (std::size_t l = k; l < n; ++l) {
              double s = 0.0;
              for (std::size_t r = 0; r < w[k].rows(); ++r) {
                for (std::size_t c = 0; c < w[k].cols(); ++c) {
                  s += (w[k](r, c) * w[l](c, r)).real();
                }
              }
              h[k * n + l] += s;
              if (l != k) h[l * n + k] += s;
            }
          }
        }
        std::vector<double> neg(n);
        for (std::size_t k = 0; k < n; ++k) neg[k] = -g[k];
        const std::vector<double> dy = solve(h, neg);
        const double decrement = -std::inner_product(g.begin(), g.end(), dy.begin(), 0.0);
        if (!(decrement > 1e-18)) break;
        const double f0 = merit(y, t);
        double step = 1.0;
        std::vector<double> trial(n);
        for (; step > 1e-20; step *= 0.5) {
          for (std::size_t k = 0; k < n; ++k) trial[k] = y[k] + step * dy[k];
          if (merit(trial, t) <= f0 - 0.25 * step * decrement) break;
        }
        if (step <= 1e-20) break;
        y = trial;
        if (stop(y)) return degree_ / t;
        if (decrement < 1e-12) break;
      }
      if (degree_ / t <= tol) break;
      t *= 8.0;
    }
    return degree_ / t;
  }

 private:
  std::vector<Lmi> lmis_;
  std::vector<double> b_;
  double degree_ = 0.0;
};

Lmi scalar_lmi(double base, std::vector<double> coeffs) {
  Lmi l{ComplexMat(1, 1), {}};
  l.base(0, 0) = base;
  for (double c : coeffs) {
    ComplexMat m(1, 1);
    m(0, 0) = c;
    l.terms.push_back(std::move(m));
  }
  return l;
}

/// maximize sum(tau) s.t. tau >= 0, rho - sum tau_j D_j >= 0 and
/// PT(sum tau_j D_j) >= 0, compressed onto the support of rho. The optimum
/// equals the family's largest lambda.
struct MixtureRun {
  double best = 0.0;
  std::vector<double> weights;
  double upper_bound = 0.0;
  std::size_t iterations = 0;
};

MixtureRun run_mixture(const DensityMatrix& rho, const Whitening& white,
                       const std::vector<ComplexMat>& comps,
                       const std::vector<ComplexMat>& comps_pt, std::vector<double> start,
                       const BsaOptions& opt) {
  const std::size_t n = comps.size();
  MixtureRun run;
  run.weights.assign(n, 0.0);

  // Components that leave the support of rho must carry zero weight.
  std::vector<std::size_t> live;
  const double tr_rho = rho.mat().trace().real();
  for (std::size_t j = 0; j < n; ++j) {
    if ((white.kernel * comps[j]).trace().real() <= kSupportTol * tr_rho) live.push_back(j);
  }
  if (live.empty()) return run;
  const auto eig = hermitian_eig(rho.mat());
  std::vector<std::size_t> keep;
  const double cut = kSupportTol * std::max(eig.eigenvalues.back(), 0.0);
  for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
    if (eig.eigenvalues[k] > cut) keep.push_back(k);
  }
  ComplexMat q(rho.dim(), keep.size());
  for (std::size_t c = 0; c < keep.size(); ++c) q.set_column(c, eig.eigenvectors.column(keep[c]));
  const ComplexMat qa = q.adjoint();

  const std::size_t m = live.size();
  const double scale = 1.0 / static_cast<double>(m);
  auto build_lmis = [&](bool shifted) {
    const std::size_t vars = m + (shifted ? 1 : 0);
    std::vector<Lmi> lmis;
    Lmi gap{qa * rho.mat() * q, {}};
    Lmi ppt{ComplexMat(rho.dim(), rho.dim()), {}};
    for (std::size_t k = 0; k < m; ++k) {
      gap.terms.push_back(-1.0 * (qa * comps[live[k]] * q));
      ppt.terms.push_back(comps_pt[live[k]]);
    }
    if (shifted) {
      gap.terms.push_back(-1.0 * ComplexMat::identity(keep.size()));
      ppt.terms.push_back(-scale * ComplexMat::identity(rho.dim()));
    }
    lmis.push_back(std::move(gap));
    lmis.push_back(std::move(ppt));
    for (std::size_t k = 0; k < m; ++k) {
      std::vector<double> coeff(vars, 0.0);
      coeff[k] = 1.0;
      if (shifted) coeff[m] = -scale;
      lmis.push_back(scalar_lmi(0.0, std::move(coeff)));
    }
    return lmis;
  };

  std::vector<double> y(m);
  for (std::size_t k = 0; k < m; ++k) y[k] = start[live[k]] * 1e-3;

  // Phase one: push the common slack s above zero.
  {
    double s = std::numeric_limits<double>::infinity();
    Barrier probe(build_lmis(false), std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < 2 + m; ++i) {
      const double lo = hermitian_eigenvalues(probe.value(i, y)).front();
      s = std::min(s, i == 0 ? lo : lo / scale);
    }
    if (!(s > 0.0)) {
      std::vector<double> ys = y;
      ys.push_back(s - 1.0);
      std::vector<double> obj(m + 1, 0.0);
      obj[m] = 1.0;
      const Barrier phase1(build_lmis(true), obj);
      phase1.run(ys, 1e-14, run.iterations, opt.max_iterations,
                 [&](const std::vector<double>& v) { return v[m] > 0.0; });
      if (!(ys[m] > 0.0)) {
        // No interior point: only the PPT vertices are evaluated.
        run.upper_bound = std::numeric_limits<double>::infinity();
        for (std::size_t j : live) {
          if (min_eigenvalue(comps_pt[j]) < 0.0) continue;
          const double lam = white.lambda_max(comps[j]);
          if (lam > run.best) {
            run.best = lam;
            std::fill(run.weights.begin(), run.weights.end(), 0.0);
            run.weights[j] = 1.0;
          }
        }
        return run;
      }
      y.assign(ys.begin(), ys.begin() + static_cast<std::ptrdiff_t>(m));
    }
  }

  const Barrier phase2(build_lmis(false), std::vector<double>(m, 1.0));
  const double bound =
      phase2.run(y, 0.1 * opt.tol, run.iterations, run.iterations + opt.max_iterations,
                 [](const std::vector<double>&) { return false; });

  const double total = std::accumulate(y.begin(), y.end(), 0.0);
  if (total <= 0.0) return run;
  ComplexMat sigma(rho.dim(), rho.dim());
  for (std::size_t k = 0; k < m; ++k) {
    run.weights[live[k]] = y[k] / total;
    sigma += run.weights[live[k]] * comps[live[k]];
  }
  run.best = std::max(total, white.lambda_max(sigma));
  run.upper_bound = total + bound;
  return run;
}

BsaResult search_mixture(const DensityMatrix& rho, const SeparableFamily& family,
                         const BsaOptions& opt) {
  const Whitening white(rho.mat());
  std::vector<ComplexMat> comps;
  std::vector<ComplexMat> comps_pt;
  for (const auto& c : family.components) {
    require_same_shape(rho.mat(), c);
    comps.push_back(hermitian_part(c));
    comps_pt.push_back(hermitian_part(partial_transpose(c, family.dims[0], family.dims[1])));
  }
  const std::size_t n = comps.size();
  const double nn = static_cast<double>(n);
  if (n == 1) {
    const bool ppt = min_eigenvalue(comps_pt[0]) >= 0.0;
    const double lam = ppt ? white.lambda_max(comps[0]) : 0.0;
    return BsaResult{lam, DensityMatrix(comps[0], rho.dims()), {1.0}, 1, lam};
  }

  MixtureRun best = run_mixture(rho, white, comps, comps_pt, std::vector<double>(n, 1.0 / nn), opt);
  for (std::size_t r = 0; r < opt.restarts; ++r) {
    std::mt19937_64 rng(opt.seed + r + 1);
    std::uniform_real_distribution<double> jitter(0.5, 1.5);
    std::vector<double> start(n);
    for (auto& c : start) c = jitter(rng) / nn;
    MixtureRun run = run_mixture(rho, white, comps, comps_pt, std::move(start), opt);
    run.iterations += best.iterations;
    run.upper_bound = std::min(run.upper_bound, best.upper_bound);
    if (run.best > best.best) {
      best = std::move(run);
    } else {
      best.iterations = run.iterations;
      best.upper_bound = run.upper_bound;
    }
  }

  if (best.best <= 0.0) {
    return BsaResult{0.0, DensityMatrix::maximally_mixed(rho.dims()), best.weights,
                     best.iterations, std::max(best.upper_bound, 0.0)};
  }
  ComplexMat sigma(rho.dim(), rho.dim());
  for (std::size_t j = 0; j < n; ++j) sigma += best.weights[j] * comps[j];
  sigma = hermitian_part(sigma);
  sigma *= 1.0 / sigma.trace().real();
  return BsaResult{best.best, DensityMatrix(std::move(sigma), rho.dims()), best.weights,
                   best.iterations, std::max(best.upper_bound, best.best)};
}

BsaResult search_interval(const DensityMatrix& rho, const SeparableFamily& family,
                          const BsaOptions& opt) {
  const Whitening white(rho.mat());
  std::size_t evaluations = 0;
  auto f = [&](double t) {
    ++evaluations;
    const ComplexMat m = family.member(t);
    require_same_shape(rho.mat(), m);
    return white.lambda_max(m);
  };
  double best_t = family.lo;
  double best = f(family.lo);
  if (family.hi > family.lo) {
    const double fhi = f(family.hi);
    if (fhi > best) {
      best = fhi;
      best_t = family.hi;
    }
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = family.lo;
    double b = family.hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > opt.tol && evaluations < opt.max_iterations) {
      if (fc >= fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - inv_phi * (b - a);
        fc = f(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + inv_phi * (b - a);
        fd = f(d);
      }
    }
    for (auto [t, v] : {std::pair{c, fc}, std::pair{d, fd}}) {
      if (v > best) {
        best = v;
        best_t = t;
      }
    }
  }
  ComplexMat sigma = hermitian_part(family.member(best_t));
  sigma *= 1.0 / sigma.trace().real();
  return BsaResult{best, DensityMatrix(std::move(sigma), rho.dims()), {best_t}, evaluations,
                   best};
}

SeparableFamily interval(std::string name, std::vector<std::size_t> dims,
                         std::function<ComplexMat(double)> member, double lo, double hi) {
  SeparableFamily f;
  f.name = std::move(name);
  f.kind = SeparableFamily::Kind::Interval;
  f.dims = std::move(dims);
  f.member = std::move(member);
  f.lo = lo;
  f.hi = hi;
  return f;
}

template <std::size_t N>
SeparableFamily mixture(std::string name, std::vector<std::size_t> dims,
                        const std::array<CVec, N>& basis) {
  SeparableFamily f;
  f.name = std::move(name);
  f.kind = SeparableFamily::Kind::Mixture;
  f.dims = std::move(dims);
  for (const auto& v : basis) f.components.push_back(ComplexMat::projector(v));
  return f;
}

}  // namespace

double lambda_max_fixed(const ComplexMat& rho, const ComplexMat& sigma) {
  require_same_shape(rho, sigma);
  return Whitening(rho).lambda_max(sigma);
}

double lambda_max_fixed(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return lambda_max_fixed(rho.mat(), sigma.mat());
}

double lambda_max_bisect(const DensityMatrix& rho, const DensityMatrix& sigma, double tol) {
  require_same_shape(rho.mat(), sigma.mat());
  const double slack = kBisectSlack * std::max(1.0, rho.mat().frobenius_norm());
  auto feasible = [&](double lam) {
    return min_eigenvalue(hermitian_part(rho.mat() - lam * sigma.mat())) >= -slack;
  };
  double lo = 0.0;
  double hi = rho.mat().trace().real() / sigma.mat().trace().real();
  if (feasible(hi)) return hi;
  if (!feasible(0.0)) return 0.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? lo : hi) = mid;
  }
  return lo;
}

SeparableFamily separable_family_for(const StateSpec& spec) {
  struct Visitor {
    SeparableFamily operator()(const Bd22Spec&) const {
      return mixture("bd22-bell-mixtures", {2, 2}, bell_basis_22());
    }
    SeparableFamily operator()(const IcdSpec& s) const {
      make_icd(s.theta, s.p);
      return mixture("icd-mixtures", {2, 2}, icd_basis(s.theta));
    }
    SeparableFamily operator()(const Bd23Spec&) const {
      return mixture("bd23-bell-mixtures", {2, 3}, bell_basis_23());
    }
    SeparableFamily operator()(const WernerSpec& s) const {
      make_werner(s.d, s.f);
      const std::size_t d = s.d;
      return interval("werner-f", {d, d}, [d](double t) { return make_werner(d, t).mat(); },
                      0.0, 1.0);
    }
    SeparableFamily operator()(const IsotropicSpec& s) const {
      make_isotropic(s.d, s.fidelity);
      const std::size_t d = s.d;
      return interval("isotropic-F", {d, d},
                      [d](double t) { return make_isotropic(d, t).mat(); }, 0.0,
                      1.0 / static_cast<double>(d));
    }
    SeparableFamily operator()(const Horodecki33Spec& s) const {
      make_horodecki33(s.alpha);
      return interval("horodecki33-alpha", {3, 3},
                      [](double t) { return make_horodecki33(t).mat(); }, 2.0, 3.0);
    }
    SeparableFamily operator()(const MultiIsoSpec& s) const {
      make_multi_iso(s.d, s.parties, s.s);
      const std::size_t d = s.d;
      const std::size_t n = s.parties;
      return interval("multi_iso-s", std::vector<std::size_t>(n, d),
                      [d, n](double t) { return make_multi_iso(d, n, t).mat(); }, 0.0,
                      multi_iso_threshold(d, n));
    }
    SeparableFamily operator()(const RawSpec& s) const {
      if (s.dims != std::vector<std::size_t>{2, 2}) {
        throw Error(Errc::UnsupportedRawDims, "raw families are available for dims [2,2] only");
      }
      const WoottersData w = wootters_basis(build(s));
      SeparableFamily f;
      f.name = "spin-flip-basis-mixtures";
      f.kind = SeparableFamily::Kind::Mixture;
      f.dims = {2, 2};
      for (const auto& x : w.x) {
        const double nx = norm(x);
        if (nx > kSupportTol) f.components.push_back((1.0 / (nx * nx)) * ComplexMat::projector(x));
      }
      return f;
    }
  };
  return std::visit(Visitor{}, spec);
}

BsaResult bsa_search(const DensityMatrix& rho, const SeparableFamily& family,
                     const BsaOptions& options) {
  if (family.dims != rho.dims()) {
    throw Error(Errc::DimensionMismatch, "family and state have different subsystem dims");
  }
  if (family.kind == SeparableFamily::Kind::Interval) {
    if (!family.member || !(family.lo <= family.hi)) {
      throw Error(Errc::EmptyFamily, "interval family '" + family.name + "' is empty");
    }
    return search_interval(rho, family, options);
  }
  if (family.components.empty()) {
    throw Error(Errc::EmptyFamily, "mixture family '" + family.name + "' has no components");
  }
  if (family.dims.size() != 2) {
    throw Error(Errc::NotBipartite, "mixture families need a bipartite PPT constraint");
  }
  return search_mixture(rho, family, options);
}

SdpProblem bsa_as_sdp(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_shape(rho.mat(), sigma.mat());
  return SdpProblem{{-1.0}, rho.mat(), {-1.0 * sigma.mat()}};
}

ComplexMat lmi_value(const SdpProblem& problem, const std::vector<double>& x) {
  if (x.size() != problem.fi.size() || problem.c.size() != problem.fi.size()) {
    throw Error(Errc::DimensionMismatch, "x, c and F_i must have the same length");
  }
  ComplexMat f = problem.f0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    require_same_shape(f, problem.fi[i]);
    f += x[i] * problem.fi[i];
  }
  return f;
}

DualityReport duality_check(const SdpProblem& problem, const std::vector<double>& x_hat) {
  const ComplexMat f = hermitian_part(lmi_value(problem, x_hat));
  const double scale = std::max(1.0, f.frobenius_norm());
  const auto eig = hermitian_eig(f);
  if (eig.eigenvalues.front() < -kFeasibilityTol * scale) {
    throw Error(Errc::InfeasiblePoint,
                "F(x) has eigenvalue " + std::to_string(eig.eigenvalues.front()));
  }
  ComplexMat kernel(f.rows(), f.cols());
  std::size_t kernel_dim = 0;
  for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
    if (eig.eigenvalues[k] > kKernelTol * scale) break;
    kernel += ComplexMat::projector(eig.eigenvectors.column(k));
    ++kernel_dim;
  }
  if (kernel_dim == 0) {
    throw Error(Errc::NoDualCertificate, "F(x) is positive definite; x is not optimal");
  }
  // Z = z * kernel with Tr[F_i Z] = c_i.
  std::size_t pivot = 0;
  std::vector<double> t(problem.fi.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    t[i] = (problem.fi[i] * kernel).trace().real();
    if (std::abs(t[i]) > std::abs(t[pivot])) pivot = i;
  }
  if (t.empty() || std::abs(t[pivot]) <= kKernelTol * scale) {
    throw Error(Errc::NoDualCertificate, "kernel is orthogonal to every F_i");
  }
  const double z = problem.c[pivot] / t[pivot];
  if (z < 0.0) throw Error(Errc::NoDualCertificate, "dual scaling would make Z indefinite");
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (std::abs(z * t[i] - problem.c[i]) > kFeasibilityTol * scale) {
      throw Error(Errc::NoDualCertificate, "no multiple of the kernel projector is dual feasible");
    }
  }
  const ComplexMat zmat = z * kernel;
  double primal = 0.0;
  for (std::size_t i = 0; i < x_hat.size(); ++i) primal += problem.c[i] * x_hat[i];
  const double dual = -(problem.f0 * zmat).trace().real();
  return DualityReport{primal, dual, primal - dual, (f * zmat).frobenius_norm()};
}

}  // namespace lsd
