// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <functional>

#include "lsd/cli.hpp"
#include "lsd/decomposition.hpp"
#include "lsd/oracle.hpp"
#include "lsd/separability.hpp"
#include "lsd/wootters.hpp"

namespace lsd {

namespace {

bool near(double a, double b, double tol = 1e-10) { return std::abs(a - b) <= tol; }

bool near(const ComplexMat& a, const ComplexMat& b, double tol = 1e-10) {
  return distance(a, b) <= tol;
}

bool throws(Errc code, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

ComplexMat diag(std::initializer_list<double> d) {
  const std::vector<double> v(d);
  return ComplexMat::diagonal(v);
}

DensityMatrix singlet() { return make_bd22({0.0, 0.0, 0.0, 1.0}); }

bool is_singlet(const ComplexMat& m) {
  // Singlet = (|01> - |10>)/sqrt 2.
  const double h = 1.0 / std::sqrt(2.0);
  const CVec s{0.0, h, -h, 0.0};
  return near(m, ComplexMat::projector(s));
}

}  // namespace

std::vector<SelftestResult> run_selftest() {
  const double quarter = 0.25;
  const std::array<double, 4> uniform4{quarter, quarter, quarter, quarter};
  const std::array<double, 6> uniform6{1.0 / 6, 1.0 / 6, 1.0 / 6, 1.0 / 6, 1.0 / 6, 1.0 / 6};
  const DensityMatrix mixed4 = DensityMatrix::maximally_mixed({2, 2});

  const std::vector<std::pair<std::string, std::function<bool()>>> battery = {
      {"eig: identity", [] {
         const auto ev = hermitian_eigenvalues(ComplexMat::identity(2));
         return near(ev[0], 1.0) && near(ev[1], 1.0);
       }},
      {"eig: diag(3,-1)", [] {
         const auto ev = hermitian_eigenvalues(diag({3.0, -1.0}));
         return near(ev[0], -1.0) && near(ev[1], 3.0);
       }},
      {"kron: identity", [] {
         return near(kron(ComplexMat::identity(2), ComplexMat::identity(2)),
                     ComplexMat::identity(4));
       }},
      {"psd: zero matrix", [] { return is_psd(ComplexMat(3, 3)); }},
      {"psd: diag(1,-1e-3)", [] { return !is_psd(diag({1.0, -1e-3}), 1e-9); }},
      {"pinv_sqrt: identity", [] {
         return near(pinv_sqrt(ComplexMat::identity(3)), ComplexMat::identity(3));
       }},
      {"pinv_sqrt: diag(4,0)", [] { return near(pinv_sqrt(diag({4.0, 0.0})), diag({0.5, 0.0})); }},
      {"takagi: diag(2,1)", [] {
         const auto t = takagi_factorize(diag({2.0, 1.0}));
         return near(t.values[0], 2.0) && near(t.values[1], 1.0);
       }},
      {"takagi: diag(-1)", [] {
         const auto t = takagi_factorize(diag({-1.0}));
         return near(t.values[0], 1.0) && near(std::abs(t.unitary(0, 0).imag()), 1.0);
       }},
      {"bell basis orthonormal", [] {
         const auto b = bell_basis_22();
         for (std::size_t i = 0; i < 4; ++i) {
           for (std::size_t j = 0; j < 4; ++j) {
             if (std::abs(inner(b[i], b[j]) - (i == j ? 1.0 : 0.0)) > 1e-12) return false;
           }
         }
         return true;
       }},
      {"bd22 vertex is pure", [] {
         return near(make_bd22({1.0, 0.0, 0.0, 0.0}).mat(),
                     ComplexMat::projector(bell_basis_22()[0]));
       }},
      {"bd22 uniform is I/4", [&] { return near(make_bd22(uniform4).mat(), mixed4.mat()); }},
      {"bd23 uniform is I/6", [&] {
         return near(make_bd23(uniform6).mat(), (1.0 / 6.0) * ComplexMat::identity(6));
       }},
      {"isotropic F=1 is pure", [] {
         return near(make_isotropic(3, 1.0).mat(), ComplexMat::projector(maximally_entangled(3)));
       }},
      {"multi_iso s=0 is maximally mixed", [] {
         return near(make_multi_iso(2, 3, 0.0).mat(), (1.0 / 8.0) * ComplexMat::identity(8));
       }},
      {"raw I/4 accepted", [] {
         return near(build(RawSpec{{2, 2}, 0.25 * ComplexMat::identity(4)}).mat(),
                     0.25 * ComplexMat::identity(4));
       }},
      {"raw trace 0.9 rejected", [] {
         return throws(Errc::RawValidationFailed,
                       [] { build(RawSpec{{2, 2}, 0.225 * ComplexMat::identity(4)}); });
       }},
      {"ppt: I/4 separable", [&] {
         const auto v = ppt_check(mixed4);
         return v.status == SeparabilityStatus::Separable && near(v.margin, 0.25);
       }},
      {"bd22 region: uniform", [&] {
         const auto v = bd22_region(uniform4);
         return v.status == SeparabilityStatus::Separable && near(v.margin, 0.25);
       }},
      {"icd region: uniform for all theta", [&] {
         for (double t : {0.1, 0.5, 0.785, 1.2}) {
           if (icd_region(t, uniform4).status != SeparabilityStatus::Separable) return false;
         }
         return true;
       }},
      {"bd23 region: uniform", [&] {
         return bd23_region(uniform6).status == SeparabilityStatus::Separable;
       }},
      {"spin flip: singlet invariant", [] { return near(spin_flip(singlet()), singlet().mat()); }},
      {"spin flip: I/4 invariant", [&] { return near(spin_flip(mixed4), mixed4.mat()); }},
      {"concurrence: singlet", [] { return near(concurrence(singlet()), 1.0); }},
      {"wootters lambdas: I/4", [&] {
         const auto l = wootters_lambdas(mixed4);
         return near(l[0], quarter) && near(l[3], quarter);
       }},
      {"lsd bd22: separable input", [] {
         const auto d = lsd_bd22({0.5, 0.3, 0.1, 0.1});
         return near(d.lambda, 1.0) && d.entangled_part.frobenius_norm() <= 1e-12;
       }},
      {"lsd bd22: pure Bell state", [] {
         const auto d = lsd_bd22({1.0, 0.0, 0.0, 0.0});
         return near(d.lambda, 0.0) &&
                near(d.entangled_part, ComplexMat::projector(bell_basis_22()[0]));
       }},
      {"lsd icd: uniform", [&] { return near(lsd_icd(0.5, uniform4).lambda, 1.0); }},
      {"lsd wootters: singlet", [] {
         const auto d = lsd_wootters(singlet());
         return near(d.lambda, 0.0) && is_singlet(d.entangled_part);
       }},
      {"lsd bd23: uniform", [&] { return near(lsd_bd23(uniform6).lambda, 1.0); }},
      {"lsd bd23: pure vertex", [] { return near(lsd_bd23({1, 0, 0, 0, 0, 0}).lambda, 0.0); }},
      {"lsd bd23 rank-3: uniform infeasible", [&] {
         return throws(Errc::BranchInfeasible, [&] { lsd_bd23_rank3(uniform6, Bd23Branch::A); });
       }},
      {"lsd werner: f=-1", [] {
         const auto d = lsd_werner(2, -1.0);
         return near(d.lambda, 0.0) && is_singlet(d.entangled_part);
       }},
      {"lsd isotropic: F=1", [] { return near(lsd_isotropic(3, 1.0).lambda, 0.0); }},
      {"lsd isotropic: F=1/d", [] { return near(lsd_isotropic(3, 1.0 / 3.0).lambda, 1.0); }},
      {"lsd horodecki33: alpha=5", [] { return near(lsd_horodecki33(5.0).lambda, 0.0); }},
      {"lsd horodecki33: alpha=3", [] { return near(lsd_horodecki33(3.0).lambda, 1.0); }},
      {"lsd multi_iso: s=1", [] { return near(lsd_multi_iso(2, 3, 1.0).lambda, 0.0); }},
      {"lsd multi_iso: s=s0", [] {
         return near(lsd_multi_iso(2, 3, multi_iso_threshold(2, 3)).lambda, 1.0);
       }},
      {"decompose: werner dispatch", [] {
         return near(decompose(WernerSpec{2, -0.5}).lambda, lsd_werner(2, -0.5).lambda);
       }},
      {"decompose: raw 9x9 unsupported", [] {
         return throws(Errc::UnsupportedRawDims, [] {
           decompose(RawSpec{{3, 3}, (1.0 / 9.0) * ComplexMat::identity(9)});
         });
       }},
      {"verify: inflated lambda flagged", [] {
         const DensityMatrix rho = make_bd22({0.7, 0.1, 0.1, 0.1});
         auto d = lsd_bd22({0.7, 0.1, 0.1, 0.1});
         d.lambda += 0.01;
         return verify(rho, d).residual_min_eig < 0.0;
       }},
      {"oracle: sigma = rho", [] {
         const DensityMatrix rho = make_bd22({0.7, 0.1, 0.1, 0.1});
         return near(lambda_max_fixed(rho, rho), 1.0) &&
                near(lambda_max_bisect(rho, rho), 1.0, 1e-9);
       }},
      {"oracle: orthogonal support", [] {
         return lambda_max_fixed(make_bd22({0.6, 0.4, 0.0, 0.0}),
                                 make_bd22({0.0, 0.0, 1.0, 0.0})) == 0.0;
       }},
      {"sdp: F(0) is PSD", [] {
         const auto sdp = bsa_as_sdp(make_werner(2, -0.5), make_werner(2, 0.0));
         return is_psd(lmi_value(sdp, {0.0}));
       }},
      {"sdp: interior point has no certificate", [] {
         const auto sdp = bsa_as_sdp(make_werner(2, -0.5), make_werner(2, 0.0));
         return throws(Errc::NoDualCertificate, [&] { duality_check(sdp, {0.4}); });
       }},
      {"sdp: point above optimum infeasible", [] {
         const auto sdp = bsa_as_sdp(make_werner(2, -0.5), make_werner(2, 0.0));
         return throws(Errc::InfeasiblePoint, [&] { duality_check(sdp, {0.51}); });
       }},
  };

  std::vector<SelftestResult> results;
  for (const auto& [name, check] : battery) {
    try {
      results.push_back({name, check(), ""});
    } catch (const std::exception& e) {
      results.push_back({name, false, e.what()});
    }
  }
  return results;
}

}  // namespace lsd
