#include "mfg/linear_bvp.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "mfg/util.hpp"

namespace mfg {

Mat2 transfer_matrix(const ModeMatrix& mode, double t) {
  const double sigma = mode.sigma();
  const double scale = std::abs(mode.m00) + std::abs(mode.m01) + std::abs(mode.m10);
  if (sigma < -1e-12 * (1.0 + scale * scale))
    throw std::domain_error("transfer_matrix: elliptic mode (sigma < 0)");
  const double rho = std::sqrt(std::max(sigma, 0.0));
  double ch, sh_over_rho;
  if (rho * std::abs(t) < 1e-8) {
    // nilpotent limit exp(tM) = I + tM (and its O((rho t)^2) neighborhood)
    ch = 1.0;
    sh_over_rho = t;
  } else {
    ch = std::cosh(rho * t);
    sh_over_rho = std::sinh(rho * t) / rho;
  }
  return Mat2{ch + sh_over_rho * mode.m00, sh_over_rho * mode.m01,
              sh_over_rho * mode.m10, ch + sh_over_rho * mode.m11};
}

std::vector<double> uniform_times(double T, std::size_t count) {
  std::vector<double> t(count);
  for (std::size_t j = 0; j < count; ++j)
    t[j] = T * static_cast<double>(j) / static_cast<double>(count - 1);
  return t;
}

ModeTrajectory solve_mode_bvp(const ModelParams& params, const ModeBvpData& data,
                              const std::vector<double>& times) {
  if (!(data.T > 0.0)) throw std::invalid_argument("solve_mode_bvp: T must be > 0");
  const double sigma = sigma_xi(params, data.xi);
  if (!(sigma > 0.0)) throw std::domain_error("solve_mode_bvp: sigma_xi <= 0, mode not hyperbolic");
  const ModeMatrix M = mode_matrix(params, data.xi);
  const double rho = std::sqrt(sigma);

  ModeTrajectory traj;
  traj.times = times.empty() ? uniform_times(data.T) : times;
  traj.rho = rho;
  traj.w.resize(traj.times.size());
  traj.mu.resize(traj.times.size());

  if (rho * data.T <= 40.0) {
    // U(t) = exp(tM) U(0); impose mu(0) and w(T) and solve for U(0)
    const Mat2 ET = transfer_matrix(M, data.T);
    // rows: [0 1] U0 = mu0 ; [E00 E01] U0 = gT, determinant = -E00
    if (std::abs(ET.m00) < 1e-250) {
      throw std::runtime_error("solve_mode_bvp: near-singular boundary system, |E00(T)| = " +
                               std::to_string(ET.m00));
    }
    const cplx w0 = (data.gT - ET.m01 * data.mu0) / ET.m00;
    for (std::size_t j = 0; j < traj.times.size(); ++j) {
      const Mat2 Et = transfer_matrix(M, traj.times[j]);
      traj.w[j] = Et.m00 * w0 + Et.m01 * data.mu0;
      traj.mu[j] = Et.m10 * w0 + Et.m11 * data.mu0;
    }
  } else {
    // Stable/unstable splitting: U(t) = e^{-rho t} s v- + e^{-rho (T-t)} u v+,
    // with M v+- = +-rho v+-. Only decaying exponentials appear.
    const double k = k_of_freq(data.xi);
    const double nk = params.nu * k;
    double vp0 = nk + rho, vp1 = -k;      // v+ ~ (nu k + rho, -k)
    double vm0 = M.m01, vm1 = nk + rho;   // v- ~ (-gamma Khat, nu k + rho)
    const double np = std::hypot(vp0, vp1), nm = std::hypot(vm0, vm1);
    vp0 /= np; vp1 /= np; vm0 /= nm; vm1 /= nm;
    const double decay = std::exp(-rho * data.T);
    // [ vm1        decay*vp1 ] (s)   (mu0)
    // [ decay*vm0  vp0       ] (u) = (gT)
    const double det = vm1 * vp0 - decay * decay * vp1 * vm0;
    if (std::abs(det) < 1e-250) {
      throw std::runtime_error("solve_mode_bvp: near-singular split system, det = " +
                               std::to_string(det));
    }
    const cplx s = (data.mu0 * vp0 - data.gT * decay * vp1) / det;
    const cplx u = (data.gT * vm1 - data.mu0 * decay * vm0) / det;
    for (std::size_t j = 0; j < traj.times.size(); ++j) {
      const double t = traj.times[j];
      const double el = std::exp(-rho * t);
      const double er = std::exp(-rho * (data.T - t));
      traj.w[j] = el * s * vm0 + er * u * vp0;
      traj.mu[j] = el * s * vm1 + er * u * vp1;
    }
  }
  return traj;
}

EnvelopeResult linear_turnpike_envelope(const ModelParams& params, const GridField& m0,
                                        const GridField& g, double T,
                                        const std::vector<double>& times) {
  if (m0.dim() != params.kernel.dim() || g.dim() != m0.dim() || g.n() != m0.n())
    throw std::invalid_argument("linear_turnpike_envelope: inconsistent fields");
  const int cutoff = std::max(m0.n() / 2 - 1, params.kernel.cutoff());
  const auto gap = spectral_gap(params, cutoff);
  if (!gap.has_value())
    throw std::domain_error("linear_turnpike_envelope: gap closed (gamma >= gamma_c)");

  EnvelopeResult out;
  out.times = times.empty() ? uniform_times(T) : times;
  out.rho_gamma = *gap;
  out.h_minus1_m.assign(out.times.size(), 0.0);
  out.l2_grad_phi.assign(out.times.size(), 0.0);

  double data_size = 0.0;
  for (const FreqVec& xi : enumerate_pairs(m0.dim(), m0.n() / 2 - 1)) {
    const cplx mu0 = m0.fhat(xi);
    const cplx gT = g.fhat(xi);  // mean drops out automatically: xi != 0
    data_size += std::abs(mu0) + std::abs(gT);
    if (std::abs(mu0) < 1e-300 && std::abs(gT) < 1e-300) continue;
    ModeTrajectory traj = solve_mode_bvp(params, ModeBvpData{xi, mu0, gT, T}, out.times);
    const double k = k_of_freq(xi);
    for (std::size_t j = 0; j < out.times.size(); ++j) {
      // the +-xi pair contributes twice (Hermitian symmetry)
      out.h_minus1_m[j] += 2.0 * std::norm(traj.mu[j]) / k;
      out.l2_grad_phi[j] += 2.0 * k * std::norm(traj.w[j]);
    }
  }
  for (std::size_t j = 0; j < out.times.size(); ++j) {
    out.h_minus1_m[j] = std::sqrt(out.h_minus1_m[j]);
    out.l2_grad_phi[j] = std::sqrt(out.l2_grad_phi[j]);
  }

  if (data_size < 1e-300) {
    out.flat = true;
    return out;
  }

  // interior fit window [0.2 T, 0.5 T], clamped above the underflow floor
  std::vector<double> ft, fy;
  for (std::size_t j = 0; j < out.times.size(); ++j) {
    const double t = out.times[j];
    if (t < 0.2 * T || t > 0.5 * T) continue;
    if (out.h_minus1_m[j] <= 1e-280) continue;
    ft.push_back(t);
    fy.push_back(out.h_minus1_m[j]);
  }
  if (ft.size() >= 3) {
    const LinearFit fit = fit_semilog(ft, fy);
    out.fitted_rate = -fit.slope;
    out.ratio = -fit.slope / out.rho_gamma;
  } else {
    out.flat = true;
  }
  return out;
}

}  // namespace mfg
