#include "mfg/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mfg {

namespace {
FreqVec negate(const FreqVec& xi) {
  FreqVec m(xi.size());
  for (std::size_t a = 0; a < xi.size(); ++a) m[a] = -xi[a];
  return m;
}
}  // namespace

KernelSpec KernelSpec::from_coeffs(int dim, const std::vector<std::pair<FreqVec, double>>& entries) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("KernelSpec: dim must be 1..3");
  KernelSpec k;
  k.dim_ = dim;
  for (const auto& [xi, v] : entries) {
    if (static_cast<int>(xi.size()) != dim)
      throw std::invalid_argument("KernelSpec: frequency dimension mismatch");
    if (is_zero_freq(xi))
      throw std::invalid_argument("KernelSpec: zero mode is excluded (mean-zero kernel)");
    if (!std::isfinite(v)) throw std::invalid_argument("KernelSpec: non-finite coefficient");
    for (const FreqVec& key : {xi, negate(xi)}) {
      auto it = k.coeffs_.find(key);
      if (it != k.coeffs_.end() && it->second != v)
        throw std::invalid_argument("KernelSpec: conflicting values for a +-xi pair");
      k.coeffs_[key] = v;
    }
    k.cutoff_ = std::max(k.cutoff_, linf_of_freq(xi));
  }
  return k;
}

KernelSpec KernelSpec::cosine() { return from_coeffs(1, {{{1}, -0.5}}); }

KernelSpec KernelSpec::two_mode(double a1, double a2) {
  if (!(a1 > 0.0) || !(a2 > 0.0)) throw std::invalid_argument("two_mode: a1, a2 must be > 0");
  return from_coeffs(1, {{{1}, -a1 / 2.0}, {{2}, -a2 / 2.0}});
}

KernelSpec KernelSpec::cosine_2d() { return from_coeffs(2, {{{1, 0}, -0.5}}); }

double KernelSpec::khat(const FreqVec& xi) const {
  auto it = coeffs_.find(xi);
  return it == coeffs_.end() ? 0.0 : it->second;
}

std::vector<FreqVec> KernelSpec::pair_representatives() const {
  std::vector<FreqVec> out;
  for (const auto& [xi, v] : coeffs_) {
    (void)v;
    if (canonical_pair(xi) == xi) out.push_back(xi);
  }
  return out;
}

ModelParams::ModelParams(double nu_, double gamma_, KernelSpec kernel_)
    : nu(nu_), gamma(gamma_), kernel(std::move(kernel_)) {
  if (!(nu > 0.0)) throw std::invalid_argument("ModelParams: nu must be > 0");
  if (!(gamma >= 0.0)) throw std::invalid_argument("ModelParams: gamma must be >= 0");
}

double sigma_xi(const ModelParams& params, const FreqVec& xi) {
  if (is_zero_freq(xi)) throw std::domain_error("sigma_xi: zero mode is excluded");
  const double k = k_of_freq(xi);
  return params.nu * params.nu * k * k + params.gamma * k * params.kernel.khat(xi);
}

CriticalCoupling critical_coupling(double nu, const KernelSpec& kernel) {
  CriticalCoupling out;
  out.gamma_c = std::numeric_limits<double>::infinity();
  double best = std::numeric_limits<double>::infinity();
  std::vector<std::pair<FreqVec, double>> ratios;
  for (const FreqVec& xi : kernel.pair_representatives()) {
    const double kh = kernel.khat(xi);
    if (kh >= 0.0) continue;
    const double r = nu * nu * k_of_freq(xi) / (-kh);
    ratios.emplace_back(xi, r);
    best = std::min(best, r);
  }
  if (ratios.empty()) return out;  // gamma_c = +inf, empty critical set
  out.gamma_c = best;
  // ties within relative 1e-9 are all reported (degenerate critical set)
  for (const auto& [xi, r] : ratios) {
    if (r <= best * (1.0 + 1e-9)) out.critical_set.push_back(xi);
  }
  return out;
}

double c_star(double nu, const KernelSpec& kernel) {
  const CriticalCoupling cc = critical_coupling(nu, kernel);
  if (!cc.finite()) throw std::domain_error("c_star: gamma_c is infinite (no negative mode)");
  if (cc.degenerate()) throw std::domain_error("c_star: degenerate critical mode");
  const FreqVec& xi0 = cc.critical_set.front();
  return std::sqrt(k_of_freq(xi0) * std::abs(kernel.khat(xi0)));
}

std::optional<double> spectral_gap(const ModelParams& params, int mode_cutoff) {
  if (mode_cutoff < params.kernel.cutoff())
    throw std::invalid_argument("spectral_gap: cutoff below kernel support");
  double min_sigma = std::numeric_limits<double>::infinity();
  for (const FreqVec& xi : enumerate_pairs(params.kernel.dim(), mode_cutoff)) {
    min_sigma = std::min(min_sigma, sigma_xi(params, xi));
  }
  if (!(min_sigma > 0.0)) return std::nullopt;  // gap closed
  return std::sqrt(min_sigma);
}

ModeMatrix mode_matrix(const ModelParams& params, const FreqVec& xi) {
  if (is_zero_freq(xi)) throw std::domain_error("mode_matrix: zero mode is excluded");
  const double k = k_of_freq(xi);
  return ModeMatrix{params.nu * k, -params.gamma * params.kernel.khat(xi), -k, -params.nu * k};
}

ModeReport build_mode_report(const ModelParams& params, int mode_cutoff) {
  ModeReport rep;
  const int cutoff = std::max(mode_cutoff, params.kernel.cutoff());
  bool gap_open = true;
  double min_sigma = std::numeric_limits<double>::infinity();
  for (const FreqVec& xi : enumerate_pairs(params.kernel.dim(), cutoff)) {
    ModeRow row;
    row.xi = xi;
    row.k = k_of_freq(xi);
    row.khat = params.kernel.khat(xi);
    row.sigma = sigma_xi(params, xi);
    row.rho = row.sigma > 0.0 ? std::sqrt(row.sigma) : std::numeric_limits<double>::quiet_NaN();
    if (!(row.sigma > 0.0)) gap_open = false;
    min_sigma = std::min(min_sigma, row.sigma);
    rep.rows.push_back(std::move(row));
  }
  const CriticalCoupling cc = critical_coupling(params.nu, params.kernel);
  rep.gamma_c = cc.gamma_c;
  rep.critical_set = cc.critical_set;
  if (cc.finite() && !cc.degenerate()) rep.c_star = c_star(params.nu, params.kernel);
  if (gap_open) rep.rho_gamma = std::sqrt(min_sigma);
  return rep;
}

std::string freq_to_string(const FreqVec& xi) {
  if (xi.size() == 1) return std::to_string(xi[0]);
  std::string s = "(";
  for (std::size_t a = 0; a < xi.size(); ++a) {
    if (a) s += ",";
    s += std::to_string(xi[a]);
  }
  s += ")";
  return s;
}

}  // namespace mfg
