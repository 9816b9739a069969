#pragma once
//==============================================================================
// kernel.hpp
// Interaction kernels given by sparse real Fourier coefficients, the per-mode
// dispersion sigma_xi(gamma) = nu^2 k^2 + gamma k Khat(xi) with k = (2pi|xi|)^2,
// the critical coupling gamma_c, the near-threshold constant C*, the global
// spectral gap rho(gamma), and the 2x2 Fourier mode matrices.
//
// Kernels are even (Khat(-xi) = Khat(xi)) and mean-zero (no xi = 0 entry);
// only finitely many coefficients are supported. All types are immutable.
//==============================================================================

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mfg/fourier.hpp"

namespace mfg {

using FreqVec = std::vector<int>;

class KernelSpec {
 public:
  // Builds from any set of (xi, Khat) entries; the mirror entry -xi is filled
  // in automatically. Conflicting values for a pair, a zero frequency, or a
  // non-finite coefficient are rejected.
  static KernelSpec from_coeffs(int dim, const std::vector<std::pair<FreqVec, double>>& entries);

  // K(x) = -cos(2*pi*x) on the 1-torus: Khat(+-1) = -1/2.
  static KernelSpec cosine();
  // K(x) = -a1 cos(2*pi*x) - a2 cos(4*pi*x): Khat(+-1) = -a1/2, Khat(+-2) = -a2/2.
  static KernelSpec two_mode(double a1, double a2);
  // K(x) = -cos(2*pi*x_1) on the 2-torus: Khat(+-(1,0)) = -1/2.
  static KernelSpec cosine_2d();

  int dim() const { return dim_; }
  int cutoff() const { return cutoff_; }  // max |xi|_inf over stored modes
  double khat(const FreqVec& xi) const;   // 0 for absent frequencies
  const std::map<FreqVec, double>& coeffs() const { return coeffs_; }
  // one representative per +-xi pair (canonical orientation)
  std::vector<FreqVec> pair_representatives() const;

 private:
  KernelSpec() = default;
  int dim_ = 1;
  int cutoff_ = 0;
  std::map<FreqVec, double> coeffs_;
};

struct ModelParams {
  double nu;    // > 0
  double gamma; // >= 0
  KernelSpec kernel;

  ModelParams(double nu_, double gamma_, KernelSpec kernel_);
};

//------------------------------------------------------------------------------
// Dispersion and thresholds
//------------------------------------------------------------------------------

// sigma_xi(gamma); throws std::domain_error for xi = 0 (zero mode excluded).
double sigma_xi(const ModelParams& params, const FreqVec& xi);

struct CriticalCoupling {
  double gamma_c;                 // +infinity when every Khat >= 0
  std::vector<FreqVec> critical_set;  // pair representatives attaining the min
  bool finite() const { return gamma_c < std::numeric_limits<double>::infinity(); }
  bool degenerate() const { return critical_set.size() > 1; }
};

// gamma_c = min over stored Khat(xi) < 0 of nu^2 k_xi / |Khat(xi)|. Ties are
// detected with relative tolerance 1e-9 and reported, not broken.
CriticalCoupling critical_coupling(double nu, const KernelSpec& kernel);

// C* = sqrt(k_{xi0} |Khat(xi0)|). Requires a single critical pair.
double c_star(double nu, const KernelSpec& kernel);

// rho(gamma) = min over 0 < |xi|_inf <= cutoff of sqrt(sigma_xi); nullopt when
// some sigma_xi <= 0 ("gap closed"). cutoff must cover the kernel support.
std::optional<double> spectral_gap(const ModelParams& params, int mode_cutoff);

//------------------------------------------------------------------------------
// Mode matrix M_xi = [[nu k, -gamma Khat(xi)], [-k, -nu k]] acting on
// (what, muhat). Satisfies M^2 = sigma_xi I exactly.
//------------------------------------------------------------------------------
struct ModeMatrix {
  double m00, m01, m10, m11;
  double sigma() const { return m00 * m00 + m01 * m10; }  // = nu^2 k^2 + g k Khat
};

ModeMatrix mode_matrix(const ModelParams& params, const FreqVec& xi);

//------------------------------------------------------------------------------
// ModeReport: per-mode dispersion table plus the global threshold summary.
//------------------------------------------------------------------------------
struct ModeRow {
  FreqVec xi;      // pair representative
  double k;        // (2pi|xi|)^2
  double khat;
  double sigma;
  double rho;      // sqrt(sigma) when sigma > 0, else NaN
};

struct ModeReport {
  std::vector<ModeRow> rows;
  double gamma_c;
  std::vector<FreqVec> critical_set;
  std::optional<double> c_star;     // only for a single critical pair
  std::optional<double> rho_gamma;  // nullopt = gap closed
};

ModeReport build_mode_report(const ModelParams& params, int mode_cutoff);

// "1" / "(1,0)" rendering used in CSV output and messages.
std::string freq_to_string(const FreqVec& xi);

}  // namespace mfg
