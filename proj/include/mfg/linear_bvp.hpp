#pragma once
//==============================================================================
// linear_bvp.hpp
// Exact mode-by-mode solution of the linearized forward-backward two-point
// boundary value problem U' = M_xi U with mu fixed at t = 0 and w fixed at
// t = T. The transfer matrix has the closed form
//   exp(t M) = cosh(rho t) I + sinh(rho t)/rho M,   rho = sqrt(sigma) > 0,
// and the nilpotent limit I + t M at sigma = 0. Long horizons (rho T > 40)
// are assembled from decaying exponentials only, via the stable/unstable
// eigenvector splitting, so no cosh overflow can occur.
//==============================================================================

#include <complex>
#include <optional>
#include <vector>

#include "mfg/grid_field.hpp"
#include "mfg/kernel.hpp"

namespace mfg {

struct Mat2 {
  double m00, m01, m10, m11;
};

struct ModeBvpData {
  FreqVec xi;
  cplx mu0;  // muhat(0)
  cplx gT;   // what(T)
  double T;
};

struct ModeTrajectory {
  std::vector<double> times;
  std::vector<cplx> w;
  std::vector<cplx> mu;
  double rho = 0.0;
};

// exp(t M) for sigma >= 0; throws std::domain_error for sigma < 0 (elliptic).
Mat2 transfer_matrix(const ModeMatrix& mode, double t);

std::vector<double> uniform_times(double T, std::size_t count = 201);

// Unique hyperbolic solution with muhat(0) = data.mu0, what(T) = data.gT,
// sampled at `times` (default 201 uniform). Requires sigma_xi(gamma) > 0.
ModeTrajectory solve_mode_bvp(const ModelParams& params, const ModeBvpData& data,
                              const std::vector<double>& times = {});

struct EnvelopeResult {
  std::vector<double> times;
  std::vector<double> h_minus1_m;    // ||m(t) - 1||_{H^-1}
  std::vector<double> l2_grad_phi;   // ||grad phi(t)||_{L^2}
  double rho_gamma = 0.0;
  bool flat = false;                 // zero deviation for all t
  std::optional<double> fitted_rate; // interior decay rate of the H^-1 amplitude
  std::optional<double> ratio;       // fitted_rate / rho_gamma
};

// Solves every resolved mode's BVP and assembles the boundary-layer envelope.
// The interior rate is a least-squares fit of log ||m-1||_{H^-1} on
// [0.2 T, 0.5 T]. Throws "gap closed" when gamma >= gamma_c.
EnvelopeResult linear_turnpike_envelope(const ModelParams& params, const GridField& m0,
                                        const GridField& g, double T,
                                        const std::vector<double>& times = {});

}  // namespace mfg
