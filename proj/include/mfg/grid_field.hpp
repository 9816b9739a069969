#pragma once
//==============================================================================
// grid_field.hpp
// Real periodic scalar fields on the uniform torus grid, stored together with
// their Fourier coefficients (kept consistent at construction; the type is
// immutable afterwards). Norms, the interaction quadratic form, and spectral
// convolution against a KernelSpec live here.
//==============================================================================

#include <functional>
#include <vector>

#include "mfg/fourier.hpp"
#include "mfg/kernel.hpp"

namespace mfg {

class GridField {
 public:
  GridField(int dim, int points_per_axis, std::vector<double> values);
  static GridField from_spectrum(int dim, int points_per_axis, const std::vector<cplx>& coeffs);
  static GridField constant(int dim, int points_per_axis, double value);
  // f(x) = offset + amp * cos(2*pi*xi.x)
  static GridField cosine_mode(int dim, int points_per_axis, const FreqVec& xi, double amp,
                               double offset = 0.0);
  // sample a scalar function on the grid (x components in [0,1))
  static GridField sample(int dim, int points_per_axis,
                          const std::function<double(const std::vector<double>&)>& f);

  int dim() const { return dim_; }
  int n() const { return n_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<double>& values() const { return values_; }
  const std::vector<cplx>& spectrum() const { return spectrum_; }

  double mean() const;  // = Re fhat(0)
  double min_value() const;
  double max_abs() const;
  cplx fhat(const FreqVec& xi) const;

  bool is_mean_zero(double tol = 1e-12) const;
  bool is_density(double tol = 1e-12) const;  // mean 1 and strictly positive

  // sum_{xi != 0} |fhat|^2 (Parseval L2 norm of the mean-removed field)
  double l2_norm_mean_removed() const;
  double l2_norm() const;
  // sqrt(sum_{xi != 0} k_xi |fhat|^2) = || grad f ||_L2
  double grad_l2_norm() const;
  // translated field f(. + tau), exact spectral phase shift
  GridField shifted(const std::vector<double>& tau) const;
  // exact trigonometric evaluation at an off-grid point
  double eval(const std::vector<double>& x) const;
  // same for the gradient (d components)
  std::vector<double> eval_grad(const std::vector<double>& x) const;

 private:
  GridField() = default;
  int dim_ = 1;
  int n_ = 0;
  std::vector<double> values_;
  std::vector<cplx> spectrum_;
};

// || mu ||_{H^-1}: sqrt(sum_{xi != 0} |muhat|^2 / (2pi|xi|)^2).
// Throws std::domain_error when |mean| > mean_tol (the norm needs mean-zero
// input; the tolerance matches the solver's mass-conservation budget).
double h_minus1_norm(const GridField& field, double mean_tol = 1e-8);

// sum_{xi != 0} Khat(xi) |muhat(xi)|^2; sign diagnoses monotonicity failure.
double quadratic_form(const KernelSpec& kernel, const GridField& mu);

// F(m) = (gamma/2) * quadratic_form(kernel, m); the mean drops out.
double interaction_energy(const KernelSpec& kernel, double gamma, const GridField& m);

// Spectral convolution (K*f)^(xi) = Khat(xi) fhat(xi). Requires N/2 > kernel
// cutoff so the kernel modes are resolved.
GridField convolve(const KernelSpec& kernel, const GridField& field);

}  // namespace mfg
