#include "mfg/grid_field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mfg {

GridField::GridField(int dim, int points_per_axis, std::vector<double> values)
    : dim_(dim), n_(points_per_axis), values_(std::move(values)) {
  SpectralContext& ctx = context_for(dim_, n_);
  if (values_.size() != ctx.size()) throw std::invalid_argument("GridField: value count != N^d");
  ctx.forward(values_, spectrum_);
}

GridField GridField::from_spectrum(int dim, int points_per_axis, const std::vector<cplx>& coeffs) {
  SpectralContext& ctx = context_for(dim, points_per_axis);
  GridField f;
  f.dim_ = dim;
  f.n_ = points_per_axis;
  ctx.inverse(coeffs, f.values_);
  // re-transform so values and spectrum are the consistent real-field pair
  ctx.forward(f.values_, f.spectrum_);
  return f;
}

GridField GridField::constant(int dim, int points_per_axis, double value) {
  std::size_t sz = 1;
  for (int a = 0; a < dim; ++a) sz *= static_cast<std::size_t>(points_per_axis);
  return GridField(dim, points_per_axis, std::vector<double>(sz, value));
}

GridField GridField::cosine_mode(int dim, int points_per_axis, const FreqVec& xi, double amp,
                                 double offset) {
  return sample(dim, points_per_axis, [&](const std::vector<double>& x) {
    double phase = 0.0;
    for (int a = 0; a < dim; ++a) phase += xi[a] * x[a];
    return offset + amp * std::cos(2.0 * M_PI * phase);
  });
}

GridField GridField::sample(int dim, int points_per_axis,
                            const std::function<double(const std::vector<double>&)>& f) {
  std::size_t sz = 1;
  for (int a = 0; a < dim; ++a) sz *= static_cast<std::size_t>(points_per_axis);
  std::vector<double> values(sz);
  std::vector<double> x(dim);
  for (std::size_t i = 0; i < sz; ++i) {
    std::size_t rem = i;
    for (int a = dim - 1; a >= 0; --a) {
      x[a] = static_cast<double>(rem % points_per_axis) / points_per_axis;
      rem /= points_per_axis;
    }
    values[i] = f(x);
  }
  return GridField(dim, points_per_axis, std::move(values));
}

double GridField::mean() const { return spectrum_[0].real(); }

double GridField::min_value() const { return *std::min_element(values_.begin(), values_.end()); }

double GridField::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

cplx GridField::fhat(const FreqVec& xi) const {
  return spectrum_[index_of_freq(xi, dim_, n_)];
}

bool GridField::is_mean_zero(double tol) const { return std::abs(mean()) <= tol; }

bool GridField::is_density(double tol) const {
  return std::abs(mean() - 1.0) <= tol && min_value() > 0.0;
}

double GridField::l2_norm_mean_removed() const {
  // flat index 0 is the zero frequency; skipping it removes the mean
  double s = 0.0;
  for (std::size_t i = 1; i < spectrum_.size(); ++i) s += std::norm(spectrum_[i]);
  return std::sqrt(s);
}

double GridField::l2_norm() const {
  double s = 0.0;
  for (const cplx& c : spectrum_) s += std::norm(c);
  return std::sqrt(s);
}

double GridField::grad_l2_norm() const {
  double s = 0.0;
  for (std::size_t i = 1; i < spectrum_.size(); ++i) {
    s += k_of_freq(freq_of_index(i, dim_, n_)) * std::norm(spectrum_[i]);
  }
  return std::sqrt(s);
}

GridField GridField::shifted(const std::vector<double>& tau) const {
  std::vector<cplx> shifted(spectrum_.size());
  for (std::size_t i = 0; i < spectrum_.size(); ++i) {
    auto xi = freq_of_index(i, dim_, n_);
    double phase = 0.0;
    for (int a = 0; a < dim_; ++a) phase += xi[a] * tau[a];
    shifted[i] = spectrum_[i] * std::polar(1.0, 2.0 * M_PI * phase);
  }
  return from_spectrum(dim_, n_, shifted);
}

double GridField::eval(const std::vector<double>& x) const {
  cplx acc(0.0, 0.0);
  for (std::size_t i = 0; i < spectrum_.size(); ++i) {
    auto xi = freq_of_index(i, dim_, n_);
    double phase = 0.0;
    for (int a = 0; a < dim_; ++a) phase += xi[a] * x[a];
    acc += spectrum_[i] * std::polar(1.0, 2.0 * M_PI * phase);
  }
  return acc.real();
}

std::vector<double> GridField::eval_grad(const std::vector<double>& x) const {
  std::vector<cplx> acc(dim_, cplx(0.0, 0.0));
  for (std::size_t i = 0; i < spectrum_.size(); ++i) {
    auto xi = freq_of_index(i, dim_, n_);
    double phase = 0.0;
    for (int a = 0; a < dim_; ++a) phase += xi[a] * x[a];
    const cplx val = spectrum_[i] * std::polar(1.0, 2.0 * M_PI * phase);
    for (int a = 0; a < dim_; ++a) acc[a] += cplx(0.0, 2.0 * M_PI * xi[a]) * val;
  }
  std::vector<double> g(dim_);
  for (int a = 0; a < dim_; ++a) g[a] = acc[a].real();
  return g;
}

double h_minus1_norm(const GridField& field, double mean_tol) {
  if (std::abs(field.mean()) > mean_tol)
    throw std::domain_error("h_minus1_norm: field is not mean-zero");
  double s = 0.0;
  const auto& spec = field.spectrum();
  for (std::size_t i = 1; i < spec.size(); ++i) {
    s += std::norm(spec[i]) / k_of_freq(freq_of_index(i, field.dim(), field.n()));
  }
  return std::sqrt(s);
}

double quadratic_form(const KernelSpec& kernel, const GridField& mu) {
  if (kernel.dim() != mu.dim()) throw std::invalid_argument("quadratic_form: dim mismatch");
  double s = 0.0;
  for (const auto& [xi, kh] : kernel.coeffs()) {
    if (linf_of_freq(xi) > mu.n() / 2) continue;  // unresolved on this grid
    s += kh * std::norm(mu.fhat(xi));
  }
  return s;
}

double interaction_energy(const KernelSpec& kernel, double gamma, const GridField& m) {
  return 0.5 * gamma * quadratic_form(kernel, m);
}

GridField convolve(const KernelSpec& kernel, const GridField& field) {
  if (kernel.dim() != field.dim()) throw std::invalid_argument("convolve: dim mismatch");
  if (field.n() / 2 <= kernel.cutoff())
    throw std::invalid_argument("convolve: grid under-resolves the kernel (need N/2 > cutoff)");
  std::vector<cplx> out(field.spectrum().size(), cplx(0.0, 0.0));
  for (const auto& [xi, kh] : kernel.coeffs()) {
    const std::size_t i = index_of_freq(xi, field.dim(), field.n());
    out[i] = kh * field.spectrum()[i];
  }
  return GridField::from_spectrum(field.dim(), field.n(), out);
}

}  // namespace mfg
