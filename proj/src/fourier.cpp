#include "mfg/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace mfg {

namespace {
std::mutex planner_mutex;  // FFTW planner is not thread-safe
}

SpectralContext::SpectralContext(int dim, int points_per_axis)
    : dim_(dim), n_(points_per_axis) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("SpectralContext: dim must be 1..3");
  if (n_ < 2 || n_ % 2 != 0) throw std::invalid_argument("SpectralContext: N must be even and >= 2");
  size_ = 1;
  for (int a = 0; a < dim_; ++a) size_ *= static_cast<std::size_t>(n_);

  buf_ = fftw_alloc_complex(size_);
  std::vector<int> shape(dim_, n_);
  std::lock_guard<std::mutex> lock(planner_mutex);
  fwd_plan_ = fftw_plan_dft(dim_, shape.data(), static_cast<fftw_complex*>(buf_),
                            static_cast<fftw_complex*>(buf_), FFTW_FORWARD, FFTW_ESTIMATE);
  bwd_plan_ = fftw_plan_dft(dim_, shape.data(), static_cast<fftw_complex*>(buf_),
                            static_cast<fftw_complex*>(buf_), FFTW_BACKWARD, FFTW_ESTIMATE);
}

SpectralContext::~SpectralContext() {
  std::lock_guard<std::mutex> lock(planner_mutex);
  fftw_destroy_plan(static_cast<fftw_plan>(fwd_plan_));
  fftw_destroy_plan(static_cast<fftw_plan>(bwd_plan_));
  fftw_free(buf_);
}

void SpectralContext::forward(const std::vector<double>& values, std::vector<cplx>& coeffs) {
  if (values.size() != size_) throw std::invalid_argument("forward: size mismatch");
  auto* b = static_cast<fftw_complex*>(buf_);
  for (std::size_t i = 0; i < size_; ++i) {
    b[i][0] = values[i];
    b[i][1] = 0.0;
  }
  fftw_execute(static_cast<fftw_plan>(fwd_plan_));
  coeffs.resize(size_);
  const double scale = 1.0 / static_cast<double>(size_);
  for (std::size_t i = 0; i < size_; ++i) coeffs[i] = cplx(b[i][0] * scale, b[i][1] * scale);
}

void SpectralContext::inverse(const std::vector<cplx>& coeffs, std::vector<double>& values) {
  if (coeffs.size() != size_) throw std::invalid_argument("inverse: size mismatch");
  auto* b = static_cast<fftw_complex*>(buf_);
  for (std::size_t i = 0; i < size_; ++i) {
    b[i][0] = coeffs[i].real();
    b[i][1] = coeffs[i].imag();
  }
  fftw_execute(static_cast<fftw_plan>(bwd_plan_));
  values.resize(size_);
  for (std::size_t i = 0; i < size_; ++i) values[i] = b[i][0];
}

void SpectralContext::forward_c(const std::vector<cplx>& in, std::vector<cplx>& out) {
  if (in.size() != size_) throw std::invalid_argument("forward_c: size mismatch");
  auto* b = static_cast<fftw_complex*>(buf_);
  for (std::size_t i = 0; i < size_; ++i) {
    b[i][0] = in[i].real();
    b[i][1] = in[i].imag();
  }
  fftw_execute(static_cast<fftw_plan>(fwd_plan_));
  out.resize(size_);
  const double scale = 1.0 / static_cast<double>(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] = cplx(b[i][0] * scale, b[i][1] * scale);
}

void SpectralContext::inverse_c(const std::vector<cplx>& in, std::vector<cplx>& out) {
  if (in.size() != size_) throw std::invalid_argument("inverse_c: size mismatch");
  auto* b = static_cast<fftw_complex*>(buf_);
  for (std::size_t i = 0; i < size_; ++i) {
    b[i][0] = in[i].real();
    b[i][1] = in[i].imag();
  }
  fftw_execute(static_cast<fftw_plan>(bwd_plan_));
  out.resize(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] = cplx(b[i][0], b[i][1]);
}

SpectralContext& context_for(int dim, int points_per_axis) {
  thread_local std::map<std::pair<int, int>, std::unique_ptr<SpectralContext>> cache;
  auto key = std::make_pair(dim, points_per_axis);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, std::make_unique<SpectralContext>(dim, points_per_axis)).first;
  }
  return *it->second;
}

std::vector<int> freq_of_index(std::size_t i, int dim, int n) {
  std::vector<int> xi(dim);
  for (int a = dim - 1; a >= 0; --a) {
    int idx = static_cast<int>(i % static_cast<std::size_t>(n));
    i /= static_cast<std::size_t>(n);
    xi[a] = idx <= n / 2 ? idx : idx - n;
  }
  return xi;
}

std::size_t index_of_freq(const std::vector<int>& xi, int dim, int n) {
  std::size_t i = 0;
  for (int a = 0; a < dim; ++a) {
    int idx = ((xi[a] % n) + n) % n;
    i = i * static_cast<std::size_t>(n) + static_cast<std::size_t>(idx);
  }
  return i;
}

double k_of_freq(const std::vector<int>& xi) {
  double s = 0.0;
  for (int c : xi) s += static_cast<double>(c) * static_cast<double>(c);
  return 4.0 * M_PI * M_PI * s;
}

int linf_of_freq(const std::vector<int>& xi) {
  int m = 0;
  for (int c : xi) m = std::max(m, std::abs(c));
  return m;
}

bool is_zero_freq(const std::vector<int>& xi) {
  for (int c : xi)
    if (c != 0) return false;
  return true;
}

int dealias_cutoff(int n) { return n / 3; }

void dealias(std::vector<cplx>& coeffs, int dim, int n) {
  const int cut = dealias_cutoff(n);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    auto xi = freq_of_index(i, dim, n);
    bool kill = linf_of_freq(xi) > cut;
    for (int c : xi)
      if (c == n / 2) kill = true;  // Nyquist row has no signed frequency
    if (kill) coeffs[i] = cplx(0.0, 0.0);
  }
}

std::vector<int> canonical_pair(const std::vector<int>& xi) {
  for (int c : xi) {
    if (c > 0) return xi;
    if (c < 0) {
      std::vector<int> m(xi.size());
      for (std::size_t a = 0; a < xi.size(); ++a) m[a] = -xi[a];
      return m;
    }
  }
  return xi;  // zero vector
}

std::vector<std::vector<int>> enumerate_pairs(int dim, int cutoff) {
  std::vector<std::vector<int>> out;
  if (dim == 1) {
    for (int x = 1; x <= cutoff; ++x) out.push_back({x});
    return out;
  }
  if (dim == 2) {
    for (int x = -cutoff; x <= cutoff; ++x) {
      for (int y = -cutoff; y <= cutoff; ++y) {
        std::vector<int> xi{x, y};
        if (is_zero_freq(xi)) continue;
        if (canonical_pair(xi) != xi) continue;
        out.push_back(xi);
      }
    }
    return out;
  }
  if (dim == 3) {
    for (int x = -cutoff; x <= cutoff; ++x)
      for (int y = -cutoff; y <= cutoff; ++y)
        for (int z = -cutoff; z <= cutoff; ++z) {
          std::vector<int> xi{x, y, z};
          if (is_zero_freq(xi)) continue;
          if (canonical_pair(xi) != xi) continue;
          out.push_back(xi);
        }
    return out;
  }
  throw std::invalid_argument("enumerate_pairs: dim must be 1..3");
}

}  // namespace mfg
