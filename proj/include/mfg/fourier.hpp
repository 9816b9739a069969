#pragma once
//==============================================================================
// fourier.hpp
// Discrete Fourier machinery on the uniform torus grid [0,1)^d.
//
// Conventions: fhat(xi) = (1/N^d) sum_j f(x_j) exp(-2*pi*i xi.x_j), so forward
// coefficients approximate the continuous Fourier integral and the inverse is
// the plain exponential sum. Frequencies per axis live in {-N/2+1,...,N/2}.
//
// SpectralContext wraps FFTW plans plus scratch for one grid shape. Plan
// creation is serialized (FFTW planner is not thread-safe); execution is
// reentrant. Use context_for() to get a thread-local instance per worker.
//==============================================================================

#include <complex>
#include <vector>

namespace mfg {

using cplx = std::complex<double>;

class SpectralContext {
 public:
  SpectralContext(int dim, int points_per_axis);
  ~SpectralContext();
  SpectralContext(const SpectralContext&) = delete;
  SpectralContext& operator=(const SpectralContext&) = delete;

  int dim() const { return dim_; }
  int n() const { return n_; }
  std::size_t size() const { return size_; }

  // real grid values -> Fourier coefficients (1/N^d scaling)
  void forward(const std::vector<double>& values, std::vector<cplx>& coeffs);
  // Fourier coefficients -> real grid values (imaginary parts dropped)
  void inverse(const std::vector<cplx>& coeffs, std::vector<double>& values);
  void forward_c(const std::vector<cplx>& in, std::vector<cplx>& out);
  void inverse_c(const std::vector<cplx>& in, std::vector<cplx>& out);

 private:
  int dim_;
  int n_;
  std::size_t size_;
  void* fwd_plan_;
  void* bwd_plan_;
  void* buf_;  // fftw_complex scratch
};

// Thread-local context cache keyed by (dim, n).
SpectralContext& context_for(int dim, int points_per_axis);

//------------------------------------------------------------------------------
// Frequency bookkeeping for flat row-major indices.
//------------------------------------------------------------------------------

// frequency vector of flat index i (axis frequency in {-N/2+1,...,N/2})
std::vector<int> freq_of_index(std::size_t i, int dim, int n);
// flat index of a frequency vector (components reduced mod N)
std::size_t index_of_freq(const std::vector<int>& xi, int dim, int n);
// k_xi = (2*pi*|xi|)^2
double k_of_freq(const std::vector<int>& xi);
// max_a |xi_a|
int linf_of_freq(const std::vector<int>& xi);
bool is_zero_freq(const std::vector<int>& xi);

// Two-thirds rule: keep modes with max_a |xi_a| <= floor(N/3).
int dealias_cutoff(int n);
// Zero every coefficient beyond the dealias cutoff (and the Nyquist axis rows).
void dealias(std::vector<cplx>& coeffs, int dim, int n);

// Canonical representative of the pair {xi,-xi}: first nonzero component > 0.
std::vector<int> canonical_pair(const std::vector<int>& xi);

// All canonical pair representatives with 0 < |xi|_inf <= cutoff.
std::vector<std::vector<int>> enumerate_pairs(int dim, int cutoff);

}  // namespace mfg
