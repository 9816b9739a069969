#pragma once
//==============================================================================
// util.hpp
// Small shared utilities: least-squares fits, counter-based RNG, thread pool.
//==============================================================================

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace mfg {

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms_residual = 0.0;   // RMS of fit residuals
  double max_residual = 0.0;
  std::size_t n = 0;
};

// Ordinary least squares y = slope*x + intercept.
LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// Fit log(y) = slope*log(x) + c. Points with y <= floor are skipped.
LinearFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y,
                     double floor = 1e-300);

// Fit log(y) = slope*x + c (exponential rate in x). Same floor rule.
LinearFit fit_semilog(const std::vector<double>& x, const std::vector<double>& y,
                      double floor = 1e-300);

//------------------------------------------------------------------------------
// CounterRng: counter-based generator. Output i of stream (seed, stream) is
// splitmix64 applied to seed ^ mix(stream) plus i * golden ratio. Draws are
// reproducible across platforms and independent streams never overlap keys.
//------------------------------------------------------------------------------
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();
  // uniform in [0,1)
  double uniform();
  double uniform(double a, double b);
  // standard normal via Box-Muller on two uniforms (documented, portable)
  double normal();

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

//------------------------------------------------------------------------------
// parallel_for_tasks: run tasks[0..n) on up to `threads` workers. Each task
// writes only to its own slot, so results are deterministic regardless of
// scheduling. threads <= 1 runs inline.
//------------------------------------------------------------------------------
void parallel_for_tasks(std::size_t n, const std::function<void(std::size_t)>& task,
                        unsigned threads);

// Resolve worker count: explicit flag > TOOL_THREADS env > hardware threads.
unsigned resolve_threads(int flag_value);

}  // namespace mfg
