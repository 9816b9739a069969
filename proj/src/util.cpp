#include "mfg/util.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

namespace mfg {

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit_line: need >= 2 points");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double det = n * sxx - sx * sx;
  if (det == 0.0) throw std::invalid_argument("fit_line: degenerate abscissae");
  LinearFit f;
  f.slope = (n * sxy - sx * sy) / det;
  f.intercept = (sy - f.slope * sx) / n;
  double ss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (f.slope * x[i] + f.intercept);
    ss += r * r;
    f.max_residual = std::max(f.max_residual, std::abs(r));
  }
  f.rms_residual = std::sqrt(ss / n);
  f.n = x.size();
  return f;
}

namespace {
LinearFit fit_transformed(const std::vector<double>& x, const std::vector<double>& y, double floor,
                          bool log_x) {
  std::vector<double> tx, ty;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(y[i] > floor) || !std::isfinite(y[i])) continue;
    if (log_x && !(x[i] > 0.0)) continue;
    tx.push_back(log_x ? std::log(x[i]) : x[i]);
    ty.push_back(std::log(y[i]));
  }
  return fit_line(tx, ty);
}
}  // namespace

LinearFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y, double floor) {
  return fit_transformed(x, y, floor, true);
}

LinearFit fit_semilog(const std::vector<double>& x, const std::vector<double>& y, double floor) {
  return fit_transformed(x, y, floor, false);
}

namespace {
inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}
}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(splitmix64(seed ^ splitmix64(stream * 0xda942042e4dd58b5ull + 1))) {}

std::uint64_t CounterRng::next_u64() {
  return splitmix64(key_ + (counter_++) * 0x9e3779b97f4a7c15ull);
}

double CounterRng::uniform() {
  // top 53 bits -> [0,1)
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::uniform(double a, double b) { return a + (b - a) * uniform(); }

double CounterRng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

void parallel_for_tasks(std::size_t n, const std::function<void(std::size_t)>& task,
                        unsigned threads) {
  if (n == 0) return;
  if (threads <= 1 || n == 1) {
    for (std::size_t i = 0; i < n; ++i) task(i);
    return;
  }
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::atomic<bool> failed{false};
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n || failed.load()) break;
        try {
          task(i);
        } catch (...) {
          failed.store(true);
          break;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failed.load()) throw std::runtime_error("parallel_for_tasks: a task threw");
}

unsigned resolve_threads(int flag_value) {
  if (flag_value > 0) return static_cast<unsigned>(flag_value);
  if (const char* env = std::getenv("TOOL_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

}  // namespace mfg
