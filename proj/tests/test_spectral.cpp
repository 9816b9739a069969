#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "mfg/grid_field.hpp"
#include "mfg/kernel.hpp"
#include "mfg/util.hpp"

using namespace mfg;

namespace {

KernelSpec random_kernel(CounterRng& rng, int dim) {
  std::vector<std::pair<FreqVec, double>> entries;
  const int modes = 1 + static_cast<int>(rng.uniform() * 4);
  for (int m = 0; m < modes; ++m) {
    FreqVec xi(dim);
    bool zero = true;
    for (int a = 0; a < dim; ++a) {
      xi[a] = static_cast<int>(rng.uniform(-5.0, 6.0));
      if (xi[a] != 0) zero = false;
    }
    if (zero) xi[0] = 1;
    entries.emplace_back(xi, rng.uniform(-1.0, 1.0));
  }
  // de-conflict +-pair collisions by keeping the first value seen
  std::vector<std::pair<FreqVec, double>> unique;
  for (auto& e : entries) {
    bool seen = false;
    for (auto& u : unique) {
      if (canonical_pair(u.first) == canonical_pair(e.first)) seen = true;
    }
    if (!seen) unique.push_back(e);
  }
  return KernelSpec::from_coeffs(dim, unique);
}

GridField random_mean_zero_field(CounterRng& rng, int n, int max_mode) {
  std::vector<cplx> coeffs(n, cplx(0.0, 0.0));
  for (int x = 1; x <= max_mode; ++x) {
    cplx c(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    coeffs[index_of_freq({x}, 1, n)] = c;
    coeffs[index_of_freq({-x}, 1, n)] = std::conj(c);
  }
  return GridField::from_spectrum(1, n, coeffs);
}

}  // namespace

TEST_CASE("cosine kernel coefficients") {
  auto K = KernelSpec::cosine();
  CHECK(K.khat({1}) == -0.5);
  CHECK(K.khat({-1}) == -0.5);
  CHECK(K.khat({2}) == 0.0);
  CHECK(K.khat({5}) == 0.0);
  CHECK(K.cutoff() == 1);
  // evenness is part of construction
  for (const auto& [xi, v] : K.coeffs()) {
    CHECK(K.khat({-xi[0]}) == v);
  }
}

TEST_CASE("cosine kernel quadratic form on its own mode is negative") {
  auto K = KernelSpec::cosine();
  auto mu = GridField::cosine_mode(1, 64, {1}, 1.0);
  CHECK(quadratic_form(K, mu) == doctest::Approx(-0.25).epsilon(1e-12));
}

TEST_CASE("two-mode kernel coefficients") {
  auto K = KernelSpec::two_mode(1.0, 1.0);
  CHECK(K.khat({1}) == -0.5);
  CHECK(K.khat({2}) == -0.5);
  auto K2 = KernelSpec::two_mode(2.0, 4.0);
  CHECK(K2.khat({1}) == -1.0);
  CHECK(K2.khat({-2}) == -2.0);
}

TEST_CASE("sigma_xi values for the cosine kernel") {
  auto K = KernelSpec::cosine();
  const double pi4 = std::pow(M_PI, 4);
  CHECK(sigma_xi(ModelParams(1.0, 0.0, K), {1}) == doctest::Approx(16.0 * pi4).epsilon(1e-13));
  CHECK(sigma_xi(ModelParams(1.0, 4.0 * M_PI * M_PI, K), {1}) ==
        doctest::Approx(8.0 * pi4).epsilon(1e-13));
  // sigma vanishes exactly at the threshold coupling
  const double gc = 8.0 * M_PI * M_PI;
  CHECK(std::abs(sigma_xi(ModelParams(1.0, gc, K), {1})) <= 1e-12 * 16.0 * pi4);
  CHECK_THROWS_AS(sigma_xi(ModelParams(1.0, 1.0, K), {0}), std::domain_error);
}

TEST_CASE("critical coupling: cosine kernel, nu sweep") {
  auto K = KernelSpec::cosine();
  for (double nu : {0.5, 1.0, 2.0}) {
    auto cc = critical_coupling(nu, K);
    const double expected = 8.0 * M_PI * M_PI * nu * nu;
    CHECK(std::abs(cc.gamma_c - expected) <= 1e-12 * expected);
    REQUIRE(cc.critical_set.size() == 1);
    CHECK(cc.critical_set[0] == FreqVec{1});
    CHECK(std::abs(c_star(nu, K) - M_PI * std::sqrt(2.0)) <= 1e-12 * M_PI * std::sqrt(2.0));
  }
}

TEST_CASE("critical coupling: monotone kernel has no transition") {
  auto K = KernelSpec::from_coeffs(1, {{{1}, 0.5}, {{3}, 0.0}});
  auto cc = critical_coupling(1.0, K);
  CHECK(!cc.finite());
  CHECK(cc.critical_set.empty());
  CHECK_THROWS_AS(c_star(1.0, K), std::domain_error);
}

TEST_CASE("two-mode kernel: exact tie at a1/a2 = 1/4") {
  auto cc = critical_coupling(1.0, KernelSpec::two_mode(1.0, 4.0));
  CHECK(cc.finite());
  CHECK(cc.degenerate());
  REQUIRE(cc.critical_set.size() == 2);
  CHECK_THROWS_WITH_AS(c_star(1.0, KernelSpec::two_mode(1.0, 4.0)),
                       doctest::Contains("degenerate critical mode"), std::domain_error);
}

TEST_CASE("two-mode kernel: critical mode switch across the 1/4 ratio") {
  // a1/a2 > 1/4 -> xi0 = +-1, a1/a2 < 1/4 -> xi0 = +-2
  auto above = critical_coupling(1.0, KernelSpec::two_mode(1.0, 3.0));
  REQUIRE(above.critical_set.size() == 1);
  CHECK(above.critical_set[0] == FreqVec{1});
  auto below = critical_coupling(1.0, KernelSpec::two_mode(1.0, 5.0));
  REQUIRE(below.critical_set.size() == 1);
  CHECK(below.critical_set[0] == FreqVec{2});
}

TEST_CASE("2d kernel: critical pair is (1,0)") {
  auto cc = critical_coupling(1.0, KernelSpec::cosine_2d());
  REQUIRE(cc.critical_set.size() == 1);
  CHECK(cc.critical_set[0] == FreqVec{1, 0});
  CHECK(std::abs(cc.gamma_c - 8.0 * M_PI * M_PI) <= 1e-12 * cc.gamma_c);
}

TEST_CASE("spectral gap: cosine kernel") {
  auto K = KernelSpec::cosine();
  auto gap0 = spectral_gap(ModelParams(1.0, 0.0, K), 8);
  REQUIRE(gap0.has_value());
  CHECK(*gap0 == doctest::Approx(4.0 * M_PI * M_PI).epsilon(1e-13));

  const double gc = critical_coupling(1.0, K).gamma_c;
  CHECK(!spectral_gap(ModelParams(1.0, gc, K), 8).has_value());

  // rho(gamma)/sqrt(gamma_c-gamma) -> C*; exact for the cosine kernel once the
  // minimum sits on the critical mode
  const double cs = c_star(1.0, K);
  for (double f : {0.9, 0.99, 0.9999}) {
    auto gap = spectral_gap(ModelParams(1.0, f * gc, K), 8);
    REQUIRE(gap.has_value());
    CHECK(*gap / std::sqrt(gc - f * gc) == doctest::Approx(cs).epsilon(1e-12));
  }
}

TEST_CASE("gap scaling identity sigma_xi0 = k |Khat| (gamma_c - gamma)") {
  auto K = KernelSpec::cosine();
  const double gc = critical_coupling(1.0, K).gamma_c;
  const double k = 4.0 * M_PI * M_PI;
  CounterRng rng(7);
  for (int i = 0; i < 20; ++i) {
    const double g = rng.uniform(0.0, gc);
    const double sigma = sigma_xi(ModelParams(1.0, g, K), {1});
    CHECK(sigma == doctest::Approx(k * 0.5 * (gc - g)).epsilon(1e-12));
  }
}

TEST_CASE("mode matrix entries and identities") {
  auto K = KernelSpec::cosine();
  auto M = mode_matrix(ModelParams(1.0, 1.0, K), {1});
  const double k = 4.0 * M_PI * M_PI;
  CHECK(M.m00 == doctest::Approx(k).epsilon(1e-14));
  CHECK(M.m01 == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(M.m10 == doctest::Approx(-k).epsilon(1e-14));
  CHECK(M.m11 == doctest::Approx(-k).epsilon(1e-14));
  CHECK(M.m00 + M.m11 == 0.0);  // trace-free by construction
  CHECK_THROWS_AS(mode_matrix(ModelParams(1.0, 1.0, K), {0}), std::domain_error);
}

TEST_CASE("mode identity M^2 = sigma I and eigenvalue trichotomy, randomized") {
  CounterRng rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = rng.uniform() < 0.75 ? 1 : 2;
    auto K = random_kernel(rng, dim);
    ModelParams p(rng.uniform(0.25, 3.0), rng.uniform(0.0, 300.0), K);
    FreqVec xi(dim, 0);
    xi[0] = 1 + static_cast<int>(rng.uniform() * 5);
    if (dim == 2) xi[1] = static_cast<int>(rng.uniform(-3.0, 4.0));

    const auto M = mode_matrix(p, xi);
    const double sigma = sigma_xi(p, xi);
    // entrywise M^2 - sigma I
    const double r00 = M.m00 * M.m00 + M.m01 * M.m10 - sigma;
    const double r01 = M.m00 * M.m01 + M.m01 * M.m11;
    const double r10 = M.m10 * M.m00 + M.m11 * M.m10;
    const double r11 = M.m10 * M.m01 + M.m11 * M.m11 - sigma;
    const double bound = 1e-12 * (1.0 + std::abs(sigma));
    CHECK(std::abs(r00) <= bound);
    CHECK(std::abs(r01) <= bound);
    CHECK(std::abs(r10) <= bound);
    CHECK(std::abs(r11) <= bound);

    // char poly is lambda^2 - sigma: trichotomy via the discriminant
    const double tr = M.m00 + M.m11;
    const double det = M.m00 * M.m11 - M.m01 * M.m10;
    CHECK(std::abs(tr) <= 1e-12 * (1.0 + std::abs(M.m00)));
    CHECK(std::abs(det + sigma) <= bound);
    if (sigma > bound) {
      const double lam = std::sqrt(sigma);
      CHECK(std::abs(lam * lam - sigma) <= bound);
    } else if (sigma < -bound) {
      // eigenvalues +- i sqrt(|sigma|): real part zero since trace is zero
      CHECK(tr * tr - 4.0 * det < 0.0);
    } else {
      // nilpotent double zero with nonzero matrix
      CHECK(std::abs(M.m10) > 0.0);
    }
  }
}

TEST_CASE("threshold consistency: all sigma positive iff gamma < gamma_c") {
  CounterRng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto K = random_kernel(rng, 1);
    bool has_negative = false;
    for (const auto& [xi, v] : K.coeffs()) {
      (void)xi;
      if (v < 0.0) has_negative = true;
    }
    if (!has_negative) continue;
    const double nu = rng.uniform(0.3, 2.0);
    const double gc = critical_coupling(nu, K).gamma_c;
    for (double f : {0.5, 0.99, 1.01, 1.5}) {
      ModelParams p(nu, f * gc, K);
      bool all_positive = true;
      for (const auto& xi : enumerate_pairs(1, K.cutoff() + 3)) {
        if (!(sigma_xi(p, xi) > 0.0)) all_positive = false;
      }
      CHECK(all_positive == (f < 1.0));
    }
  }
}

TEST_CASE("grid field: spectral round trip") {
  CounterRng rng(3);
  std::vector<double> vals(64);
  for (auto& v : vals) v = rng.uniform(-2.0, 2.0);
  GridField f(1, 64, vals);
  GridField back = GridField::from_spectrum(1, 64, f.spectrum());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    CHECK(std::abs(back.values()[i] - vals[i]) <= 1e-12 * (1.0 + std::abs(vals[i])));
  }
}

TEST_CASE("grid field 2d: round trip and h^-1 value") {
  auto f = GridField::cosine_mode(2, 32, {1, 0}, 1.0);
  CHECK(std::abs(f.fhat({1, 0}).real() - 0.5) <= 1e-12);
  CHECK(h_minus1_norm(f) == doctest::Approx(1.0 / (2.0 * M_PI * std::sqrt(2.0))).epsilon(1e-12));
}

TEST_CASE("h^-1 norm: frozen value, zero field, translation invariance") {
  auto mu = GridField::cosine_mode(1, 64, {1}, 1.0);
  // muhat(+-1) = 1/2: norm = sqrt(2 * (1/4) / (4 pi^2)) = 1/(2 pi sqrt(2))
  CHECK(h_minus1_norm(mu) == doctest::Approx(1.0 / (2.0 * M_PI * std::sqrt(2.0))).epsilon(1e-12));
  CHECK(h_minus1_norm(GridField::constant(1, 64, 0.0)) == 0.0);
  auto shifted = mu.shifted({0.3178});
  CHECK(h_minus1_norm(shifted) == doctest::Approx(h_minus1_norm(mu)).epsilon(1e-12));
  CHECK_THROWS_AS(h_minus1_norm(GridField::constant(1, 64, 0.5)), std::domain_error);
}

TEST_CASE("quadratic form: zero field, nonnegative kernels, Parseval vs grid integral") {
  auto K = KernelSpec::cosine();
  CHECK(quadratic_form(K, GridField::constant(1, 64, 0.0)) == 0.0);

  auto Kpos = KernelSpec::from_coeffs(1, {{{1}, 0.5}, {{2}, 0.25}, {{4}, 0.5}});
  CounterRng rng(5);
  for (int i = 0; i < 100; ++i) {
    auto mu = random_mean_zero_field(rng, 64, 8);
    CHECK(quadratic_form(Kpos, mu) >= -1e-12);
  }

  // Parseval: integral mu (K*mu) dx computed on the grid
  for (int i = 0; i < 10; ++i) {
    auto mu = random_mean_zero_field(rng, 64, 8);
    auto conv = convolve(K, mu);
    double grid_integral = 0.0;
    for (std::size_t j = 0; j < mu.values().size(); ++j) {
      grid_integral += mu.values()[j] * conv.values()[j];
    }
    grid_integral /= static_cast<double>(mu.values().size());
    const double qf = quadratic_form(K, mu);
    CHECK(std::abs(grid_integral - qf) <= 1e-10 * (1.0 + std::abs(qf)));
  }
}

TEST_CASE("interaction energy: uniform density, frozen value, translation invariance") {
  auto K = KernelSpec::cosine();
  CHECK(interaction_energy(K, 3.0, GridField::constant(1, 64, 1.0)) == 0.0);
  auto m = GridField::cosine_mode(1, 64, {1}, 0.1, 1.0);
  CHECK(interaction_energy(K, 1.0, m) == doctest::Approx(-0.00125).epsilon(1e-12));
  CHECK(interaction_energy(K, 1.0, m.shifted({0.4217})) ==
        doctest::Approx(-0.00125).epsilon(1e-10));
}

TEST_CASE("convolution: spectral product, constants, translation commutes") {
  auto K = KernelSpec::cosine();
  auto f = GridField::cosine_mode(1, 64, {1}, 1.0);
  auto conv = convolve(K, f);
  auto expected = GridField::cosine_mode(1, 64, {1}, -0.5);
  for (std::size_t i = 0; i < conv.values().size(); ++i) {
    CHECK(std::abs(conv.values()[i] - expected.values()[i]) <= 1e-12);
  }
  auto c = convolve(K, GridField::constant(1, 64, 2.5));
  CHECK(c.max_abs() <= 1e-13);

  std::vector<double> tau{0.2531};
  auto a = convolve(K, f.shifted(tau));
  auto b = convolve(K, f).shifted(tau);
  for (std::size_t i = 0; i < a.values().size(); ++i) {
    CHECK(std::abs(a.values()[i] - b.values()[i]) <= 1e-12);
  }

  auto tiny = GridField::cosine_mode(1, 4, {1}, 1.0);
  CHECK_THROWS_AS(convolve(KernelSpec::two_mode(1.0, 1.0), tiny), std::invalid_argument);
}

TEST_CASE("mode report: rows and summary") {
  auto rep = build_mode_report(ModelParams(1.0, 10.0, KernelSpec::cosine()), 6);
  CHECK(rep.rows.size() == 6);
  CHECK(rep.gamma_c == doctest::Approx(8.0 * M_PI * M_PI).epsilon(1e-13));
  REQUIRE(rep.c_star.has_value());
  CHECK(*rep.c_star == doctest::Approx(M_PI * std::sqrt(2.0)).epsilon(1e-13));
  REQUIRE(rep.rho_gamma.has_value());
  for (const auto& row : rep.rows) {
    const double k = k_of_freq(row.xi);
    CHECK(row.sigma == doctest::Approx(k * k + 10.0 * k * row.khat).epsilon(1e-12));
  }
}
