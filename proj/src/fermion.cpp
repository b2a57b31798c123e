#include "gep/fermion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gep {

void validate(const ChainParams& p) {
  if (p.n_sites < 4 || p.n_sites % 2 != 0)
    throw std::invalid_argument("ChainParams: n_sites must be even and >= 4");
  if (p.g < 0.0)
    throw std::invalid_argument("ChainParams: g must be >= 0");
  if (p.gamma < 0.0 || p.gamma > 1.0)
    throw std::invalid_argument("ChainParams: gamma must be in [0, 1]");
}

std::vector<double> momentum_grid(int n_sites) {
  if (n_sites < 2 || n_sites % 2 != 0)
    throw std::invalid_argument("momentum_grid: n_sites must be even");
  std::vector<double> grid;
  grid.reserve(n_sites);
  for (int m = 1; m <= n_sites / 2; ++m) {
    const double k = (2 * m - 1) * std::numbers::pi / n_sites;
    grid.push_back(-k);
    grid.push_back(k);
  }
  std::sort(grid.begin(), grid.end());
  return grid;
}

double dispersion(double g, double gamma, double k) {
  const double a = -1.0 + 2.0 * g * std::cos(k);
  const double b = 2.0 * g * gamma * std::sin(k);
  return 2.0 * std::sqrt(a * a + b * b);
}

BdgCoefficients bdg_coefficients(double g, double gamma, double k) {
  BdgCoefficients c;
  c.xi = 2.0 * (1.0 - 2.0 * g * std::cos(k));
  c.delta = 2.0 * g * gamma * std::sin(k);
  const double eps = std::sqrt(c.xi * c.xi + 4.0 * c.delta * c.delta);
  const double v2 = 0.5 * (1.0 - c.xi / eps);
  c.u = std::sqrt(1.0 - v2);
  c.v = (std::sin(k) >= 0 ? 1.0 : -1.0) * std::sqrt(v2);
  return c;
}

double ground_energy_analytic(const ChainParams& p) {
  validate(p);
  double sum = 0.0;
  for (double k : momentum_grid(p.n_sites)) sum += dispersion(p.g, p.gamma, k);
  return -0.5 * sum;
}

double purity_uN_finite(const ChainParams& p) {
  validate(p);
  double sum = 0.0;
  for (double k : momentum_grid(p.n_sites)) {
    const BdgCoefficients c = bdg_coefficients(p.g, p.gamma, k);
    const double d = c.v * c.v - 0.5;
    sum += d * d;
  }
  return 4.0 / p.n_sites * sum;
}

double purity_uN_thermo(double g, double gamma) {
  if (gamma <= 0.0 || gamma > 1.0)
    throw std::invalid_argument(
        "purity_uN_thermo: requires 0 < gamma <= 1 (the isotropic chain "
        "needs a different observable algebra and is not handled here)");
  if (g < 0.0) throw std::invalid_argument("purity_uN_thermo: g must be >= 0");
  if (g > kCriticalCoupling) return 1.0 / (1.0 + gamma);
  if (std::abs(1.0 - gamma) < 1e-8) return 1.0 - 2.0 * g * g;
  const double gamma2 = gamma * gamma;
  const double radical = std::sqrt(1.0 - 4.0 * g * g * (1.0 - gamma2));
  return (1.0 - gamma2 / radical) / (1.0 - gamma2);
}

double shifted_purity(double g, double gamma) {
  return purity_uN_thermo(g, gamma) - 1.0 / (1.0 + gamma);
}

double number_variance(const ChainParams& p) {
  validate(p);
  // 4 u^2 v^2 per (k, -k) pair, i.e. 2 u^2 v^2 per grid mode.
  double var = 0.0;
  for (double k : momentum_grid(p.n_sites)) {
    const BdgCoefficients c = bdg_coefficients(p.g, p.gamma, k);
    var += 2.0 * c.u * c.u * c.v * c.v;
  }
  return var;
}

double purity_so2N(const ChainParams& p) {
  validate(p);
  // Mode expectations of the quadratic algebra in the paired ground state:
  // diagonal <n_k - 1/2> = v_k^2 - 1/2, pairing |<c_k^+ c_-k^+>| = u_k v_k,
  // everything else zero. Same 4/N normalization as the number-conserving
  // purity, which the vacuum calibrates to 1.
  double sum = 0.0;
  for (double k : momentum_grid(p.n_sites)) {
    const BdgCoefficients c = bdg_coefficients(p.g, p.gamma, k);
    const double d = c.v * c.v - 0.5;
    sum += d * d + c.u * c.u * c.v * c.v;
  }
  return 4.0 / p.n_sites * sum;
}

ExponentFit critical_exponent_fit(double gamma, double g_lo, double g_hi,
                                  int n_points) {
  if (n_points < 2)
    throw std::invalid_argument("critical_exponent_fit: need >= 2 points");
  if (!(g_lo > 0.0 && g_lo < g_hi))
    throw std::invalid_argument("critical_exponent_fit: bad window");
  if (g_hi > kCriticalCoupling - 1e-6)
    throw std::invalid_argument(
        "critical_exponent_fit: window must stay below g_c - 1e-6");

  const int n = n_points;
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (int i = 0; i < n; ++i) {
    const double g = g_lo + (g_hi - g_lo) * i / (n - 1);
    const double x = std::log(kCriticalCoupling - g);
    const double y = std::log(shifted_purity(g, gamma));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  const double cov = sxy - sx * sy / n;
  const double var_x = sxx - sx * sx / n;
  const double var_y = syy - sy * sy / n;
  ExponentFit fit;
  fit.nu = cov / var_x;
  fit.r_squared = (var_y > 0) ? cov * cov / (var_x * var_y) : 1.0;
  return fit;
}

}  // namespace gep
