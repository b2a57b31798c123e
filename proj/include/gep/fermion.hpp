#ifndef GEP_FERMION_HPP
#define GEP_FERMION_HPP

#include <vector>

// Analytic solution of the anisotropic XY chain in a transverse field:
// quasiparticle dispersion, Bogoliubov amplitudes of the paired ground
// state, the number-conserving-algebra purity at finite size and in the
// thermodynamic limit, and the critical-exponent fit near g_c = 1/2.

namespace gep {

// Critical coupling of the anisotropic XY chain, exact for all gamma > 0.
inline constexpr double kCriticalCoupling = 0.5;

struct ChainParams {
  int n_sites = 0;     // even, >= 4
  double g = 0.0;      // coupling / field ratio, >= 0
  double gamma = 1.0;  // anisotropy, in [0, 1]
};

// Throws std::invalid_argument on violated parameter constraints.
void validate(const ChainParams& p);

// Antiperiodic momenta k = +-(2m-1) pi / N, m = 1..N/2, sorted ascending.
// These are the allowed modes in the even-parity symmetry sector; 0 and pi
// never occur.
std::vector<double> momentum_grid(int n_sites);

// Quasiparticle energy 2 sqrt((-1 + 2 g cos k)^2 + 4 g^2 gamma^2 sin^2 k).
double dispersion(double g, double gamma, double k);

struct BdgCoefficients {
  double xi = 0.0;     // single-particle energy 2 (1 - 2 g cos k)
  double delta = 0.0;  // pairing amplitude 2 g gamma sin k
  double u = 0.0;      // u >= 0
  double v = 0.0;      // sign(v) = sign(sin k); u^2 + v^2 = 1
};

BdgCoefficients bdg_coefficients(double g, double gamma, double k);

// Ground energy -(1/2) sum_k eps_k (no quasiparticles present).
double ground_energy_analytic(const ChainParams& p);

// (4/N) sum_k (v_k^2 - 1/2)^2, the mode-diagonal purity of the paired
// ground state relative to the number-conserving algebra. 1 at g = 0.
double purity_uN_finite(const ChainParams& p);

// Thermodynamic-limit closed form. Requires gamma > 0; at gamma = 1 the
// removable singularity is replaced by the limit 1 - 2 g^2 (g <= g_c).
double purity_uN_thermo(double g, double gamma);

// purity_uN_thermo minus its ordered-phase plateau 1/(1+gamma); vanishes
// identically for g > g_c (disorder-parameter behavior).
double shifted_purity(double g, double gamma);

// Variance of the total fermion number in the paired ground state:
// sum over paired modes of 4 u^2 v^2. Satisfies
// purity_uN_finite = 1 - (2/N) Var.
double number_variance(const ChainParams& p);

// Purity relative to the full quadratic algebra (hopping plus pairing
// operators); identically 1 since the ground state is a coherent state of
// that algebra. Computed from the mode expectations, not assumed.
double purity_so2N(const ChainParams& p);

struct ExponentFit {
  double nu = 0.0;
  double r_squared = 0.0;
};

// Ordinary least-squares slope of log(shifted_purity) against
// log(g_c - g) over n_points uniformly spaced in [g_lo, g_hi].
// The window must lie strictly below g_c (g_hi <= g_c - 1e-6).
ExponentFit critical_exponent_fit(double gamma, double g_lo, double g_hi,
                                  int n_points);

}  // namespace gep

#endif  // GEP_FERMION_HPP
