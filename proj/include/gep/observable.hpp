#ifndef GEP_OBSERVABLE_HPP
#define GEP_OBSERVABLE_HPP

#include <string>
#include <vector>

#include "gep/linalg.hpp"

// Distinguished observable sets, reduced states over them, and the
// quadratic purity measure P = K * sum_i <x_i>^2. A basis becomes usable
// for purity once its normalization constant K has been calibrated so that
// a designated generalized-unentangled reference state reaches P = 1.

namespace gep {

struct ObservableBasis {
  std::string name;
  std::vector<Matrix> elements;    // Hermitian, traceless, trace-orthogonal
  double norm_constant = 0.0;      // K; 0 means uncalibrated

  bool calibrated() const { return norm_constant > 0.0; }
  int size() const { return static_cast<int>(elements.size()); }
  long dim() const { return elements.empty() ? 0 : elements[0].rows(); }
};

struct ReducedState {
  Eigen::VectorXd coords;  // <x_i> per basis element
};

struct PurityResult {
  double value = 0.0;
  std::string basis;
};

enum class Spin { Half, One };

// Modified Gram-Schmidt under the trace inner product tr(A^dagger B), with
// a re-orthogonalization pass. All outputs share trace norm 1. Throws on a
// linearly dependent input set.
ObservableBasis orthonormalize(const std::vector<Matrix>& raw_ops,
                               const std::string& name = "custom");

ReducedState reduced_state(const Vector& psi, const ObservableBasis& basis);

PurityResult purity(const Vector& psi, const ObservableBasis& basis);

// Fixes K = 1 / sum_i <x_i>^2 on a known generalized-unentangled reference.
ObservableBasis calibrate(ObservableBasis basis, const Vector& reference_gcs);

bool is_generalized_unentangled(const Vector& psi,
                                const ObservableBasis& basis, double tol);

// Local spin algebra, one su(2) triple {S_x, S_y, S_z} per site, embedded
// by identity padding. Spin-1/2 sites use the computational ordering
// (index 0 = down); spin-1 sites order local levels as (|1>, |0>, |-1>).
// Calibrated on the all-highest-weight product state.
ObservableBasis make_su2_local(int num_sites, Spin spin);

// Generalized Gell-Mann basis of su(dim): symmetric pairs, antisymmetric
// pairs, then diagonal elements, each with trace norm 2. Calibrated so
// every pure state has purity 1.
ObservableBasis make_full_traceless(int dim);

// The four-element u(2) algebra of two fermionic modes realized as 4x4
// matrices on the Fock space: {(c1^+ c2 + c2^+ c1)/sqrt2,
// i(c1^+ c2 - c2^+ c1)/sqrt2, n1 - 1/2, n2 - 1/2}. Calibrated on the
// one-fermion state |n1=1, n2=0>.
ObservableBasis make_u2_pair_modes();

// Singular values of the dim_a x dim_b amplitude matrix, descending.
// Factor A occupies the low (fast) part of the index.
std::vector<double> schmidt_coefficients(const Vector& psi, int dim_a,
                                         int dim_b);

// Single-site spin matrices used by make_su2_local, exposed for tests and
// for assembling model Hamiltonians. Ordering as described above.
std::vector<Matrix> spin_matrices(Spin spin);

}  // namespace gep

#endif  // GEP_OBSERVABLE_HPP
