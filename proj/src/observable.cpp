#include "gep/observable.hpp"

#include <cmath>
#include <stdexcept>

namespace gep {

namespace {

Complex trace_inner(const Matrix& a, const Matrix& b) {
  return (a.adjoint() * b).trace();
}

double trace_norm(const Matrix& a) {
  return std::sqrt(std::abs(trace_inner(a, a)));
}

// Fermionic annihilation operator for mode `j` of `n_modes`, with the
// Jordan-Wigner string sign (-1)^{# occupied modes below j}. Little-endian:
// bit j of the Fock index is the occupation of mode j.
Matrix mode_annihilator(int n_modes, int j) {
  const int dim = 1 << n_modes;
  Matrix c = Matrix::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) {
    if ((n >> j) & 1) {
      const int low = n & ((1 << j) - 1);
      const double sign = (__builtin_popcount(low) % 2 == 0) ? 1.0 : -1.0;
      c(n ^ (1 << j), n) = sign;
    }
  }
  return c;
}

}  // namespace

std::vector<Matrix> spin_matrices(Spin spin) {
  const Complex I(0.0, 1.0);
  if (spin == Spin::Half) {
    // Computational ordering: e0 = |down>, e1 = |up>.
    Matrix sx(2, 2), sy(2, 2), sz(2, 2);
    sx << 0, 0.5, 0.5, 0;
    sy << 0, 0.5 * I, -0.5 * I, 0;
    sz << -0.5, 0, 0, 0.5;
    return {sx, sy, sz};
  }
  // Spin 1, local ordering (|1>, |0>, |-1>): the standard spin matrices
  // with a common 1/sqrt(2) scale so that all three share trace norm 1.
  // The z component is then diag(1, 0, -1)/sqrt(2) and |1> sits at
  // coordinate (0, 0, 1/sqrt(2)).
  const double rz = 1.0 / std::sqrt(2.0);
  const double rx = 0.5;  // (1/sqrt2) * the 1/sqrt2 ladder coefficient
  Matrix sx = Matrix::Zero(3, 3), sy = Matrix::Zero(3, 3),
         sz = Matrix::Zero(3, 3);
  sx(0, 1) = sx(1, 0) = sx(1, 2) = sx(2, 1) = rx;
  sy(0, 1) = -rx * I;
  sy(1, 0) = rx * I;
  sy(1, 2) = -rx * I;
  sy(2, 1) = rx * I;
  sz(0, 0) = rz;
  sz(2, 2) = -rz;
  return {sx, sy, sz};
}

ObservableBasis orthonormalize(const std::vector<Matrix>& raw_ops,
                               const std::string& name) {
  if (raw_ops.empty())
    throw std::invalid_argument("orthonormalize: empty operator set");
  for (const Matrix& op : raw_ops)
    if (!is_hermitian(op))
      throw std::invalid_argument("orthonormalize: non-Hermitian input");

  ObservableBasis basis;
  basis.name = name;
  for (const Matrix& raw : raw_ops) {
    const double original_norm = trace_norm(raw);
    Matrix v = raw;
    // Modified Gram-Schmidt with one re-orthogonalization pass.
    for (int pass = 0; pass < 2; ++pass)
      for (const Matrix& u : basis.elements) v -= trace_inner(u, v) * u;
    const double residual = trace_norm(v);
    if (original_norm <= 0 || residual / original_norm < 1e-12)
      throw std::invalid_argument(
          "orthonormalize: linearly dependent operator set");
    basis.elements.push_back(v / residual);
  }
  return basis;
}

ReducedState reduced_state(const Vector& psi, const ObservableBasis& basis) {
  if (basis.dim() != psi.size())
    throw std::invalid_argument("reduced_state: dimension mismatch");
  Eigen::VectorXd coords(basis.size());
  for (int i = 0; i < basis.size(); ++i)
    coords(i) = expectation(psi, basis.elements[i]);
  return {coords};
}

PurityResult purity(const Vector& psi, const ObservableBasis& basis) {
  if (!basis.calibrated())
    throw std::logic_error("purity: basis '" + basis.name +
                           "' is not calibrated");
  const ReducedState omega = reduced_state(psi, basis);
  return {basis.norm_constant * omega.coords.squaredNorm(), basis.name};
}

ObservableBasis calibrate(ObservableBasis basis, const Vector& reference_gcs) {
  const ReducedState omega = reduced_state(reference_gcs, basis);
  const double sum = omega.coords.squaredNorm();
  if (sum < 1e-12)
    throw std::invalid_argument(
        "calibrate: reference state has vanishing coordinates");
  basis.norm_constant = 1.0 / sum;
  return basis;
}

bool is_generalized_unentangled(const Vector& psi,
                                const ObservableBasis& basis, double tol) {
  return purity(psi, basis).value >= 1.0 - tol;
}

ObservableBasis make_su2_local(int num_sites, Spin spin) {
  if (num_sites < 1)
    throw std::invalid_argument("make_su2_local: num_sites must be >= 1");
  const std::vector<Matrix> local = spin_matrices(spin);
  const int d = static_cast<int>(local[0].rows());

  ObservableBasis basis;
  basis.name = (spin == Spin::Half ? "su(2)-local-spin-half" :
                                     "su(2)-local-spin-one");
  for (int site = 0; site < num_sites; ++site) {
    long before = 1, after = 1;
    for (int j = 0; j < site; ++j) before *= d;
    for (int j = site + 1; j < num_sites; ++j) after *= d;
    const Matrix id_before = Matrix::Identity(before, before);
    const Matrix id_after = Matrix::Identity(after, after);
    for (const Matrix& s : local)
      basis.elements.push_back(kron(id_after, kron(s, id_before)));
  }

  // Reference: every site in its highest-weight local state. For spin-1/2
  // that is |up> = local index 1 (so the full index is dim-1); the spin-1
  // ordering puts |1> at local index 0.
  const long dim = basis.dim();
  const long ref_index = (spin == Spin::Half) ? dim - 1 : 0;
  Vector ref = basis_state(static_cast<int>(dim), static_cast<int>(ref_index));
  return calibrate(std::move(basis), ref);
}

ObservableBasis make_full_traceless(int dim) {
  if (dim < 2)
    throw std::invalid_argument("make_full_traceless: dim must be >= 2");
  const Complex I(0.0, 1.0);
  ObservableBasis basis;
  basis.name = "su(" + std::to_string(dim) + ")";
  // Symmetric pairs.
  for (int j = 0; j < dim; ++j)
    for (int k = j + 1; k < dim; ++k) {
      Matrix m = Matrix::Zero(dim, dim);
      m(j, k) = m(k, j) = 1.0;
      basis.elements.push_back(m);
    }
  // Antisymmetric pairs.
  for (int j = 0; j < dim; ++j)
    for (int k = j + 1; k < dim; ++k) {
      Matrix m = Matrix::Zero(dim, dim);
      m(j, k) = -I;
      m(k, j) = I;
      basis.elements.push_back(m);
    }
  // Diagonal elements.
  for (int l = 1; l < dim; ++l) {
    Matrix m = Matrix::Zero(dim, dim);
    const double scale = std::sqrt(2.0 / (l * (l + 1.0)));
    for (int j = 0; j < l; ++j) m(j, j) = scale;
    m(l, l) = -l * scale;
    basis.elements.push_back(m);
  }
  // Every pure state is a GCS of the full algebra; any basis state serves
  // as the calibration reference.
  return calibrate(std::move(basis), basis_state(dim, 0));
}

ObservableBasis make_u2_pair_modes() {
  const Complex I(0.0, 1.0);
  const double r = 1.0 / std::sqrt(2.0);
  const Matrix c1 = mode_annihilator(2, 0);
  const Matrix c2 = mode_annihilator(2, 1);
  const Matrix id = Matrix::Identity(4, 4);

  ObservableBasis basis;
  basis.name = "u(2)-pair-modes";
  basis.elements.push_back(r * (c1.adjoint() * c2 + c2.adjoint() * c1));
  basis.elements.push_back(r * I * (c1.adjoint() * c2 - c2.adjoint() * c1));
  basis.elements.push_back(c1.adjoint() * c1 - 0.5 * id);
  basis.elements.push_back(c2.adjoint() * c2 - 0.5 * id);

  // Reference |n1=1, n2=0> = Fock index 1.
  return calibrate(std::move(basis), basis_state(4, 1));
}

std::vector<double> schmidt_coefficients(const Vector& psi, int dim_a,
                                         int dim_b) {
  if (static_cast<long>(dim_a) * dim_b != psi.size())
    throw std::invalid_argument("schmidt_coefficients: factorization mismatch");
  Matrix amplitudes(dim_a, dim_b);
  for (int b = 0; b < dim_b; ++b)
    for (int a = 0; a < dim_a; ++a)
      amplitudes(a, b) = psi(a + static_cast<long>(dim_a) * b);
  Eigen::JacobiSVD<Matrix> svd(amplitudes);
  const Eigen::VectorXd& sv = svd.singularValues();
  return std::vector<double>(sv.data(), sv.data() + sv.size());
}

}  // namespace gep
