#include "gep/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gep {

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const long rows = a.rows() * b.rows();
  const long cols = a.cols() * b.cols();
  if (rows * cols > kMaxKronEntries)
    throw std::length_error("kron: result exceeds " +
                            std::to_string(kMaxKronEntries) + " entries");
  Matrix out(rows, cols);
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vector kron_state(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (long i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

EigenResult hermitian_eig(const Matrix& m) {
  if (!is_hermitian(m))
    throw std::invalid_argument("hermitian_eig: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eig: eigensolver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

GroundState ground_state(const Matrix& h, double degeneracy_tol) {
  EigenResult eig = hermitian_eig(h);
  GroundState gs;
  gs.energy = eig.eigenvalues(0);
  gs.state = eig.eigenvectors.col(0);
  gs.degenerate = h.rows() > 1 &&
                  eig.eigenvalues(1) - eig.eigenvalues(0) < degeneracy_tol;
  return gs;
}

double expectation(const Vector& psi, const Matrix& op) {
  if (op.rows() != psi.size() || op.cols() != psi.size())
    throw std::invalid_argument("expectation: dimension mismatch");
  const Complex value = psi.dot(op * psi);
  if (std::abs(value.imag()) > 1e-12 * std::max(1.0, std::abs(value)))
    throw std::invalid_argument(
        "expectation: non-real result, operator not Hermitian?");
  return value.real();
}

Matrix partial_trace(const Vector& psi, const std::vector<int>& dims,
                     const std::vector<int>& keep) {
  long total = 1;
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("partial_trace: bad factor dim");
    total *= d;
  }
  if (total != psi.size())
    throw std::invalid_argument("partial_trace: dims do not factor psi");
  for (size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= static_cast<int>(dims.size()) ||
        (i > 0 && keep[i] <= keep[i - 1]))
      throw std::invalid_argument("partial_trace: invalid keep set");
  }

  long dim_keep = 1;
  for (int k : keep) dim_keep *= dims[k];
  const long dim_env = total / dim_keep;

  // Strides of each factor in the full little-endian index.
  std::vector<long> stride(dims.size());
  long s = 1;
  for (size_t j = 0; j < dims.size(); ++j) {
    stride[j] = s;
    s *= dims[j];
  }
  std::vector<bool> kept(dims.size(), false);
  for (int k : keep) kept[k] = true;

  // full_index(a, e) for kept multi-index a and environment multi-index e.
  auto compose = [&](long a, long e) {
    long idx = 0;
    for (size_t j = 0; j < dims.size(); ++j) {
      long digit;
      if (kept[j]) {
        digit = a % dims[j];
        a /= dims[j];
      } else {
        digit = e % dims[j];
        e /= dims[j];
      }
      idx += digit * stride[j];
    }
    return idx;
  };

  Matrix rho = Matrix::Zero(dim_keep, dim_keep);
  for (long e = 0; e < dim_env; ++e) {
    Vector slice(dim_keep);
    for (long a = 0; a < dim_keep; ++a) slice(a) = psi(compose(a, e));
    rho.noalias() += slice * slice.adjoint();
  }
  return rho;
}

Vector evolve(const Vector& psi, const Matrix& h, double t) {
  if (h.rows() != psi.size())
    throw std::invalid_argument("evolve: dimension mismatch");
  EigenResult eig = hermitian_eig(h);
  Vector coeffs = eig.eigenvectors.adjoint() * psi;
  for (long i = 0; i < coeffs.size(); ++i)
    coeffs(i) *= std::exp(Complex(0.0, -eig.eigenvalues(i) * t));
  return eig.eigenvectors * coeffs;
}

Vector basis_state(int dim, int index) {
  Vector v = Vector::Zero(dim);
  v(index) = 1.0;
  return v;
}

LanczosResult lowest_eigenpairs_lanczos(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& matvec,
    int dim, int n_pairs, double tol, int max_iter) {
  using Eigen::MatrixXd;
  using Eigen::VectorXd;
  const int m_max = std::min(dim, max_iter);

  // Deterministic start vector with no accidental symmetry.
  VectorXd v0(dim);
  for (int i = 0; i < dim; ++i)
    v0(i) = 1.0 + 0.3 * std::sin(0.7 * i + 0.1) + 0.1 * std::cos(2.3 * i);
  v0.normalize();

  MatrixXd basis(dim, m_max);
  std::vector<double> alpha, beta;
  basis.col(0) = v0;

  MatrixXd ritz_vecs;
  VectorXd ritz_vals;
  int m = 0;
  for (int j = 0; j < m_max; ++j) {
    VectorXd w = matvec(basis.col(j));
    double a = basis.col(j).dot(w);
    alpha.push_back(a);
    w -= a * basis.col(j);
    if (j > 0) w -= beta[j - 1] * basis.col(j - 1);
    // Full reorthogonalization, twice.
    for (int pass = 0; pass < 2; ++pass)
      w -= basis.leftCols(j + 1) * (basis.leftCols(j + 1).transpose() * w);
    const double b = w.norm();
    m = j + 1;

    // Convergence check on the tridiagonal Ritz problem.
    if (m >= n_pairs && (b < 1e-14 || m == m_max || (m % 10 == 0 && m >= 30))) {
      MatrixXd tri = MatrixXd::Zero(m, m);
      for (int i = 0; i < m; ++i) {
        tri(i, i) = alpha[i];
        if (i + 1 < m) tri(i, i + 1) = tri(i + 1, i) = beta[i];
      }
      Eigen::SelfAdjointEigenSolver<MatrixXd> es(tri);
      // Residual of Ritz pair i is |b * y(m-1, i)|.
      bool converged = true;
      for (int i = 0; i < n_pairs; ++i)
        if (std::abs(b * es.eigenvectors()(m - 1, i)) > tol) converged = false;
      if (converged || b < 1e-14 || m == m_max) {
        ritz_vals = es.eigenvalues().head(n_pairs);
        ritz_vecs = basis.leftCols(m) * es.eigenvectors().leftCols(n_pairs);
        break;
      }
    }
    if (b < 1e-14) break;  // invariant subspace before n_pairs reached
    beta.push_back(b);
    basis.col(j + 1) = w / b;
  }

  if (ritz_vecs.cols() == 0)
    throw std::runtime_error("lanczos: failed to converge");
  for (int i = 0; i < n_pairs; ++i) ritz_vecs.col(i).normalize();
  return {ritz_vals, ritz_vecs};
}

}  // namespace gep
