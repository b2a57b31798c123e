#ifndef GEP_LINALG_HPP
#define GEP_LINALG_HPP

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <vector>

// Dense complex linear algebra substrate shared by all modules.
//
// Basis ordering is little-endian everywhere: digit/bit j of a basis-state
// index is the local state (occupation / spin-up) of site j, so site 0 is
// the fastest-varying index and index 0 is the vacuum / all-down state.

namespace gep {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Entry-count cap for kron outputs.
inline constexpr long kMaxKronEntries = 1L << 24;

bool is_hermitian(const Matrix& m, double tol = 1e-12);

// Kronecker product, a indexing the slow (high) part of the result:
// (a ⊗ b)[(i*p + k), (j*q + l)] = a(i,j) * b(k,l) for b of shape p x q.
// Under the little-endian site convention the factor acting on the
// lower-numbered sites goes in the *second* argument.
Matrix kron(const Matrix& a, const Matrix& b);

// Kronecker product of state vectors with the same index convention:
// result[i*b.size() + k] = a[i] * b[k], i.e. `b` occupies the low digits.
Vector kron_state(const Vector& a, const Vector& b);

struct EigenResult {
  Eigen::VectorXd eigenvalues;  // ascending
  Matrix eigenvectors;          // orthonormal columns
};

// Full spectrum of a Hermitian matrix. Throws std::invalid_argument if the
// input fails the Hermiticity check.
EigenResult hermitian_eig(const Matrix& m);

struct GroundState {
  double energy = 0.0;
  Vector state;
  bool degenerate = false;  // gap to first excited state below tolerance
};

GroundState ground_state(const Matrix& h, double degeneracy_tol = 1e-10);

// <psi| op |psi> for Hermitian op; throws if the imaginary residue exceeds
// 1e-12 or dimensions mismatch.
double expectation(const Vector& psi, const Matrix& op);

// Partial trace of |psi><psi| over the factors not listed in `keep`.
// dims[j] is the local dimension of factor j, factor 0 fastest-varying.
// `keep` must be strictly ascending; the result is ordered with the first
// kept factor fastest-varying.
Matrix partial_trace(const Vector& psi, const std::vector<int>& dims,
                     const std::vector<int>& keep);

// e^{-i h t} |psi> via eigendecomposition of the Hermitian generator h.
Vector evolve(const Vector& psi, const Matrix& h, double t);

// Computational basis state e_index of the given dimension.
Vector basis_state(int dim, int index);

// Lowest `n_pairs` eigenpairs of a real symmetric operator given only as a
// matvec, via Lanczos with full reorthogonalization. Deterministic (fixed
// start vector). Used for sector blocks too large for a dense solve.
struct LanczosResult {
  Eigen::VectorXd eigenvalues;   // ascending, n_pairs entries
  Eigen::MatrixXd eigenvectors;  // n_pairs columns
};

LanczosResult lowest_eigenpairs_lanczos(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& matvec,
    int dim, int n_pairs, double tol = 1e-12, int max_iter = 600);

}  // namespace gep

#endif  // GEP_LINALG_HPP
