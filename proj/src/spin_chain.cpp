#include "gep/spin_chain.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gep {

namespace {

int popcount(int n) { return __builtin_popcount(static_cast<unsigned>(n)); }

// Off-diagonal bond amplitude: flipping the pair (j, j+1) costs
// -g * 2gamma when the two bits agree and -g * 2 when they differ
// (the xx and yy exchange terms interfere).
double bond_amplitude(const ChainParams& p, int state, int j) {
  const int j2 = (j + 1) % p.n_sites;
  const int b1 = (state >> j) & 1;
  const int b2 = (state >> j2) & 1;
  return -p.g * (b1 == b2 ? 2.0 * p.gamma : 2.0);
}

// Basis indices of one parity sector plus the reverse lookup table.
struct SectorBasis {
  std::vector<int> states;  // full-space index per sector position
  std::vector<int> pos;     // sector position per full-space index, -1 outside
};

SectorBasis sector_basis(int n_sites, int parity) {
  const int dim = 1 << n_sites;
  SectorBasis b;
  b.pos.assign(dim, -1);
  for (int n = 0; n < dim; ++n) {
    if (popcount(n) % 2 == parity) {
      b.pos[n] = static_cast<int>(b.states.size());
      b.states.push_back(n);
    }
  }
  return b;
}

// Matrix-vector product with the Hamiltonian restricted to a sector.
Eigen::VectorXd sector_matvec(const ChainParams& p, const SectorBasis& basis,
                              const Eigen::VectorXd& x) {
  Eigen::VectorXd y(x.size());
  for (size_t a = 0; a < basis.states.size(); ++a) {
    const int n = basis.states[a];
    double acc = (2 * popcount(n) - p.n_sites) * x(a);
    for (int j = 0; j < p.n_sites; ++j) {
      const int m = n ^ (1 << j) ^ (1 << ((j + 1) % p.n_sites));
      acc += bond_amplitude(p, n, j) * x(basis.pos[m]);
    }
    y(a) = acc;
  }
  return y;
}

// Lowest n_pairs eigenpairs of the sector block.
LanczosResult sector_lowest(const ChainParams& p, const SectorBasis& basis,
                            int n_pairs) {
  const int dim = static_cast<int>(basis.states.size());
  if (dim <= 1024) {
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (int a = 0; a < dim; ++a) {
      const int n = basis.states[a];
      h(a, a) = 2 * popcount(n) - p.n_sites;
      for (int j = 0; j < p.n_sites; ++j) {
        const int m = n ^ (1 << j) ^ (1 << ((j + 1) % p.n_sites));
        h(basis.pos[m], a) += bond_amplitude(p, n, j);
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    return {es.eigenvalues().head(n_pairs),
            es.eigenvectors().leftCols(n_pairs)};
  }
  return lowest_eigenpairs_lanczos(
      [&](const Eigen::VectorXd& x) { return sector_matvec(p, basis, x); },
      dim, n_pairs);
}

// c_j |psi> with the string sign (-1)^{# spins up below j}.
Vector apply_annihilator(const Vector& psi, int n_sites, int j) {
  const int dim = 1 << n_sites;
  Vector out = Vector::Zero(dim);
  const int low_mask = (1 << j) - 1;
  for (int n = 0; n < dim; ++n) {
    if ((n >> j) & 1) {
      const double sign = (popcount(n & low_mask) % 2 == 0) ? 1.0 : -1.0;
      out(n ^ (1 << j)) += sign * psi(n);
    }
  }
  return out;
}

}  // namespace

Matrix build_hamiltonian(const ChainParams& p) {
  validate(p);
  if (p.n_sites > 14)
    throw std::length_error("build_hamiltonian: n_sites limited to 14");
  const int dim = 1 << p.n_sites;
  Matrix h = Matrix::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) {
    h(n, n) = 2 * popcount(n) - p.n_sites;
    for (int j = 0; j < p.n_sites; ++j) {
      const int m = n ^ (1 << j) ^ (1 << ((j + 1) % p.n_sites));
      h(m, n) += bond_amplitude(p, n, j);
    }
  }
  return h;
}

Matrix z2_operator(int n_sites) {
  const int dim = 1 << n_sites;
  Matrix z = Matrix::Zero(dim, dim);
  for (int n = 0; n < dim; ++n)
    z(n, n) = (popcount(n) % 2 == 0) ? 1.0 : -1.0;
  // popcount parity equals parity of down-spins for even N, so this is
  // exactly prod_j sz_j when n_sites is even.
  if (n_sites % 2 != 0) z = -z;
  return z;
}

GroundStateResult ground_state_sector(const ChainParams& p,
                                      double degeneracy_tol) {
  validate(p);
  if (p.n_sites > 14)
    throw std::length_error("ground_state_sector: n_sites limited to 14");

  const SectorBasis even = sector_basis(p.n_sites, 0);
  const SectorBasis odd = sector_basis(p.n_sites, 1);
  const LanczosResult low_even = sector_lowest(p, even, 2);
  const LanczosResult low_odd = sector_lowest(p, odd, 1);

  GroundStateResult result;
  result.params = p;
  result.energy = low_even.eigenvalues(0);
  result.z2 = +1;
  result.degenerate_in_sector =
      low_even.eigenvalues(1) - low_even.eigenvalues(0) < degeneracy_tol;
  result.gap_to_other_sector = low_odd.eigenvalues(0) - result.energy;

  result.state = Vector::Zero(1 << p.n_sites);
  for (size_t a = 0; a < even.states.size(); ++a)
    result.state(even.states[a]) = low_even.eigenvectors(a, 0);
  return result;
}

Matrix two_site_rdm(const GroundStateResult& gs, int i, int j) {
  const int n = gs.params.n_sites;
  if (i == j || i < 0 || j < 0 || i >= n || j >= n)
    throw std::invalid_argument("two_site_rdm: invalid site pair");
  const std::vector<int> dims(n, 2);
  return partial_trace(gs.state, dims, {std::min(i, j), std::max(i, j)});
}

double concurrence(const Matrix& rho2) {
  if (rho2.rows() != 4 || rho2.cols() != 4 || !is_hermitian(rho2, 1e-9) ||
      std::abs(rho2.trace().real() - 1.0) > 1e-9)
    throw std::invalid_argument("concurrence: not a two-qubit density matrix");
  {
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho2);
    if (es.eigenvalues().minCoeff() < -1e-9)
      throw std::invalid_argument("concurrence: density matrix not PSD");
  }
  Matrix yy = Matrix::Zero(4, 4);
  yy(0, 3) = yy(3, 0) = -1.0;  // sy (x) sy, conjugation in the z basis
  yy(1, 2) = yy(2, 1) = 1.0;
  const Matrix r = rho2 * yy * rho2.conjugate() * yy;
  Eigen::ComplexEigenSolver<Matrix> es(r, /*computeEigenvectors=*/false);
  std::vector<double> lambda(4);
  for (int i = 0; i < 4; ++i)
    lambda[i] = std::sqrt(std::max(0.0, es.eigenvalues()(i).real()));
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  const double c = lambda[0] - lambda[1] - lambda[2] - lambda[3];
  return std::clamp(c, 0.0, 1.0);
}

double xx_correlator(const GroundStateResult& gs, int i, int j) {
  const int n = gs.params.n_sites;
  if (i < 0 || j < 0 || i >= n || j >= n)
    throw std::invalid_argument("xx_correlator: invalid sites");
  const int mask = (1 << i) | (1 << j);
  Complex acc = 0.0;
  for (int m = 0; m < (1 << n); ++m)
    acc += std::conj(gs.state(m ^ mask)) * gs.state(m);
  return acc.real();
}

double magnetization_x(const GroundStateResult& gs) {
  const int n = gs.params.n_sites;
  return std::sqrt(std::max(0.0, xx_correlator(gs, 0, n / 2)));
}

std::vector<Matrix> jw_mode_operators(int n_sites) {
  if (n_sites < 1 || n_sites > 12)
    throw std::length_error("jw_mode_operators: n_sites limited to 12");
  const int dim = 1 << n_sites;
  std::vector<Matrix> ops;
  ops.reserve(n_sites);
  for (int j = 0; j < n_sites; ++j) {
    Matrix c = Matrix::Zero(dim, dim);
    const int low_mask = (1 << j) - 1;
    for (int n = 0; n < dim; ++n) {
      if ((n >> j) & 1) {
        const double sign = (popcount(n & low_mask) % 2 == 0) ? 1.0 : -1.0;
        c(n ^ (1 << j), n) = sign;
      }
    }
    ops.push_back(std::move(c));
  }
  return ops;
}

Matrix momentum_correlation_matrix(const GroundStateResult& gs) {
  const int n = gs.params.n_sites;
  std::vector<Vector> site_vecs;
  site_vecs.reserve(n);
  for (int j = 0; j < n; ++j)
    site_vecs.push_back(apply_annihilator(gs.state, n, j));

  // <c_i^+ c_j> in the site representation.
  Matrix g_site(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g_site(i, j) = site_vecs[i].dot(site_vecs[j]);

  // Fourier transform onto the antiperiodic grid, c_k^+ carrying e^{-ikj}.
  const std::vector<double> grid = momentum_grid(n);
  Matrix f(n, n);
  for (int a = 0; a < n; ++a)
    for (int j = 0; j < n; ++j)
      f(a, j) = std::exp(Complex(0.0, -grid[a] * j)) / std::sqrt(double(n));
  return f * g_site * f.adjoint();
}

double purity_uN_from_state(const GroundStateResult& gs) {
  const int n = gs.params.n_sites;
  Matrix m = momentum_correlation_matrix(gs);
  m -= 0.5 * Matrix::Identity(n, n);
  return 4.0 / n * m.squaredNorm();
}

}  // namespace gep
