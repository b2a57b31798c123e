#ifndef GEP_SPIN_CHAIN_HPP
#define GEP_SPIN_CHAIN_HPP

#include <vector>

#include "gep/fermion.hpp"
#include "gep/linalg.hpp"

// Brute-force exact diagonalization of the periodic anisotropic XY chain
//   H = -g sum_j [(1+gamma) sx_j sx_{j+1} + (1-gamma) sy_j sy_{j+1}]
//       + sum_j sz_j
// on 2^N basis states (bit j set = spin-up at site j), together with the
// observables the analytic solution is checked against: parity sectors,
// two-site reduced density matrices, concurrence, x-magnetization, and the
// string-fermion mode occupations.

namespace gep {

struct GroundStateResult {
  ChainParams params;
  double energy = 0.0;
  Vector state;                       // full 2^N vector, parity-even sector
  int z2 = +1;                        // parity eigenvalue of `state`
  bool degenerate_in_sector = false;  // within-sector gap below tolerance
  double gap_to_other_sector = 0.0;   // E0(odd sector) - energy
};

// Dense 2^N Hamiltonian. Requires n_sites <= 14.
Matrix build_hamiltonian(const ChainParams& p);

// Diagonal parity operator, product of sz over all sites.
Matrix z2_operator(int n_sites);

// Lowest state of the even-parity (z2 = +1) block, obtained by projecting
// onto the sector and diagonalizing it (dense below 2^10, Lanczos above).
GroundStateResult ground_state_sector(const ChainParams& p,
                                      double degeneracy_tol = 1e-10);

// 4x4 reduced density matrix of sites i and j (0-based, i != j); the
// lower-numbered site is the faster index of the result.
Matrix two_site_rdm(const GroundStateResult& gs, int i, int j);

// Wootters concurrence of a two-qubit density matrix.
double concurrence(const Matrix& rho2);

// <sx_i sx_j> in the ground state.
double xx_correlator(const GroundStateResult& gs, int i, int j);

// Finite-size order parameter: sqrt of the maximal-separation correlator
// <sx_0 sx_{N/2}>, clamped at 0.
double magnetization_x(const GroundStateResult& gs);

// String-fermion annihilation operators c_j as dense 2^N matrices,
// c_j = (prod_{l<j} -sz_l) S-_j. Requires n_sites <= 12.
std::vector<Matrix> jw_mode_operators(int n_sites);

// N x N matrix of <c_k^+ c_k'> over the antiperiodic momentum grid
// (ascending), computed by applying the string operators to the state.
Matrix momentum_correlation_matrix(const GroundStateResult& gs);

// Purity relative to the full number-conserving mode algebra:
// (4/N) sum_{k,k'} |<c_k^+ c_k'> - delta_{kk'}/2|^2.
double purity_uN_from_state(const GroundStateResult& gs);

}  // namespace gep

#endif  // GEP_SPIN_CHAIN_HPP
