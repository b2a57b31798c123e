#include "gep/linalg.hpp"

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "test_helpers.hpp"

using namespace gep;
using namespace gep::testing;

TEST_CASE("kron identity and diagonal cases") {
  const Matrix i2 = Matrix::Identity(2, 2);
  CHECK((kron(i2, i2) - Matrix::Identity(4, 4)).norm() == 0.0);

  const Matrix zz = kron(pauli_z(), i2);
  Matrix expected = Matrix::Zero(4, 4);
  expected.diagonal() << 1, 1, -1, -1;
  CHECK((zz - expected).norm() == 0.0);
}

TEST_CASE("kron matches the elementwise index formula") {
  std::mt19937 rng(1);
  const Matrix a = random_hermitian(2, rng);
  const Matrix b = random_hermitian(3, rng);
  const Matrix ab = kron(a, b);
  REQUIRE(ab.rows() == 6);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          CHECK(ab(i * 3 + k, j * 3 + l) == a(i, j) * b(k, l));
}

TEST_CASE("kron is associative") {
  std::mt19937 rng(2);
  const Matrix a = random_hermitian(2, rng);
  const Matrix b = random_hermitian(3, rng);
  const Matrix c = random_hermitian(2, rng);
  CHECK((kron(kron(a, b), c) - kron(a, kron(b, c))).cwiseAbs().maxCoeff() <=
        1e-14);
}

TEST_CASE("kron rejects oversized results") {
  const Matrix big = Matrix::Identity(1 << 12, 1 << 12);
  CHECK_THROWS_AS((void)kron(big, big), std::length_error);
}

TEST_CASE("hermitian_eig on Pauli matrices") {
  const EigenResult ez = hermitian_eig(pauli_z());
  CHECK(ez.eigenvalues(0) == doctest::Approx(-1.0));
  CHECK(ez.eigenvalues(1) == doctest::Approx(1.0));

  const EigenResult ex = hermitian_eig(pauli_x());
  CHECK(ex.eigenvalues(0) == doctest::Approx(-1.0));
  CHECK(ex.eigenvalues(1) == doctest::Approx(1.0));
  Vector minus(2), plus(2);
  minus << 1, -1;
  plus << 1, 1;
  minus /= std::sqrt(2.0);
  plus /= std::sqrt(2.0);
  CHECK(std::abs(minus.dot(ex.eigenvectors.col(0))) == doctest::Approx(1.0));
  CHECK(std::abs(plus.dot(ex.eigenvectors.col(1))) == doctest::Approx(1.0));
}

TEST_CASE("hermitian_eig reconstruction, orthonormality and trace") {
  std::mt19937 rng(3);
  const Matrix m = random_hermitian(8, rng);
  const EigenResult eig = hermitian_eig(m);
  const Matrix rebuilt = eig.eigenvectors *
                         eig.eigenvalues.cast<Complex>().asDiagonal() *
                         eig.eigenvectors.adjoint();
  CHECK((m - rebuilt).norm() <= 1e-10 * m.norm());
  CHECK((eig.eigenvectors.adjoint() * eig.eigenvectors -
         Matrix::Identity(8, 8))
            .norm() <= 1e-10);
  CHECK(eig.eigenvalues.sum() ==
        doctest::Approx(m.trace().real()).epsilon(1e-10));
  for (int i = 1; i < 8; ++i)
    CHECK(eig.eigenvalues(i) >= eig.eigenvalues(i - 1));
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
  Matrix m(2, 2);
  m << 0, 1, 0, 0;
  CHECK_THROWS_AS((void)hermitian_eig(m), std::invalid_argument);
}

TEST_CASE("ground_state basics") {
  Matrix d(2, 2);
  d << -1, 0, 0, 1;
  GroundState gs = ground_state(d);
  CHECK(gs.energy == doctest::Approx(-1.0));
  CHECK(std::abs(gs.state(0)) == doctest::Approx(1.0));
  CHECK_FALSE(gs.degenerate);

  gs = ground_state(-pauli_x());
  CHECK(gs.energy == doctest::Approx(-1.0));
  CHECK(std::abs(gs.state(0)) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(std::abs(gs.state(1)) == doctest::Approx(1.0 / std::sqrt(2.0)));

  gs = ground_state(Matrix::Zero(2, 2), 1e-10);
  CHECK(gs.degenerate);
}

TEST_CASE("expectation values") {
  // e0 = |up> under the textbook sigma_z.
  CHECK(expectation(basis_state(2, 0), pauli_z()) == doctest::Approx(1.0));

  Vector bell(4);
  bell << 0, 1, 1, 0;
  bell /= std::sqrt(2.0);
  CHECK(expectation(bell, kron(pauli_z(), Matrix::Identity(2, 2))) ==
        doctest::Approx(0.0));

  std::mt19937 rng(4);
  const Vector psi = random_state(8, rng);
  const Matrix op = random_hermitian(8, rng);
  Complex direct = 0.0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      direct += std::conj(psi(i)) * op(i, j) * psi(j);
  CHECK(expectation(psi, op) == doctest::Approx(direct.real()).epsilon(1e-12));

  CHECK_THROWS_AS((void)expectation(basis_state(2, 0), Matrix::Identity(4, 4)),
                  std::invalid_argument);
}

TEST_CASE("partial_trace on product, Bell and GHZ states") {
  // |0>_A (x) |1>_B with factor A fastest: index 0 + 2*1.
  const Vector prod = kron_state(basis_state(2, 1), basis_state(2, 0));
  Matrix rho = partial_trace(prod, {2, 2}, {0});
  CHECK(std::abs(rho(0, 0) - 1.0) <= 1e-14);
  CHECK(rho.cwiseAbs().sum() == doctest::Approx(1.0));

  Vector bell(4);
  bell << 0, 1, 1, 0;
  bell /= std::sqrt(2.0);
  rho = partial_trace(bell, {2, 2}, {0});
  CHECK((rho - 0.5 * Matrix::Identity(2, 2)).norm() <= 1e-14);

  Vector ghz = Vector::Zero(8);
  ghz(0) = ghz(7) = 1.0 / std::sqrt(2.0);
  rho = partial_trace(ghz, {2, 2, 2}, {1, 2});
  const EigenResult eig = hermitian_eig(rho);
  CHECK(eig.eigenvalues(0) == doctest::Approx(0.0));
  CHECK(eig.eigenvalues(1) == doctest::Approx(0.0));
  CHECK(eig.eigenvalues(2) == doctest::Approx(0.5));
  CHECK(eig.eigenvalues(3) == doctest::Approx(0.5));

  CHECK_THROWS_AS((void)partial_trace(bell, {2, 2}, {0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)partial_trace(bell, {2, 2}, {2}),
                  std::invalid_argument);
}

TEST_CASE("partial_trace yields trace-1 PSD matrices on random states") {
  std::mt19937 rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    const Vector psi = random_state(24, rng);
    const Matrix rho = partial_trace(psi, {2, 3, 4}, {1});
    CHECK(std::abs(rho.trace().real() - 1.0) <= 1e-12);
    CHECK(is_hermitian(rho));
    const EigenResult eig = hermitian_eig(rho);
    CHECK(eig.eigenvalues(0) >= -1e-12);
  }
}

TEST_CASE("evolve basics and Taylor oracle") {
  std::mt19937 rng(6);
  const Vector psi = random_state(4, rng);
  const Matrix h = random_hermitian(4, rng);

  CHECK((evolve(psi, h, 0.0) - psi).norm() <= 1e-14);

  const Vector spun = evolve(psi.head(2).normalized().eval(), pauli_z(),
                             std::numbers::pi);
  // phases e^{-i pi}, e^{+i pi} are both -1
  CHECK((spun + psi.head(2).normalized()).norm() <= 1e-12);

  const double t = 0.37;
  Vector out = evolve(psi, h, t);
  CHECK(out.norm() == doctest::Approx(1.0).epsilon(1e-12));

  // Scaled-and-squared Taylor series as an independent oracle.
  Matrix u = Matrix::Identity(4, 4);
  Matrix term = Matrix::Identity(4, 4);
  const Matrix step = Complex(0.0, -t / 64.0) * h;
  for (int order = 1; order <= 12; ++order) {
    term = (term * step / double(order)).eval();
    u += term;
  }
  for (int s = 0; s < 6; ++s) u = (u * u).eval();
  CHECK((out - u * psi).norm() <= 1e-9);
}

TEST_CASE("evolve preserves inner products") {
  std::mt19937 rng(7);
  const Matrix h = random_hermitian(6, rng);
  const Vector a = random_state(6, rng);
  const Vector b = random_state(6, rng);
  const double before = std::abs(a.dot(b));
  const double after = std::abs(evolve(a, h, 1.3).dot(evolve(b, h, 1.3)));
  CHECK(after == doctest::Approx(before).epsilon(1e-10));
}

TEST_CASE("lanczos agrees with the dense solver") {
  std::mt19937 rng(8);
  Eigen::MatrixXd m = Eigen::MatrixXd::Random(60, 60);
  m = (m + m.transpose()).eval();
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> dense(m);
  const LanczosResult lz = lowest_eigenpairs_lanczos(
      [&](const Eigen::VectorXd& x) { return Eigen::VectorXd(m * x); }, 60, 2);
  CHECK(lz.eigenvalues(0) ==
        doctest::Approx(dense.eigenvalues()(0)).epsilon(1e-11));
  CHECK(lz.eigenvalues(1) ==
        doctest::Approx(dense.eigenvalues()(1)).epsilon(1e-11));
  CHECK((m * lz.eigenvectors.col(0) - lz.eigenvalues(0) * lz.eigenvectors.col(0))
            .norm() <= 1e-9 * m.norm());
}
