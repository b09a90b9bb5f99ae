#include <gtest/gtest.h>

#include "dtqw/errors.hpp"
#include "dtqw/spin_algebra.hpp"
#include "support.hpp"

using namespace dtqw;
using namespace dtqw::testing;

namespace {

const cplx I{0.0, 1.0};

void expect_unitary_det1(const Complex2x2& u, double tol = 1e-12) {
  EXPECT_LT(max_abs_diff(u.adjoint() * u, Complex2x2::identity()), tol);
  EXPECT_LT(std::abs(u.determinant() - 1.0), tol);
}

}  // namespace

TEST(PauliAlgebra, ProductsFollowLeviCivita) {
  const Complex2x2 s[3] = {pauli_x(), pauli_y(), pauli_z()};
  for (int a = 0; a < 3; ++a) {
    EXPECT_LT(max_abs_diff(s[a] * s[a], Complex2x2::identity()), 1e-15);
    const int b = (a + 1) % 3, c = (a + 2) % 3;
    EXPECT_LT(max_abs_diff(s[a] * s[b], I * s[c]), 1e-15);
    EXPECT_LT(max_abs_diff(s[b] * s[a], -I * s[c]), 1e-15);
  }
}

TEST(PauliAlgebra, DotProductMatchesComponents) {
  const Vec3 n{0.3, -0.4, 1.2};
  const Complex2x2 expected = cplx{0.3} * pauli_x() + cplx{-0.4} * pauli_y() + cplx{1.2} * pauli_z();
  EXPECT_LT(max_abs_diff(pauli_dot(n), expected), 1e-15);
}

TEST(Rotations, RyKnownValues) {
  EXPECT_LT(max_abs_diff(rotation_y(0.0), Complex2x2::identity()), 1e-15);
  const double r = std::sqrt(0.5);
  EXPECT_LT(max_abs_diff(rotation_y(kPi / 4), {r, -r, r, r}), 1e-15);
  EXPECT_LT(max_abs_diff(rotation_y(kPi / 2), {0.0, -1.0, 1.0, 0.0}), 1e-15);
}

TEST(Rotations, RxKnownValues) {
  EXPECT_LT(max_abs_diff(rotation_x(0.0), Complex2x2::identity()), 1e-15);
  EXPECT_LT(max_abs_diff(rotation_x(kPi / 2), {0.0, I, I, 0.0}), 1e-15);
  const double r = std::sqrt(0.5);
  EXPECT_LT(max_abs_diff(rotation_x(kPi / 4), {r, I * r, I * r, r}), 1e-15);
}

TEST(Rotations, RyAndRxAgreeWithSeriesExponential) {
  auto rng = make_rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const double t = uniform(rng, -kPi, kPi);
    // Ry(t) = exp(-i t sigma_y), Rx(t) = exp(+i t sigma_x)
    EXPECT_LT(max_abs_diff(rotation_y(t), taylor_exp(cplx{0.0, -t} * pauli_y())), 1e-13);
    EXPECT_LT(max_abs_diff(rotation_x(t), taylor_exp(cplx{0.0, t} * pauli_x())), 1e-13);
  }
}

TEST(Rotations, ArbitraryAxisReducesToCanonicalAxes) {
  auto rng = make_rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const double t = uniform(rng, -10.0, 10.0);
    EXPECT_EQ(max_abs_diff(rotation_axis(Axis3(0, 1, 0), t), rotation_y(t)), 0.0);
    EXPECT_EQ(max_abs_diff(rotation_axis(Axis3(1, 0, 0), t), rotation_x(t)), 0.0);
  }
  EXPECT_LT(max_abs_diff(rotation_axis(Axis3(0, 0, 1), kPi / 2), Complex2x2::diagonal(-I, I)), 1e-15);
}

TEST(Rotations, AllAreSpecialUnitary) {
  auto rng = make_rng(13);
  for (int trial = 0; trial < 1000; ++trial) {
    const double t = uniform(rng, -20.0, 20.0);
    const Vec3 n = random_unit(rng);
    expect_unitary_det1(rotation_y(t));
    expect_unitary_det1(rotation_x(t));
    expect_unitary_det1(rotation_axis(Axis3(n.x, n.y, n.z), t));
    expect_unitary_det1(su2_exp(t, n));
  }
}

TEST(Axis, RejectsNonUnitVectors) {
  EXPECT_THROW(Axis3(1.0, 1.0, 0.0), std::invalid_argument);
  EXPECT_THROW(Axis3(0.0, 0.0, 1.0 + 1e-8), std::invalid_argument);
  EXPECT_NO_THROW(Axis3(0.0, 0.0, 1.0 + 1e-10));
  const Axis3 a(0.6, 0.8, 1e-10);
  EXPECT_NEAR(a.vec().norm(), 1.0, 1e-15);
}

TEST(Su2Exponential, MatchesSeries) {
  auto rng = make_rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const double e = uniform(rng, -kPi, kPi);
    const Vec3 n = random_unit(rng);
    const Complex2x2 series = taylor_exp(cplx{0.0, -e} * pauli_dot(n));
    EXPECT_LT(max_abs_diff(su2_exp(e, n), series), 1e-13);
  }
}

TEST(Spinors, InnerProductIsAntilinearInFirstSlot) {
  const Spinor a{cplx{1, 2}, cplx{0, -1}};
  const Spinor b{cplx{0.5, 0}, cplx{2, 1}};
  const cplx z{0.3, -1.7};
  EXPECT_LT(std::abs(inner(z * a, b) - std::conj(z) * inner(a, b)), 1e-14);
  EXPECT_LT(std::abs(inner(a, z * b) - z * inner(a, b)), 1e-14);
  EXPECT_LT(std::abs(inner(a, b) - std::conj(inner(b, a))), 1e-14);
  EXPECT_NEAR(a.normalized().norm_squared(), 1.0, 1e-15);
}

TEST(HermitianEigen, DiagonalHamiltonian) {
  const HermitianEigen2 e = eig_h2({0, 0, 1});
  EXPECT_DOUBLE_EQ(e.lambda_plus, 1.0);
  EXPECT_DOUBLE_EQ(e.lambda_minus, -1.0);
  EXPECT_LT(std::abs(e.v_plus.up - 1.0) + std::abs(e.v_plus.down), 1e-15);
  EXPECT_LT(std::abs(e.v_minus.up) + std::abs(e.v_minus.down - 1.0), 1e-15);

  const HermitianEigen2 f = eig_h2({0, 0, -2});
  EXPECT_DOUBLE_EQ(f.lambda_plus, 2.0);
  EXPECT_LT(std::abs(f.v_plus.up) + std::abs(f.v_plus.down - 1.0), 1e-15);
  EXPECT_LT(std::abs(f.v_minus.up - 1.0) + std::abs(f.v_minus.down), 1e-15);
}

TEST(HermitianEigen, SigmaXEigenvectors) {
  // sigma_x (1, 1) = +(1, 1): the upper eigenvalue belongs to the symmetric state.
  const HermitianEigen2 e = eig_h2({1, 0, 0});
  const double r = std::sqrt(0.5);
  EXPECT_NEAR(std::abs(inner(e.v_plus, Spinor{r, r})), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(inner(e.v_minus, Spinor{r, -r})), 1.0, 1e-15);
}

TEST(HermitianEigen, ResidualOrthogonalityAndGauge) {
  auto rng = make_rng(15);
  for (int trial = 0; trial < 10000; ++trial) {
    const Vec3 n = uniform(rng, 1e-3, 10.0) * random_unit(rng);
    const HermitianEigen2 e = eig_h2(n);
    const Complex2x2 h = pauli_dot(n);
    const Spinor rp = h * e.v_plus, rm = h * e.v_minus;
    const double scale = n.norm();
    EXPECT_LT(std::abs(rp.up - e.lambda_plus * e.v_plus.up) + std::abs(rp.down - e.lambda_plus * e.v_plus.down),
              1e-12 * scale);
    EXPECT_LT(std::abs(rm.up - e.lambda_minus * e.v_minus.up) + std::abs(rm.down - e.lambda_minus * e.v_minus.down),
              1e-12 * scale);
    EXPECT_LT(std::abs(inner(e.v_plus, e.v_minus)), 1e-12);
    EXPECT_NEAR(e.v_plus.norm_squared(), 1.0, 1e-12);
    EXPECT_NEAR(e.v_minus.norm_squared(), 1.0, 1e-12);
    EXPECT_EQ(e.v_plus.down.imag(), 0.0);
    EXPECT_EQ(e.v_minus.down.imag(), 0.0);
    // eigenvalues agree with the characteristic polynomial
    const auto [a, b] = eigenvalues_2x2(h);
    EXPECT_NEAR(std::max(a.real(), b.real()), e.lambda_plus, 1e-12 * scale);
  }
}

TEST(HermitianEigen, InvariantUnderPositiveScaling) {
  auto rng = make_rng(16);
  for (int trial = 0; trial < 1000; ++trial) {
    const Vec3 n = random_unit(rng);
    const double s = std::exp(uniform(rng, -5.0, 5.0));
    const HermitianEigen2 a = eig_h2(n), b = eig_h2(s * n);
    EXPECT_NEAR(std::abs(inner(a.v_plus, b.v_plus)), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(inner(a.v_minus, b.v_minus)), 1.0, 1e-12);
  }
}

TEST(HermitianEigen, DegenerateInputRaises) {
  try {
    (void)eig_h2({0.0, 0.0, 1e-13});
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_EQ(e.kind(), DomainErrorKind::degenerate_input);
  }
}
