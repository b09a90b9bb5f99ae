#include <gtest/gtest.h>

#include "dtqw/errors.hpp"
#include "dtqw/holonomy.hpp"
#include "support.hpp"

using namespace dtqw;
using namespace dtqw::testing;

namespace {

double circ(double a, double b) { return std::abs(std::remainder(a - b, 2 * kPi)); }

double cap_area(double theta0) { return 2 * kPi * (1 - std::cos(theta0)); }

TransportResult transport_latitude(double theta0, bool ccw, int steps) {
  const SphereCurve loop = SphereCurve::latitude(theta0, ccw);
  const Vec3 e_theta{std::cos(theta0), 0.0, -std::sin(theta0)};
  return parallel_transport(loop, TangentVector(e_theta, loop.position(0.0)), steps);
}

}  // namespace

TEST(SphereCurve, ClosureIsValidated) {
  EXPECT_THROW(SphereCurve([](double t) { return SphericalPoint{1.0, 3.0 * t}; }), std::invalid_argument);
  EXPECT_NO_THROW(SphereCurve([](double t) { return SphericalPoint{1.0, 3.0 * t}; }, {}, false));
  const SphereCurve open([](double t) { return SphericalPoint{1.0, 3.0 * t}; }, {}, false);
  const Vec3 r = sphere_point(1.0, 0.0);
  EXPECT_THROW((void)parallel_transport(open, TangentVector({0, 1, 0}, r), 1000), std::invalid_argument);
}

TEST(SphereCurve, AnalyticAndNumericVelocitiesAgree) {
  const SphereCurve analytic = SphereCurve::latitude(0.8);
  const SphereCurve numeric([](double t) { return SphericalPoint{0.8, 2 * kPi * t}; });
  for (double t : {0.1, 0.37, 0.9}) EXPECT_LT((analytic.velocity(t) - numeric.velocity(t)).norm(), 1e-7);
}

TEST(TangentVectors, RejectNormalComponents) {
  const Vec3 r{0, 0, 1};
  EXPECT_THROW(TangentVector({0, 0.1, 1e-9}, r), std::invalid_argument);
  EXPECT_THROW(TangentVector({1, 0, 0}, {0, 0, 2}), std::invalid_argument);
  EXPECT_NO_THROW(TangentVector({1, 0, 1e-11}, r));
}

TEST(ParallelTransport, ListedLatitudes) {
  EXPECT_LT(circ(transport_latitude(kPi / 2, true, 100000).rotation_angle, 0.0), 1e-6);
  EXPECT_LT(circ(transport_latitude(kPi / 3, true, 100000).rotation_angle, kPi), 1e-6);
}

TEST(ParallelTransport, SignConventionIsCounterclockwiseAboutOutwardNormal) {
  // A small counterclockwise cap about +z rotates the vector counterclockwise by the cap area.
  const double theta0 = 0.4;
  const TransportResult r = transport_latitude(theta0, true, 20000);
  EXPECT_NEAR(r.rotation_angle, cap_area(theta0), 1e-8);
  EXPECT_GT(r.rotation_angle, 0.0);
  const TransportResult rev = transport_latitude(theta0, false, 20000);
  EXPECT_NEAR(rev.rotation_angle, -cap_area(theta0), 1e-8);
}

TEST(ParallelTransport, HolonomyEqualsSolidAngleOnRandomLatitudes) {
  auto rng = make_rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    const double theta0 = uniform(rng, 0.05, kPi - 0.05);
    const TransportResult r = transport_latitude(theta0, true, 20000);
    const double omega = solid_angle(SphereCurve::latitude(theta0), 1000);
    EXPECT_NEAR(omega, cap_area(theta0), 1e-9);
    EXPECT_LT(circ(r.rotation_angle, omega), 1e-6);
    EXPECT_LT(r.norm_drift, 1e-9);
  }
}

TEST(ParallelTransport, WavyLoopMatchesTrapezoidSolidAngle) {
  const SphereCurve wavy([](double t) { return SphericalPoint{1.0 + 0.3 * std::sin(4 * kPi * t), 2 * kPi * t}; });
  const Vec3 r0 = wavy.position(0.0);
  const Vec3 e_phi{0, 1, 0};
  const TransportResult r = parallel_transport(wavy, TangentVector(e_phi, r0), 20000);
  const double omega = solid_angle(wavy, 200000);
  // independent quadrature of the same area integral
  const double reference =
      simpson([](double t) { return (1 - std::cos(1.0 + 0.3 * std::sin(4 * kPi * t))) * 2 * kPi; }, 0.0, 1.0, 2000);
  EXPECT_NEAR(omega, reference, 1e-8);
  EXPECT_LT(circ(r.rotation_angle, reference), 1e-6);
  EXPECT_LT(r.norm_drift, 1e-9);
}

TEST(SolidAngle, DegenerateAndUnsupportedCurves) {
  EXPECT_NEAR(solid_angle(SphereCurve::latitude(1e-4), 100), 0.0, 1e-7);
  EXPECT_NEAR(solid_angle(SphereCurve::latitude(kPi / 3), 100), kPi, 1e-12);
  const SphereCurve back_and_forth([](double t) { return SphericalPoint{1.0, std::sin(2 * kPi * t)}; });
  try {
    (void)solid_angle(back_and_forth, 100);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.kind(), DomainErrorKind::unsupported_curve);
  }
}

TEST(BerryOverlapPhase, PurePhasesAndOrthogonality) {
  const Spinor psi = Spinor{cplx{0.6, 0.1}, cplx{0.2, -0.3}}.normalized();
  EXPECT_NEAR(berry_overlap_phase(psi, std::polar(1.0, 0.4) * psi), 0.4, 1e-14);
  EXPECT_NEAR(berry_overlap_phase(psi, psi), 0.0, 1e-15);
  EXPECT_THROW((void)berry_overlap_phase({1.0, 0.0}, {0.0, 1.0}), DomainError);
}

TEST(BerryOverlapPhase, SpinHalfTransportPicksUpHalfTheSolidAngle) {
  for (double theta0 : {0.3, 1.0, 2.0, 2.8}) {
    const SphereCurve loop = SphereCurve::latitude(theta0);
    for (int sign : {+1, -1}) {
      const SpinorFamily fam = sign > 0 ? SpinorFamily(spin_half_plus) : SpinorFamily(spin_half_minus);
      const Spinor start = fam(theta0, 0.0);
      const Spinor end = transport_state(fam, loop, 200000);
      // The relative phase e^{-i phi} points the spin at azimuth -phi, so the
      // spin direction runs the cap clockwise and picks up +sign * Omega / 2.
      EXPECT_LT(circ(berry_overlap_phase(start, end), sign * 0.5 * cap_area(theta0)), 1e-4) << theta0;
    }
  }
}

TEST(StateDistance, ListedCases) {
  const Spinor psi = spin_half_plus(0.7, 1.9);
  EXPECT_NEAR(state_distance(psi, std::polar(1.0, 2.2) * psi), 0.0, 1e-15);
  EXPECT_NEAR(state_distance({1.0, 0.0}, {0.0, 1.0}), 1.0, 1e-15);
  EXPECT_NEAR(state_distance(spin_half_plus(0.7, 1.9), spin_half_minus(0.7, 1.9)), 1.0, 1e-15);
}

TEST(GeometricTensor, SpinHalfMetricIsQuarterRoundSphere) {
  auto rng = make_rng(62);
  for (int trial = 0; trial < 50; ++trial) {
    const double theta = uniform(rng, 0.2, kPi - 0.2), phi = uniform(rng, -kPi, kPi);
    const GeometricTensor t = quantum_geometric_tensor(spin_half_plus, theta, phi);
    EXPECT_NEAR(t.g[0][0], 0.25, 1e-8);
    EXPECT_NEAR(t.g[1][1], 0.25 * std::sin(theta) * std::sin(theta), 1e-8);
    EXPECT_NEAR(t.g[0][1], 0.0, 1e-8);
    EXPECT_EQ(t.g[0][1], t.g[1][0]);
    EXPECT_EQ(t.V[0][1], -t.V[1][0]);
    EXPECT_NEAR(t.V[0][1], -0.5 * std::sin(theta), 1e-8);
    EXPECT_LT(t.error_bound, 1e-6);
  }
}

TEST(GeometricTensor, GaugeInvariance) {
  auto rng = make_rng(63);
  for (int trial = 0; trial < 20; ++trial) {
    const double a = uniform(rng, -3, 3), b = uniform(rng, -3, 3), c = uniform(rng, -3, 3);
    const SpinorFamily gauged = [=](double th, double ph) {
      return std::polar(1.0, a * th + b * std::sin(ph) + c * th * ph) * spin_half_plus(th, ph);
    };
    const double theta = uniform(rng, 0.3, 2.8), phi = uniform(rng, -3, 3);
    const double h = 1e-4;
    const GeometricTensor t0 = quantum_geometric_tensor(spin_half_plus, theta, phi, h);
    const GeometricTensor t1 = quantum_geometric_tensor(gauged, theta, phi, h);
    double diff = 0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) diff += std::pow(t0.g[i][j] - t1.g[i][j], 2) + std::pow(0.5 * (t0.V[i][j] - t1.V[i][j]), 2);
    EXPECT_LT(std::sqrt(diff), 10 * h * h);
  }
}

TEST(GeometricTensor, MetricPredictsInfinitesimalDistance) {
  auto rng = make_rng(64);
  for (int trial = 0; trial < 20; ++trial) {
    const double theta = uniform(rng, 0.3, 2.8), phi = uniform(rng, -3, 3);
    const double ang = uniform(rng, 0, 2 * kPi);
    const double dx[2] = {1e-3 * std::cos(ang), 1e-3 * std::sin(ang)};
    const GeometricTensor t = quantum_geometric_tensor(spin_half_plus, theta, phi);
    double ds2 = 0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) ds2 += t.g[i][j] * dx[i] * dx[j];
    const double delta = state_distance(spin_half_plus(theta, phi), spin_half_plus(theta + dx[0], phi + dx[1]));
    EXPECT_LT(std::abs(delta - ds2), 1e-9);
    // the antisymmetric part drops out of a symmetric contraction
    double anti = 0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) anti += t.V[i][j] * dx[i] * dx[j];
    EXPECT_LT(std::abs(anti), 1e-18);
  }
}

TEST(GeometricTensor, StepValidationAndDisagreement) {
  EXPECT_THROW((void)quantum_geometric_tensor(spin_half_plus, 1.0, 0.0, 1e-2), std::invalid_argument);
  EXPECT_THROW((void)quantum_geometric_tensor(spin_half_plus, 1.0, 0.0, 1e-9), std::invalid_argument);
  const SpinorFamily rough = [](double th, double ph) {
    const Spinor s = spin_half_plus(th, ph);
    return Spinor{s.up, s.down * std::polar(1.0, 5000.0 * th)};
  };
  try {
    (void)quantum_geometric_tensor(rough, 1.0, 0.0, 1e-3);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.kind(), DomainErrorKind::step_underflow);
  }
}
