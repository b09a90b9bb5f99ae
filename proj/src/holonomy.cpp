#include "dtqw/holonomy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dtqw/errors.hpp"

namespace dtqw {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kClosureTolerance = 1e-9;
constexpr double kTangentTolerance = 1e-10;
constexpr double kVelocityStep = 1e-6;

Vec3 d_theta(double theta, double phi) {
  return {std::cos(theta) * std::cos(phi), std::cos(theta) * std::sin(phi), -std::sin(theta)};
}

Vec3 d_phi(double theta, double phi) {
  return {-std::sin(theta) * std::sin(phi), std::sin(theta) * std::cos(phi), 0.0};
}

Vec3 transport_rate(const SphereCurve& curve, double t, const Vec3& v) {
  const Vec3 omega = curve.position(t).cross(curve.velocity(t));
  return omega.cross(v);
}

Vec3 project_tangent(const Vec3& v, const Vec3& r) { return v - v.dot(r) * r; }

using Tensor2 = std::array<std::array<cplx, 2>, 2>;

Tensor2 provost_tensor(const Spinor& n, const std::array<Spinor, 2>& dn) {
  Tensor2 t{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      t[i][j] = inner(dn[i], dn[j]) - inner(dn[i], n) * inner(n, dn[j]);
    }
  }
  return t;
}

std::array<Spinor, 2> central_derivatives(const SpinorFamily& family, double theta, double phi, double h) {
  const Spinor tp = family(theta + h, phi), tm = family(theta - h, phi);
  const Spinor pp = family(theta, phi + h), pm = family(theta, phi - h);
  const double s = 1.0 / (2.0 * h);
  return {Spinor{s * (tp.up - tm.up), s * (tp.down - tm.down)},
          Spinor{s * (pp.up - pm.up), s * (pp.down - pm.down)}};
}

}  // namespace

Vec3 sphere_point(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

SphereCurve::SphereCurve(AngleFn angles, AngleFn angle_rates, bool closed)
    : angles_(std::move(angles)), rates_(std::move(angle_rates)), closed_(closed) {
  if (!angles_) throw std::invalid_argument("SphereCurve: empty parameterization");
  if (closed_ && (position(1.0) - position(0.0)).norm() > kClosureTolerance) {
    throw std::invalid_argument("SphereCurve: curve flagged closed does not return to its start");
  }
}

SphereCurve SphereCurve::latitude(double theta0, bool counterclockwise, double phi0) {
  const double sweep = counterclockwise ? kTwoPi : -kTwoPi;
  return SphereCurve([=](double t) { return SphericalPoint{theta0, phi0 + sweep * t}; },
                     [=](double) { return SphericalPoint{0.0, sweep}; });
}

Vec3 SphereCurve::position(double t) const {
  const SphericalPoint p = angles_(t);
  return sphere_point(p.theta, p.phi);
}

Vec3 SphereCurve::velocity(double t) const {
  if (rates_) {
    const SphericalPoint p = angles_(t);
    const SphericalPoint rate = rates_(t);
    return rate.theta * d_theta(p.theta, p.phi) + rate.phi * d_phi(p.theta, p.phi);
  }
  return (1.0 / (2.0 * kVelocityStep)) * (position(t + kVelocityStep) - position(t - kVelocityStep));
}

TangentVector::TangentVector(const Vec3& v, const Vec3& base) : v_(v), base_(base) {
  if (std::abs(base.norm() - 1.0) > 1e-12) throw std::invalid_argument("TangentVector: base must be a unit vector");
  if (std::abs(v.dot(base)) > kTangentTolerance) {
    throw std::invalid_argument("TangentVector: vector is not tangent to the sphere at its base");
  }
}

TransportResult parallel_transport(const SphereCurve& curve, const TangentVector& v0, int steps) {
  if (!curve.closed()) throw std::invalid_argument("parallel_transport: curve must be closed");
  if (steps < 100) throw std::invalid_argument("parallel_transport: steps must be >= 100");
  const Vec3 r0 = curve.position(0.0);
  if ((r0 - v0.base()).norm() > kClosureTolerance) {
    throw std::invalid_argument("parallel_transport: v0 is not based at the curve start");
  }

  const double norm0 = v0.v().norm();
  const double dt = 1.0 / steps;
  Vec3 v = v0.v();
  for (int i = 0; i < steps; ++i) {
    const double t = i * dt;
    const Vec3 k1 = transport_rate(curve, t, v);
    const Vec3 k2 = transport_rate(curve, t + 0.5 * dt, v + (0.5 * dt) * k1);
    const Vec3 k3 = transport_rate(curve, t + 0.5 * dt, v + (0.5 * dt) * k2);
    const Vec3 k4 = transport_rate(curve, t + dt, v + dt * k3);
    v = v + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    v = project_tangent(v, curve.position(t + dt));
    v = (norm0 / v.norm()) * v;
  }

  const Vec3& a = v0.v();
  const double angle = std::atan2(a.cross(v).dot(r0), a.dot(v));
  return {v, angle, std::abs(v.norm() - norm0)};
}

double solid_angle(const SphereCurve& curve, int steps) {
  if (!curve.closed()) throw std::invalid_argument("solid_angle: curve must be closed");
  if (steps < 2) throw std::invalid_argument("solid_angle: steps must be >= 2");

  double total = 0.0;
  double sweep = 0.0;
  int direction = 0;
  SphericalPoint prev = curve.angles(0.0);
  for (int i = 1; i <= steps; ++i) {
    const SphericalPoint p = curve.angles(static_cast<double>(i) / steps);
    const double dphi = p.phi - prev.phi;
    const int dir = dphi > 0.0 ? 1 : (dphi < 0.0 ? -1 : 0);
    if (dir == 0 || (direction != 0 && dir != direction)) {
      throw DomainError(DomainErrorKind::unsupported_curve,
                        "solid_angle: phi must be strictly monotonic along the curve");
    }
    direction = dir;
    sweep += dphi;
    total += 0.5 * ((1.0 - std::cos(prev.theta)) + (1.0 - std::cos(p.theta))) * dphi;
    prev = p;
  }
  if (std::abs(std::abs(sweep) - kTwoPi) > 1e-9) {
    throw DomainError(DomainErrorKind::unsupported_curve, "solid_angle: curve must sweep one full turn in phi");
  }
  return total;
}

double berry_overlap_phase(const Spinor& psi_initial, const Spinor& psi_final) {
  const cplx overlap = inner(psi_initial, psi_final);
  if (std::abs(overlap) < 1e-9) {
    throw DomainError(DomainErrorKind::undefined_phase, "berry_overlap_phase: states are orthogonal");
  }
  return std::arg(overlap);
}

double state_distance(const Spinor& psi1, const Spinor& psi2) {
  return 1.0 - std::norm(inner(psi1, psi2));
}

Spinor spin_half_plus(double theta, double phi) {
  return {std::cos(0.5 * theta) * std::polar(1.0, 0.5 * phi), std::sin(0.5 * theta) * std::polar(1.0, -0.5 * phi)};
}

Spinor spin_half_minus(double theta, double phi) {
  return {std::sin(0.5 * theta) * std::polar(1.0, 0.5 * phi), -std::cos(0.5 * theta) * std::polar(1.0, -0.5 * phi)};
}

Spinor transport_state(const SpinorFamily& family, const SphereCurve& curve, int steps) {
  if (steps < 2) throw std::invalid_argument("transport_state: steps must be >= 2");
  SphericalPoint p = curve.angles(0.0);
  Spinor psi = family(p.theta, p.phi);
  for (int i = 1; i <= steps; ++i) {
    p = curve.angles(static_cast<double>(i) / steps);
    const Spinor n = family(p.theta, p.phi);
    const cplx overlap = inner(n, psi);
    if (std::abs(overlap) < 1e-12) {
      throw DomainError(DomainErrorKind::undefined_phase, "transport_state: step too coarse, overlap vanished");
    }
    psi = (overlap / std::abs(overlap)) * n;
  }
  return psi;
}

GeometricTensor quantum_geometric_tensor(const SpinorFamily& family, double theta, double phi, double h) {
  if (!(h >= 1e-7 && h <= 1e-3)) throw std::invalid_argument("quantum_geometric_tensor: h must lie in [1e-7, 1e-3]");

  const Spinor n = family(theta, phi);
  const auto coarse = central_derivatives(family, theta, phi, h);
  const auto fine = central_derivatives(family, theta, phi, 0.5 * h);
  std::array<Spinor, 2> extrapolated{};
  for (int i = 0; i < 2; ++i) {
    extrapolated[i] = {(4.0 * fine[i].up - coarse[i].up) / 3.0, (4.0 * fine[i].down - coarse[i].down) / 3.0};
  }

  const Tensor2 t = provost_tensor(n, extrapolated);
  const Tensor2 t_fine = provost_tensor(n, fine);
  double err2 = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) err2 += std::norm(t[i][j] - t_fine[i][j]);
  }

  GeometricTensor out{};
  out.theta = theta;
  out.phi = phi;
  out.error_bound = std::sqrt(err2);
  if (out.error_bound > 1e-4) {
    throw DomainError(DomainErrorKind::step_underflow,
                      "quantum_geometric_tensor: finite-difference estimates disagree by more than 1e-4");
  }
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      // Symmetrize / antisymmetrize to remove rounding asymmetry.
      out.g[i][j] = 0.5 * (t[i][j].real() + t[j][i].real());
      out.V[i][j] = t[i][j].imag() - t[j][i].imag();
    }
  }
  return out;
}

}  // namespace dtqw
