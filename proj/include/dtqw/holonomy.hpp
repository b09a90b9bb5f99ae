#pragma once

// Parallel transport on the unit sphere, Berry phases from overlaps, and the
// quantum geometric tensor of a two-parameter spinor family.

#include <array>
#include <functional>

#include "dtqw/spin_algebra.hpp"

namespace dtqw {

struct SphericalPoint {
  double theta;
  double phi;
};

/// (sin t cos p, sin t sin p, cos t)
[[nodiscard]] Vec3 sphere_point(double theta, double phi);

/// Curve t in [0, 1] -> (theta(t), phi(t)) on the unit sphere.
class SphereCurve {
 public:
  using AngleFn = std::function<SphericalPoint(double)>;

  /// `angle_rates` returns (d theta/dt, d phi/dt); when empty, velocities come
  /// from central differences of `angles`. A curve flagged closed must return
  /// to its starting point within 1e-9 (as a 3-vector).
  explicit SphereCurve(AngleFn angles, AngleFn angle_rates = {}, bool closed = true);

  /// Circle of constant polar angle theta0, one full turn in phi starting at phi0.
  /// Counterclockwise means increasing phi (counterclockwise about +z).
  static SphereCurve latitude(double theta0, bool counterclockwise = true, double phi0 = 0.0);

  [[nodiscard]] SphericalPoint angles(double t) const { return angles_(t); }
  [[nodiscard]] Vec3 position(double t) const;
  [[nodiscard]] Vec3 velocity(double t) const;
  [[nodiscard]] bool closed() const { return closed_; }

 private:
  AngleFn angles_;
  AngleFn rates_;
  bool closed_;
};

/// Vector in the tangent plane at `base` (unit). Construction rejects
/// |v . base| > 1e-10.
class TangentVector {
 public:
  TangentVector(const Vec3& v, const Vec3& base);

  [[nodiscard]] const Vec3& v() const { return v_; }
  [[nodiscard]] const Vec3& base() const { return base_; }

 private:
  Vec3 v_;
  Vec3 base_;
};

struct TransportResult {
  Vec3 v_final;
  /// Signed angle from v0 to v_final about the outward normal r(0);
  /// positive is counterclockwise seen from outside the sphere.
  double rotation_angle;
  /// | |v_final| - |v0| |
  double norm_drift;
};

/// Integrates dV/dt = Omega x V with Omega = r x dr/dt using fixed-step RK4,
/// re-projecting onto the tangent plane and restoring the norm after each step.
/// Requires a closed curve, v0 tangent at r(0), and steps >= 100.
[[nodiscard]] TransportResult parallel_transport(const SphereCurve& curve, const TangentVector& v0,
                                                 int steps);

/// Solid angle integral of (1 - cos theta) d phi along the curve (trapezoid on
/// `steps` intervals). Only curves whose phi is strictly monotonic and sweeps a
/// full turn are supported; the sign follows the direction of the sweep.
/// Throws DomainError(unsupported_curve) otherwise.
[[nodiscard]] double solid_angle(const SphereCurve& curve, int steps);

/// arg <psi_initial|psi_final> in (-pi, pi]. Throws DomainError(undefined_phase)
/// when the overlap magnitude is below 1e-9.
[[nodiscard]] double berry_overlap_phase(const Spinor& psi_initial, const Spinor& psi_final);

/// 1 - |<psi1|psi2>|^2
[[nodiscard]] double state_distance(const Spinor& psi1, const Spinor& psi2);

using SpinorFamily = std::function<Spinor(double theta, double phi)>;

/// (cos(t/2) e^{ip/2}, sin(t/2) e^{-ip/2})
[[nodiscard]] Spinor spin_half_plus(double theta, double phi);
/// (sin(t/2) e^{ip/2}, -cos(t/2) e^{-ip/2})
[[nodiscard]] Spinor spin_half_minus(double theta, double phi);

/// Adiabatic (projected) transport of family(curve(0)) along the curve in
/// `steps` increments: psi <- n <n|psi> / |<n|psi>| at each new point.
[[nodiscard]] Spinor transport_state(const SpinorFamily& family, const SphereCurve& curve, int steps);

struct GeometricTensor {
  /// Real symmetric part, indices (theta, phi).
  std::array<std::array<double, 2>, 2> g;
  /// Curvature form, twice the imaginary part.
  std::array<std::array<double, 2>, 2> V;
  double theta;
  double phi;
  /// Frobenius distance between the step-h/2 and Richardson estimates of T.
  double error_bound;
};

/// T_ij = <d_i n|(1 - |n><n|)|d_j n> = g_ij + i V_ij / 2 from central
/// differences at steps h and h/2 combined by one Richardson step.
/// Requires h in [1e-7, 1e-3]; throws DomainError(step_underflow) when the two
/// estimates differ by more than 1e-4.
[[nodiscard]] GeometricTensor quantum_geometric_tensor(const SpinorFamily& family, double theta, double phi,
                                                       double h = 1e-4);

}  // namespace dtqw
