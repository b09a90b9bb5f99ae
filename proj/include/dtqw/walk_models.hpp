#pragma once

// The three discrete-time quantum walk families, their momentum-space
// unitaries, closed-form dispersions, and Bloch-vector decompositions.

#include <string>
#include <string_view>
#include <variant>

#include "dtqw/spin_algebra.hpp"

namespace dtqw {

enum class Family { standard, split_step, non_commuting };

[[nodiscard]] std::string_view family_name(Family f);
/// Accepts "standard", "splitstep"/"split-step"/"split_step", "noncommuting"/"non-commuting".
[[nodiscard]] Family parse_family(std::string_view name);

/// Wraps an angle into [-pi, pi]. Values already inside the closed interval are
/// returned unchanged, so -pi and +pi stay distinct.
[[nodiscard]] double canonical_angle(double a);

struct StandardWalk {
  double theta;
};
struct SplitStepWalk {
  double theta1;
  double theta2;
};
struct NonCommutingWalk {
  double theta;
  double phi;
};

/// Tagged walk description. Angles are radians in [-pi, pi].
class WalkModel {
 public:
  using Variant = std::variant<StandardWalk, SplitStepWalk, NonCommutingWalk>;

  static WalkModel standard(double theta);
  static WalkModel split_step(double theta1, double theta2);
  static WalkModel non_commuting(double theta, double phi);
  /// Builds a member of `family` from a generic angle pair. The standard walk
  /// uses angle1 only.
  static WalkModel from_family(Family family, double angle1, double angle2);

  [[nodiscard]] Family family() const;
  [[nodiscard]] const Variant& variant() const { return v_; }
  /// (angle1, angle2) as used by the parameter-space scans; angle2 is 0 for
  /// the standard walk.
  [[nodiscard]] double angle1() const;
  [[nodiscard]] double angle2() const;
  /// Spin-dependent translations per unitary step (2 for the split-step walk).
  [[nodiscard]] int translations_per_step() const;
  [[nodiscard]] std::string describe() const;

 private:
  explicit WalkModel(Variant v) : v_(v) {}
  Variant v_;
};

/// cos E(k) = cos_k * cos(k) + sin_k * sin(k) + constant, valid for every family.
struct DispersionCoeffs {
  double cos_k;
  double sin_k;
  double constant;

  [[nodiscard]] double cos_energy(double k) const;
  [[nodiscard]] double cos_energy(double cos_k_value, double sin_k_value) const {
    return cos_k * cos_k_value + sin_k * sin_k_value + constant;
  }
};

[[nodiscard]] DispersionCoeffs dispersion_coeffs(const WalkModel& model);

struct BlochVector {
  double nx;
  double ny;
  double nz;
  double k;

  [[nodiscard]] Vec3 vec() const { return {nx, ny, nz}; }
};

/// a = sin(phi)cos(theta), b = cos(phi)sin(theta), c = sin(phi)sin(theta),
/// d = cos(phi)cos(theta).
struct AngularCoeffs {
  double a;
  double b;
  double c;
  double d;
};

[[nodiscard]] AngularCoeffs angular_coeffs(double theta, double phi);

/// Spin-dependent translation in momentum space: diag(e^{ik}, e^{-ik}).
[[nodiscard]] Complex2x2 translation(double k);

/// One-step unitary at quasi-momentum k.
///
///   standard:      T(k) Ry(theta)
///   non-commuting: T(k) Ry(theta) Rx(phi)          (Rx acts first)
///   split-step:    T(k/2) Ry(theta2) T(k/2) Ry(theta1)  (Ry(theta1) acts first)
///
/// The split-step unitary contains two unit translations; k is the momentum
/// conjugate to the two-site displacement per step, which keeps the dispersion
/// 2pi-periodic in k.
[[nodiscard]] Complex2x2 momentum_unitary(const WalkModel& model, double k);

/// Coin applied before the (first) translation. For the split-step walk this is
/// Ry(theta1); see split_step_second_coin.
[[nodiscard]] Complex2x2 coin(const WalkModel& model);
[[nodiscard]] Complex2x2 split_step_second_coin(const SplitStepWalk& w);

/// Quasi-energy E(k) in [0, pi] from the closed-form dispersion.
[[nodiscard]] double quasi_energy(const WalkModel& model, double k);

/// gap(model, k) = 1 - |cos E(k)|; zero at band touchings E in {0, pi}.
[[nodiscard]] double gap(const WalkModel& model, double k);

/// Bloch vector of the effective Hamiltonian, H(k) = E(k) n(k).sigma.
/// Throws DomainError(gapless_point) when sin E(k) < 1e-9.
[[nodiscard]] BlochVector bloch_vector(const WalkModel& model, double k);

/// Frobenius norm of exp(-i E(k) n(k).sigma) - U(k).
[[nodiscard]] double effective_hamiltonian_check(const WalkModel& model, double k);

}  // namespace dtqw
