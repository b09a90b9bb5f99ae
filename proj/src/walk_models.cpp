#include "dtqw/walk_models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "dtqw/errors.hpp"

namespace dtqw {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kClampSlack = 1e-9;
constexpr double kGaplessSinE = 1e-9;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void require_finite(double a) {
  if (!std::isfinite(a)) throw std::invalid_argument("walk angles must be finite");
}

double sin_energy(double cos_e) { return std::sqrt(std::max(0.0, (1.0 - cos_e) * (1.0 + cos_e))); }

double checked_cos_energy(const WalkModel& model, double k) {
  const double c = dispersion_coeffs(model).cos_energy(k);
  if (std::abs(c) > 1.0 + kClampSlack) {
    throw DomainError(DomainErrorKind::internal_consistency,
                      "closed-form |cos E| exceeds 1 beyond rounding slack");
  }
  return std::clamp(c, -1.0, 1.0);
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::standard:
      return "standard";
    case Family::split_step:
      return "splitstep";
    case Family::non_commuting:
      return "noncommuting";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  if (name == "standard") return Family::standard;
  if (name == "splitstep" || name == "split-step" || name == "split_step") return Family::split_step;
  if (name == "noncommuting" || name == "non-commuting" || name == "non_commuting") {
    return Family::non_commuting;
  }
  throw std::invalid_argument("unknown walk family: " + std::string(name));
}

double canonical_angle(double a) {
  require_finite(a);
  if (a >= -kPi && a <= kPi) return a;
  return std::remainder(a, 2.0 * kPi);
}

WalkModel WalkModel::standard(double theta) { return WalkModel{StandardWalk{canonical_angle(theta)}}; }

WalkModel WalkModel::split_step(double theta1, double theta2) {
  return WalkModel{SplitStepWalk{canonical_angle(theta1), canonical_angle(theta2)}};
}

WalkModel WalkModel::non_commuting(double theta, double phi) {
  return WalkModel{NonCommutingWalk{canonical_angle(theta), canonical_angle(phi)}};
}

WalkModel WalkModel::from_family(Family family, double angle1, double angle2) {
  switch (family) {
    case Family::standard:
      return standard(angle1);
    case Family::split_step:
      return split_step(angle1, angle2);
    case Family::non_commuting:
      return non_commuting(angle1, angle2);
  }
  throw std::invalid_argument("unknown family");
}

Family WalkModel::family() const {
  return std::visit(overloaded{[](const StandardWalk&) { return Family::standard; },
                               [](const SplitStepWalk&) { return Family::split_step; },
                               [](const NonCommutingWalk&) { return Family::non_commuting; }},
                    v_);
}

double WalkModel::angle1() const {
  return std::visit(overloaded{[](const StandardWalk& w) { return w.theta; },
                               [](const SplitStepWalk& w) { return w.theta1; },
                               [](const NonCommutingWalk& w) { return w.theta; }},
                    v_);
}

double WalkModel::angle2() const {
  return std::visit(overloaded{[](const StandardWalk&) { return 0.0; },
                               [](const SplitStepWalk& w) { return w.theta2; },
                               [](const NonCommutingWalk& w) { return w.phi; }},
                    v_);
}

int WalkModel::translations_per_step() const { return family() == Family::split_step ? 2 : 1; }

std::string WalkModel::describe() const {
  std::ostringstream os;
  os.precision(17);
  std::visit(overloaded{[&](const StandardWalk& w) { os << "standard(theta=" << w.theta << ")"; },
                        [&](const SplitStepWalk& w) {
                          os << "splitstep(theta1=" << w.theta1 << ", theta2=" << w.theta2 << ")";
                        },
                        [&](const NonCommutingWalk& w) {
                          os << "noncommuting(theta=" << w.theta << ", phi=" << w.phi << ")";
                        }},
             v_);
  return os.str();
}

double DispersionCoeffs::cos_energy(double k) const {
  return cos_energy(std::cos(k), std::sin(k));
}

DispersionCoeffs dispersion_coeffs(const WalkModel& model) {
  return std::visit(
      overloaded{[](const StandardWalk& w) { return DispersionCoeffs{std::cos(w.theta), 0.0, 0.0}; },
                 [](const SplitStepWalk& w) {
                   return DispersionCoeffs{std::cos(w.theta1) * std::cos(w.theta2), 0.0,
                                           -std::sin(w.theta1) * std::sin(w.theta2)};
                 },
                 [](const NonCommutingWalk& w) {
                   return DispersionCoeffs{std::cos(w.theta) * std::cos(w.phi),
                                           std::sin(w.theta) * std::sin(w.phi), 0.0};
                 }},
      model.variant());
}

AngularCoeffs angular_coeffs(double theta, double phi) {
  const double ct = std::cos(theta), st = std::sin(theta);
  const double cp = std::cos(phi), sp = std::sin(phi);
  return {sp * ct, cp * st, sp * st, cp * ct};
}

Complex2x2 translation(double k) {
  return Complex2x2::diagonal(std::polar(1.0, k), std::polar(1.0, -k));
}

Complex2x2 coin(const WalkModel& model) {
  return std::visit(overloaded{[](const StandardWalk& w) { return rotation_y(w.theta); },
                               [](const SplitStepWalk& w) { return rotation_y(w.theta1); },
                               [](const NonCommutingWalk& w) {
                                 return rotation_y(w.theta) * rotation_x(w.phi);
                               }},
                    model.variant());
}

Complex2x2 split_step_second_coin(const SplitStepWalk& w) { return rotation_y(w.theta2); }

Complex2x2 momentum_unitary(const WalkModel& model, double k) {
  if (const auto* ss = std::get_if<SplitStepWalk>(&model.variant())) {
    const Complex2x2 half = translation(0.5 * k);
    return half * split_step_second_coin(*ss) * half * rotation_y(ss->theta1);
  }
  return translation(k) * coin(model);
}

double quasi_energy(const WalkModel& model, double k) { return std::acos(checked_cos_energy(model, k)); }

double gap(const WalkModel& model, double k) {
  return 1.0 - std::abs(checked_cos_energy(model, k));
}

BlochVector bloch_vector(const WalkModel& model, double k) {
  const double cos_e = checked_cos_energy(model, k);
  const double sin_e = sin_energy(cos_e);
  if (sin_e < kGaplessSinE) {
    std::ostringstream os;
    os.precision(17);
    os << "bloch_vector: gapless point for " << model.describe() << " at k=" << k;
    throw DomainError(DomainErrorKind::gapless_point, os.str());
  }
  const double ck = std::cos(k);
  const double sk = std::sin(k);

  Vec3 num = std::visit(
      overloaded{[&](const StandardWalk& w) {
                   const double s = std::sin(w.theta), c = std::cos(w.theta);
                   return Vec3{sk * s, ck * s, -sk * c};
                 },
                 [&](const SplitStepWalk& w) {
                   const double s1 = std::sin(w.theta1), c1 = std::cos(w.theta1);
                   const double s2 = std::sin(w.theta2), c2 = std::cos(w.theta2);
                   return Vec3{sk * s1 * c2, ck * s1 * c2 + s2 * c1, -sk * c2 * c1};
                 },
                 [&](const NonCommutingWalk& w) {
                   const AngularCoeffs ac = angular_coeffs(w.theta, w.phi);
                   return Vec3{-ck * ac.a + sk * ac.b, ck * ac.b + sk * ac.a, ck * ac.c - sk * ac.d};
                 }},
      model.variant());

  return {num.x / sin_e, num.y / sin_e, num.z / sin_e, k};
}

double effective_hamiltonian_check(const WalkModel& model, double k) {
  const BlochVector n = bloch_vector(model, k);
  const Complex2x2 reconstructed = su2_exp(quasi_energy(model, k), n.vec());
  return (reconstructed - momentum_unitary(model, k)).frobenius_norm();
}

}  // namespace dtqw
