#pragma once

// Zak phases of the two quasi-energy bands.

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dtqw/spin_algebra.hpp"
#include "dtqw/walk_models.hpp"

namespace dtqw {

enum class Band { plus, minus };

[[nodiscard]] std::string_view band_name(Band b);
/// Accepts "plus"/"+" and "minus"/"-".
[[nodiscard]] Band parse_band(std::string_view s);

enum class ZakInterval {
  full_zone,  // k in [k0 - pi, k0 + pi), always a closed loop
  half_zone,  // k in [k0 - pi/2, k0 + pi/2], open unless `closed`
};

struct ZakOptions {
  ZakInterval interval = ZakInterval::full_zone;
  /// Half-zone only: include the endpoint overlap <v(k0 + pi/2)|v(k0 - pi/2)>.
  bool closed = false;
  /// Re-run at twice the resolution and flag results that move by > 1e-4.
  bool check_convergence = true;
};

struct ZakResult {
  Band band;
  /// Radians, in (-pi, pi].
  double phase;
  double k_origin;
  int n_points;
  WalkModel model;
  ZakInterval interval;
  bool closed;
  bool converged;
  /// |Z(n_points) - Z(2 n_points)| on the circle; 0 when not checked.
  double convergence_delta;
};

/// Maps an angle to (-pi, pi]; values within 1e-12 of -pi are reported as pi.
[[nodiscard]] double wrap_phase(double x);
/// Shortest distance between two angles on the circle.
[[nodiscard]] double circular_distance(double a, double b);

/// Band eigenvector of H(k) = n(k).sigma with the eig_h2 phase convention
/// (real lower component). Throws DomainError(gapless_point) when gap <= 1e-9.
[[nodiscard]] Spinor band_eigenvector(const WalkModel& model, double k, Band band);

/// -sum_i arg <v_i|v_{i+1}> over consecutive samples; with `closed` the
/// overlap <v_last|v_first> is included. Unwrapped (not reduced mod 2 pi).
/// Throws DomainError(undefined_phase) on a vanishing overlap.
[[nodiscard]] double discrete_berry_phase(std::span<const Spinor> path, bool closed);

/// Momenta on the integration path for the given options.
[[nodiscard]] std::vector<double> zak_path(double k_origin, int n_points, const ZakOptions& options);

/// Discrete (Wilson-line) Zak phase of one band.
/// Requires n_points >= 16 and gap > 1e-6 on every path sample.
[[nodiscard]] ZakResult zak_numeric(const WalkModel& model, Band band, double k_origin = 0.0,
                                    int n_points = 2048, const ZakOptions& options = {});

/// Integrand (a^2 + b^2) / D^2 of the non-commuting walk, with
/// D^2 = r^2 -+ (c cos k - d sin k) r and
/// r^2 = a^2 + b^2 + c^2 cos^2 k + d^2 sin^2 k - sin(2k) c d.
[[nodiscard]] double zak_noncommuting_integrand(double theta, double phi, double k, Band band);

struct SplitStepZakAnalytic {
  /// phi(-pi/2) - phi(pi/2) with phi = atan2(ny, nx) tracked continuously.
  double endpoint_form;
  /// Closed-form ratio tan(theta2) / tan(theta1), kept for comparison only;
  /// empty when tan(theta1) vanishes.
  std::optional<double> as_published;
};

/// tan(theta2) / tan(theta1) for any angles; empty when tan(theta1) vanishes.
[[nodiscard]] std::optional<double> zak_splitstep_published(double theta1, double theta2);

/// Requires cos(theta1) cos(theta2) = 0 (within 1e-9), i.e. nz(k) == 0.
[[nodiscard]] SplitStepZakAnalytic zak_splitstep_analytic(double theta1, double theta2,
                                                          int samples = 4096);

/// (Z_a - Z_b) wrapped to (-pi, pi].
[[nodiscard]] double zak_difference(const WalkModel& a, const WalkModel& b, Band band,
                                    double k_origin = 0.0, int n_points = 2048,
                                    const ZakOptions& options = {});

struct ZakMapNode {
  double angle1;
  double angle2;
  double zak_plus;   // NaN when masked
  double zak_minus;  // NaN when masked
  bool masked;
};

struct ZakMap {
  Family family;
  int resolution;
  int n_points;
  std::vector<ZakMapNode> nodes;  // row-major, same layout as GapMap

  [[nodiscard]] const ZakMapNode& at(int i, int j) const {
    return nodes[static_cast<std::size_t>(i) * static_cast<std::size_t>(resolution) +
                 static_cast<std::size_t>(j)];
  }
};

/// A node is masked when any momentum on its integration path has gap < 1e-6.
[[nodiscard]] ZakMap zak_map(Family family, int resolution, int n_points = 256,
                             const ZakOptions& options = {ZakInterval::full_zone, false, false});

}  // namespace dtqw
