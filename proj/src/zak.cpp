#include "dtqw/zak.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "dtqw/errors.hpp"
#include "dtqw/parallel.hpp"
#include "dtqw/topology.hpp"

namespace dtqw {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kEigenGapFloor = 1e-9;
constexpr double kPathGapFloor = 1e-6;
constexpr double kConvergenceFlag = 1e-4;

double raw_zak(const WalkModel& model, Band band, double k_origin, int n_points, const ZakOptions& options) {
  const std::vector<double> ks = zak_path(k_origin, n_points, options);
  std::vector<Spinor> path;
  path.reserve(ks.size());
  for (double k : ks) {
    if (gap(model, k) < kPathGapFloor) {
      throw DomainError(DomainErrorKind::gapless_point,
                        "zak_numeric: gap below 1e-6 on the integration path for " + model.describe());
    }
    path.push_back(band_eigenvector(model, k, band));
  }
  const bool closed = options.interval == ZakInterval::full_zone || options.closed;
  return discrete_berry_phase(path, closed);
}

}  // namespace

std::string_view band_name(Band b) { return b == Band::plus ? "plus" : "minus"; }

Band parse_band(std::string_view s) {
  if (s == "plus" || s == "+") return Band::plus;
  if (s == "minus" || s == "-") return Band::minus;
  throw std::invalid_argument("unknown band: " + std::string(s));
}

double wrap_phase(double x) {
  double r = std::remainder(x, kTwoPi);
  if (r <= -kPi + 1e-12) r = kPi;  // -pi and pi are the same phase
  return r;
}

double circular_distance(double a, double b) { return std::abs(std::remainder(a - b, kTwoPi)); }

Spinor band_eigenvector(const WalkModel& model, double k, Band band) {
  if (gap(model, k) <= kEigenGapFloor) {
    throw DomainError(DomainErrorKind::gapless_point,
                      "band_eigenvector: gap below 1e-9 for " + model.describe());
  }
  const HermitianEigen2 e = eig_h2(bloch_vector(model, k).vec());
  return band == Band::plus ? e.v_plus : e.v_minus;
}

double discrete_berry_phase(std::span<const Spinor> path, bool closed) {
  if (path.size() < 2) throw std::invalid_argument("discrete_berry_phase: need at least two samples");
  double phase = 0.0;
  const std::size_t links = closed ? path.size() : path.size() - 1;
  for (std::size_t i = 0; i < links; ++i) {
    const cplx overlap = inner(path[i], path[(i + 1) % path.size()]);
    if (std::abs(overlap) < 1e-12) {
      throw DomainError(DomainErrorKind::undefined_phase,
                        "discrete_berry_phase: neighbouring states are orthogonal");
    }
    phase -= std::arg(overlap);
  }
  return phase;
}

std::vector<double> zak_path(double k_origin, int n_points, const ZakOptions& options) {
  if (n_points < 16) throw std::invalid_argument("zak: n_points must be >= 16");
  std::vector<double> ks(static_cast<std::size_t>(n_points));
  if (options.interval == ZakInterval::full_zone) {
    for (int i = 0; i < n_points; ++i) ks[static_cast<std::size_t>(i)] = k_origin - kPi + kTwoPi * i / n_points;
  } else {
    for (int i = 0; i < n_points; ++i) {
      ks[static_cast<std::size_t>(i)] = k_origin - 0.5 * kPi + kPi * i / (n_points - 1);
    }
  }
  return ks;
}

ZakResult zak_numeric(const WalkModel& model, Band band, double k_origin, int n_points,
                      const ZakOptions& options) {
  const double phase = wrap_phase(raw_zak(model, band, k_origin, n_points, options));
  ZakResult out{band,
                phase,
                k_origin,
                n_points,
                model,
                options.interval,
                options.interval == ZakInterval::full_zone || options.closed,
                true,
                0.0};
  if (options.check_convergence) {
    const double refined = wrap_phase(raw_zak(model, band, k_origin, 2 * n_points, options));
    out.convergence_delta = circular_distance(phase, refined);
    out.converged = out.convergence_delta <= kConvergenceFlag;
  }
  return out;
}

double zak_noncommuting_integrand(double theta, double phi, double k, Band band) {
  if (gap(WalkModel::non_commuting(theta, phi), k) <= kEigenGapFloor) {
    throw DomainError(DomainErrorKind::gapless_point, "zak_noncommuting_integrand: gapless point");
  }
  const AngularCoeffs ac = angular_coeffs(theta, phi);
  const double ck = std::cos(k), sk = std::sin(k);
  const double in_plane = ac.a * ac.a + ac.b * ac.b;
  const double r = std::sqrt(in_plane + ac.c * ac.c * ck * ck + ac.d * ac.d * sk * sk -
                             std::sin(2.0 * k) * ac.c * ac.d);
  const double nz = ac.c * ck - ac.d * sk;
  // r -+ nz, evaluated without cancellation: (r - nz)(r + nz) = a^2 + b^2.
  const double r_minus = nz > 0.0 ? in_plane / (r + nz) : r - nz;
  const double r_plus = nz < 0.0 ? in_plane / (r - nz) : r + nz;
  const double d2 = band == Band::plus ? r * r_minus : r * r_plus;
  return in_plane / d2;
}

SplitStepZakAnalytic zak_splitstep_analytic(double theta1, double theta2, int samples) {
  if (std::abs(std::cos(theta1) * std::cos(theta2)) > 1e-9) {
    throw std::invalid_argument("zak_splitstep_analytic: requires cos(theta1) cos(theta2) = 0 (nz == 0)");
  }
  if (samples < 16) throw std::invalid_argument("zak_splitstep_analytic: samples must be >= 16");
  const WalkModel model = WalkModel::split_step(theta1, theta2);

  double first = 0.0, unwrapped = 0.0, prev = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double k = -0.5 * kPi + kPi * i / (samples - 1);
    const BlochVector n = bloch_vector(model, k);
    const double angle = std::atan2(n.ny, n.nx);
    if (i == 0) {
      first = unwrapped = angle;
    } else {
      unwrapped += std::remainder(angle - prev, kTwoPi);
    }
    prev = angle;
  }

  return {first - unwrapped, zak_splitstep_published(theta1, theta2)};
}

std::optional<double> zak_splitstep_published(double theta1, double theta2) {
  const double t1 = std::tan(theta1);
  if (std::abs(t1) <= 1e-12) return std::nullopt;
  return std::tan(theta2) / t1;
}

double zak_difference(const WalkModel& a, const WalkModel& b, Band band, double k_origin, int n_points,
                      const ZakOptions& options) {
  ZakOptions opts = options;
  opts.check_convergence = false;
  const double za = raw_zak(a, band, k_origin, n_points, opts);
  const double zb = raw_zak(b, band, k_origin, n_points, opts);
  return wrap_phase(za - zb);
}

ZakMap zak_map(Family family, int resolution, int n_points, const ZakOptions& options) {
  if (resolution < 3) throw std::invalid_argument("zak_map: resolution must be >= 3");
  const std::vector<double> grid = angle_grid(resolution);
  const std::vector<double> ks = zak_path(0.0, n_points, options);
  const auto res = static_cast<std::size_t>(resolution);
  constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

  ZakMap map{family, resolution, n_points, std::vector<ZakMapNode>(res * res)};
  ZakOptions opts = options;
  opts.check_convergence = false;
  parallel_for(res, [&](std::size_t i) {
    for (std::size_t j = 0; j < res; ++j) {
      const WalkModel model = WalkModel::from_family(family, grid[i], grid[j]);
      bool masked = false;
      for (double k : ks) {
        if (gap(model, k) < kPathGapFloor) {
          masked = true;
          break;
        }
      }
      ZakMapNode& node = map.nodes[i * res + j];
      node = {grid[i], grid[j], kNaN, kNaN, masked};
      if (masked) continue;
      node.zak_plus = wrap_phase(raw_zak(model, Band::plus, 0.0, n_points, opts));
      node.zak_minus = wrap_phase(raw_zak(model, Band::minus, 0.0, n_points, opts));
    }
  });
  return map;
}

}  // namespace dtqw
