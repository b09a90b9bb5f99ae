#include "dtqw/topology.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "dtqw/errors.hpp"
#include "dtqw/parallel.hpp"

namespace dtqw {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kWindingGapFloor = 1e-6;
constexpr double kPlanarityTolerance = 1e-6;
// Components of near-gapless nodes wider than this (in radians) are treated
// as continuous boundaries rather than isolated points.
constexpr double kContinuousExtent = 0.5;
constexpr double kDedupRadius = 1e-3;

double wrap_pm_pi(double x) {
  double r = std::remainder(x, kTwoPi);
  if (r <= -kPi) r += kTwoPi;
  return r;
}

double objective(Family family, double a1, double a2, double k) {
  return 1.0 - std::abs(dispersion_coeffs(WalkModel::from_family(family, a1, a2)).cos_energy(k));
}

template <class F>
double golden_section(F&& f, double lo, double hi, double x0, double f0) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 120 && (b - a) > 1e-14; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  const double xm = 0.5 * (a + b);
  const double fm = f(xm);
  // Only accept improvements; endpoint minima (domain edges) are checked too.
  double best_x = x0, best_f = f0;
  for (const auto& [x, fx] : {std::pair{xm, fm}, std::pair{lo, f(lo)}, std::pair{hi, f(hi)}}) {
    if (fx < best_f) {
      best_f = fx;
      best_x = x;
    }
  }
  return best_x;
}

struct Refined {
  double a1, a2, k, gap;
};

Refined refine(Family family, double a1, double a2, double k, double angle_width, double k_width,
               int max_iterations) {
  double f = objective(family, a1, a2, k);
  for (int it = 0; it < max_iterations; ++it) {
    double moved = 0.0;

    const double n1 = golden_section([&](double x) { return objective(family, x, a2, k); },
                                     std::max(-kPi, a1 - angle_width), std::min(kPi, a1 + angle_width), a1, f);
    moved += std::abs(n1 - a1);
    a1 = n1;
    f = objective(family, a1, a2, k);

    const double n2 = golden_section([&](double x) { return objective(family, a1, x, k); },
                                     std::max(-kPi, a2 - angle_width), std::min(kPi, a2 + angle_width), a2, f);
    moved += std::abs(n2 - a2);
    a2 = n2;
    f = objective(family, a1, a2, k);

    const double nk = golden_section([&](double x) { return objective(family, a1, a2, x); }, k - k_width,
                                     k + k_width, k, f);
    moved += std::abs(nk - k);
    k = nk;
    f = objective(family, a1, a2, k);

    if (moved < 1e-14 || f <= 0.0) break;
  }
  return {a1, a2, k, f};
}

// Momentum of the E = 0 touching at fixed angles.
double zero_energy_momentum(Family family, double a1, double a2) {
  const DispersionCoeffs dc = dispersion_coeffs(WalkModel::from_family(family, a1, a2));
  auto loss = [&](double k) { return 1.0 - dc.cos_energy(k); };
  constexpr int kScan = 4096;
  const double step = kTwoPi / kScan;
  int best = 0;
  double best_loss = std::numeric_limits<double>::infinity();
  for (int j = 0; j < kScan; ++j) {
    const double l = loss(-kPi + step * j);
    if (l < best_loss) {
      best_loss = l;
      best = j;
    }
  }
  const double k0 = -kPi + step * best;
  return wrap_pm_pi(golden_section(loss, k0 - step, k0 + step, k0, best_loss));
}

}  // namespace

std::vector<double> angle_grid(int resolution) {
  if (resolution < 2) throw std::invalid_argument("angle_grid: resolution must be >= 2");
  std::vector<double> g(static_cast<std::size_t>(resolution));
  const double step = kTwoPi / (resolution - 1);
  for (int i = 0; i < resolution; ++i) g[static_cast<std::size_t>(i)] = -kPi + step * i;
  g.back() = kPi;
  return g;
}

std::vector<double> momentum_grid(int n) {
  if (n < 1) throw std::invalid_argument("momentum_grid: need at least one sample");
  std::vector<double> k(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) k[static_cast<std::size_t>(j)] = -kPi + kTwoPi * j / n;
  return k;
}

GapMap scan_gap(Family family, int resolution, int k_samples) {
  if (resolution < 3) throw std::invalid_argument("scan_gap: resolution must be >= 3");
  if (k_samples < 8) throw std::invalid_argument("scan_gap: k_samples must be >= 8");

  const std::vector<double> grid = angle_grid(resolution);
  const std::vector<double> ks = momentum_grid(k_samples);
  std::vector<double> cos_k(ks.size()), sin_k(ks.size());
  for (std::size_t j = 0; j < ks.size(); ++j) {
    cos_k[j] = std::cos(ks[j]);
    sin_k[j] = std::sin(ks[j]);
  }

  const auto res = static_cast<std::size_t>(resolution);
  GapMap map{family, resolution, k_samples, std::vector<GapNode>(res * res)};
  parallel_for(res, [&](std::size_t i) {
    for (std::size_t j = 0; j < res; ++j) {
      const DispersionCoeffs dc = dispersion_coeffs(WalkModel::from_family(family, grid[i], grid[j]));
      double best = std::numeric_limits<double>::infinity();
      std::size_t best_k = 0;
      for (std::size_t q = 0; q < ks.size(); ++q) {
        const double g = 1.0 - std::abs(dc.cos_energy(cos_k[q], sin_k[q]));
        if (g < best) {
          best = g;
          best_k = q;
        }
      }
      map.nodes[i * res + j] = {grid[i], grid[j], std::max(0.0, best), ks[best_k]};
    }
  });
  return map;
}

DiracPointSet find_dirac_points(Family family, const DiracSearchOptions& options) {
  if (!(options.refine_tol > 0.0 && options.refine_tol <= 1e-6)) {
    throw std::invalid_argument("find_dirac_points: refine_tol must lie in (0, 1e-6]");
  }
  const int res = options.coarse_resolution;
  const GapMap map = scan_gap(family, res, options.k_samples);
  const double h = kTwoPi / (res - 1);
  const double threshold = std::min(4.0 * h * h, 1e-2);

  DiracPointSet out{family, options.refine_tol, false, {}, {}};

  // Connected components (8-neighbourhood) of sub-threshold nodes.
  const auto idx = [res](int i, int j) { return static_cast<std::size_t>(i) * res + j; };
  std::vector<int> label(map.nodes.size(), -1);
  struct Candidate {
    double a1, a2, k, gap;
  };
  std::vector<Candidate> candidates;
  for (int i = 0; i < res; ++i) {
    for (int j = 0; j < res; ++j) {
      if (label[idx(i, j)] >= 0 || map.at(i, j).min_gap >= threshold) continue;
      const int id = static_cast<int>(candidates.size());
      std::deque<std::pair<int, int>> queue{{i, j}};
      label[idx(i, j)] = id;
      double lo1 = map.at(i, j).angle1, hi1 = lo1, lo2 = map.at(i, j).angle2, hi2 = lo2;
      const GapNode* best = &map.at(i, j);
      while (!queue.empty()) {
        const auto [ci, cj] = queue.front();
        queue.pop_front();
        const GapNode& node = map.at(ci, cj);
        lo1 = std::min(lo1, node.angle1);
        hi1 = std::max(hi1, node.angle1);
        lo2 = std::min(lo2, node.angle2);
        hi2 = std::max(hi2, node.angle2);
        if (node.min_gap < best->min_gap) best = &node;
        for (int di = -1; di <= 1; ++di) {
          for (int dj = -1; dj <= 1; ++dj) {
            const int ni = ci + di, nj = cj + dj;
            if (ni < 0 || nj < 0 || ni >= res || nj >= res) continue;
            if (label[idx(ni, nj)] >= 0 || map.at(ni, nj).min_gap >= threshold) continue;
            label[idx(ni, nj)] = id;
            queue.emplace_back(ni, nj);
          }
        }
      }
      if (std::hypot(hi1 - lo1, hi2 - lo2) > kContinuousExtent) out.continuous_boundary = true;
      candidates.push_back({best->angle1, best->angle2, best->argmin_k, best->min_gap});
    }
  }
  if (out.continuous_boundary) return out;

  // Merge candidates closer than the cluster radius, keeping the lower gap.
  std::vector<Candidate> merged;
  for (const Candidate& c : candidates) {
    auto near = std::find_if(merged.begin(), merged.end(), [&](const Candidate& m) {
      return std::hypot(m.a1 - c.a1, m.a2 - c.a2) < options.cluster_radius;
    });
    if (near == merged.end()) {
      merged.push_back(c);
    } else if (c.gap < near->gap) {
      *near = c;
    }
  }

  const double k_width = 2.0 * kTwoPi / options.k_samples;
  for (const Candidate& c : merged) {
    const Refined r = refine(family, c.a1, c.a2, c.k, 2.0 * h, k_width, options.max_iterations);
    if (!(r.gap < options.refine_tol)) {
      std::ostringstream os;
      os.precision(6);
      os << "refinement did not reach gap < " << options.refine_tol << " (final gap " << r.gap << ")";
      out.dropped.push_back({r.a1, r.a2, r.gap, os.str()});
      continue;
    }
    const bool duplicate = std::any_of(out.points.begin(), out.points.end(), [&](const DiracPoint& p) {
      return std::hypot(p.angle1 - r.a1, p.angle2 - r.a2) < kDedupRadius;
    });
    if (duplicate) continue;

    const double k_star = zero_energy_momentum(family, r.a1, r.a2);
    const double cos_e = dispersion_coeffs(WalkModel::from_family(family, r.a1, r.a2)).cos_energy(k_star);
    out.points.push_back({r.a1, r.a2, k_star, cos_e >= 0.0 ? 0.0 : kPi, 1.0 - std::abs(cos_e)});
  }

  std::sort(out.points.begin(), out.points.end(), [](const DiracPoint& a, const DiracPoint& b) {
    return a.angle1 != b.angle1 ? a.angle1 < b.angle1 : a.angle2 < b.angle2;
  });
  return out;
}

int winding_number(const WalkModel& model, int k_samples) {
  if (k_samples < 8) throw std::invalid_argument("winding_number: k_samples must be >= 8");
  const std::vector<double> ks = momentum_grid(k_samples);

  std::vector<Vec3> curve;
  curve.reserve(ks.size());
  Eigen::Matrix3d scatter = Eigen::Matrix3d::Zero();
  for (double k : ks) {
    if (gap(model, k) <= kWindingGapFloor) {
      throw DomainError(DomainErrorKind::gapless_point,
                        "winding_number: model is gapless on the sampled Brillouin zone");
    }
    const Vec3 n = bloch_vector(model, k).vec();
    curve.push_back(n);
    const Eigen::Vector3d v(n.x, n.y, n.z);
    scatter += v * v.transpose();
  }

  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(scatter);
  Eigen::Vector3d m = solver.eigenvectors().col(0);
  Eigen::Index largest = 0;
  m.cwiseAbs().maxCoeff(&largest);
  if (m[largest] < 0.0) m = -m;
  const Vec3 normal{m[0], m[1], m[2]};

  for (const Vec3& n : curve) {
    if (std::abs(n.dot(normal)) > kPlanarityTolerance) {
      throw DomainError(DomainErrorKind::non_planar_curve,
                        "winding_number: n(k) is not planar within 1e-6");
    }
  }

  // In-plane orthonormal basis (e1, e2) with e1 x e2 = normal.
  const Vec3 seed = std::abs(normal.x) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
  Vec3 e1 = seed - seed.dot(normal) * normal;
  e1 = (1.0 / e1.norm()) * e1;
  const Vec3 e2 = normal.cross(e1);

  double total = 0.0;
  double prev = std::atan2(curve.back().dot(e2), curve.back().dot(e1));
  for (const Vec3& n : curve) {
    const double angle = std::atan2(n.dot(e2), n.dot(e1));
    total += wrap_pm_pi(angle - prev);
    prev = angle;
  }
  return static_cast<int>(std::lround(total / kTwoPi));
}

}  // namespace dtqw
