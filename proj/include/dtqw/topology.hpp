#pragma once

// Parameter-space gap scans, Dirac-point enumeration, and winding numbers.

#include <cstddef>
#include <string>
#include <vector>

#include "dtqw/walk_models.hpp"

namespace dtqw {

/// Closed uniform grid over [-pi, pi] with `resolution` nodes (both ends included).
[[nodiscard]] std::vector<double> angle_grid(int resolution);

/// Uniform momentum samples k_j = -pi + 2 pi j / n, j in [0, n).
[[nodiscard]] std::vector<double> momentum_grid(int n);

struct GapNode {
  double angle1;
  double angle2;
  double min_gap;
  double argmin_k;
};

/// Minimal gap over sampled momenta on a (angle1, angle2) grid.
/// Node (i, j) lives at nodes[i * resolution + j] with angle1 = grid[i], angle2 = grid[j].
/// For the standard family angle2 does not enter the model.
struct GapMap {
  Family family;
  int resolution;
  int k_samples;
  std::vector<GapNode> nodes;

  [[nodiscard]] const GapNode& at(int i, int j) const {
    return nodes[static_cast<std::size_t>(i) * static_cast<std::size_t>(resolution) +
                 static_cast<std::size_t>(j)];
  }
};

/// Requires resolution >= 3 and k_samples >= 8.
[[nodiscard]] GapMap scan_gap(Family family, int resolution, int k_samples);

struct DiracPoint {
  double angle1;
  double angle2;
  /// Momentum of the zero-quasi-energy touching, wrapped to (-pi, pi].
  double k_star;
  /// Quasi-energy at k_star (0 or pi).
  double energy;
  /// 1 - |cos E| at (angle1, angle2, k_star).
  double gap;
};

struct DroppedCandidate {
  double angle1;
  double angle2;
  double gap;
  std::string reason;
};

struct DiracPointSet {
  Family family;
  double tolerance;
  /// Set when gap closures form extended curves in parameter space; `points`
  /// is then empty because no finite point set exists.
  bool continuous_boundary = false;
  std::vector<DiracPoint> points;
  std::vector<DroppedCandidate> dropped;
};

struct DiracSearchOptions {
  int coarse_resolution = 721;
  int k_samples = 64;
  double refine_tol = 1e-8;
  double cluster_radius = 0.2;
  int max_iterations = 200;
};

/// Scans the closed square [-pi, pi]^2, groups near-gapless grid nodes,
/// refines each group by golden-section coordinate descent on
/// gap(angle1, angle2, k), and deduplicates the refined points.
/// Requires refine_tol <= 1e-6.
[[nodiscard]] DiracPointSet find_dirac_points(Family family, const DiracSearchOptions& options = {});

/// Signed number of turns of n(k), k in [-pi, pi), about the normal of its
/// least-squares plane through the origin. The normal is oriented so that its
/// largest-magnitude component is positive.
///
/// Throws DomainError(gapless_point) if any sample has gap <= 1e-6, and
/// DomainError(non_planar_curve) if a sample lies farther than 1e-6 from the plane.
[[nodiscard]] int winding_number(const WalkModel& model, int k_samples = 1024);

}  // namespace dtqw
