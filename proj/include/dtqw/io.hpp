#pragma once

// Deterministic CSV / JSON serialization of computation results.

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "dtqw/holonomy.hpp"
#include "dtqw/position_sim.hpp"
#include "dtqw/topology.hpp"
#include "dtqw/walk_models.hpp"
#include "dtqw/zak.hpp"

namespace dtqw {

/// Angle in radians from either a plain number ("0.785", "-1e-3") or an exact
/// multiple of pi: "pi", "-pi/2", "3pi/4", "2*pi/3", "0.5*pi". Throws
/// std::invalid_argument on anything else.
[[nodiscard]] double parse_angle(std::string_view text);

/// 17 significant digits, locale independent; non-finite values print as nan/inf/-inf.
[[nodiscard]] std::string format_double(double v);

/// Comma-separated rows with a single header line.
class CsvWriter {
 public:
  CsvWriter(std::ostream& os, const std::vector<std::string>& header);

  CsvWriter& field(double v);
  CsvWriter& field(long long v);
  CsvWriter& field(int v) { return field(static_cast<long long>(v)); }
  CsvWriter& field(std::string_view v);
  void end_row();

 private:
  std::ostream& os_;
  std::size_t columns_;
  std::size_t current_ = 0;
};

struct HolonomyRow {
  double theta0;
  double rotation_angle;
  double expected;  // 2 pi (1 - cos theta0) wrapped to (-pi, pi]
  double solid_angle;
  double norm_drift;
};

/// k, energy_plus, energy_minus, gap on k in [-pi, pi).
void write_spectrum_csv(std::ostream& os, const WalkModel& model, int k_samples);
/// k, nx, ny, nz; gapless samples are written as nan.
void write_bloch_csv(std::ostream& os, const WalkModel& model, int k_samples);
void write_gap_map_csv(std::ostream& os, const GapMap& map);
void write_zak_map_csv(std::ostream& os, const ZakMap& map);
void write_distribution_csv(std::ostream& os, const Distribution& d);
void write_holonomy_csv(std::ostream& os, const std::vector<HolonomyRow>& rows);
void write_zak_result_csv(std::ostream& os, const ZakResult& r);
void write_winding_csv(std::ostream& os, const WalkModel& model, int winding);
void write_geometric_tensor_csv(std::ostream& os, const GeometricTensor& t);

/// JSON documents, pretty-printed with a trailing newline.
[[nodiscard]] std::string dirac_points_json(const DiracPointSet& set);
[[nodiscard]] std::string zak_result_json(const ZakResult& r);
[[nodiscard]] std::string winding_json(const WalkModel& model, int winding);
[[nodiscard]] std::string geometric_tensor_json(const GeometricTensor& t);

}  // namespace dtqw
