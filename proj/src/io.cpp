#include "dtqw/io.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <regex>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "dtqw/errors.hpp"

namespace dtqw {

namespace {

using nlohmann::ordered_json;

double parse_number(const std::string& s, std::string_view original) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = first + s.size();
  if (!s.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("cannot parse angle '" + std::string(original) + "'");
  }
  return v;
}

ordered_json model_json(const WalkModel& m) {
  return {{"family", std::string(family_name(m.family()))}, {"angle1", m.angle1()}, {"angle2", m.angle2()}};
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

double parse_angle(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty angle");
  static const std::regex pi_form(R"(^([+-])?([0-9]*\.?[0-9]+(?:[eE][+-]?[0-9]+)?)?\*?pi(?:/([0-9]*\.?[0-9]+))?$)");
  std::smatch m;
  if (std::regex_match(s, m, pi_form)) {
    const double sign = m[1].matched && m[1].str() == "-" ? -1.0 : 1.0;
    const double coef = m[2].matched ? parse_number(m[2].str(), text) : 1.0;
    const double den = m[3].matched ? parse_number(m[3].str(), text) : 1.0;
    if (den == 0.0) throw std::invalid_argument("zero denominator in angle '" + std::string(text) + "'");
    return sign * (coef * std::numbers::pi) / den;
  }
  return parse_number(s, text);
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return {buf, res.ptr};
}

CsvWriter::CsvWriter(std::ostream& os, const std::vector<std::string>& header) : os_(os), columns_(header.size()) {
  for (std::size_t i = 0; i < header.size(); ++i) os_ << (i ? "," : "") << header[i];
  os_ << '\n';
}

CsvWriter& CsvWriter::field(double v) { return field(std::string_view(format_double(v))); }

CsvWriter& CsvWriter::field(long long v) { return field(std::string_view(std::to_string(v))); }

CsvWriter& CsvWriter::field(std::string_view v) {
  if (current_ >= columns_) throw std::logic_error("CsvWriter: too many fields in row");
  if (current_) os_ << ',';
  os_ << v;
  ++current_;
  return *this;
}

void CsvWriter::end_row() {
  if (current_ != columns_) throw std::logic_error("CsvWriter: row has the wrong number of fields");
  os_ << '\n';
  current_ = 0;
}

void write_spectrum_csv(std::ostream& os, const WalkModel& model, int k_samples) {
  CsvWriter w(os, {"k", "energy_plus", "energy_minus", "gap"});
  for (double k : momentum_grid(k_samples)) {
    const double e = quasi_energy(model, k);
    w.field(k).field(e).field(-e).field(gap(model, k)).end_row();
  }
}

void write_bloch_csv(std::ostream& os, const WalkModel& model, int k_samples) {
  CsvWriter w(os, {"k", "nx", "ny", "nz"});
  for (double k : momentum_grid(k_samples)) {
    try {
      const BlochVector n = bloch_vector(model, k);
      w.field(k).field(n.nx).field(n.ny).field(n.nz).end_row();
    } catch (const DomainError& e) {
      if (e.kind() != DomainErrorKind::gapless_point) throw;
      const double nan = std::nan("");
      w.field(k).field(nan).field(nan).field(nan).end_row();
    }
  }
}

void write_gap_map_csv(std::ostream& os, const GapMap& map) {
  CsvWriter w(os, {"angle1", "angle2", "min_gap", "argmin_k"});
  for (const GapNode& n : map.nodes) w.field(n.angle1).field(n.angle2).field(n.min_gap).field(n.argmin_k).end_row();
}

void write_zak_map_csv(std::ostream& os, const ZakMap& map) {
  CsvWriter w(os, {"angle1", "angle2", "zak_plus", "zak_minus", "masked"});
  for (const ZakMapNode& n : map.nodes) {
    w.field(n.angle1).field(n.angle2).field(n.zak_plus).field(n.zak_minus).field(n.masked ? 1 : 0).end_row();
  }
}

void write_distribution_csv(std::ostream& os, const Distribution& d) {
  CsvWriter w(os, {"x", "p"});
  for (std::size_t i = 0; i < d.p.size(); ++i) w.field(d.min_x + static_cast<int>(i)).field(d.p[i]).end_row();
}

void write_holonomy_csv(std::ostream& os, const std::vector<HolonomyRow>& rows) {
  CsvWriter w(os, {"theta0", "rotation_angle", "expected", "solid_angle", "norm_drift"});
  for (const HolonomyRow& r : rows) {
    w.field(r.theta0).field(r.rotation_angle).field(r.expected).field(r.solid_angle).field(r.norm_drift).end_row();
  }
}

void write_zak_result_csv(std::ostream& os, const ZakResult& r) {
  CsvWriter w(os, {"family", "angle1", "angle2", "band", "phase", "k_origin", "n_points", "interval", "closed",
                   "converged", "convergence_delta"});
  w.field(family_name(r.model.family()))
      .field(r.model.angle1())
      .field(r.model.angle2())
      .field(band_name(r.band))
      .field(r.phase)
      .field(r.k_origin)
      .field(r.n_points)
      .field(r.interval == ZakInterval::full_zone ? "full_zone" : "half_zone")
      .field(r.closed ? 1 : 0)
      .field(r.converged ? 1 : 0)
      .field(r.convergence_delta)
      .end_row();
}

void write_winding_csv(std::ostream& os, const WalkModel& model, int winding) {
  CsvWriter w(os, {"family", "angle1", "angle2", "winding"});
  w.field(family_name(model.family())).field(model.angle1()).field(model.angle2()).field(winding).end_row();
}

void write_geometric_tensor_csv(std::ostream& os, const GeometricTensor& t) {
  CsvWriter w(os, {"theta", "phi", "g_tt", "g_tp", "g_pp", "V_tp", "error_bound"});
  w.field(t.theta).field(t.phi).field(t.g[0][0]).field(t.g[0][1]).field(t.g[1][1]).field(t.V[0][1]);
  w.field(t.error_bound).end_row();
}

std::string dirac_points_json(const DiracPointSet& set) {
  ordered_json arr = ordered_json::array();
  for (const DiracPoint& p : set.points) {
    arr.push_back({{"angle1", p.angle1}, {"angle2", p.angle2}, {"k_star", p.k_star}, {"energy", p.energy}});
  }
  return dump(arr);
}

std::string zak_result_json(const ZakResult& r) {
  ordered_json j = model_json(r.model);
  j["band"] = std::string(band_name(r.band));
  j["phase"] = r.phase;
  j["k_origin"] = r.k_origin;
  j["n_points"] = r.n_points;
  j["interval"] = r.interval == ZakInterval::full_zone ? "full_zone" : "half_zone";
  j["closed"] = r.closed;
  j["converged"] = r.converged;
  j["convergence_delta"] = r.convergence_delta;
  return dump(j);
}

std::string winding_json(const WalkModel& model, int winding) {
  ordered_json j = model_json(model);
  j["winding"] = winding;
  return dump(j);
}

std::string geometric_tensor_json(const GeometricTensor& t) {
  const ordered_json j = {{"theta", t.theta},
                          {"phi", t.phi},
                          {"g", {{t.g[0][0], t.g[0][1]}, {t.g[1][0], t.g[1][1]}}},
                          {"V", {{t.V[0][0], t.V[0][1]}, {t.V[1][0], t.V[1][1]}}},
                          {"error_bound", t.error_bound}};
  return dump(j);
}

}  // namespace dtqw
