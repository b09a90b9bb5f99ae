#include "dtqw/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "dtqw/errors.hpp"
#include "dtqw/holonomy.hpp"
#include "dtqw/io.hpp"
#include "dtqw/position_sim.hpp"
#include "dtqw/topology.hpp"
#include "dtqw/walk_models.hpp"
#include "dtqw/zak.hpp"

namespace dtqw {

namespace {

using nlohmann::ordered_json;

struct ModelArgs {
  std::string family;
  std::string theta = "0";
  std::string phi = "0";

  [[nodiscard]] WalkModel build() const {
    return WalkModel::from_family(parse_family(family), parse_angle(theta), parse_angle(phi));
  }
};

struct OutputArgs {
  std::string out_path;
  std::string manifest_path;
};

void add_model_options(CLI::App* cmd, ModelArgs& m) {
  cmd->add_option("--family", m.family, "standard | splitstep | noncommuting")->required();
  cmd->add_option("--theta,--theta1", m.theta, "first angle (radians or e.g. pi/4)");
  cmd->add_option("--phi,--theta2", m.phi, "second angle (radians or e.g. -pi/2)");
}

void add_output_options(CLI::App* cmd, OutputArgs& o) {
  cmd->add_option("--out", o.out_path, "write data here instead of stdout");
  cmd->add_option("--manifest", o.manifest_path, "write a JSON run manifest here");
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::invalid_argument("cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw std::invalid_argument("failed writing '" + path + "'");
}

void emit(const OutputArgs& o, const std::string& data, std::ostream& out) {
  if (o.out_path.empty()) {
    out << data;
  } else {
    write_file(o.out_path, data);
  }
}

void emit_manifest(const OutputArgs& o, const std::string& command, const std::vector<std::string>& args,
                   ordered_json extra) {
  if (o.manifest_path.empty()) return;
  ordered_json j;
  j["command"] = command;
  j["arguments"] = args;
  j["generated_utc"] = utc_timestamp();
  if (!o.out_path.empty()) j["data_file"] = o.out_path;
  for (auto& [key, value] : extra.items()) j[key] = value;
  write_file(o.manifest_path, j.dump(2) + "\n");
}

ordered_json model_json(const WalkModel& m) {
  return {{"family", std::string(family_name(m.family()))}, {"angle1", m.angle1()}, {"angle2", m.angle2()}};
}

template <class Fn>
std::string render(Fn&& fn) {
  std::ostringstream os;
  fn(os);
  return os.str();
}

void require_format(const std::string& format) {
  if (format != "json" && format != "csv") throw std::invalid_argument("--format must be json or csv");
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete-time quantum walk band structure, geometric phase and transport toolkit", "dtqw"};
  app.require_subcommand(1);

  // Each subcommand registers a runner; the selected one executes after parsing.
  std::function<void()> run;

  ModelArgs model;
  OutputArgs output;
  int k_samples = 256;
  int resolution = 201;
  int n_points = 2048;
  int steps = 10;
  std::string format = "json";

  {
    auto* cmd = app.add_subcommand("spectrum", "quasi-energy bands E(k) (CSV)");
    add_model_options(cmd, model);
    add_output_options(cmd, output);
    cmd->add_option("--k-samples", k_samples, "momentum samples on [-pi, pi)")->check(CLI::Range(8, 1 << 24));
    cmd->callback([&] {
      run = [&] { emit(output, render([&](std::ostream& os) { write_spectrum_csv(os, model.build(), k_samples); }), out); };
    });
  }
  {
    auto* cmd = app.add_subcommand("bloch", "Bloch vector n(k) samples (CSV)");
    add_model_options(cmd, model);
    add_output_options(cmd, output);
    cmd->add_option("--k-samples", k_samples, "momentum samples on [-pi, pi)")->check(CLI::Range(8, 1 << 24));
    cmd->callback([&] {
      run = [&] { emit(output, render([&](std::ostream& os) { write_bloch_csv(os, model.build(), k_samples); }), out); };
    });
  }

  int scan_k_samples = 64;
  {
    auto* cmd = app.add_subcommand("phase-diagram", "minimal gap over a parameter grid (CSV)");
    cmd->add_option("--family", model.family, "standard | splitstep | noncommuting")->required();
    add_output_options(cmd, output);
    cmd->add_option("--resolution", resolution, "grid nodes per angle")->check(CLI::Range(3, 100000));
    cmd->add_option("--k-samples", scan_k_samples, "momentum samples per node")->check(CLI::Range(8, 1 << 20));
    cmd->callback([&] {
      run = [&] {
        const GapMap map = scan_gap(parse_family(model.family), resolution, scan_k_samples);
        emit(output, render([&](std::ostream& os) { write_gap_map_csv(os, map); }), out);
      };
    });
  }

  double tol = 1e-8;
  int dirac_resolution = 721;
  {
    auto* cmd = app.add_subcommand("dirac-points", "isolated gap closures in parameter space (JSON)");
    cmd->add_option("--family", model.family, "standard | splitstep | noncommuting")->required();
    add_output_options(cmd, output);
    cmd->add_option("--tol", tol, "refinement tolerance on the gap")->check(CLI::PositiveNumber);
    cmd->add_option("--resolution", dirac_resolution, "coarse grid nodes per angle")->check(CLI::Range(3, 100000));
    cmd->add_option("--k-samples", scan_k_samples, "momentum samples per node")->check(CLI::Range(8, 1 << 20));
    cmd->callback([&] {
      run = [&] {
        DiracSearchOptions opts;
        opts.coarse_resolution = dirac_resolution;
        opts.k_samples = scan_k_samples;
        opts.refine_tol = tol;
        const DiracPointSet set = find_dirac_points(parse_family(model.family), opts);
        if (set.continuous_boundary) {
          err << "note: gap closes along continuous curves for this family; no isolated Dirac points\n";
        }
        for (const DroppedCandidate& d : set.dropped) {
          err << "dropped candidate (" << format_double(d.angle1) << ", " << format_double(d.angle2)
              << "): " << d.reason << "\n";
        }
        emit(output, dirac_points_json(set), out);
        ordered_json meta;
        meta["family"] = std::string(family_name(set.family));
        meta["tolerance"] = set.tolerance;
        meta["continuous_boundary"] = set.continuous_boundary;
        meta["count"] = set.points.size();
        emit_manifest(output, "dirac-points", args, meta);
      };
    });
  }

  std::string band = "plus";
  std::string k_origin = "0";
  std::string interval = "full";
  bool closed = false;
  {
    auto* cmd = app.add_subcommand("zak", "Zak phase of one band");
    add_model_options(cmd, model);
    add_output_options(cmd, output);
    cmd->add_option("--band", band, "plus | minus");
    cmd->add_option("--k-origin", k_origin, "centre of the momentum interval");
    cmd->add_option("--n-points", n_points, "momentum samples")->check(CLI::Range(16, 1 << 24));
    cmd->add_option("--interval", interval, "full (k0 +- pi, default) | half (k0 +- pi/2)")
        ->check(CLI::IsMember({"full", "half"}));
    cmd->add_flag("--closed", closed, "half interval: close the loop with the endpoint overlap");
    cmd->add_option("--format", format, "json | csv");
    cmd->callback([&] {
      run = [&] {
        require_format(format);
        ZakOptions opts;
        opts.interval = interval == "half" ? ZakInterval::half_zone : ZakInterval::full_zone;
        opts.closed = closed;
        const ZakResult r = zak_numeric(model.build(), parse_band(band), parse_angle(k_origin), n_points, opts);
        if (!r.converged) {
          err << "warning: phase moved by " << format_double(r.convergence_delta) << " when doubling n_points\n";
        }
        emit(output,
             format == "json" ? zak_result_json(r) : render([&](std::ostream& os) { write_zak_result_csv(os, r); }),
             out);
        emit_manifest(output, "zak", args, {{"model", model_json(r.model)}});
      };
    });
  }

  int map_points = 256;
  {
    auto* cmd = app.add_subcommand("zak-map", "Zak phases of both bands over a parameter grid (CSV)");
    cmd->add_option("--family", model.family, "standard | splitstep | noncommuting")->required();
    add_output_options(cmd, output);
    cmd->add_option("--resolution", resolution, "grid nodes per angle")->check(CLI::Range(3, 100000));
    cmd->add_option("--n-points", map_points, "momentum samples per node")->check(CLI::Range(16, 1 << 20));
    cmd->callback([&] {
      run = [&] {
        const ZakMap map = zak_map(parse_family(model.family), resolution, map_points);
        emit(output, render([&](std::ostream& os) { write_zak_map_csv(os, map); }), out);
        std::size_t masked = 0;
        for (const ZakMapNode& n : map.nodes) masked += n.masked ? 1 : 0;
        emit_manifest(output, "zak-map", args, {{"masked_nodes", masked}});
      };
    });
  }

  int winding_samples = 1024;
  {
    auto* cmd = app.add_subcommand("winding", "winding number of n(k)");
    add_model_options(cmd, model);
    add_output_options(cmd, output);
    cmd->add_option("--k-samples", winding_samples, "momentum samples")->check(CLI::Range(16, 1 << 24));
    cmd->add_option("--format", format, "json | csv");
    cmd->callback([&] {
      run = [&] {
        require_format(format);
        const WalkModel m = model.build();
        const int w = winding_number(m, winding_samples);
        emit(output, format == "json" ? winding_json(m, w) : render([&](std::ostream& os) { write_winding_csv(os, m, w); }),
             out);
      };
    });
  }

  std::string chirality = "+";
  {
    auto* cmd = app.add_subcommand("walk", "position distribution after N steps (CSV)");
    add_model_options(cmd, model);
    add_output_options(cmd, output);
    cmd->add_option("--steps", steps, "number of steps")->check(CLI::Range(0, 100000));
    cmd->add_option("--chirality", chirality, "+ or - : initial spin (H +- iV)/sqrt 2")
        ->check(CLI::IsMember({"+", "-", "plus", "minus"}));
    cmd->callback([&] {
      run = [&] {
        const WalkModel m = model.build();
        const Chirality c = (chirality == "+" || chirality == "plus") ? Chirality::plus : Chirality::minus;
        const WalkerState s0 = initial_state(c);
        const WalkerState s = evolve(s0, m, steps);
        const Distribution d = distribution(s);
        const Distribution oracle = momentum_oracle(s0, m, steps);
        const double tv = total_variation(d, oracle);
        const double sim = similarity(d, oracle);
        emit(output, render([&](std::ostream& os) { write_distribution_csv(os, d); }), out);
        err << "oracle_total_variation=" << format_double(tv) << " similarity=" << format_double(sim) << "\n";
        ordered_json meta;
        meta["model"] = model_json(m);
        meta["n_steps"] = steps;
        meta["chirality"] = c == Chirality::plus ? "+" : "-";
        meta["norm_initial"] = s0.norm_squared();
        meta["norm_final"] = s.norm_squared();
        meta["oracle_total_variation"] = tv;
        meta["similarity_vs_oracle"] = sim;
        emit_manifest(output, "walk", args, meta);
      };
    });
  }

  int latitudes = 20;
  int transport_steps = 100000;
  {
    auto* cmd = app.add_subcommand("holonomy-sphere", "parallel transport around latitude loops (CSV)");
    add_output_options(cmd, output);
    cmd->add_option("--latitudes", latitudes, "loops with theta0 evenly inside (0, pi)")->check(CLI::Range(1, 100000));
    cmd->add_option("--steps", transport_steps, "RK4 steps per loop")->check(CLI::Range(100, 100000000));
    cmd->callback([&] {
      run = [&] {
        std::vector<HolonomyRow> rows(static_cast<std::size_t>(latitudes));
        for (int i = 0; i < latitudes; ++i) {
          const double theta0 = std::numbers::pi * (i + 1) / (latitudes + 1);
          const SphereCurve loop = SphereCurve::latitude(theta0);
          const Vec3 r0 = loop.position(0.0);
          const Vec3 e_theta{std::cos(theta0), 0.0, -std::sin(theta0)};
          const TransportResult t = parallel_transport(loop, TangentVector(e_theta, r0), transport_steps);
          const double omega = solid_angle(loop, transport_steps);
          rows[static_cast<std::size_t>(i)] = {theta0, t.rotation_angle,
                                               wrap_phase(2.0 * std::numbers::pi * (1.0 - std::cos(theta0))), omega,
                                               t.norm_drift};
        }
        emit(output, render([&](std::ostream& os) { write_holonomy_csv(os, rows); }), out);
      };
    });
  }

  std::string state = "plus";
  double fd_step = 1e-4;
  {
    auto* cmd = app.add_subcommand("qgt", "quantum geometric tensor of the spin-1/2 family at a point");
    cmd->add_option("--theta", model.theta, "polar angle");
    cmd->add_option("--phi", model.phi, "azimuth");
    cmd->add_option("--state", state, "plus | minus")->check(CLI::IsMember({"plus", "minus"}));
    cmd->add_option("--step", fd_step, "finite-difference step in [1e-7, 1e-3]");
    cmd->add_option("--format", format, "json | csv");
    add_output_options(cmd, output);
    cmd->callback([&] {
      run = [&] {
        require_format(format);
        const SpinorFamily fam = state == "plus" ? SpinorFamily(spin_half_plus) : SpinorFamily(spin_half_minus);
        const GeometricTensor t =
            quantum_geometric_tensor(fam, parse_angle(model.theta), parse_angle(model.phi), fd_step);
        emit(output,
             format == "json" ? geometric_tensor_json(t)
                              : render([&](std::ostream& os) { write_geometric_tensor_csv(os, t); }),
             out);
      };
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return exit_usage;
  }

  try {
    if (!run) throw std::logic_error("no command selected");
    run();
  } catch (const DomainError& e) {
    err << "domain error [" << domain_error_kind_name(e.kind()) << "]: " << e.what() << "\n";
    return exit_domain;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_failure;
  }
  return exit_ok;
}

}  // namespace dtqw
