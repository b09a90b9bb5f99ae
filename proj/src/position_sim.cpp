#include "dtqw/position_sim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dtqw {

namespace {

using Site = WalkerState::Site;

void apply_coin(std::vector<Site>& sites, const Complex2x2& c) {
  for (Site& s : sites) {
    const cplx h = c(0, 0) * s[0] + c(0, 1) * s[1];
    const cplx v = c(1, 0) * s[0] + c(1, 1) * s[1];
    s = {h, v};
  }
}

// H moves right, V moves left; buffer grows by one site per side.
std::vector<Site> shift(const std::vector<Site>& sites) {
  std::vector<Site> out(sites.size() + 2, Site{0.0, 0.0});
  for (std::size_t i = 0; i < sites.size(); ++i) {
    out[i + 2][0] = sites[i][0];
    out[i][1] = sites[i][1];
  }
  return out;
}

// U^n for U in SU(2): cos(nE) I + sin(nE)/sin(E) (U - U^dagger)/2.
Complex2x2 su2_power(const Complex2x2& u, int n) {
  const double cos_e = std::clamp(0.5 * u.trace().real(), -1.0, 1.0);
  const double energy = std::acos(cos_e);
  const double sin_e = std::sin(energy);
  if (sin_e > 1e-6) {
    const Complex2x2 traceless = 0.5 * (u - u.adjoint());
    return std::cos(n * energy) * Complex2x2::identity() + (std::sin(n * energy) / sin_e) * traceless;
  }
  // Near a band touching U is close to +-I; multiply directly.
  Complex2x2 out = Complex2x2::identity();
  for (int i = 0; i < n; ++i) out = u * out;
  return out;
}

}  // namespace

WalkerState WalkerState::localized(const Spinor& spin) { return WalkerState(0, {Site{spin.up, spin.down}}, 0); }

WalkerState::WalkerState(int extent, std::vector<Site> sites, int step_count)
    : extent_(extent), sites_(std::move(sites)), step_count_(step_count) {
  if (extent < 0 || sites_.size() != static_cast<std::size_t>(2 * extent + 1)) {
    throw std::invalid_argument("WalkerState: site count must equal 2 * extent + 1");
  }
}

double WalkerState::norm_squared() const {
  double s = 0.0;
  for (const Site& site : sites_) s += std::norm(site[0]) + std::norm(site[1]);
  return s;
}

WalkerState initial_state(Chirality chirality) {
  const double r = 1.0 / std::numbers::sqrt2;
  const cplx v = chirality == Chirality::plus ? cplx{0.0, r} : cplx{0.0, -r};
  return WalkerState::localized({r, v});
}

WalkerState step(const WalkerState& state, const WalkModel& model) {
  std::vector<Site> sites(state.sites().begin(), state.sites().end());
  int extent = state.extent();
  apply_coin(sites, coin(model));
  sites = shift(sites);
  ++extent;
  if (const auto* ss = std::get_if<SplitStepWalk>(&model.variant())) {
    apply_coin(sites, split_step_second_coin(*ss));
    sites = shift(sites);
    ++extent;
  }
  return {extent, std::move(sites), state.step_count() + 1};
}

WalkerState evolve(const WalkerState& state0, const WalkModel& model, int n_steps) {
  if (n_steps < 0) throw std::invalid_argument("evolve: n_steps must be >= 0");
  WalkerState state = state0;
  for (int i = 0; i < n_steps; ++i) state = step(state, model);
  return state;
}

double Distribution::at(int x) const {
  if (x < min_x || x > max_x()) return 0.0;
  return p[static_cast<std::size_t>(x - min_x)];
}

Distribution distribution(const WalkerState& state) {
  Distribution d{-state.extent(), {}, state.step_count()};
  d.p.reserve(state.sites().size());
  for (const Site& s : state.sites()) d.p.push_back(std::norm(s[0]) + std::norm(s[1]));
  return d;
}

Distribution momentum_oracle(const WalkerState& state0, const WalkModel& model, int n_steps) {
  if (n_steps < 0) throw std::invalid_argument("momentum_oracle: n_steps must be >= 0");
  const int tps = model.translations_per_step();
  const int e0 = state0.extent();
  const int final_extent = e0 + tps * n_steps;
  const int m = std::max(4 * n_steps + 5, 2 * final_extent + 5);
  const double dk = 2.0 * std::numbers::pi / m;

  std::vector<double> prob(static_cast<std::size_t>(2 * final_extent + 1), 0.0);
  std::vector<std::array<cplx, 2>> final_k(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    const double q = dk * j;
    // psi(k) = sum_x psi(x) e^{ikx}; a unit shift to the right multiplies by e^{ik}.
    Spinor amp{0.0, 0.0};
    for (int x = -e0; x <= e0; ++x) {
      const cplx phase = std::polar(1.0, q * x);
      amp.up += state0.site(x)[0] * phase;
      amp.down += state0.site(x)[1] * phase;
    }
    const Spinor evolved = su2_power(momentum_unitary(model, tps * q), n_steps) * amp;
    final_k[static_cast<std::size_t>(j)] = {evolved.up, evolved.down};
  }
  for (int x = -final_extent; x <= final_extent; ++x) {
    cplx h = 0.0, v = 0.0;
    for (int j = 0; j < m; ++j) {
      const cplx phase = std::polar(1.0, -dk * j * x);
      h += final_k[static_cast<std::size_t>(j)][0] * phase;
      v += final_k[static_cast<std::size_t>(j)][1] * phase;
    }
    prob[static_cast<std::size_t>(x + final_extent)] = (std::norm(h) + std::norm(v)) / (double(m) * m);
  }
  return {-final_extent, std::move(prob), state0.step_count() + n_steps};
}

double similarity(const Distribution& p, const Distribution& q) {
  if (p.min_x != q.min_x || p.p.size() != q.p.size()) {
    throw std::invalid_argument("similarity: distributions live on different position grids");
  }
  double overlap = 0.0, sp = 0.0, sq = 0.0;
  for (std::size_t i = 0; i < p.p.size(); ++i) {
    overlap += std::sqrt(p.p[i] * q.p[i]);
    sp += p.p[i];
    sq += q.p[i];
  }
  if (sp <= 0.0 || sq <= 0.0) throw std::invalid_argument("similarity: empty distribution");
  return std::clamp(overlap * overlap / (sp * sq), 0.0, 1.0);
}

double total_variation(const Distribution& p, const Distribution& q) {
  const int lo = std::min(p.min_x, q.min_x);
  const int hi = std::max(p.max_x(), q.max_x());
  double tv = 0.0;
  for (int x = lo; x <= hi; ++x) tv += std::abs(p.at(x) - q.at(x));
  return 0.5 * tv;
}

}  // namespace dtqw
