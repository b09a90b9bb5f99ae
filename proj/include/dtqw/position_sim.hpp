#pragma once

// Position-space evolution of a single walker and its momentum-space oracle.

#include <array>
#include <span>
#include <vector>

#include "dtqw/spin_algebra.hpp"
#include "dtqw/walk_models.hpp"

namespace dtqw {

enum class Chirality { plus, minus };

/// Amplitudes over positions [-extent, extent] and spin {H, V}.
class WalkerState {
 public:
  using Site = std::array<cplx, 2>;  // (H, V)

  /// Walker at x = 0 with the given spin state.
  static WalkerState localized(const Spinor& spin);
  WalkerState(int extent, std::vector<Site> sites, int step_count);

  [[nodiscard]] int extent() const { return extent_; }
  [[nodiscard]] int step_count() const { return step_count_; }
  [[nodiscard]] const Site& site(int x) const { return sites_[static_cast<std::size_t>(x + extent_)]; }
  [[nodiscard]] std::span<const Site> sites() const { return sites_; }
  [[nodiscard]] double norm_squared() const;

 private:
  int extent_;
  std::vector<Site> sites_;
  int step_count_;
};

/// |0> (x) (|H> +- i|V>)/sqrt(2)
[[nodiscard]] WalkerState initial_state(Chirality chirality);

/// One unitary step: coin(s) sitewise, H amplitudes shift x -> x+1, V
/// amplitudes x -> x-1. The split-step walk applies Ry(theta1), shift,
/// Ry(theta2), shift. The buffer grows by one site per side per translation.
[[nodiscard]] WalkerState step(const WalkerState& state, const WalkModel& model);

[[nodiscard]] WalkerState evolve(const WalkerState& state0, const WalkModel& model, int n_steps);

/// Probability over positions [min_x, min_x + p.size()).
struct Distribution {
  int min_x = 0;
  std::vector<double> p;
  int step_count = 0;

  [[nodiscard]] int max_x() const { return min_x + static_cast<int>(p.size()) - 1; }
  /// Zero outside the stored range.
  [[nodiscard]] double at(int x) const;
};

[[nodiscard]] Distribution distribution(const WalkerState& state);

/// Independent evolution path: discrete Fourier transform of state0 onto a
/// momentum grid large enough to hold the final support exactly, U(k)^n via
/// the SU(2) eigen-decomposition of momentum_unitary, inverse transform.
/// Returned on the same position grid as distribution(evolve(...)).
[[nodiscard]] Distribution momentum_oracle(const WalkerState& state0, const WalkModel& model, int n_steps);

/// (sum_x sqrt(p q))^2, normalized by sum(p) sum(q). Throws
/// std::invalid_argument when the grids differ.
[[nodiscard]] double similarity(const Distribution& p, const Distribution& q);

/// 1/2 sum_x |p - q| over the union of the supports.
[[nodiscard]] double total_variation(const Distribution& p, const Distribution& q);

}  // namespace dtqw
