#pragma once

// Independent reference computations shared by the unit tests. Nothing here
// calls into the closed forms under test.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "dtqw/spin_algebra.hpp"
#include "dtqw/walk_models.hpp"

namespace dtqw::testing {

inline constexpr double kPi = std::numbers::pi;

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Vec3 random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vec3 v{g(rng), g(rng), g(rng)};
  return (1.0 / v.norm()) * v;
}

inline double max_abs_diff(const Complex2x2& a, const Complex2x2& b) {
  double m = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

/// exp(M) by scaling and squaring on a truncated power series.
inline Complex2x2 taylor_exp(const Complex2x2& m) {
  int squarings = 0;
  double scale = 1.0;
  while (m.frobenius_norm() * scale > 0.25) {
    scale *= 0.5;
    ++squarings;
  }
  const Complex2x2 a = cplx{scale, 0.0} * m;
  Complex2x2 term = Complex2x2::identity();
  Complex2x2 sum = Complex2x2::identity();
  for (int n = 1; n < 30; ++n) {
    term = cplx{1.0 / n, 0.0} * (term * a);
    sum = sum + term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

/// Literal matrix product of the step operators, built entry by entry.
inline Complex2x2 ry_literal(double t) { return {std::cos(t), -std::sin(t), std::sin(t), std::cos(t)}; }
inline Complex2x2 rx_literal(double p) {
  return {std::cos(p), cplx{0.0, std::sin(p)}, cplx{0.0, std::sin(p)}, std::cos(p)};
}
inline Complex2x2 shift_literal(double k) { return {std::polar(1.0, k), 0.0, 0.0, std::polar(1.0, -k)}; }

/// Eigenvalues of a general 2x2 matrix from its characteristic polynomial.
inline std::pair<cplx, cplx> eigenvalues_2x2(const Complex2x2& m) {
  const cplx tr = m.trace();
  const cplx det = m.determinant();
  const cplx disc = std::sqrt(tr * tr - 4.0 * det);
  return {(tr + disc) / 2.0, (tr - disc) / 2.0};
}

/// Quasi-energy in [0, pi] from the eigenvalue phases of U.
inline double quasi_energy_from_eigenvalues(const Complex2x2& u) {
  const auto [a, b] = eigenvalues_2x2(u);
  return std::max(std::abs(std::arg(a)), std::abs(std::arg(b)));
}

inline WalkModel random_model(std::mt19937_64& rng, Family family) {
  return WalkModel::from_family(family, uniform(rng, -kPi, kPi), uniform(rng, -kPi, kPi));
}

/// Composite Simpson rule on [a, b] with n (even) intervals.
template <class F>
double simpson(F&& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

}  // namespace dtqw::testing
