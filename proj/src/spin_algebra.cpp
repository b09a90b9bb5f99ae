#include "dtqw/spin_algebra.hpp"

#include <cmath>
#include <stdexcept>

#include "dtqw/errors.hpp"

namespace dtqw {

namespace {
constexpr cplx kI{0.0, 1.0};
constexpr double kAxisTolerance = 1e-9;
constexpr double kDegenerateNorm = 1e-12;
}  // namespace

double Vec3::norm() const { return std::sqrt(x * x + y * y + z * z); }

Complex2x2 Complex2x2::adjoint() const {
  return {std::conj(e_[0]), std::conj(e_[2]), std::conj(e_[1]), std::conj(e_[3])};
}

double Complex2x2::frobenius_norm() const {
  double s = 0.0;
  for (const auto& v : e_) s += std::norm(v);
  return std::sqrt(s);
}

bool Complex2x2::is_finite() const {
  for (const auto& v : e_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

Complex2x2 operator*(const Complex2x2& a, const Complex2x2& b) {
  return {a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
          a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)};
}

Complex2x2 operator+(const Complex2x2& a, const Complex2x2& b) {
  return {a(0, 0) + b(0, 0), a(0, 1) + b(0, 1), a(1, 0) + b(1, 0), a(1, 1) + b(1, 1)};
}

Complex2x2 operator-(const Complex2x2& a, const Complex2x2& b) {
  return {a(0, 0) - b(0, 0), a(0, 1) - b(0, 1), a(1, 0) - b(1, 0), a(1, 1) - b(1, 1)};
}

Complex2x2 operator*(cplx s, const Complex2x2& a) {
  return {s * a(0, 0), s * a(0, 1), s * a(1, 0), s * a(1, 1)};
}

Spinor Spinor::normalized() const {
  const double n = std::sqrt(norm_squared());
  return {up / n, down / n};
}

cplx inner(const Spinor& a, const Spinor& b) {
  return std::conj(a.up) * b.up + std::conj(a.down) * b.down;
}

Spinor operator*(const Complex2x2& m, const Spinor& s) {
  return {m(0, 0) * s.up + m(0, 1) * s.down, m(1, 0) * s.up + m(1, 1) * s.down};
}

Spinor operator*(cplx s, const Spinor& v) { return {s * v.up, s * v.down}; }

Axis3::Axis3(double nx, double ny, double nz) {
  const Vec3 raw{nx, ny, nz};
  const double n = raw.norm();
  if (!std::isfinite(n) || std::abs(n - 1.0) > kAxisTolerance) {
    throw std::invalid_argument("rotation axis must have unit norm");
  }
  n_ = (1.0 / n) * raw;
}

Complex2x2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
Complex2x2 pauli_y() { return {0.0, -kI, kI, 0.0}; }
Complex2x2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }

Complex2x2 pauli_dot(const Vec3& n) {
  return {n.z, cplx{n.x, -n.y}, cplx{n.x, n.y}, -n.z};
}

Complex2x2 rotation_y(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c, -s, s, c};
}

Complex2x2 rotation_x(double phi) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  return {c, kI * s, kI * s, c};
}

Complex2x2 rotation_axis(const Axis3& axis, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double nx = axis.nx();
  const double ny = axis.ny();
  const double nz = axis.nz();
  return {cplx{c, -nz * s}, cplx{-ny * s, nx * s}, cplx{ny * s, nx * s}, cplx{c, nz * s}};
}

Complex2x2 su2_exp(double angle, const Vec3& unit_n) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {cplx{c, -s * unit_n.z}, cplx{-s * unit_n.y, -s * unit_n.x},
          cplx{s * unit_n.y, -s * unit_n.x}, cplx{c, s * unit_n.z}};
}

HermitianEigen2 eig_h2(const Vec3& n) {
  const double perp2 = n.x * n.x + n.y * n.y;
  const double r = std::sqrt(perp2 + n.z * n.z);
  if (!(r >= kDegenerateNorm)) {
    throw DomainError(DomainErrorKind::degenerate_input,
                      "eig_h2: |n| below 1e-12, eigenvectors undefined (Dirac point)");
  }

  // r - nz and r + nz without cancellation.
  const double r_minus_nz = n.z > 0.0 ? perp2 / (r + n.z) : r - n.z;
  const double r_plus_nz = n.z < 0.0 ? perp2 / (r - n.z) : r + n.z;
  const cplx upper{n.x, -n.y};  // nx - i ny

  HermitianEigen2 out{r, -r, {1.0, 0.0}, {1.0, 0.0}};

  const double d_plus = std::sqrt(2.0 * r * r_minus_nz);
  if (d_plus > 0.0) out.v_plus = {upper / d_plus, r_minus_nz / d_plus};

  const double d_minus = std::sqrt(2.0 * r * r_plus_nz);
  if (d_minus > 0.0) out.v_minus = {-upper / d_minus, r_plus_nz / d_minus};

  return out;
}

}  // namespace dtqw
