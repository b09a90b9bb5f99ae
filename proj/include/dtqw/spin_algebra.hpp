#pragma once

// Exact 2x2 complex linear algebra for two-level (spin / polarization) systems.

#include <array>
#include <complex>

namespace dtqw {

using cplx = std::complex<double>;

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  [[nodiscard]] double norm() const;
  [[nodiscard]] double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  [[nodiscard]] Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }

  friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
};

/// Row-major 2x2 complex matrix.
class Complex2x2 {
 public:
  constexpr Complex2x2() = default;
  constexpr Complex2x2(cplx m00, cplx m01, cplx m10, cplx m11) : e_{m00, m01, m10, m11} {}

  static constexpr Complex2x2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static constexpr Complex2x2 diagonal(cplx d0, cplx d1) { return {d0, 0.0, 0.0, d1}; }

  [[nodiscard]] constexpr cplx operator()(int row, int col) const { return e_[2 * row + col]; }
  constexpr cplx& operator()(int row, int col) { return e_[2 * row + col]; }

  [[nodiscard]] cplx trace() const { return e_[0] + e_[3]; }
  [[nodiscard]] cplx determinant() const { return e_[0] * e_[3] - e_[1] * e_[2]; }
  [[nodiscard]] Complex2x2 adjoint() const;
  [[nodiscard]] double frobenius_norm() const;
  [[nodiscard]] bool is_finite() const;

  friend Complex2x2 operator*(const Complex2x2& a, const Complex2x2& b);
  friend Complex2x2 operator+(const Complex2x2& a, const Complex2x2& b);
  friend Complex2x2 operator-(const Complex2x2& a, const Complex2x2& b);
  friend Complex2x2 operator*(cplx s, const Complex2x2& a);

 private:
  std::array<cplx, 4> e_{};
};

struct Spinor {
  cplx up;
  cplx down;

  [[nodiscard]] double norm_squared() const { return std::norm(up) + std::norm(down); }
  [[nodiscard]] Spinor normalized() const;
};

/// <a|b>, antilinear in the first argument.
[[nodiscard]] cplx inner(const Spinor& a, const Spinor& b);
[[nodiscard]] Spinor operator*(const Complex2x2& m, const Spinor& s);
[[nodiscard]] Spinor operator*(cplx s, const Spinor& v);

/// Unit rotation axis. Construction rejects vectors whose norm deviates from 1
/// by more than 1e-9; the stored components are renormalized.
class Axis3 {
 public:
  Axis3(double nx, double ny, double nz);

  [[nodiscard]] double nx() const { return n_.x; }
  [[nodiscard]] double ny() const { return n_.y; }
  [[nodiscard]] double nz() const { return n_.z; }
  [[nodiscard]] const Vec3& vec() const { return n_; }

 private:
  Vec3 n_;
};

Complex2x2 pauli_x();
Complex2x2 pauli_y();
Complex2x2 pauli_z();

/// n.sigma for a real 3-vector.
Complex2x2 pauli_dot(const Vec3& n);

/// [[cos t, -sin t], [sin t, cos t]]
Complex2x2 rotation_y(double theta);

/// [[cos p, i sin p], [i sin p, cos p]]
Complex2x2 rotation_x(double phi);

/// Rotation by theta about an arbitrary unit axis:
/// [[cos t - i nz sin t, (i nx - ny) sin t], [(i nx + ny) sin t, cos t + i nz sin t]]
Complex2x2 rotation_axis(const Axis3& axis, double theta);

/// exp(-i angle n.sigma) for a unit vector n, via cos(angle) I - i sin(angle) n.sigma.
Complex2x2 su2_exp(double angle, const Vec3& unit_n);

/// Closed-form eigen-decomposition of H = n.sigma.
///
/// Eigenvalues are +-|n|. Eigenvectors are
///   v+ = (-(nx - i ny), nz - |n|) / D+,   v- = (-(nx - i ny), nz + |n|) / D-,
///   D+- = sqrt(2|n|^2 -+ 2 nz |n|),
/// so the lower component is always real. Where the lower component vanishes
/// (n parallel to +-z) the spinor is the basis state with upper component 1.
/// The result depends only on the direction of n.
struct HermitianEigen2 {
  double lambda_plus;
  double lambda_minus;
  Spinor v_plus;
  Spinor v_minus;
};

/// Throws DomainError(degenerate_input) when |n| < 1e-12.
HermitianEigen2 eig_h2(const Vec3& n);

}  // namespace dtqw
