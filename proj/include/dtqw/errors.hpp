#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dtqw {

/// Failure modes that are physically meaningful rather than programming bugs.
/// A gapless point, for example, is a Dirac point and callers routinely mask it.
enum class DomainErrorKind {
  degenerate_input,   // zero Bloch vector, eigenvectors undefined
  gapless_point,      // quasi-energy gap closed at the requested momentum
  non_planar_curve,   // winding number requested for a non-planar n(k)
  unsupported_curve,  // curve shape outside what an operation supports
  undefined_phase,    // phase of a vanishing overlap
  step_underflow,     // finite-difference estimates disagree
  internal_consistency,
};

[[nodiscard]] constexpr std::string_view domain_error_kind_name(DomainErrorKind k) {
  switch (k) {
    case DomainErrorKind::degenerate_input: return "degenerate_input";
    case DomainErrorKind::gapless_point: return "gapless_point";
    case DomainErrorKind::non_planar_curve: return "non_planar_curve";
    case DomainErrorKind::unsupported_curve: return "unsupported_curve";
    case DomainErrorKind::undefined_phase: return "undefined_phase";
    case DomainErrorKind::step_underflow: return "step_underflow";
    case DomainErrorKind::internal_consistency: return "internal_consistency";
  }
  return "unknown";
}

class DomainError : public std::runtime_error {
 public:
  DomainError(DomainErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  [[nodiscard]] DomainErrorKind kind() const noexcept { return kind_; }

 private:
  DomainErrorKind kind_;
};

}  // namespace dtqw
