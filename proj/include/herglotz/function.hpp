#pragma once

#include <functional>
#include <memory>
#include <string>

#include <json.hpp>

#include "herglotz/common.hpp"
#include "herglotz/geometry.hpp"
#include "herglotz/support.hpp"

namespace herglotz {

enum class Picture { half_plane, disc };
enum class Tristate { yes, no, unknown };

/// A holomorphic function off the real line (half-plane picture) or off the
/// unit circle (disc picture), carrying boundary metadata.
class AnalyticFunction {
 public:
  using Evaluator = std::function<Complex(Complex)>;

  AnalyticFunction(Evaluator eval, Picture picture, BoundarySupport support = {});

  /// Evaluates at z; throws DomainError when z lies on the boundary set
  /// (Im z = 0, or |z| = 1 in the disc picture).
  Complex operator()(Complex z) const;
  /// Sphere version: infinity is accepted only in the disc picture.
  ComplexPoint operator()(const ComplexPoint& z) const;
  /// Evaluates without the boundary guard.
  Complex raw(Complex z) const { return (*eval_)(z); }

  [[nodiscard]] Picture picture() const { return picture_; }
  [[nodiscard]] const BoundarySupport& support() const { return support_; }

  Tristate simple_on_boundary = Tristate::unknown;
  std::string simple_condition;  // parameter condition witnessing simple_on_boundary
  bool has_representing_measure = true;
  nlohmann::json descriptor;     // build recipe; null when built ad hoc

  AnalyticFunction& with_support(BoundarySupport s) {
    support_ = std::move(s);
    return *this;
  }

 private:
  std::shared_ptr<const Evaluator> eval_;
  Picture picture_;
  BoundarySupport support_;
};

/// w -> conj(f(conj w)) in the half-plane picture; z -> -conj(f(1/conj z)) in
/// the disc picture. Involutive.
AnalyticFunction star_reflect(const AnalyticFunction& f);

/// z -> f(-1/z); half-plane picture only.
AnalyticFunction invert_variable(const AnalyticFunction& f);

/// z -> f(A.z) for real invertible A; half-plane picture only. The support is
/// transported by A^{-1}.
AnalyticFunction compose_mobius(const AnalyticFunction& f, const MobiusMatrix& A);

/// Disc picture of a half-plane function: z -> -i f(w(z)) with
/// w = i(1-z)/(1+z). Built by composition so the two pictures cannot drift.
AnalyticFunction disc_picture(const AnalyticFunction& f);

/// Sum and scalar multiple, for linearity checks.
AnalyticFunction operator+(const AnalyticFunction& f, const AnalyticFunction& g);
AnalyticFunction operator*(Complex c, const AnalyticFunction& f);

}  // namespace herglotz
