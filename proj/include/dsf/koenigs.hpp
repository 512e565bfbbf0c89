#pragma once

// Koenigs functions: h(phi_t) = e^{lambda t} h for an interior DW point,
// h(phi_t) = h + t for a boundary one.

#include <optional>

#include "dsf/generator.hpp"
#include "dsf/quadrature.hpp"
#include "dsf/semiflow.hpp"

namespace dsf {

enum class KoenigsCase { Interior, Boundary };

class KoenigsFunction {
 public:
  /// Abel case: h(z) = integral of 1/G along [0, z].
  static KoenigsFunction boundary(GeneratorFn G, cplx tau, QuadratureConfig config = {});
  /// Schroeder case, normalized h(tau) = 0, (h o M^{-1})'(0) = 1 with
  /// M(z) = (z - tau)/(1 - conj(tau) z). For tau = 0 that is h(0) = 0, h'(0) = 1.
  static KoenigsFunction interior(const BerksonPortaData& bp, QuadratureConfig config = {});
  /// A known closed form, e.g. from the gallery. evaluator must satisfy the
  /// functional equation for G.
  static KoenigsFunction closed_form(KoenigsCase kind, GeneratorFn G, cplx tau,
                                     std::function<cplx(cplx)> evaluator,
                                     std::optional<cplx> lambda = std::nullopt);

  cplx operator()(cplx z) const;
  /// h' from the functional equation: 1/G (Abel) or lambda h / G (Schroeder).
  cplx derivative(cplx z) const;
  /// Same as operator() with fixed equal panels instead of the adaptive rule.
  /// Closed forms ignore the panel count.
  cplx evaluate_fixed(cplx z, int panels) const;

  KoenigsCase kind() const { return kind_; }
  cplx tau() const { return tau_; }
  /// Multiplier lambda (interior case only).
  cplx lambda() const;
  bool is_closed_form() const { return closed_; }
  const GeneratorFn& generator() const { return G_; }

 private:
  KoenigsFunction() = default;
  cplx eval(cplx z, int panels) const;

  KoenigsCase kind_ = KoenigsCase::Boundary;
  GeneratorFn G_;
  cplx tau_{1.0, 0.0};
  cplx lambda_{0.0, 0.0};
  bool closed_ = false;
  std::function<cplx(cplx)> closed_eval_;
  // interior: p conjugated to the origin
  std::function<cplx(cplx)> p0_;
  cplx p0_at_0_{0.0, 0.0}, dp0_at_0_{0.0, 0.0};
  QuadratureConfig qcfg_;
};

inline KoenigsFunction koenigs_boundary(GeneratorFn G, cplx tau, QuadratureConfig config = {}) {
  return KoenigsFunction::boundary(std::move(G), tau, config);
}
inline KoenigsFunction koenigs_interior(const BerksonPortaData& bp, QuadratureConfig config = {}) {
  return KoenigsFunction::interior(bp, config);
}
/// Picks the case from tau.
KoenigsFunction koenigs_for(const SemigroupModel& model, QuadratureConfig config = {});

/// |h(phi_t(z)) - h(z) - t|
double abel_residual(const KoenigsFunction& h, const SemigroupModel& model, cplx z, double t);
/// |h(phi_t(z)) - e^{lambda t} h(z)|
double schroeder_residual(const KoenigsFunction& h, const SemigroupModel& model, cplx z, double t);

/// H = h o F^{-1} on the right half-plane, F(z) = (1+z)/(1-z) - (1+s)/(1-s)
/// after rotating tau to 1 (s = sigma / tau).
class HalfPlaneConjugate {
 public:
  HalfPlaneConjugate(KoenigsFunction h, cplx sigma);

  cplx operator()(cplx w) const;
  cplx derivative(cplx w) const;
  /// Disk point F^{-1}(w), rotated back.
  cplx preimage(cplx w) const;
  /// min Re H' over the grid.
  double min_re_derivative(std::span<const cplx> grid) const;

 private:
  KoenigsFunction h_;
  cplx rot_, c_;
};

/// Right half-plane sample points, Re w in [1e-2, 1e2] log-spaced, |Im w| <= 50.
std::vector<cplx> halfplane_grid();

/// Builds H and checks Re H' >= -1e-10 on halfplane_grid(); throws Inconsistency.
HalfPlaneConjugate halfplane_conjugate(const KoenigsFunction& h, cplx sigma);

}  // namespace dsf
