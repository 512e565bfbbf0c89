#pragma once

// Exponential lifting of a semigroup with DW point 0 to the right
// half-plane: exp(-lift_t(w)) = phi_t(exp(-w)).

#include "dsf/koenigs.hpp"
#include "dsf/semiflow.hpp"

namespace dsf {

/// -G(e^{-w}) / e^{-w} = p(e^{-w}) for tau = 0. Re w > 0.
cplx lifted_generator(const BerksonPortaData& bp, cplx w);

class LiftedModel {
 public:
  /// base must be generator-driven or carry Berkson-Porta data, with DW point 0.
  explicit LiftedModel(SemigroupModel base, QuadratureConfig quadrature = {});

  cplx generator(cplx w) const { return lifted_generator(bp_, w); }
  /// Integrates dw/dt = G~(w) with a Re w > 0 guard.
  cplx flow(cplx w, double t) const;
  /// -log phi_t(e^{-w}), continued in t from w at t = 0.
  cplx projected_flow(cplx w, double t) const;
  /// h~0 = -h~ / lambda, exp(-h~(w)) = h(e^{-w}), branch fixed by the
  /// principal Log at w = 1 and continued along the segment [1, w].
  cplx koenigs(cplx w) const;

  const SemigroupModel& base() const { return base_; }
  const KoenigsFunction& base_koenigs() const { return h_; }
  cplx lambda() const { return h_.lambda(); }

 private:
  SemigroupModel base_;
  BerksonPortaData bp_;
  KoenigsFunction h_;
  cplx anchor_value_;  // h~(1)
};

inline cplx lift_flow(const LiftedModel& lm, cplx w, double t) { return lm.flow(w, t); }
inline cplx lifted_koenigs(const LiftedModel& lm, cplx w) { return lm.koenigs(w); }

/// |exp(-lift_flow(w, t)) - flow(exp(-w), t)|
double conjugation_residual(const LiftedModel& lm, cplx w, double t);
/// |h~0(lift_flow(w, t)) - h~0(w) - t|
double lifted_abel_residual(const LiftedModel& lm, cplx w, double t);

}  // namespace dsf
