#pragma once

// Globally adaptive Gauss-Kronrod (7/15) quadrature of complex-valued
// integrands, on [0, 1] and along straight segments in the plane.

#include <functional>

#include "dsf/core.hpp"

namespace dsf {

struct QuadratureConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-13;
  int max_intervals = 4000;
};

struct QuadratureResult {
  cplx value;
  double error = 0.0;
  int intervals = 0;
  bool converged = false;
};

/// Integral over [0, 1] of g(s) ds.
QuadratureResult integrate_unit(const std::function<cplx(double)>& g,
                                const QuadratureConfig& config = {});

/// Integral of f(zeta) d zeta along the segment [a, b]. Throws
/// IntegrationFailure if the tolerance is not met within max_intervals.
cplx integrate_segment(const std::function<cplx(cplx)>& f, cplx a, cplx b,
                       const QuadratureConfig& config = {});

/// Same integral with `panels` equal panels of the 15-point Kronrod rule.
cplx integrate_segment_fixed(const std::function<cplx(cplx)>& f, cplx a, cplx b, int panels);

}  // namespace dsf
