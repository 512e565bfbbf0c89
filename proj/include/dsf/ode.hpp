#pragma once

// Adaptive Dormand-Prince 5(4) integrator for autonomous complex scalar ODEs
// dw/dt = f(w) confined to an open invariant set.

#include <functional>
#include <span>
#include <vector>

#include "dsf/core.hpp"

namespace dsf {

struct OdeConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double max_step = 0.5;
  int max_halvings = 60;
  long max_steps = 10'000'000;
};

/// Returns true if a state lies in the invariant set.
using StateGuard = std::function<bool(cplx)>;

struct OdeStats {
  long accepted = 0;
  long rejected = 0;
  long guard_rejections = 0;
};

/// Solution values at each of `times` (ascending, >= 0) starting from w(0) = z0.
/// A proposed stage or step outside the invariant set is rejected and the step
/// halved; more than max_halvings consecutive halvings throw IntegrationFailure.
/// A rejected step whose increment is below rounding level leaves the state
/// unchanged: the exact solution is then within one ulp of the boundary.
std::vector<cplx> integrate(const std::function<cplx(cplx)>& f, cplx z0,
                            std::span<const double> times, const OdeConfig& config,
                            const StateGuard& admissible, OdeStats* stats = nullptr);

}  // namespace dsf
