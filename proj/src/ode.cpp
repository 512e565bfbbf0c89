#include "dsf/ode.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>

namespace dsf {

namespace {

// Dormand-Prince 5(4) tableau.
// Autonomous right-hand side: the stage nodes c_i are not needed.
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
// b - b*, the embedded error weights.
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

std::vector<cplx> integrate(const std::function<cplx(cplx)>& f, cplx z0,
                            std::span<const double> times, const OdeConfig& config,
                            const StateGuard& admissible, OdeStats* stats) {
  OdeStats local;
  OdeStats& st = stats ? *stats : local;

  std::vector<cplx> out;
  out.reserve(times.size());
  if (!admissible(z0))
    throw Error(ErrorKind::Domain, "integrate: initial state outside the invariant set");

  double t = 0.0;
  cplx y = z0;
  cplx k1 = f(y);
  double h = 0.0;
  {
    const double d0 = std::abs(y), d1 = std::abs(k1);
    h = (d0 > 1e-5 && d1 > 1e-5) ? 0.01 * d0 / d1 : 1e-4;
    h = std::min(h, config.max_step);
  }

  int halvings = 0;
  long attempts = 0;
  for (double target : times) {
    if (target < t)
      throw Error(ErrorKind::Domain, "integrate: output times must be ascending and >= 0");
    while (t < target) {
      if (++attempts > config.max_steps)
        throw Error(ErrorKind::IntegrationFailure, "integrate: step budget exhausted");
      const double remaining = target - t;
      bool last = false;
      double step = std::min(h, config.max_step);
      if (step >= remaining) {
        step = remaining;
        last = true;
      }

      std::array<cplx, 7> k;
      k[0] = k1;
      bool stage_ok = true;
      auto stage = [&](cplx w) -> cplx {
        if (!stage_ok) return {};
        if (!finite(w) || !admissible(w)) {
          stage_ok = false;
          return {};
        }
        return f(w);
      };
      k[1] = stage(y + step * (a21 * k[0]));
      k[2] = stage(y + step * (a31 * k[0] + a32 * k[1]));
      k[3] = stage(y + step * (a41 * k[0] + a42 * k[1] + a43 * k[2]));
      k[4] = stage(y + step * (a51 * k[0] + a52 * k[1] + a53 * k[2] + a54 * k[3]));
      k[5] = stage(y + step * (a61 * k[0] + a62 * k[1] + a63 * k[2] + a64 * k[3] +
                               a65 * k[4]));
      cplx y_new{};
      if (stage_ok) {
        y_new = y + step * (b1 * k[0] + b3 * k[2] + b4 * k[3] + b5 * k[4] + b6 * k[5]);
        k[6] = stage(y_new);
      }

      if (!stage_ok || !finite(k[6])) {
        const cplx increment = stage_ok ? y_new - y : step * k[0];
        if (std::abs(increment) <= 8.0 * std::numeric_limits<double>::epsilon() *
                                        std::max(1.0, std::abs(y))) {
          // pinned at the boundary to rounding precision
          t = last ? target : t + step;
          halvings = 0;
          ++st.accepted;
          continue;
        }
        ++st.guard_rejections;
        ++st.rejected;
        if (++halvings > config.max_halvings)
          throw Error(ErrorKind::IntegrationFailure,
                      "integrate: state left the invariant set after " +
                          std::to_string(config.max_halvings) + " step halvings");
        h = step / 2.0;
        continue;
      }

      const cplx err = step * (e1 * k[0] + e3 * k[2] + e4 * k[3] + e5 * k[4] + e6 * k[5] +
                               e7 * k[6]);
      const double scale =
          config.abs_tol + config.rel_tol * std::max(std::abs(y), std::abs(y_new));
      const double ratio = std::abs(err) / scale;
      if (ratio <= 1.0) {
        t = last ? target : t + step;
        y = y_new;
        k1 = k[6];  // FSAL
        ++st.accepted;
        halvings = 0;
        const double factor = ratio == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(ratio, -0.2), 0.2, 5.0);
        // Keep a truncated final step from shrinking the next one.
        h = (last ? std::max(h, step) : step) * factor;
      } else {
        ++st.rejected;
        h = step * std::clamp(0.9 * std::pow(ratio, -0.2), 0.1, 0.9);
      }
      if (!(h > 0.0))
        throw Error(ErrorKind::IntegrationFailure, "integrate: step size underflow");
    }
    out.push_back(y);
  }
  return out;
}

}  // namespace dsf
