#pragma once

// Reference values computed without the library: closed forms, a fixed-step
// RK4 integrator, Gauss-Legendre sums and scalar root solves.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

namespace oracle {

using cplx = std::complex<double>;
inline constexpr double pi = std::numbers::pi;
inline const cplx I{0.0, 1.0};

// Classical RK4 with n equal steps.
inline cplx rk4(const std::function<cplx(cplx)>& f, cplx z, double t, int n = 4000) {
  const double h = t / n;
  for (int k = 0; k < n; ++k) {
    const cplx k1 = f(z), k2 = f(z + 0.5 * h * k1), k3 = f(z + 0.5 * h * k2), k4 = f(z + h * k3);
    z += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return z;
}

inline cplx strip_flow(cplx z, double t) { return std::tanh(std::atanh(z) + pi * t / 2.0); }

inline cplx parabolic_flow(cplx z, double t) {
  const cplx w = I * (1.0 + z) / (1.0 - z) + t;
  return (w - I) / (w + I);
}

// G = -z(1-z): logistic equation.
inline cplx logistic_flow(cplx z, double t) {
  const double e = std::exp(-t);
  return z * e / (1.0 + z * (e - 1.0));
}

// -log phi_t(e^{-w}) for G = -z(1-z), Re w > 0.
inline cplx logistic_lift(cplx w, double t) {
  return w + t + std::log(1.0 - std::exp(-w) * (1.0 - std::exp(-t)));
}

// zeta = w - log zeta, a contraction while |zeta| > 1.
inline cplx slit_inverse_fixed_point(cplx w) {
  cplx z = w;
  for (int k = 0; k < 500; ++k) z = w - std::log(z);
  return z;
}

// Root of -r + log r = x by Newton from r0.
inline double slit_edge_newton(double x, double r0) {
  double r = r0;
  for (int k = 0; k < 100; ++k) r -= (-r + std::log(r) - x) / (-1.0 + 1.0 / r);
  return r;
}

// 20-point Gauss-Legendre on [a, b] along a segment, composite with m panels.
inline cplx segment_integral(const std::function<cplx(cplx)>& f, cplx a, cplx b, int m = 64) {
  static const double x[10] = {0.0765265211334973, 0.2277858511416451, 0.3737060887154195,
                               0.5108670019508271, 0.6360536807265150, 0.7463319064601508,
                               0.8391169718222188, 0.9122344282513259, 0.9639719272779138,
                               0.9931285991850949};
  static const double w[10] = {0.1527533871307258, 0.1491729864726037, 0.1420961093183820,
                               0.1316886384491766, 0.1181945319615184, 0.1019301198172404,
                               0.0832767415767048, 0.0626720483341091, 0.0406014298003869,
                               0.0176140071391521};
  cplx sum{0.0, 0.0};
  const cplx d = (b - a) / static_cast<double>(m);
  for (int p = 0; p < m; ++p) {
    const cplx c = a + (p + 0.5) * d;
    for (int k = 0; k < 10; ++k)
      sum += w[k] * (f(c + 0.5 * x[k] * d) + f(c - 0.5 * x[k] * d));
  }
  return 0.5 * d * sum;
}

}  // namespace oracle
