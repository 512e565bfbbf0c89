#include "dsf/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace dsf {

namespace {

constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights at the odd-indexed Kronrod nodes 1, 3, 5 and the centre.
constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  cplx value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel kronrod(const std::function<cplx(double)>& g, double a, double b) {
  const double centre = 0.5 * (a + b), half = 0.5 * (b - a);
  std::array<cplx, 15> f;
  f[7] = g(centre);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * xgk[j];
    f[j] = g(centre - dx);
    f[14 - j] = g(centre + dx);
  }
  cplx kron = wgk[7] * f[7];
  cplx gauss = wg[3] * f[7];
  double resabs = wgk[7] * std::abs(f[7]);
  for (int j = 0; j < 7; ++j) {
    kron += wgk[j] * (f[j] + f[14 - j]);
    resabs += wgk[j] * (std::abs(f[j]) + std::abs(f[14 - j]));
    if (j % 2 == 1) gauss += wg[j / 2] * (f[j] + f[14 - j]);
  }
  // QUADPACK error scaling for the 15-point rule.
  const cplx mean = 0.5 * kron;
  double resasc = wgk[7] * std::abs(f[7] - mean);
  for (int j = 0; j < 7; ++j)
    resasc += wgk[j] * (std::abs(f[j] - mean) + std::abs(f[14 - j] - mean));
  kron *= half;
  gauss *= half;
  resabs *= std::abs(half);
  resasc *= std::abs(half);
  double err = std::abs(kron - gauss);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps))
    err = std::max(50.0 * eps * resabs, err);
  return {a, b, kron, err};
}

}  // namespace

QuadratureResult integrate_unit(const std::function<cplx(double)>& g,
                                const QuadratureConfig& config) {
  std::priority_queue<Panel> panels;
  Panel first = kronrod(g, 0.0, 1.0);
  cplx total = first.value;
  double error = first.error;
  panels.push(first);
  int count = 1;
  auto done = [&] { return error <= std::max(config.abs_tol, config.rel_tol * std::abs(total)); };
  while (!done() && count < config.max_intervals) {
    Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {  // interval exhausted at double precision
      panels.push({worst.a, worst.b, worst.value, 0.0});
      error -= worst.error;
      continue;
    }
    Panel left = kronrod(g, worst.a, mid), right = kronrod(g, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++count;
  }
  // Re-sum to shed the drift of incremental updates.
  cplx sum{0.0, 0.0};
  double err = 0.0;
  while (!panels.empty()) {
    sum += panels.top().value;
    err += panels.top().error;
    panels.pop();
  }
  return {sum, err, count, err <= std::max(config.abs_tol, config.rel_tol * std::abs(sum))};
}

cplx integrate_segment(const std::function<cplx(cplx)>& f, cplx a, cplx b,
                       const QuadratureConfig& config) {
  const cplx d = b - a;
  if (d == cplx{0.0, 0.0}) return {0.0, 0.0};
  auto result = integrate_unit([&](double s) { return f(a + s * d) * d; }, config);
  if (!result.converged)
    throw Error(ErrorKind::IntegrationFailure,
                "quadrature: tolerance not met (error estimate " +
                    format_double(result.error) + ")");
  return result.value;
}

cplx integrate_segment_fixed(const std::function<cplx(cplx)>& f, cplx a, cplx b, int panels) {
  const cplx d = b - a;
  auto g = [&](double s) { return f(a + s * d) * d; };
  cplx sum{0.0, 0.0};
  for (int k = 0; k < panels; ++k)
    sum += kronrod(g, static_cast<double>(k) / panels, static_cast<double>(k + 1) / panels).value;
  return sum;
}

}  // namespace dsf
