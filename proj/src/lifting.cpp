#include "dsf/lifting.hpp"

#include <cmath>

namespace dsf {

namespace {

constexpr int kMaxSplits = 40;

BerksonPortaData require_origin(const SemigroupModel& m) {
  if (!m.berkson_porta())
    throw Error(ErrorKind::Misuse, "lifting: base model needs Berkson-Porta data");
  if (m.berkson_porta()->tau != cplx{0.0, 0.0})
    throw Error(ErrorKind::Misuse, "lifting: base model must have DW point 0");
  return *m.berkson_porta();
}

// Sum of principal logs of successive ratios of v(s) for s in [0, 1],
// splitting an interval until the ratio's argument is below pi/2.
cplx log_increment(const std::function<cplx(double)>& v, int initial_steps) {
  cplx total{0.0, 0.0};
  struct Piece {
    double a, b;
    cplx va, vb;
    int depth;
  };
  std::vector<Piece> stack;
  std::vector<cplx> samples(initial_steps + 1);
  for (int k = 0; k <= initial_steps; ++k) samples[k] = v(static_cast<double>(k) / initial_steps);
  for (int k = initial_steps - 1; k >= 0; --k)
    stack.push_back({static_cast<double>(k) / initial_steps,
                     static_cast<double>(k + 1) / initial_steps, samples[k], samples[k + 1], 0});
  while (!stack.empty()) {
    Piece pc = stack.back();
    stack.pop_back();
    if (pc.va == cplx{0.0, 0.0} || pc.vb == cplx{0.0, 0.0})
      throw Error(ErrorKind::Singular, "lifting: continued function vanishes on the path");
    const cplx ratio = pc.vb / pc.va;
    if (std::abs(std::arg(ratio)) < pi / 2) {
      total += std::log(ratio);
      continue;
    }
    if (pc.depth >= kMaxSplits)
      throw Error(ErrorKind::Singular, "lifting: branch continuation did not resolve");
    const double mid = 0.5 * (pc.a + pc.b);
    const cplx vm = v(mid);
    stack.push_back({mid, pc.b, vm, pc.vb, pc.depth + 1});
    stack.push_back({pc.a, mid, pc.va, vm, pc.depth + 1});
  }
  return total;
}

}  // namespace

cplx lifted_generator(const BerksonPortaData& bp, cplx w) {
  require_right_half_plane(w, "lifted_generator");
  const cplx z = std::exp(-w);
  if (bp.tau == cplx{0.0, 0.0}) return bp.p(z);
  return -eval_G(bp, z) / z;
}

LiftedModel::LiftedModel(SemigroupModel base, QuadratureConfig quadrature)
    : base_(std::move(base)),
      bp_(require_origin(base_)),
      h_(KoenigsFunction::interior(bp_, quadrature)) {
  anchor_value_ = -std::log(h_(std::exp(-1.0)));
}

cplx LiftedModel::flow(cplx w, double t) const {
  require_right_half_plane(w, "lift_flow");
  if (!(t >= 0.0)) throw Error(ErrorKind::Domain, "lift_flow: t must be >= 0");
  if (t == 0.0) return w;
  const double times[] = {t};
  const BerksonPortaData& bp = bp_;
  return integrate([&bp](cplx v) { return lifted_generator(bp, v); }, w, times,
                   base_.config().ode(), [](cplx v) { return v.real() > 0.0; })
      .front();
}

cplx LiftedModel::projected_flow(cplx w, double t) const {
  require_right_half_plane(w, "projected_flow");
  if (!(t >= 0.0)) throw Error(ErrorKind::Domain, "projected_flow: t must be >= 0");
  if (t == 0.0) return w;
  const cplx z = std::exp(-w);
  const SemigroupModel& m = base_;
  const int steps = std::max(8, static_cast<int>(std::ceil(4.0 * t)));
  return w - log_increment([&](double s) { return m.flow(z, s * t); }, steps);
}

cplx LiftedModel::koenigs(cplx w) const {
  require_right_half_plane(w, "lifted_koenigs");
  const cplx a{1.0, 0.0};
  const KoenigsFunction& h = h_;
  const int steps = std::max(1, static_cast<int>(std::ceil(2.0 * std::abs(w - a))));
  const cplx h_tilde =
      anchor_value_ - log_increment([&](double s) { return h(std::exp(-(a + s * (w - a)))); },
                                    steps);
  return -h_tilde / lambda();
}

double conjugation_residual(const LiftedModel& lm, cplx w, double t) {
  return std::abs(std::exp(-lm.flow(w, t)) - lm.base().flow(std::exp(-w), t));
}

double lifted_abel_residual(const LiftedModel& lm, cplx w, double t) {
  return std::abs(lm.koenigs(lm.flow(w, t)) - lm.koenigs(w) - t);
}

}  // namespace dsf
