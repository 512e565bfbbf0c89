#include "dsf/koenigs.hpp"

#include <cmath>

namespace dsf {

namespace {

constexpr double kNearZero = 1e-14;

cplx integrate_path(const std::function<cplx(cplx)>& f, cplx z, int panels,
                    const QuadratureConfig& cfg) {
  if (panels > 0) return integrate_segment_fixed(f, 0.0, z, panels);
  return integrate_segment(f, 0.0, z, cfg);
}

}  // namespace

KoenigsFunction KoenigsFunction::boundary(GeneratorFn G, cplx tau, QuadratureConfig config) {
  if (std::abs(std::abs(tau) - 1.0) > 1e-12)
    throw Error(ErrorKind::Misuse, "koenigs_boundary: DW point must lie on the circle");
  KoenigsFunction h;
  h.kind_ = KoenigsCase::Boundary;
  h.G_ = std::move(G);
  h.tau_ = tau;
  h.qcfg_ = config;
  return h;
}

KoenigsFunction KoenigsFunction::interior(const BerksonPortaData& bp, QuadratureConfig config) {
  const cplx tau = bp.tau;
  if (!(std::abs(tau) < 1.0))
    throw Error(ErrorKind::Misuse, "koenigs_interior: DW point must lie inside the disk");
  const double s = 1.0 - std::norm(tau);
  KoenigsFunction h;
  h.kind_ = KoenigsCase::Interior;
  h.G_ = GeneratorFn::from(bp);
  h.tau_ = tau;
  h.qcfg_ = config;
  PositivePart p = bp.p;
  h.p0_ = [p, tau, s](cplx w) { return s * p((w + tau) / (1.0 + std::conj(tau) * w)); };
  h.p0_at_0_ = s * p(tau);
  h.dp0_at_0_ = s * s * p.derivative(tau);
  if (std::abs(h.p0_at_0_) < kNearZero)
    throw Error(ErrorKind::Singular, "koenigs_interior: p vanishes at the DW point");
  h.lambda_ = -h.p0_at_0_;
  return h;
}

KoenigsFunction KoenigsFunction::closed_form(KoenigsCase kind, GeneratorFn G, cplx tau,
                                             std::function<cplx(cplx)> evaluator,
                                             std::optional<cplx> lambda) {
  KoenigsFunction h;
  h.kind_ = kind;
  h.G_ = std::move(G);
  h.tau_ = tau;
  h.closed_ = true;
  h.closed_eval_ = std::move(evaluator);
  if (kind == KoenigsCase::Interior) {
    if (!lambda) throw Error(ErrorKind::Misuse, "koenigs closed form: interior case needs lambda");
    h.lambda_ = *lambda;
  }
  return h;
}

cplx KoenigsFunction::lambda() const {
  if (kind_ != KoenigsCase::Interior)
    throw Error(ErrorKind::Misuse, "koenigs: lambda is defined for the interior case only");
  return lambda_;
}

cplx KoenigsFunction::operator()(cplx z) const { return eval(z, 0); }

cplx KoenigsFunction::evaluate_fixed(cplx z, int panels) const {
  if (panels < 1) throw Error(ErrorKind::Domain, "koenigs: panel count must be >= 1");
  return eval(z, panels);
}

cplx KoenigsFunction::eval(cplx z, int panels) const {
  require_in_disk(z, "koenigs");
  if (closed_) return closed_eval_(z);
  if (kind_ == KoenigsCase::Boundary) {
    const GeneratorFn& G = G_;
    return integrate_path(
        [&G](cplx zeta) {
          const cplx g = G.eval_unchecked(zeta);
          if (std::abs(g) < kNearZero)
            throw Error(ErrorKind::Singular, "koenigs_boundary: G nearly vanishes on the path");
          return 1.0 / g;
        },
        z, panels, qcfg_);
  }
  const cplx w = (z - tau_) / (1.0 - std::conj(tau_) * z);
  if (w == cplx{0.0, 0.0}) return 0.0;
  const cplx p00 = p0_at_0_;
  const cplx limit = -dp0_at_0_ / p00;
  const auto& p0 = p0_;
  const cplx integral = integrate_path(
      [&](cplx zeta) -> cplx {
        if (zeta == cplx{0.0, 0.0}) return limit;
        const cplx pv = p0(zeta);
        if (std::abs(pv) < kNearZero)
          throw Error(ErrorKind::Singular, "koenigs_interior: p vanishes on the path");
        return (p00 / pv - 1.0) / zeta;
      },
      w, panels, qcfg_);
  return w * std::exp(integral);
}

cplx KoenigsFunction::derivative(cplx z) const {
  require_in_disk(z, "koenigs derivative");
  if (kind_ == KoenigsCase::Boundary) return 1.0 / G_(z);
  if (z == tau_) return 1.0 / (1.0 - std::norm(tau_));
  return lambda_ * (*this)(z) / G_(z);
}

KoenigsFunction koenigs_for(const SemigroupModel& model, QuadratureConfig config) {
  if (model.interior_dw()) {
    if (!model.berkson_porta())
      throw Error(ErrorKind::Misuse, "koenigs: interior case needs Berkson-Porta data");
    return KoenigsFunction::interior(*model.berkson_porta(), config);
  }
  return KoenigsFunction::boundary(model.generator(), model.dw(), config);
}

double abel_residual(const KoenigsFunction& h, const SemigroupModel& model, cplx z, double t) {
  if (h.kind() != KoenigsCase::Boundary)
    throw Error(ErrorKind::Misuse, "abel_residual: needs a boundary-case Koenigs function");
  return std::abs(h(model.flow(z, t)) - h(z) - t);
}

double schroeder_residual(const KoenigsFunction& h, const SemigroupModel& model, cplx z,
                          double t) {
  if (h.kind() != KoenigsCase::Interior)
    throw Error(ErrorKind::Misuse, "schroeder_residual: needs an interior-case Koenigs function");
  return std::abs(h(model.flow(z, t)) - std::exp(h.lambda() * t) * h(z));
}

HalfPlaneConjugate::HalfPlaneConjugate(KoenigsFunction h, cplx sigma) : h_(std::move(h)) {
  if (h_.kind() != KoenigsCase::Boundary)
    throw Error(ErrorKind::Misuse, "halfplane_conjugate: needs a boundary-case Koenigs function");
  if (std::abs(std::abs(sigma) - 1.0) > 1e-12)
    throw Error(ErrorKind::Domain, "halfplane_conjugate: sigma must have modulus 1");
  rot_ = h_.tau();
  const cplx s = sigma / rot_;
  if (std::abs(s - 1.0) < 1e-12)
    throw Error(ErrorKind::Domain, "halfplane_conjugate: sigma must differ from the DW point");
  c_ = (1.0 + s) / (1.0 - s);
}

cplx HalfPlaneConjugate::preimage(cplx w) const {
  require_right_half_plane(w, "halfplane_conjugate");
  return rot_ * (w + c_ - 1.0) / (w + c_ + 1.0);
}

cplx HalfPlaneConjugate::operator()(cplx w) const { return h_(preimage(w)); }

cplx HalfPlaneConjugate::derivative(cplx w) const {
  const cplx z = preimage(w);
  const cplx d = w + c_ + 1.0;
  return h_.derivative(z) * rot_ * 2.0 / (d * d);
}

double HalfPlaneConjugate::min_re_derivative(std::span<const cplx> grid) const {
  double m = INFINITY;
  for (cplx w : grid) m = std::min(m, derivative(w).real());
  return m;
}

std::vector<cplx> halfplane_grid() {
  std::vector<cplx> g;
  for (int i = 0; i <= 16; ++i) {
    const double x = std::pow(10.0, -2.0 + 4.0 * i / 16.0);
    for (int k = 0; k <= 40; ++k) g.emplace_back(x, -50.0 + 2.5 * k);
  }
  return g;
}

HalfPlaneConjugate halfplane_conjugate(const KoenigsFunction& h, cplx sigma) {
  HalfPlaneConjugate H(h, sigma);
  const auto grid = halfplane_grid();
  const double m = H.min_re_derivative(grid);
  if (!(m >= -1e-10))
    throw Error(ErrorKind::Inconsistency,
                "halfplane_conjugate: Re H' = " + format_double(m) + " < 0 on the grid");
  return H;
}

}  // namespace dsf
