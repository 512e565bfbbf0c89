#include "dsf/semiflow.hpp"

#include <algorithm>

namespace dsf {

void FlowConfig::validate() const {
  if (!(rel_tol > 0.0 && abs_tol > 0.0 && max_step > 0.0 && max_time > 0.0))
    throw Error(ErrorKind::Domain, "flow config: tolerances, max_step and max_time must be > 0");
  if (!(boundary_margin >= 0.0 && boundary_margin <= 1e-6))
    throw Error(ErrorKind::Domain, "flow config: boundary_margin must lie in [0, 1e-6]");
}

OdeConfig FlowConfig::ode() const {
  OdeConfig c;
  c.rel_tol = rel_tol;
  c.abs_tol = abs_tol;
  c.max_step = max_step;
  return c;
}

SemigroupModel SemigroupModel::generator_driven(std::string id, const BerksonPortaData& bp,
                                                FlowConfig config) {
  const auto report = validate_positivity(bp, validation_grid());
  if (!report.valid)
    throw Error(ErrorKind::NotAGenerator,
                "generator: min Re p = " + format_double(report.min_re_p) + " < 0");
  SemigroupModel m = generator_driven(std::move(id), GeneratorFn::from(bp), bp.tau, config);
  m.bp_ = bp;
  return m;
}

SemigroupModel SemigroupModel::generator_driven(std::string id, GeneratorFn G, cplx dw,
                                                FlowConfig config) {
  config.validate();
  SemigroupModel m;
  m.id_ = std::move(id);
  m.kind_ = ModelKind::GeneratorDriven;
  m.generator_ = std::move(G);
  m.dw_ = dw;
  m.config_ = config;
  return m;
}

SemigroupModel SemigroupModel::closed_form(std::string id, ClosedFlow phi, GeneratorFn G, cplx dw,
                                           FlowConfig config,
                                           std::optional<BerksonPortaData> bp) {
  config.validate();
  SemigroupModel m;
  m.id_ = std::move(id);
  m.kind_ = ModelKind::ClosedForm;
  m.closed_ = std::move(phi);
  m.generator_ = std::move(G);
  m.dw_ = dw;
  m.config_ = config;
  m.bp_ = std::move(bp);
  return m;
}

SemigroupModel SemigroupModel::with_config(FlowConfig config) const {
  config.validate();
  SemigroupModel m = *this;
  m.config_ = config;
  return m;
}

void SemigroupModel::check_args(cplx z, double t) const {
  require_in_disk(z, "flow");
  if (!(t >= 0.0)) throw Error(ErrorKind::Domain, "flow: t must be >= 0");
  if (t > config_.max_time) throw Error(ErrorKind::Domain, "flow: t exceeds max_time");
}

cplx SemigroupModel::flow(cplx z, double t) const {
  check_args(z, t);
  if (t == 0.0) return z;
  if (kind_ == ModelKind::ClosedForm) return closed_(z, t);
  const double times[] = {t};
  return trajectory(z, times).front();
}

std::vector<cplx> SemigroupModel::trajectory(cplx z, std::span<const double> t_grid) const {
  for (double t : t_grid) check_args(z, t);
  if (!std::is_sorted(t_grid.begin(), t_grid.end()))
    throw Error(ErrorKind::Domain, "trajectory: t_grid must be increasing");
  if (kind_ == ModelKind::ClosedForm) {
    std::vector<cplx> out;
    out.reserve(t_grid.size());
    for (double t : t_grid) out.push_back(t == 0.0 ? z : closed_(z, t));
    return out;
  }
  const double radius = 1.0 - config_.boundary_margin;
  const GeneratorFn& G = generator_;
  return integrate([&G](cplx w) { return G.eval_unchecked(w); }, z, t_grid, config_.ode(),
                   [radius](cplx w) { return std::abs(w) < radius; });
}

double semigroup_residual(const SemigroupModel& model, cplx z, double s, double t) {
  return std::abs(model.flow(z, s + t) - model.flow(model.flow(z, s), t));
}

double commutativity_residual(const SemigroupModel& model, cplx z, double s, double t) {
  return std::abs(model.flow(model.flow(z, s), t) - model.flow(model.flow(z, t), s));
}

double generator_residual(const SemigroupModel& model, cplx z, double delta) {
  if (!(delta > 0.0)) throw Error(ErrorKind::Domain, "generator_residual: delta must be > 0");
  return std::abs((model.flow(z, delta) - z) / delta - model.generator()(z));
}

bool is_parabolic(const SemigroupModel& model) {
  if (model.interior_dw()) return false;
  return std::abs(boundary_multiplier(model.generator(), model.dw()).real()) < 1e-6;
}

cplx dw_point(const SemigroupModel& model) {
  const cplx tau = model.dw();
  const double tol = is_parabolic(model) ? 0.05 : 1e-6;
  const double T = model.config().max_time;
  for (cplx start : {cplx{0.0, 0.0}, cplx{0.5, 0.0}}) {
    if (start == tau) continue;
    const double d = std::abs(model.flow(start, T) - tau);
    if (!(d <= tol))
      throw Error(ErrorKind::Inconsistency,
                  "dw_point: flow from " + format_double(start.real()) + " ends " +
                      format_double(d) + " away from tau");
  }
  return tau;
}

}  // namespace dsf
