#pragma once

// phi_t(z): the semiflow of dw/dt = G(w), either integrated numerically or
// given in closed form.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dsf/generator.hpp"
#include "dsf/ode.hpp"

namespace dsf {

struct FlowConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double max_step = 0.5;
  double boundary_margin = 0.0;  // states with |w| >= 1 - margin are rejected
  double max_time = 1e3;

  void validate() const;
  OdeConfig ode() const;
};

using ClosedFlow = std::function<cplx(cplx z, double t)>;

enum class ModelKind { GeneratorDriven, ClosedForm };

class SemigroupModel {
 public:
  /// Throws NotAGenerator if p fails the positivity check on validation_grid().
  static SemigroupModel generator_driven(std::string id, const BerksonPortaData& bp,
                                         FlowConfig config = {});
  static SemigroupModel generator_driven(std::string id, GeneratorFn G, cplx dw,
                                         FlowConfig config = {});
  static SemigroupModel closed_form(std::string id, ClosedFlow phi, GeneratorFn G, cplx dw,
                                    FlowConfig config = {},
                                    std::optional<BerksonPortaData> bp = std::nullopt);

  /// phi_t(z) for |z| < 1 and 0 <= t <= max_time.
  cplx flow(cplx z, double t) const;
  /// Flow values at ascending times, reusing one integration.
  std::vector<cplx> trajectory(cplx z, std::span<const double> t_grid) const;

  const std::string& id() const { return id_; }
  ModelKind kind() const { return kind_; }
  const GeneratorFn& generator() const { return generator_; }
  cplx dw() const { return dw_; }
  const FlowConfig& config() const { return config_; }
  const std::optional<BerksonPortaData>& berkson_porta() const { return bp_; }
  bool interior_dw() const { return std::abs(dw_) < 1.0; }

  /// Copy with a different integrator configuration.
  SemigroupModel with_config(FlowConfig config) const;

 private:
  SemigroupModel() = default;
  void check_args(cplx z, double t) const;

  std::string id_;
  ModelKind kind_ = ModelKind::GeneratorDriven;
  GeneratorFn generator_;
  ClosedFlow closed_;
  cplx dw_{0.0, 0.0};
  FlowConfig config_;
  std::optional<BerksonPortaData> bp_;
};

/// |phi_{s+t}(z) - phi_t(phi_s(z))|
double semigroup_residual(const SemigroupModel& model, cplx z, double s, double t);
/// |phi_t(phi_s(z)) - phi_s(phi_t(z))|
double commutativity_residual(const SemigroupModel& model, cplx z, double s, double t);
/// |(phi_delta(z) - z)/delta - G(z)|, O(delta) as delta -> 0.
double generator_residual(const SemigroupModel& model, cplx z, double delta);

/// The Denjoy-Wolff point, cross-checked against long-time flow limits:
/// within 0.05 for parabolic models, 1e-6 otherwise. Throws Inconsistency.
cplx dw_point(const SemigroupModel& model);

/// True when the boundary DW point has zero angular multiplier.
bool is_parabolic(const SemigroupModel& model);

}  // namespace dsf
