#pragma once

// The audit suite: randomized and grid checks of every model invariant,
// collected into a deterministic report.

#include <cstdint>
#include <string>
#include <vector>

#include "dsf/boundary.hpp"
#include "dsf/gallery.hpp"
#include "dsf/lifting.hpp"
#include "dsf/model_spec.hpp"
#include "dsf/rng.hpp"
#include "json.hpp"

namespace dsf {

// Measurements shared by the audit and the acceptance suite. Each returns
// the worst value over its sample set.
namespace measure {

double semigroup_law(const SemigroupModel& m, Rng& rng, int n, double r_max = 0.95,
                     double t_max = 2.0);
double commutativity(const SemigroupModel& m, Rng& rng, int n);
/// max |ratio - 10| of generator_residual between delta = 1e-2, 1e-3, 1e-4,
/// over n points with |G' G| >= 0.2 (smaller values make the first-order
/// term vanish and the ratio meaningless).
double generator_ratio_deviation(const SemigroupModel& m, Rng& rng, int n);
/// sup over a fixed grid of |phi_delta(z) - z| for each delta.
std::vector<double> continuity_at_zero(const SemigroupModel& m, const std::vector<double>& deltas);
/// max of |phi_t(z)| - (|z| + m)/(1 + m|z|), m = |phi_t(0)|.
double schwarz_pick_excess(const SemigroupModel& m, Rng& rng, int n);
/// Abel or Schroeder residual, whichever matches h.
double functional_equation(const KoenigsFunction& h, const SemigroupModel& m, Rng& rng, int n,
                           double r_max = 0.9, double t_max = 2.0);
/// min |h(z1) - h(z2)| over random pairs with |z1 - z2| > 1e-3.
double injectivity_margin(const std::function<cplx(cplx)>& h, Rng& rng, int pairs,
                          double r_max = 0.9);
/// max |h_64(z) - h_32(z)| with fixed panel counts on a grid.
double panel_halving(const KoenigsFunction& h);
double flow_cross(const SemigroupModel& a, const SemigroupModel& b, Rng& rng, int n);
double generator_from_flow(const SemigroupModel& m, Rng& rng, int n, double delta, double r_max);

cplx random_halfplane(Rng& rng);
double lifting_conjugation(const LiftedModel& lm, Rng& rng, int n);
double lifting_abel(const LiftedModel& lm, Rng& rng, int n);
double lifting_uniqueness(const LiftedModel& lm, Rng& rng, int n);
double lifted_generator_min_re(const BerksonPortaData& bp);
double lifted_koenigs_derivative(const LiftedModel& lm, Rng& rng, int n);

struct AngularSweep {
  double sup_disagreement = 0.0;
  int unconverged = 0;
};
/// n_sigma points on the circle, t in {0, 0.25, ..., 2}.
AngularSweep angular_uniformity(const SemigroupModel& m, int n_sigma = 32);

/// 900 interior points (30 radii up to 0.999, 30 angles) and 100 points on the circle.
std::vector<cplx> closed_disk_grid();
/// widths {0, 1e-3, 1e-2, 1e-1} over t in {0, 0.1, ..., 2}.
std::vector<TimeModulus> time_modulus(const SemigroupModel& m);

double slit_roundtrip(Rng& rng, int n);

double nevanlinna_fd_error(Rng& rng, int n);
std::size_t nevanlinna_bound_violations(Rng& rng, int n);

}  // namespace measure

struct AuditOptions {
  std::uint64_t seed = 42;
  double tol_scale = 1.0;
  unsigned threads = 0;  // 0: DISK_SEMIFLOW_THREADS or hardware concurrency
};

struct CheckRecord {
  std::string id;
  std::string anchor;  // the result the check exercises
  std::string model;
  nlohmann::json parameters = nlohmann::json::object();
  double measured = 0.0;
  double threshold = 0.0;
  std::string relation = "<=";
  bool pass = false;
  std::string error;

  nlohmann::json to_json() const;
};

struct AuditReport {
  std::uint64_t seed = 0;
  std::string target;
  std::vector<CheckRecord> records;  // sorted by id

  bool passed() const;
  nlohmann::json to_json() const;
  std::string to_csv() const;
};

/// target: "all" or "gallery:<id>".
AuditReport run_audit(const std::string& target, const AuditOptions& options = {});
AuditReport run_audit(const ModelSpec& spec, const AuditOptions& options = {});

unsigned worker_count(unsigned requested);

}  // namespace dsf
