#pragma once

// Numerical boundary probes: angular limits, dilation coefficients, fixed
// point classification and equicontinuity moduli.

#include <optional>
#include <string>
#include <vector>

#include "dsf/koenigs.hpp"
#include "dsf/semiflow.hpp"
#include "json.hpp"

namespace dsf {

struct StolzAngle {
  cplx sigma;
  double alpha;  // (0, pi/2)

  StolzAngle(cplx sigma, double alpha);
  /// |arg(1 - conj(sigma) z)| < alpha and |1 - conj(sigma) z| < cos(alpha)/2.
  bool contains(cplx z) const;
};

enum class PathKind { Radial, Stolz, Tangential };

/// z(delta) = sigma (1 - delta e^{i theta(delta)}), so |1 - conj(sigma) z| = delta.
struct ApproachPath {
  PathKind kind = PathKind::Radial;
  double alpha = 0.0;  // Stolz: theta = side * alpha
  double q = 2.0;      // tangential: theta = side (pi/2 - delta^{q-1}), q in (1, 2]
  int side = 0;

  static ApproachPath radial();
  static ApproachPath stolz(double alpha, int side);
  static ApproachPath tangential(double q, int side);

  double delta0() const;
  cplx at(cplx sigma, double delta) const;
  std::string name() const;
};

/// Radial plus Stolz rays at pi/8, pi/4, 3pi/8 on both sides.
std::vector<ApproachPath> stolz_paths();
/// Radial, Stolz rays at pi/4 and tangential q = 1.5 on both sides. With
/// q = 2 the path comes within delta^2/2 of the circle and runs out of
/// double precision near delta = 1e-8.
std::vector<ApproachPath> mixed_paths();

struct ProbeSettings {
  int max_depth = 40;  // delta_k = delta0 2^{-k}, k <= max_depth
  int min_depth = 12;  // samples taken before the Cauchy test may stop early
  double tol = 1e-9;
};

struct PathLimit {
  std::string path;
  bool converged = false;
  bool diverges = false;  // |f| > 1e6 over the last three samples
  cplx value;             // last sample
  int samples = 0;
};

/// One path: f(z(delta_k)) until the last three samples agree within tol.
PathLimit path_limit(const std::function<cplx(cplx)>& f, cplx sigma, const ApproachPath& path,
                     const ProbeSettings& settings = {});

struct AngularLimit {
  bool converged = false;  // every path Cauchy and all limits within tol
  cplx value;
  double disagreement = 0.0;  // max pairwise distance of path limits
  std::vector<PathLimit> paths;
};

AngularLimit angular_limit(const SemigroupModel& model, cplx sigma, double t,
                           const ProbeSettings& settings = {});
/// Cheaper radial-only boundary value, used when sweeping grids.
cplx boundary_value(const SemigroupModel& model, cplx sigma, double t,
                    const ProbeSettings& settings = {});

/// Tail minimum of (1 - |phi_t(r_k sigma)|)/(1 - r_k), r_k = 1 - 2^{-k},
/// k = 1..depth (depth <= 40). Infinity when the tail exceeds 1e6.
double dilation(const SemigroupModel& model, cplx sigma, double t, int depth = 30);

enum class PointClass { InteriorDw, BoundaryDw, RepellingRegular, NonRegularFixed, Contact, Generic };
std::string_view to_string(PointClass c);

enum class Verdict { Agrees, Disagrees, Inconclusive };
std::string_view to_string(Verdict v);

struct BoundaryPointReport {
  cplx sigma;
  std::vector<double> times;
  std::vector<AngularLimit> limits;  // per probe time
  std::vector<double> dilations;     // per probe time (inf when not fixed)
  std::vector<PointClass> per_time;
  bool is_contact = false;
  bool is_fixed = false;
  PointClass classification = PointClass::Generic;
  std::optional<Verdict> unrestricted;

  nlohmann::json to_json() const;
};

/// Classification at t in {0.5, 1, 2}. Throws TheoremD if fixed-point or
/// regularity status differs between probe times.
BoundaryPointReport classify_point(const SemigroupModel& model, cplx sigma,
                                   const ProbeSettings& settings = {});
inline PointClass classify(const SemigroupModel& model, cplx sigma) {
  return classify_point(model, sigma).classification;
}

struct UnrestrictedResult {
  Verdict verdict = Verdict::Inconclusive;
  bool infinite = false;  // agreement on the limit infinity
  cplx limit;
  std::vector<PathLimit> paths;
};

UnrestrictedResult unrestricted_probe(const std::function<cplx(cplx)>& f, cplx sigma,
                                      const std::vector<ApproachPath>& paths, double tol,
                                      int depth = 27);

struct KoenigsSignature {
  bool re_to_minus_infinity = false;
  double re_last = 0.0;  // Re h at the last grid radius
  std::optional<double> im_radial_limit;
  double im_tangential_spread = 0.0;
};

/// Geometric radii 1 - 2^{-k}, k = 1..24.
std::vector<double> default_r_grid();

KoenigsSignature koenigs_signature(const std::function<cplx(cplx)>& h, cplx sigma,
                                   const std::vector<double>& r_grid = default_r_grid());

struct ModulusEntry {
  double delta;
  double modulus;
};

/// sup over t in [0, T] (21 samples) and sampled z with |z - sigma| <= delta
/// of |phi_t(z) - phi_t(sigma)|. Nondecreasing in delta by nesting.
std::vector<ModulusEntry> equicontinuity_modulus(const SemigroupModel& model, cplx sigma, double T,
                                                 const std::vector<double>& delta_grid);

/// |phi_{t_n}(z_n) - tau| for z_n = h^{-1}(-n + i), t_n = n.
std::vector<double> witness_distances(const SemigroupModel& model,
                                      const std::function<cplx(cplx)>& h_inverse,
                                      const std::vector<int>& ns);

struct TimeModulus {
  double width;
  double modulus;
};

/// For each width w, sup over z_grid and t in t_grid (t + w <= max t_grid)
/// of |phi_{t+w}(z) - phi_t(z)|, then made cumulative in w. Points on the
/// circle use boundary_value.
std::vector<TimeModulus> time_equicontinuity(const SemigroupModel& model,
                                             const std::vector<cplx>& z_grid,
                                             const std::vector<double>& t_grid,
                                             const std::vector<double>& widths);

enum class LongTime { Fixed, ConvergesToDw, Undecided };
std::string_view to_string(LongTime v);

struct LongTimeResult {
  LongTime verdict = LongTime::Undecided;
  double distance = 0.0;  // to the DW point at the deciding (or final) time
  double time = 0.0;
};

/// Boundary value source for long_time_boundary; defaults to angular_limit.
using BoundaryTrack = std::function<cplx(double t)>;

LongTimeResult long_time_boundary(const SemigroupModel& model, cplx sigma, double T,
                                  const ProbeSettings& settings = {});
/// Same decision rule on a caller-supplied boundary trajectory t -> phi_t(sigma).
LongTimeResult long_time_boundary(const BoundaryTrack& track, cplx sigma, cplx dw, double T,
                                  double tol = 1e-6);

}  // namespace dsf
