#pragma once

// Infinitesimal generators in Berkson-Porta form G(z) = (tau - z)(1 - conj(tau) z) p(z).

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dsf/core.hpp"
#include "dsf/herglotz.hpp"
#include "json.hpp"

namespace dsf {

using ComplexFn = std::function<cplx(cplx)>;

/// The holomorphic factor p with Re p >= 0. Either a Riesz-Herglotz sum
/// (positive by construction) or a registered closed form (checked on a
/// validation grid).
class PositivePart {
 public:
  static PositivePart herglotz(RieszHerglotzData data);
  static PositivePart closed_form(std::string name, ComplexFn value, ComplexFn derivative,
                                  nlohmann::json spec);

  cplx operator()(cplx z) const;
  cplx derivative(cplx z) const;

  bool structurally_positive() const { return herglotz_.has_value(); }
  const std::optional<RieszHerglotzData>& herglotz_data() const { return herglotz_; }
  const std::string& name() const { return name_; }
  /// JSON form accepted by positive_part_from_json.
  const nlohmann::json& spec() const { return spec_; }

 private:
  std::string name_;
  std::optional<RieszHerglotzData> herglotz_;
  ComplexFn value_;
  ComplexFn derivative_;
  nlohmann::json spec_;
};

/// Registered closed forms: "one", "one-minus-z", "constant" (needs value),
/// "slit-channel".
PositivePart builtin_positive_part(const std::string& name,
                                   std::optional<cplx> value = std::nullopt);
std::vector<std::string> builtin_positive_part_names();

/// Accepts herglotz JSON or {"builtin": name[, "value": [re, im]]}.
PositivePart positive_part_from_json(const nlohmann::json& j);

struct BerksonPortaData {
  cplx tau;
  PositivePart p;
};

/// Checks |tau| <= 1 + 1e-12 and that G is not identically zero. Positivity of
/// closed-form p is NOT checked here (see validate_positivity).
BerksonPortaData make_berkson_porta(cplx tau, PositivePart p);

BerksonPortaData berkson_porta_from_json(const nlohmann::json& j);
nlohmann::json to_json(const BerksonPortaData& bp);

/// z -> G(z) on the open disk, plus G'(0).
class GeneratorFn {
 public:
  GeneratorFn() = default;
  GeneratorFn(ComplexFn value, std::function<cplx()> origin_derivative);
  static GeneratorFn from(const BerksonPortaData& bp);

  cplx operator()(cplx z) const;
  /// Evaluation without the |z| < 1 check, for callers that already
  /// guarantee the domain (ODE right-hand sides, quadrature nodes).
  cplx eval_unchecked(cplx z) const { return value_(z); }
  cplx derivative_at_origin() const { return origin_derivative_(); }
  explicit operator bool() const { return static_cast<bool>(value_); }

 private:
  ComplexFn value_;
  std::function<cplx()> origin_derivative_;
};

cplx eval_G(const BerksonPortaData& bp, cplx z);

/// 10^4 points on circles of radii 0.1, ..., 0.9, 0.99 (1000 per circle).
std::vector<cplx> validation_grid();

inline constexpr double kPositivityTolerance = 1e-12;

struct Decomposition {
  std::vector<cplx> p;
  double min_re_p = 0.0;
  bool valid_generator = false;
};

/// p = G / ((tau - z)(1 - conj(tau) z)) on the grid. Throws Singular if the
/// factor vanishes at a grid point; an invalid (G, tau) pair is reported via
/// valid_generator = false rather than thrown.
Decomposition decompose(const GeneratorFn& G, cplx tau, std::span<const cplx> grid,
                        double tolerance = kPositivityTolerance);

struct PositivityReport {
  double min_re_p = 0.0;
  bool valid = false;
};

PositivityReport validate_positivity(const BerksonPortaData& bp,
                                     std::span<const cplx> grid);

/// lambda = G'(0) = -p(0); requires tau == 0.
cplx lambda_at_origin(const BerksonPortaData& bp);

/// Multiplier G'(tau) for interior tau: -(1 - |tau|^2) p(tau).
cplx interior_multiplier(const BerksonPortaData& bp);

/// Angular derivative of G at a boundary point tau, estimated along the
/// radius. Its real part is <= 0; it is 0 exactly for parabolic semigroups.
cplx boundary_multiplier(const GeneratorFn& G, cplx tau);

}  // namespace dsf
