#pragma once

// Reference models with closed-form flows, Koenigs functions and known
// boundary fixed points.

#include <optional>
#include <string>
#include <vector>

#include "dsf/koenigs.hpp"
#include "dsf/semiflow.hpp"
#include "json.hpp"

namespace dsf {

enum class ModelType { EllipticInterior, Hyperbolic, Parabolic };
std::string_view to_string(ModelType type);

struct KnownFixedPoint {
  cplx sigma;
  std::string role;                        // "dw" or "repelling"
  std::function<double(double)> dilation;  // t -> angular derivative
  std::string dilation_formula;
};

struct GalleryEntry {
  std::string id;
  ModelType type;
  cplx dw;
  std::string omega;  // description of h(D)
  BerksonPortaData bp;
  ClosedFlow phi;
  std::function<cplx(cplx)> h;
  std::function<cplx(cplx)> h_inverse;
  std::optional<cplx> lambda;  // interior case
  std::vector<KnownFixedPoint> fixed_points;

  GeneratorFn generator() const { return GeneratorFn::from(bp); }
  /// Flow from the closed form.
  SemigroupModel model(FlowConfig config = {}) const;
  /// Flow from integrating G.
  SemigroupModel generator_model(FlowConfig config = {}) const;
  KoenigsFunction koenigs() const;
  nlohmann::json describe() const;
};

std::vector<std::string> gallery_ids();
/// Throws Lookup for an unknown id.
const GalleryEntry& gallery_model(const std::string& id);

// Slit channel: f(zeta) = zeta + log zeta maps the upper half-plane onto
// {Im w > 0} minus the slit {x + i pi : x <= -1}.

enum class SlitSide { None, Lower, Upper };

cplx slit_map_forward(cplx zeta);
bool in_slit_domain(cplx w);
bool on_slit(cplx w);
/// Newton inversion continued along the horizontal line from a far-right
/// anchor. Points on the slit need a side: Lower gives zeta = -r with r < 1,
/// Upper gives r > 1.
cplx slit_map_inverse(cplx w, SlitSide side = SlitSide::None);

/// C(z) = i(1+z)/(1-z) and its inverse.
cplx cayley(cplx z);
cplx cayley_inverse(cplx zeta);

/// C^{-1}(f^{-1}(f(C(z)) + t)).
cplx channel_semigroup(cplx z, double t);

}  // namespace dsf
