#include "dsf/gallery.hpp"

#include <limits>
#include <map>

#include "dsf/json_io.hpp"

namespace dsf {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

BerksonPortaData bp_builtin(cplx tau, const std::string& name, std::optional<cplx> v = {}) {
  return make_berkson_porta(tau, builtin_positive_part(name, v));
}

std::map<std::string, GalleryEntry> build() {
  std::map<std::string, GalleryEntry> g;
  auto add = [&g](GalleryEntry e) { g.emplace(e.id, std::move(e)); };
  auto constant = [](double v) { return [v](double) { return v; }; };

  add({"dilation", ModelType::EllipticInterior, 0.0, "the unit disk",
       bp_builtin(0.0, "one"),
       [](cplx z, double t) { return std::exp(-t) * z; },
       [](cplx z) { return z; }, [](cplx w) { return w; }, cplx{-1.0, 0.0}, {}});

  const cplx spiral_lambda{-1.0, 1.0};
  add({"spiral", ModelType::EllipticInterior, 0.0, "the unit disk",
       bp_builtin(0.0, "constant", cplx{1.0, -1.0}),
       [spiral_lambda](cplx z, double t) { return std::exp(spiral_lambda * t) * z; },
       [](cplx z) { return z; }, [](cplx w) { return w; }, spiral_lambda, {}});

  add({"mobius-schroeder", ModelType::EllipticInterior, 0.0,
       "the half-plane Re w > -1/2",
       bp_builtin(0.0, "one-minus-z"),
       [](cplx z, double t) {
         const double e = std::exp(-t);
         return e * z / (1.0 - z + e * z);
       },
       [](cplx z) { return z / (1.0 - z); }, [](cplx w) { return w / (1.0 + w); },
       cplx{-1.0, 0.0},
       {{1.0, "repelling", [](double t) { return std::exp(t); }, "exp(t)"}}});

  add({"strip", ModelType::Hyperbolic, 1.0, "the horizontal strip |Im w| < 1/2",
       make_berkson_porta(1.0, PositivePart::herglotz(RieszHerglotzData(0.0, {{1.0, pi / 2}}))),
       [](cplx z, double t) {
         const double e = std::exp(-pi * t);
         return ((1.0 + z) - e * (1.0 - z)) / ((1.0 + z) + e * (1.0 - z));
       },
       [](cplx z) { return std::log((1.0 + z) / (1.0 - z)) / pi; },
       [](cplx w) { return std::tanh(pi * w / 2.0); }, std::nullopt,
       {{1.0, "dw", [](double t) { return std::exp(-pi * t); }, "exp(-pi t)"},
        {-1.0, "repelling", [](double t) { return std::exp(pi * t); }, "exp(pi t)"}}});

  add({"parabolic", ModelType::Parabolic, 1.0, "the half-plane Im w > 0",
       make_berkson_porta(1.0, PositivePart::herglotz(RieszHerglotzData(-0.5, {}))),
       [](cplx z, double t) { return 1.0 - (1.0 - z) / (1.0 - I * t * (1.0 - z) / 2.0); },
       [](cplx z) { return I * (1.0 + z) / (1.0 - z); },
       [](cplx w) { return (w - I) / (w + I); }, std::nullopt,
       {{1.0, "dw", constant(1.0), "1"}}});

  add({"slit-channel", ModelType::Parabolic, 1.0,
       "the half-plane Im w > 0 minus the slit {x + i pi : x <= -1}",
       bp_builtin(1.0, "slit-channel"), channel_semigroup,
       [](cplx z) { return slit_map_forward(cayley(z)); },
       [](cplx w) { return cayley_inverse(slit_map_inverse(w)); }, std::nullopt,
       {{1.0, "dw", constant(1.0), "1"},
        {-1.0, "repelling", [](double t) { return std::exp(t); }, "exp(t)"}}});
  return g;
}

const std::map<std::string, GalleryEntry>& registry() {
  static const std::map<std::string, GalleryEntry> g = build();
  return g;
}

}  // namespace

std::string_view to_string(ModelType type) {
  switch (type) {
    case ModelType::EllipticInterior: return "elliptic-interior";
    case ModelType::Hyperbolic: return "hyperbolic";
    case ModelType::Parabolic: return "parabolic";
  }
  return "?";
}

SemigroupModel GalleryEntry::model(FlowConfig config) const {
  return SemigroupModel::closed_form(id, phi, generator(), dw, config, bp);
}

SemigroupModel GalleryEntry::generator_model(FlowConfig config) const {
  return SemigroupModel::generator_driven(id, bp, config);
}

KoenigsFunction GalleryEntry::koenigs() const {
  const KoenigsCase kind =
      std::abs(dw) < 1.0 ? KoenigsCase::Interior : KoenigsCase::Boundary;
  return KoenigsFunction::closed_form(kind, generator(), dw, h, lambda);
}

nlohmann::json GalleryEntry::describe() const {
  nlohmann::json fps = nlohmann::json::array();
  for (const auto& fp : fixed_points)
    fps.push_back({{"sigma", json_io::to_pair(fp.sigma)},
                   {"role", fp.role},
                   {"dilation", fp.dilation_formula}});
  nlohmann::json j = {{"id", id},
                      {"type", std::string(to_string(type))},
                      {"dw", json_io::to_pair(dw)},
                      {"omega", omega},
                      {"generator", to_json(bp)},
                      {"koenigs_case", std::abs(dw) < 1.0 ? "interior" : "boundary"},
                      {"fixed_points", fps}};
  if (lambda) j["lambda"] = json_io::to_pair(*lambda);
  return j;
}

std::vector<std::string> gallery_ids() {
  return {"dilation", "spiral", "mobius-schroeder", "strip", "parabolic", "slit-channel"};
}

const GalleryEntry& gallery_model(const std::string& id) {
  const auto& g = registry();
  auto it = g.find(id);
  if (it == g.end()) throw Error(ErrorKind::Lookup, "unknown gallery model '" + id + "'");
  return it->second;
}

cplx slit_map_forward(cplx zeta) {
  if (!(zeta.imag() > 0.0))
    throw Error(ErrorKind::Domain, "slit_map_forward: Im zeta must be > 0");
  return zeta + std::log(zeta);
}

bool on_slit(cplx w) { return w.imag() == pi && w.real() <= -1.0; }

bool in_slit_domain(cplx w) { return w.imag() > 0.0 && !on_slit(w); }

namespace {

// Newton for zeta + log zeta = w inside the upper half-plane. Returns false
// if the iteration could not stay in the half-plane.
bool newton(cplx w, cplx& zeta) {
  for (int it = 0; it < 100; ++it) {
    const cplx r = zeta + std::log(zeta) - w;
    if (std::abs(r) <= 4.0 * eps * (1.0 + std::abs(w))) return true;
    cplx step = r / (1.0 + 1.0 / zeta);
    if (std::abs(step) <= 2.0 * eps * std::abs(zeta)) return true;
    int damp = 0;
    while (!((zeta - step).imag() > 0.0)) {
      step *= 0.5;
      if (++damp > 60) return false;
    }
    zeta -= step;
  }
  throw Error(ErrorKind::InversionFailure, "slit_map_inverse: Newton stagnated after 100 iterations");
}

double slit_edge_root(double x, bool lower) {
  // -r + ln r = x on (0, 1] (lower) or [1, inf) (upper); the left side is
  // increasing on the first interval and decreasing on the second.
  double lo = lower ? std::exp(x - 1.0) : 1.0;
  double hi = lower ? 1.0 : 2.0 * (1.0 - x);
  auto g = [x](double r) { return -r + std::log(r) - x; };
  for (int i = 0; i < 200 && hi - lo > 1e-17 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if ((g(mid) < 0.0) == lower) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

cplx slit_map_inverse(cplx w, SlitSide side) {
  if (!(w.imag() > 0.0))
    throw Error(ErrorKind::Domain, "slit_map_inverse: Im w must be > 0");
  if (on_slit(w)) {
    if (side == SlitSide::None)
      throw Error(ErrorKind::Ambiguity,
                  "slit_map_inverse: w lies on the slit; pass a side (lower or upper)");
    return {-slit_edge_root(w.real(), side == SlitSide::Lower), 0.0};
  }
  // f is univalent on the half-plane, so any Newton root there is the inverse.
  constexpr double far = 20.0;
  if (std::abs(w) > 10.0) {
    cplx zeta = w - std::log(w);
    if (!(zeta.imag() > 0.0)) zeta = w;
    try {
      if (newton(w, zeta)) return zeta;
    } catch (const Error&) {
      // fall through to continuation
    }
    if (w.real() >= far)
      throw Error(ErrorKind::InversionFailure, "slit_map_inverse: Newton left the half-plane");
  }
  if (w.real() < -1e4)
    throw Error(ErrorKind::InversionFailure, "slit_map_inverse: preimage below double range");
  // March left along Im = Im w from the anchor; this line never meets the slit.
  cplx cur{far, w.imag()};
  cplx zeta = cur - std::log(cur);
  if (!newton(cur, zeta))
    throw Error(ErrorKind::InversionFailure, "slit_map_inverse: anchor inversion failed");
  double step = 0.5;
  while (cur.real() > w.real()) {
    const double dx = std::min(step, cur.real() - w.real());
    const cplx next = cur.real() - dx <= w.real() ? w : cplx{cur.real() - dx, w.imag()};
    cplx trial = zeta + (next - cur) * zeta / (zeta + 1.0);
    if (!(trial.imag() > 0.0)) trial = {trial.real(), 0.5 * zeta.imag()};
    if (newton(next, trial) && std::abs(trial - zeta) <= 2.0 * std::abs(zeta) + 1.0) {
      zeta = trial;
      cur = next;
      step = std::min(0.5, 2.0 * step);
    } else {
      step *= 0.5;
      if (step < 1e-12)
        throw Error(ErrorKind::InversionFailure, "slit_map_inverse: continuation stalled");
    }
  }
  return zeta;
}

cplx cayley(cplx z) { return I * (1.0 + z) / (1.0 - z); }
cplx cayley_inverse(cplx zeta) { return (zeta - I) / (zeta + I); }

cplx channel_semigroup(cplx z, double t) {
  require_in_disk(z, "channel_semigroup");
  if (!(t >= 0.0)) throw Error(ErrorKind::Domain, "channel_semigroup: t must be >= 0");
  if (t == 0.0) return z;
  return cayley_inverse(slit_map_inverse(slit_map_forward(cayley(z)) + t));
}

}  // namespace dsf
