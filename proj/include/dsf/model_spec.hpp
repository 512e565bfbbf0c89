#pragma once

// Model specs: {"gallery": id} or {"generator": {"tau": [re, im], "p": ...}},
// optionally with "flow": {rel_tol, abs_tol, max_step, boundary_margin,
// max_time} and, for gallery models, "closed_form": false to integrate G.

#include <optional>
#include <string>

#include "dsf/generator.hpp"
#include "dsf/semiflow.hpp"
#include "json.hpp"

namespace dsf {

struct ModelSpec {
  std::optional<std::string> gallery;
  std::optional<BerksonPortaData> generator;
  bool closed_form = true;
  FlowConfig flow;
  std::string id;  // gallery id or "generator"
};

/// Parse errors carry a JSON pointer, e.g. "/generator/p/atoms/0/mass: ...".
ModelSpec model_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ModelSpec& spec);
/// Reads and parses a file; I/O failures are Io errors naming the path.
ModelSpec load_model_spec(const std::string& path);

/// Scales the integrator tolerances.
FlowConfig scaled(FlowConfig config, double tol_scale);

/// Closed-form gallery model, or a generator-driven one (throws
/// NotAGenerator when Re p < 0 on the validation grid).
SemigroupModel build_model(const ModelSpec& spec, double tol_scale = 1.0);

}  // namespace dsf
