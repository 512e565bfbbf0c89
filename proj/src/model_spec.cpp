#include "dsf/model_spec.hpp"

#include <fstream>
#include <sstream>

#include "dsf/gallery.hpp"
#include "dsf/json_io.hpp"

namespace dsf {

namespace {

FlowConfig flow_from_json(const nlohmann::json& j, const std::string& ptr) {
  using namespace json_io;
  require_object(j, ptr);
  FlowConfig c;
  for (const auto& [key, value] : j.items()) {
    const std::string p = child(ptr, key);
    if (key == "rel_tol") c.rel_tol = number(value, p);
    else if (key == "abs_tol") c.abs_tol = number(value, p);
    else if (key == "max_step") c.max_step = number(value, p);
    else if (key == "boundary_margin") c.boundary_margin = number(value, p);
    else if (key == "max_time") c.max_time = number(value, p);
    else fail(p, "unknown flow setting");
  }
  try {
    c.validate();
  } catch (const Error& e) {
    fail(ptr, e.what());
  }
  return c;
}

}  // namespace

ModelSpec model_spec_from_json(const nlohmann::json& j) {
  using namespace json_io;
  require_object(j, "");
  ModelSpec s;
  const bool has_g = j.contains("gallery"), has_p = j.contains("generator");
  if (has_g == has_p) fail("", "exactly one of \"gallery\" and \"generator\" is required");
  for (const auto& [key, value] : j.items())
    if (key != "gallery" && key != "generator" && key != "flow" && key != "closed_form")
      fail(child("", key), "unknown member");
  if (has_g) {
    if (!j["gallery"].is_string()) fail("/gallery", "expected a string");
    const std::string id = j["gallery"].get<std::string>();
    try {
      gallery_model(id);
    } catch (const Error& e) {
      fail("/gallery", e.what());
    }
    s.gallery = id;
    s.id = id;
  } else {
    try {
      s.generator = berkson_porta_from_json(j["generator"]);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Parse) throw;
      const std::string msg = e.what();
      throw Error(ErrorKind::Parse, "/generator" + (msg.starts_with("/: ") ? msg.substr(1) : msg));
    }
    s.id = "generator";
  }
  if (j.contains("closed_form")) {
    if (!j["closed_form"].is_boolean()) fail("/closed_form", "expected a boolean");
    if (!has_g) fail("/closed_form", "only meaningful for gallery models");
    s.closed_form = j["closed_form"].get<bool>();
  }
  if (j.contains("flow")) s.flow = flow_from_json(j["flow"], "/flow");
  return s;
}

nlohmann::json to_json(const ModelSpec& spec) {
  nlohmann::json j;
  if (spec.gallery) {
    j["gallery"] = *spec.gallery;
    if (!spec.closed_form) j["closed_form"] = false;
  } else {
    j["generator"] = to_json(*spec.generator);
  }
  j["flow"] = {{"rel_tol", spec.flow.rel_tol},
               {"abs_tol", spec.flow.abs_tol},
               {"max_step", spec.flow.max_step},
               {"boundary_margin", spec.flow.boundary_margin},
               {"max_time", spec.flow.max_time}};
  return j;
}

ModelSpec load_model_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, path + ": cannot open model spec");
  std::stringstream buf;
  buf << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, path + ": /: invalid JSON (byte " + std::to_string(e.byte) + ")");
  }
  try {
    return model_spec_from_json(j);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Parse) throw;
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
}

FlowConfig scaled(FlowConfig config, double tol_scale) {
  if (!(tol_scale > 0.0)) throw Error(ErrorKind::Domain, "tol-scale must be > 0");
  config.rel_tol *= tol_scale;
  config.abs_tol *= tol_scale;
  return config;
}

SemigroupModel build_model(const ModelSpec& spec, double tol_scale) {
  const FlowConfig cfg = scaled(spec.flow, tol_scale);
  if (spec.gallery) {
    const auto& e = gallery_model(*spec.gallery);
    return spec.closed_form ? e.model(cfg) : e.generator_model(cfg);
  }
  return SemigroupModel::generator_driven("generator", *spec.generator, cfg);
}

}  // namespace dsf
