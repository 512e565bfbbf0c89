#pragma once

// Small helpers for reading model-spec JSON with JSON-pointer error paths.

#include <string>

#include "dsf/core.hpp"
#include "json.hpp"

namespace dsf::json_io {

using nlohmann::json;

[[noreturn]] inline void fail(const std::string& pointer, const std::string& msg) {
  throw Error(ErrorKind::Parse, (pointer.empty() ? std::string("/") : pointer) + ": " + msg);
}

inline std::string child(const std::string& pointer, const std::string& key) {
  std::string escaped;
  for (char c : key) {
    if (c == '~') escaped += "~0";
    else if (c == '/') escaped += "~1";
    else escaped += c;
  }
  return pointer + "/" + escaped;
}

inline std::string child(const std::string& pointer, std::size_t index) {
  return pointer + "/" + std::to_string(index);
}

inline const json& require_object(const json& j, const std::string& pointer) {
  if (!j.is_object()) fail(pointer, "expected an object");
  return j;
}

inline const json& member(const json& j, const std::string& key, const std::string& pointer) {
  require_object(j, pointer);
  auto it = j.find(key);
  if (it == j.end()) fail(child(pointer, key), "missing required member");
  return *it;
}

inline double number(const json& j, const std::string& pointer) {
  if (!j.is_number()) fail(pointer, "expected a number");
  return j.get<double>();
}

inline cplx pair(const json& j, const std::string& pointer) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail(pointer, "expected a [re, im] pair of numbers");
  return {j[0].get<double>(), j[1].get<double>()};
}

inline json to_pair(cplx z) { return json::array({z.real(), z.imag()}); }

}  // namespace dsf::json_io
