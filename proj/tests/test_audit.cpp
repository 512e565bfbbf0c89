#include "doctest.h"
#include "dsf/audit.hpp"
#include "dsf/model_spec.hpp"
#include "dsf/rng.hpp"

using namespace dsf;
using nlohmann::json;

namespace {

std::string parse_error(const std::string& text) {
  try {
    model_spec_from_json(json::parse(text));
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("model specs") {
  const auto g = model_spec_from_json(json::parse(R"({"gallery": "strip", "flow": {"rel_tol": 1e-9}})"));
  CHECK(g.gallery == "strip");
  CHECK(g.flow.rel_tol == 1e-9);
  const auto s = model_spec_from_json(json::parse(R"({"generator": {"tau": [0, 0], "p": {"builtin": "one"}}})"));
  CHECK(s.generator.has_value());
  CHECK(std::abs(build_model(s).flow(0.5, std::log(2.0)) - 0.25) < 1e-10);
  CHECK(model_spec_from_json(to_json(g)).gallery == "strip");
}

TEST_CASE("spec errors carry JSON pointers") {
  CHECK(parse_error(R"({})").starts_with("/"));
  CHECK(parse_error(R"({"gallery": "strip", "generator": {}})") != "");
  CHECK(parse_error(R"({"generator": {"tau": [0, 0], "p": {"c": 0, "atoms": [{"u_angle": 0, "mass": "x"}]}}})")
            .starts_with("/generator/p/atoms/0/mass"));
  CHECK(parse_error(R"({"gallery": "strip", "flow": {"rel_tol": "a"}})").starts_with("/flow/rel_tol"));
  CHECK(parse_error(R"({"gallery": "strip", "extra": 1})") != "");
  CHECK_THROWS_AS(load_model_spec("/nonexistent/spec.json"), Error);
}

TEST_CASE("substreams are independent of scheduling") {
  Rng a(42, "strip/semigroup-law"), b(42, "strip/semigroup-law"), c(42, "strip/commutativity");
  const double x = a.uniform();
  CHECK(x == b.uniform());
  CHECK(x != c.uniform());
  Rng d(1);
  for (int k = 0; k < 1000; ++k) CHECK(std::abs(d.disk(0.5)) <= 0.5);
}

TEST_CASE("audit of one gallery model") {
  AuditOptions o;
  o.threads = 2;
  const auto r = run_audit("gallery:dilation", o);
  CHECK(r.passed());
  CHECK(r.to_json()["summary"] == "pass");
  CHECK(std::is_sorted(r.records.begin(), r.records.end(),
                       [](const CheckRecord& x, const CheckRecord& y) { return x.id < y.id; }));
  o.threads = 1;
  CHECK(run_audit("gallery:dilation", o).to_json().dump() == r.to_json().dump());
}

TEST_CASE("audit of an invalid generator") {
  const auto spec = model_spec_from_json(
      json::parse(R"({"generator": {"tau": [0, 0], "p": {"builtin": "constant", "value": [-1, 0]}}})"));
  const auto r = run_audit(spec, {});
  REQUIRE(r.records.size() == 1);
  CHECK(r.records[0].id == "generator/berkson-porta-positivity");
  CHECK_FALSE(r.records[0].pass);
  CHECK(r.to_json()["summary"] == "fail");
}

TEST_CASE("audit of a valid generator spec") {
  const auto spec = model_spec_from_json(json::parse(R"({"generator": {"tau": [0, 0], "p": {"builtin": "one-minus-z"}}})"));
  const auto r = run_audit(spec, {});
  CHECK(r.passed());
  CHECK(r.records.size() > 10);
}

TEST_CASE("unknown audit targets") {
  CHECK_THROWS_AS(run_audit("gallery:nope", {}), Error);
  CHECK_THROWS_AS(run_audit("everything", {}), Error);
}

}
