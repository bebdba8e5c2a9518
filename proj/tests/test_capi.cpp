// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <fstream>
#include <string>

#include <json.hpp>

#include "mdsmom.h"

using json = nlohmann::ordered_json;

namespace {

struct Ctx {
  mdsmom_ctx* c = mdsmom_ctx_new();
  ~Ctx() { mdsmom_ctx_free(c); }
};

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  mdsmom_string_free(s);
  return out;
}

// minimal structural validator for the subset of JSON Schema the repo ships
bool validates_type(const std::string& t, const json& v) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "number") return v.is_number();
  if (t == "integer") return v.is_number_integer();
  if (t == "boolean") return v.is_boolean();
  return false;
}

bool validates_in(const json& root, const json& schema_in, const json& value) {
  json schema = schema_in;
  if (schema.contains("$ref")) {
    // local refs of the form #/definitions/name
    const std::string ref = schema["$ref"].get<std::string>();
    const auto pos = ref.rfind('/');
    schema = root["definitions"][ref.substr(pos + 1)];
  }
  if (schema.contains("type") && !validates_type(schema["type"].get<std::string>(), value))
    return false;
  if (schema.contains("required"))
    for (const auto& k : schema["required"])
      if (!value.contains(k.get<std::string>())) return false;
  if (schema.contains("properties") && value.is_object())
    for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it)
      if (value.contains(it.key()) && !validates_in(root, it.value(), value[it.key()]))
        return false;
  if (schema.contains("items") && value.is_array())
    for (const auto& item : value)
      if (!validates_in(root, schema["items"], item)) return false;
  return true;
}

json load_schema(const char* name) {
  // tests run from the build tree; the schema lives in the source tree
  for (const char* prefix : {"../schema/", "../../schema/", "schema/", "../../../schema/"}) {
    std::ifstream f(std::string(prefix) + name);
    if (f) return json::parse(f);
  }
  FAIL("schema file not found: ", name);
  return {};
}

}  // namespace

TEST_CASE("context lifecycle and error reporting") {
  Ctx ctx;
  REQUIRE(ctx.c != nullptr);
  double re = 0, im = 0;
  CHECK(mdsmom_eval_zeta(ctx.c, 2.0, 0.0, &re, &im) == MDSMOM_OK);
  CHECK(re == doctest::Approx(M_PI * M_PI / 6).epsilon(1e-12));
  // pole signals a domain error with a message
  CHECK(mdsmom_eval_zeta(ctx.c, 1.0, 0.0, &re, &im) == MDSMOM_ERR_DOMAIN);
  CHECK(std::strlen(mdsmom_ctx_last_error(ctx.c)) > 0);
  // invalid discriminant parameter
  CHECK(mdsmom_eval_L(ctx.c, 12, 0.5, 0.0, 1, &re, &im) == MDSMOM_ERR_INVALID);
}

TEST_CASE("L evaluation through the C surface") {
  Ctx ctx;
  double re = 0, im = 0;
  REQUIRE(mdsmom_eval_L(ctx.c, 5, 0.5, 0.0, 1, &re, &im) == MDSMOM_OK);
  CHECK(re == doctest::Approx(0.2317509475040230).epsilon(1e-10));
  CHECK(std::abs(im) < 1e-12);
  int k = 0;
  CHECK(mdsmom_kronecker(ctx.c, 12, 5, &k) == MDSMOM_OK);
  CHECK(k == -1);
}

TEST_CASE("constants JSON") {
  Ctx ctx;
  const auto g4 = json::parse(take(mdsmom_constants_json(ctx.c, "g", 4, 0, 0)));
  CHECK(g4["value"] == "24024");
  const auto aq = json::parse(take(mdsmom_constants_json(ctx.c, "a_quad", 3, 0, 100000)));
  CHECK(aq["value"].is_number());
  CHECK(aq["tail_bound"].is_number());
  CHECK(aq["P"] == 100000);
  CHECK(mdsmom_constants_json(ctx.c, "bogus", 1, 0, 1000) == nullptr);
  CHECK(std::string(mdsmom_ctx_last_error(ctx.c)).find("bogus") != std::string::npos);
}

TEST_CASE("group JSON lists integer hyperplanes") {
  Ctx ctx;
  const auto j = json::parse(take(mdsmom_group_json(ctx.c, "quad", 3)));
  CHECK(j["group_order"] == 8);
  REQUIRE(j["polar_hyperplanes"].is_array());
  CHECK(j["polar_hyperplanes"].size() == 8);
  for (const auto& row : j["polar_hyperplanes"]) {
    CHECK(row["normal"].is_array());
    for (const auto& c : row["normal"]) {
      const std::string s = c.get<std::string>();
      CHECK(s.find('/') == std::string::npos);  // integer tuples
    }
  }
  const auto z = json::parse(take(mdsmom_group_json(ctx.c, "zeta", 2)));
  CHECK(z["group_order"] == 16);
  CHECK(z["stabilizer_order"] == 8);
  CHECK(z["polar_hyperplanes"].size() == 6);
}

TEST_CASE("residue JSON") {
  Ctx ctx;
  const auto j = json::parse(take(mdsmom_residue_json(ctx.c, "quad", 3)));
  CHECK(j["kappa"] == "2");
  CHECK(j["pass"] == true);
}

TEST_CASE("verify suites emit the documented shape and validate") {
  Ctx ctx;
  const json schema = load_schema("cli_output.schema.json");
  for (const char* suite : {"gfactors", "kappa", "setid", "d12", "exponents"}) {
    const auto j = json::parse(take(mdsmom_verify_json(ctx.c, suite, 1234, 1)));
    CHECK(j["pass"] == true);
    CHECK(validates_in(schema, schema["definitions"]["verify_suite"], j));
  }
  const auto quick = json::parse(take(mdsmom_verify_json(ctx.c, "quick", 1234, 1)));
  CHECK(quick["pass"] == true);
  CHECK(validates_in(schema, schema["definitions"]["verify_bundle"], quick));
}

TEST_CASE("enumerate CSV") {
  Ctx ctx;
  const std::string csv = take(mdsmom_enumerate_csv(ctx.c, 10.0));
  CHECK(csv.rfind("d,D,sign,a\n", 0) == 0);
  CHECK(csv.find("-3,3,-1,1\n") != std::string::npos);
  CHECK(csv.find("5,5,1,0\n") != std::string::npos);
}

TEST_CASE("exponent JSON validates against the schema") {
  Ctx ctx;
  const json schema = load_schema("cli_output.schema.json");
  const auto j = json::parse(take(mdsmom_optimize_exponents_json(ctx.c)));
  CHECK(j["theta"].get<double>() == doctest::Approx(0.853366).epsilon(1e-5));
  CHECK(validates_in(schema, schema["definitions"]["exponents"], j));
}

TEST_CASE("sweep handle lifecycle and record schema") {
  Ctx ctx;
  mdsmom_sweep* sweep = mdsmom_sweep_new(ctx.c, 2000, 2, 1);
  REQUIRE(sweep != nullptr);
  const json schema = load_schema("cli_output.schema.json");
  const auto rec = json::parse(take(mdsmom_sweep_quad_moment_json(sweep, 1, 2000, 0)));
  CHECK(rec["family"] == "quad");
  CHECK(rec["ratio"].is_number());
  CHECK(validates_in(schema, schema["definitions"]["moment_record"], rec));

  const int ms[2] = {1, 2};
  const double xs[2] = {1000.0, 2000.0};
  const std::string csv = take(mdsmom_sweep_quad_moment_csv(sweep, ms, 2, xs, 2, 0));
  CHECK(csv.rfind("family,m,x,weighted,value,predicted,ratio\n", 0) == 0);

  // JSON serialization of a record round-trips the doubles exactly
  const auto again = json::parse(take(mdsmom_sweep_quad_moment_json(sweep, 1, 2000, 0)));
  CHECK(again["value"].get<double>() == rec["value"].get<double>());
  CHECK(json::parse(again.dump())["value"].get<double>() == again["value"].get<double>());

  // out-of-range x errors cleanly
  CHECK(mdsmom_sweep_quad_moment_json(sweep, 1, 100000, 0) == nullptr);
  mdsmom_sweep_free(sweep);
}
