#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "bielliptic/cli.hpp"
#include "bielliptic/transforms.hpp"

using namespace bielliptic;
using nlohmann::json;

namespace {
CommandResult run(std::vector<std::string> args) { return run_command(args); }
json run_json(std::vector<std::string> args) {
  CommandResult r = run_command(args);
  REQUIRE(r.exit_code == 0);
  return json::parse(r.out);
}
}  // namespace

TEST_CASE("info") {
  json j = run_json({"info", "--type", "7"});
  CHECK(j["ord_k"] == 6);
  CHECK(j["g_order"] == 6);
}

TEST_CASE("reduce emits a replayable log") {
  json j = run_json({"reduce", "--type", "1", "--vector", "3,1,1,0", "--json"});
  CHECK(j["schema"] == 1);
  CHECK(j["reduced"] == "1,0,0,-1");
  MukaiVector v = parse_vector(j["input"].get<std::string>());
  SurfaceType t(1);
  for (const auto& step : j["log"]) {
    StepKind k = parse_step_name(step["step"].get<std::string>());
    TransformStep s = k == StepKind::TwistBy
                          ? TransformStep::twist_by(step["params"]["a"].get<long>(), step["params"]["b"].get<long>())
                          : TransformStep::of(k);
    v = apply_transform(t, s, v);
  }
  CHECK(format_vector(v) == j["reduced"].get<std::string>());
}

TEST_CASE("wall classify") {
  json j = run_json({"wall", "classify", "--type", "1", "--v", "1,0,0,-2", "--w", "0,0,0,1", "--json"});
  auto labels = j["labels"].get<std::vector<std::string>>();
  CHECK(std::find(labels.begin(), labels.end(), "HilbertChowDivisorial") != labels.end());
  CHECK(j["codim_bound"] == 0);
  // Every vector string re-parses to the same vector.
  for (const auto& s : j["isotropic_rays"]) CHECK(format_vector(parse_vector(s.get<std::string>())) == s);
  for (const auto& s : j["basis"]) CHECK(format_vector(parse_vector(s.get<std::string>())) == s);
  json none = run_json({"wall", "classify", "--type", "1", "--v", "2,1,2,0", "--w", "0,1,-2,1", "--json"});
  CHECK(none["codim_bound"] == "inf");
}

TEST_CASE("wall slice samples") {
  json j = run_json({"wall", "slice", "--type", "1", "--v", "1,0,0,-1", "--w", "0,0,0,-1", "--H0", "1,1",
                     "--emit-samples", "3", "--json"});
  CHECK(j["locus"]["kind"] == "Quadratic");
  CHECK(j["samples"].size() > 0);
}

TEST_CASE("moduli report and oracle cases") {
  json j = run_json({"moduli", "report", "--type", "1", "--vector", "2,0,1,-1", "--json"});
  CHECK(j["gieseker"]["exceptional"] == "Rank2Type1B0");
  CHECK(j["bridgeland_nonempty"] == true);
  json o = run_json({"oracle", "cases", "--m", "2", "--target", "0", "--json"});
  CHECK(o["cases"].size() == 10);
}

TEST_CASE("atlas CSV") {
  CommandResult r = run({"atlas", "--type", "1", "--bound-r", "1", "--bound-a", "1", "--bound-b", "1", "--bound-s", "1",
                         "--w", "0,0,0,1"});
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.rfind("type,v,w,tss,labels,codim_bound\n", 0) == 0);
  CHECK(r.out.find("\"1,0,0,-1\",\"0,0,0,1\",true,FakeWall,0") != std::string::npos);
  CHECK(run({"atlas", "--type", "1", "--bound-r", "1", "--bound-a", "1", "--bound-b", "1", "--bound-s", "1", "--w",
             "0,0,0,1"})
            .out == r.out);
}

TEST_CASE("exit codes") {
  CHECK(run({}).exit_code == 2);
  CHECK(run({"info"}).exit_code == 2);
  CHECK(run({"info", "--type", "8"}).exit_code == 2);
  CHECK(run({"reduce", "--type", "1", "--vector", "1,2"}).exit_code == 2);
  CHECK(run({"bogus"}).exit_code == 2);
  CHECK(run({"oracle", "cases", "--m", "5", "--target", "0"}).exit_code == 2);
  CommandResult p = run({"reduce", "--type", "1", "--vector", "2,2,2,2"});
  CHECK(p.exit_code == 3);
  CHECK(p.err.find("primitive") != std::string::npos);
  CHECK(run({"wall", "classify", "--type", "1", "--v", "1,0,0,-2", "--w", "2,0,0,-4"}).exit_code == 3);
  CHECK(run({"moduli", "report", "--type", "1", "--vector", "0,0,0,1"}).exit_code == 3);
}
