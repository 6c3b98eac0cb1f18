#include "doctest.h"

#include <sstream>

#include "goldknot/commands.hpp"
#include "goldknot/error.hpp"
#include "goldknot/io.hpp"

using namespace goldknot;

namespace {

Json run_json(int (*cmd)(const RunConfig&, const KnotHandle&, std::ostream&), const char* knot) {
  std::ostringstream out;
  RunConfig config;
  CHECK(cmd(config, resolve_knot(knot, std::nullopt), out) == 0);
  return Json::parse(out.str());
}

int error_code(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return static_cast<int>(e.code());
  }
  return 0;
}

}  // namespace

TEST_CASE("knots resolve by catalog name or braid word") {
  CHECK(resolve_knot("trefoil", std::nullopt).model != nullptr);
  const KnotHandle b = resolve_knot("s1 s1 s1", std::nullopt);
  CHECK(b.model == nullptr);
  CHECK(b.braid->strands == 2);
  CHECK(error_code([] { resolve_knot("s0", std::nullopt); }) == static_cast<int>(ErrorCode::kUsage));
}

TEST_CASE("knot and alexander output") {
  const Json info = run_json(cmd_knot_info, "figure8");
  CHECK(info["genus"] == 1);
  CHECK(info["fibered"] == true);
  CHECK(info["alexander"] == "t^2-3t+1");
  const Json braid = run_json(cmd_knot_info, "s1 s1 s1 s1 s1");
  CHECK(braid["fibered"] == false);
  CHECK(braid["components"] == 1);
  CHECK(braid["alexander"] == "t^4-t^3+t^2-t+1");
  std::ostringstream out;
  RunConfig config;
  config.format = OutputFormat::kText;
  CHECK(cmd_alexander(config, resolve_knot("trefoil", std::nullopt), out) == 0);
  CHECK(out.str() == "t^2-t+1\n");
  CHECK(error_code([] {
          std::ostringstream sink;
          cmd_knot_info(RunConfig{}, resolve_knot("s1", 3), sink);
        }) == static_cast<int>(ErrorCode::kUsage));
}

TEST_CASE("bracket output and scope errors") {
  std::ostringstream out;
  RunConfig config;
  const KnotHandle t = resolve_knot("trefoil", std::nullopt);
  CHECK(cmd_bracket(config, t, "a1", "b1", Quotient::kNone, out) == 0);
  const Json j = Json::parse(out.str());
  REQUIRE(j["terms"].size() == 1);
  CHECK(j["terms"][0]["class"] == "a1.b1");
  CHECK(j["terms"][0]["coeff"] == "1");
  std::ostringstream hout;
  CHECK(cmd_bracket(config, t, "a1", "b1", Quotient::kHomology, hout) == 0);
  CHECK(Json::parse(hout.str())["terms"][0]["class"] == Json::array({1, 1}));
  std::ostringstream pout;
  CHECK(cmd_bracket(config, t, "a1", "b1", Quotient::kPi, pout) == 0);
  CHECK(Json::parse(pout.str()).contains("left"));
  CHECK(error_code([] {
          std::ostringstream sink;
          cmd_bracket(RunConfig{}, resolve_knot("s1 s1 s1", std::nullopt), "a1", "b1", Quotient::kNone, sink);
        }) == static_cast<int>(ErrorCode::kScope));
}

TEST_CASE("cover presentations") {
  for (const char* knot : {"T25", "s1 s2' s1 s2'"}) {
    std::ostringstream out;
    CHECK(cmd_presentation(RunConfig{}, resolve_knot(knot, std::nullopt), true, out) == 0);
    const Json j = Json::parse(out.str());
    CHECK(j["cover"]["relators"].size() == j["presentation"]["relators"].size());
  }
}

TEST_CASE("class enumeration and tables") {
  const auto one = enumerate_classes(2, 1);
  CHECK(one.size() == 4);
  // Length-2 classes in rank 2: a^2, b^2, A^2, B^2, ab, aB, Ab, AB.
  CHECK(enumerate_classes(2, 2).size() == 12);
  std::ostringstream out;
  RunConfig config;
  CHECK(cmd_table(config, resolve_knot("trefoil", std::nullopt), 1, out) == 0);
  const Json j = Json::parse(out.str());
  CHECK(j["classes"] == 4);
  CHECK(j["pairs"].size() == 6);
  config.jobs = 1;
  std::ostringstream serial;
  cmd_table(config, resolve_knot("trefoil", std::nullopt), 2, serial);
  config.jobs = 4;
  std::ostringstream parallel;
  cmd_table(config, resolve_knot("trefoil", std::nullopt), 2, parallel);
  CHECK(serial.str() == parallel.str());
}

TEST_CASE("selftest exit codes") {
  RunConfig config;
  std::ostringstream ok;
  CHECK(cmd_selftest(config, false, ok) == 0);
  std::ostringstream bad;
  CHECK(cmd_selftest(config, true, bad) == static_cast<int>(ErrorCode::kSelftestFailure));
  config.jobs = 1;
  std::ostringstream serial;
  cmd_selftest(config, false, serial);
  config.jobs = 4;
  std::ostringstream parallel;
  cmd_selftest(config, false, parallel);
  CHECK(serial.str() == parallel.str());
}
