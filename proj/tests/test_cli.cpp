#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "commands.hpp"
#include "whitehead/json_io.hpp"

using namespace whitehead;
using namespace whitehead::cli;

namespace {

struct Run {
  int code = -1;
  std::string out, err;
};

template <class F>
Run run(F&& f) {
  std::ostringstream out, err;
  Run r;
  r.code = f(out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

Run run_stdin(int (*cmd)(const RunConfig&, std::istream&, std::ostream&, std::ostream&), RunConfig cfg,
              const std::string& input) {
  std::istringstream in(input);
  cfg.input = "-";
  return run([&](std::ostream& o, std::ostream& e) { return cmd(cfg, in, o, e); });
}

Run run_point(int (*cmd)(const RunConfig&, std::istream&, std::ostream&, std::ostream&), RunConfig cfg,
              const std::string& point) {
  std::istringstream in;
  cfg.point = point;
  return run([&](std::ostream& o, std::ostream& e) { return cmd(cfg, in, o, e); });
}

// A surface point found by sampling: s free over fixed values.
std::string surface_point() {
  RunConfig cfg;
  cfg.fix = "t=0.3+0.2i,tbar=-0.4+0.1i,sbar=0.5-0.7i,r=1.1+0.3i";
  cfg.json = true;
  const Run r = run([&](std::ostream& o, std::ostream& e) { return cmd_sample(cfg, o, e); });
  REQUIRE(r.code == kExitOk);
  const json doc = json::parse(r.out);
  return doc["points"][0]["coords"].dump();
}

}  // namespace

TEST_CASE("verify") {
  RunConfig cfg;
  cfg.samples = 50;
  const Run r = run([&](std::ostream& o, std::ostream& e) { return cmd_verify(cfg, o, e); });
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("PASS central_identity") != std::string::npos);
  CHECK(r.out.find("all suites passed") != std::string::npos);

  cfg.json = true;
  const Run j = run([&](std::ostream& o, std::ostream& e) { return cmd_verify(cfg, o, e); });
  const json doc = json::parse(j.out);
  CHECK(doc["schema"] == "whitehead-sl3/v1");
  CHECK(doc["ok"] == true);
  CHECK(doc["suites"].size() == 6);

  cfg.samples = 0;
  CHECK(run([&](std::ostream& o, std::ostream& e) { return cmd_verify(cfg, o, e); }).code == kExitUsage);
}

TEST_CASE("eval") {
  const Run r = run_point(cmd_eval, {}, "t=3,tbar=3,s=3,sbar=3,r=3");
  CHECK(r.code == kExitOk);
  const json doc = json::parse(r.out);
  CHECK(doc["schema"] == "whitehead-sl3/v1");
  CHECK(doc["F"] == json::array({0.0, 0.0}));
  CHECK(doc["on_hypersurface"] == true);
  CHECK_FALSE(r.err.empty());

  RunConfig quiet;
  quiet.json = true;
  CHECK(run_point(cmd_eval, quiet, "t=3,tbar=3,s=3,sbar=3,r=3").err.empty());
  CHECK(run_point(cmd_eval, {}, "t=3,tbar=3").code == kExitUsage);
  CHECK(run_point(cmd_eval, {}, "t=3,tbar=3,s=3,sbar=3,q=3").code == kExitUsage);
  CHECK(run_point(cmd_eval, {}, "t=1.5-2x,tbar=3,s=3,sbar=3,r=3").code == kExitUsage);
  CHECK(run_stdin(cmd_eval, {}, "{not json").code == kExitUsage);
  CHECK(run_stdin(cmd_eval, {}, R"({"t":[1,0],"tbar":[1,0],"s":[0,0],"sbar":[0,0],"r":[0,0]})").code == kExitOk);
}

TEST_CASE("sample") {
  RunConfig cfg;
  cfg.fix = "t=1,tbar=1,sbar=0,r=0";
  const Run r = run([&](std::ostream& o, std::ostream& e) { return cmd_sample(cfg, o, e); });
  CHECK(r.code == kExitOk);
  const json doc = json::parse(r.out);
  REQUIRE(doc["points"].size() == 3);
  bool has_zero = false;
  for (const auto& p : doc["points"]) {
    const Cplx s = cplx_from_json(p["coords"]["s"]);
    has_zero = has_zero || std::abs(s) < 1e-14;
    CHECK(p["on_hypersurface"] == true);
  }
  CHECK(has_zero);

  cfg.free = "r";
  CHECK(run([&](std::ostream& o, std::ostream& e) { return cmd_sample(cfg, o, e); }).code == kExitUsage);
  cfg.free = "s";
  cfg.fix = "t=1,tbar=1,s=0,r=0";
  CHECK(run([&](std::ostream& o, std::ostream& e) { return cmd_sample(cfg, o, e); }).code == kExitUsage);
}

TEST_CASE("solve, check and lift round trip") {
  RunConfig cfg;
  cfg.json = true;
  const std::string point = surface_point();
  const Run solved = run_stdin(cmd_solve, cfg, point);
  REQUIRE(solved.code == kExitOk);
  const json report = json::parse(solved.out);
  CHECK(report["schema"] == "whitehead-sl3/v1");
  CHECK(report["success"] == true);

  // Same command, same seed: identical bytes.
  CHECK(run_stdin(cmd_solve, cfg, point).out == solved.out);

  const Run checked = run_stdin(cmd_check, cfg, solved.out);
  CHECK(checked.code == kExitOk);
  const json c = json::parse(checked.out);
  CHECK(c["ok"] == true);
  CHECK(c["irreducible"] == true);
  CHECK(c["relation_residual"].get<double>() <= 1e-6);

  const Run lifted = run_stdin(cmd_lift, cfg, solved.out);
  CHECK(lifted.code == kExitOk);
  const json l = json::parse(lifted.out);
  CHECK(l["schema"] == "whitehead-sl3/v1");
  CHECK(l["lifts"].size() == 6);

  const Run bad = run_stdin(cmd_check, cfg, R"({"y": [[1,0],[0,1]]})");
  CHECK(bad.code == kExitUsage);
}

TEST_CASE("solve failures are structured") {
  RunConfig cfg;
  const Run sym = run_point(cmd_solve, cfg, "t=3,tbar=3,s=3,sbar=3,r=3");
  CHECK(sym.code == kExitFailure);
  const json doc = json::parse(sym.out);
  CHECK(doc["success"] == false);
  CHECK(doc["failure"] == "non-ordinary commutator");
  CHECK(sym.err.find("non-ordinary commutator") != std::string::npos);

  const Run off = run_point(cmd_solve, cfg, "t=1,tbar=1,s=1,sbar=0,r=0");
  CHECK(off.code == kExitFailure);
  CHECK(json::parse(off.out)["failure"] == "no kernel");
}
