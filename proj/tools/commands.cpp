#include "commands.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "whitehead/hypersurface.hpp"
#include "whitehead/json_io.hpp"
#include "whitehead/reconstruct.hpp"

namespace whitehead::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json read_input(const RunConfig& cfg, std::istream& in) {
  std::string text;
  if (cfg.input == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(cfg.input);
    if (!file) throw UsageError("cannot open input file '" + cfg.input + "'");
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("malformed JSON input: ") + e.what());
  }
}

TraceCoords point_from(const RunConfig& cfg, std::istream& in) {
  if (!cfg.input.empty()) return coords_from_json(read_input(cfg, in));
  if (cfg.point.empty()) throw UsageError("give the point with --point t=..,tbar=..,s=..,sbar=..,r=.. or --input");
  std::vector<Var> assigned;
  const TraceCoords c = parse_coord_assignments(cfg.point, &assigned);
  if (assigned.size() != kNumVars) throw UsageError("--point needs all five coordinates t, tbar, s, sbar, r");
  return c;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string fmt(Cplx z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump() << '\n'; }

SolveOptions solve_options(const RunConfig& cfg) {
  SolveOptions opts;
  opts.recover.restarts = cfg.restarts;
  opts.recover.max_iter = cfg.max_iter;
  if (cfg.tol) opts.recover.tol = *cfg.tol;
  return opts;
}

// Maps library exceptions onto the exit-code contract.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (cfg.samples <= 0) throw UsageError("--samples must be positive");
    const auto results = run_verify({cfg.seed, cfg.samples});
    bool all_ok = true;
    json suites = json::array();
    for (const auto& r : results) {
      all_ok = all_ok && r.ok();
      suites.push_back(to_json(r));
    }
    if (cfg.json) {
      emit(out, {{"schema", kSchema}, {"kind", "verify"}, {"seed", cfg.seed}, {"samples", cfg.samples},
                 {"ok", all_ok}, {"suites", suites}});
    } else {
      for (const auto& r : results) {
        out << (r.ok() ? "PASS " : "FAIL ") << r.name << "  " << r.passed << "/" << r.total
            << "  max_error=" << fmt(r.max_error) << "  tol=" << fmt(r.tolerance) << '\n';
      }
      for (const auto& r : results) {
        for (const auto& failure : r.failures) out << failure.dump() << '\n';
      }
      out << (all_ok ? "all suites passed" : "verification FAILED") << '\n';
    }
    return all_ok ? kExitOk : kExitFailure;
  });
}

int cmd_eval(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const TraceCoords c = point_from(cfg, in);
    const double tol = cfg.tol.value_or(1e-10);
    const Cplx f = f_eval(c);
    const bool on = on_hypersurface(c, tol);
    emit(out, {{"schema", kSchema}, {"kind", "eval"}, {"coords", to_json(c)}, {"F", to_json(f)},
               {"scale", f_scale(c)}, {"tol", tol}, {"on_hypersurface", on}});
    if (!cfg.json) err << "F = " << fmt(f) << (on ? "  (on hypersurface)" : "") << '\n';
    return kExitOk;
  });
}

int cmd_sample(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    FreeCoord free;
    Var free_var;
    if (cfg.free == "s") {
      free = FreeCoord::s;
      free_var = Var::s;
    } else if (cfg.free == "sbar") {
      free = FreeCoord::sbar;
      free_var = Var::sbar;
    } else {
      throw UsageError("--free must be s or sbar");
    }

    TraceCoords fixed{};
    if (cfg.fix.empty()) {
      SeedStream rng = SeedStream(cfg.seed).split("sample");
      for (Var v : {Var::t, Var::tbar, Var::s, Var::sbar, Var::r}) fixed[v] = rng.complex_normal();
    } else {
      std::vector<Var> assigned;
      fixed = parse_coord_assignments(cfg.fix, &assigned);
      for (Var v : assigned) {
        if (v == free_var) throw UsageError("--fix must not assign the free coordinate");
      }
      if (assigned.size() != kNumVars - 1) throw UsageError("--fix needs the four coordinates other than --free");
    }
    fixed[free_var] = 0.0;

    const auto points = sample(fixed, free);
    const double tol = cfg.tol.value_or(1e-10);
    json list = json::array();
    bool all_on = true;
    for (const auto& p : points) {
      const bool on = on_hypersurface(p.coords, tol);
      all_on = all_on && on;
      list.push_back({{"coords", to_json(p.coords)}, {"residual", p.residual}, {"on_hypersurface", on}});
      if (!cfg.json) err << cfg.free << " = " << fmt(p.coords[free_var]) << "  |F| = " << fmt(p.residual) << '\n';
    }
    emit(out, {{"schema", kSchema}, {"kind", "sample"}, {"free", cfg.free}, {"fixed", to_json(fixed)}, {"points", list}});
    return all_on ? kExitOk : kExitFailure;
  });
}

int cmd_solve(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const TraceCoords target = point_from(cfg, in);
    SeedStream rng = SeedStream(cfg.seed).split("solve");
    const SolveReport report = solve_point(target, rng, solve_options(cfg));
    emit(out, to_json(report));
    if (!cfg.json) {
      if (report.success()) {
        err << "solved: relation residual " << fmt(report.representation->relation_residual) << ", "
            << report.restarts << " restarts\n";
      } else {
        err << "failed: " << failure_name(report.failure) << " (pencil rank " << report.pencil_rank << ")\n";
      }
    }
    return report.success() ? kExitOk : kExitFailure;
  });
}

int cmd_check(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (cfg.input.empty()) throw UsageError("check needs --input with {\"y\", \"z\"} or a solve report");
    const Representation rep = representation_from_json(read_input(cfg, in));
    const double tol = cfg.tol.value_or(1e-6);
    const Irreducibility irr = check_irreducible(rep.y, rep.z);
    const bool unimodular = rep.det_residual_y <= kDetGuardTol && rep.det_residual_z <= kDetGuardTol;
    json coords = nullptr;
    if (unimodular) {
      const Mat3 a = adjugate(rep.y) * rep.z;
      const Mat3 b = rep.z * adjugate(rep.y);
      coords = to_json(coords_of(a, b));
    }
    const bool ok = unimodular && rep.relation_residual <= tol && irr.irreducible;
    emit(out, {{"schema", kSchema},
               {"kind", "check"},
               {"relation_residual", rep.relation_residual},
               {"tol", tol},
               {"irreducible", irr.irreducible},
               {"irreducibility_transpose_skipped", irr.transpose_pass_skipped},
               {"det_residuals", {rep.det_residual_y, rep.det_residual_z}},
               {"symmetry_residuals", {rep.symmetry_residual_y, rep.symmetry_residual_z}},
               {"coords", coords},
               {"ok", ok}});
    if (!cfg.json) {
      err << "relation residual " << fmt(rep.relation_residual) << ", " << (irr.irreducible ? "irreducible" : "REDUCIBLE")
          << (ok ? "" : "  -> check failed") << '\n';
    }
    return ok ? kExitOk : kExitFailure;
  });
}

int cmd_lift(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SolveOptions opts = solve_options(cfg);
    SolveReport report;
    if (!cfg.input.empty()) {
      const json doc = read_input(cfg, in);
      if (doc.is_object() && doc.contains("a")) {
        const double residual = doc.value("recovery_residual", 0.0);
        report = solve_from_matrix(mat3_from_json(doc["a"]), opts, residual);
        report.recovery_residual = residual;
      } else {
        SeedStream rng = SeedStream(cfg.seed).split("solve");
        report = solve_point(coords_from_json(doc), rng, opts);
      }
    } else {
      SeedStream rng = SeedStream(cfg.seed).split("solve");
      report = solve_point(point_from(cfg, in), rng, opts);
    }
    if (!report.success()) {
      emit(out, to_json(report));
      err << "failed: " << failure_name(report.failure) << '\n';
      return kExitFailure;
    }
    const LiftSet lifts = enumerate_lifts(report, opts);
    emit(out, to_json(lifts));
    if (!cfg.json) {
      err << lifts.lifts.size() << " lifts, coordinate spread " << fmt(lifts.coord_spread)
          << ", max relation residual " << fmt(lifts.max_relation_residual) << '\n';
    }
    return kExitOk;
  });
}

}  // namespace whitehead::cli
