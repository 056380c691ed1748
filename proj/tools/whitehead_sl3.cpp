// whitehead-sl3: verification and reconstruction on the symmetric slice of the
// SL(3,C) character variety of the Whitehead link.

#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace whitehead::cli;

  CLI::App app{"Symmetric-slice hypersurface of the SL(3,C) character variety of the Whitehead link"};
  app.require_subcommand(1);
  RunConfig cfg;
  double tol = 0.0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "Seed for every random stream")->capture_default_str();
    sub->add_option("--tol", tol, "Tolerance (eval/sample: |F| bound; solve/lift: recovery; check: relation)")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--json", cfg.json, "Machine output only (no summary on stderr)");
  };
  auto input = [&](CLI::App* sub) {
    sub->add_option("--input", cfg.input, "JSON payload file, or - for stdin");
  };
  auto solver = [&](CLI::App* sub) {
    sub->add_option("--restarts", cfg.restarts, "Random restarts for recovering a")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--max-iter", cfg.max_iter, "Iterations per restart")->check(CLI::PositiveNumber)->capture_default_str();
  };
  auto point = [&](CLI::App* sub) {
    sub->add_option("--point", cfg.point, "Coordinates, e.g. t=1.5-2i,tbar=1,s=0,sbar=0,r=2");
  };

  auto* verify = app.add_subcommand("verify", "Run every identity suite on seeded samples");
  common(verify);
  verify->add_option("--samples", cfg.samples, "Samples per suite")->check(CLI::PositiveNumber)->capture_default_str();

  auto* eval = app.add_subcommand("eval", "Evaluate F at a point");
  common(eval);
  input(eval);
  point(eval);

  auto* sample = app.add_subcommand("sample", "Solve F = 0 for s or sbar with the other four fixed");
  common(sample);
  sample->add_option("--fix", cfg.fix, "Four assignments, e.g. t=1,tbar=1,sbar=0,r=0 (random when omitted)");
  sample->add_option("--free", cfg.free, "Free coordinate")->check(CLI::IsMember({"s", "sbar"}))->capture_default_str();

  auto* solve = app.add_subcommand("solve", "Build an irreducible representation over a point");
  common(solve);
  input(solve);
  point(solve);
  solver(solve);

  auto* check = app.add_subcommand("check", "Check the relation and irreducibility of a pair (y, z)");
  common(check);
  input(check);

  auto* lift = app.add_subcommand("lift", "Enumerate the six lifts over a point or a solve report");
  common(lift);
  input(lift);
  point(lift);
  solver(lift);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (app.get_subcommand_ptr(verify->get_name())->count("--tol") + eval->count("--tol") + sample->count("--tol") +
          solve->count("--tol") + check->count("--tol") + lift->count("--tol") > 0) {
    cfg.tol = tol;
  }

  if (*verify) return cmd_verify(cfg, std::cout, std::cerr);
  if (*eval) return cmd_eval(cfg, std::cin, std::cout, std::cerr);
  if (*sample) return cmd_sample(cfg, std::cout, std::cerr);
  if (*solve) return cmd_solve(cfg, std::cin, std::cout, std::cerr);
  if (*check) return cmd_check(cfg, std::cin, std::cout, std::cerr);
  if (*lift) return cmd_lift(cfg, std::cin, std::cout, std::cerr);
  return kExitUsage;
}
