#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "whitehead/hypersurface.hpp"
#include "whitehead/reconstruct.hpp"

using namespace whitehead;

TEST_CASE("parameter packing") {
  SeedStream rng(61);
  const Mat3 a = random_gaussian_matrix(rng);
  CHECK(from_params(to_params(a)) == a);
  CHECK(residual_norm(recovery_residuals(Mat3::identity(), {3.0, 3.0, 3.0, 3.0, 3.0})) == 0.0);
}

TEST_CASE("Jacobian") {
  SeedStream rng(62);
  for (int k = 0; k < 10; ++k) {
    const Mat3 a = random_sl3(rng);
    const TraceCoords target = coords_of(random_sl3(rng), Mat3::identity());
    const Jacobian fine = fd_jacobian(a, target);
    const Jacobian coarse = fd_jacobian(a, target, 1e-4);
    const Jacobian exact = exact_jacobian(a, target);
    double norm = 0.0, diff = 0.0, exact_diff = 0.0;
    for (int i = 0; i < kNumResiduals * kNumParams; ++i) {
      norm = std::max(norm, std::abs(exact.data[i]));
      diff = std::max(diff, std::abs(fine.data[i] - coarse.data[i]));
      exact_diff = std::max(exact_diff, std::abs(fine.data[i] - exact.data[i]));
    }
    CHECK(diff <= 1e-4 * norm);
    CHECK(exact_diff <= 1e-6 * norm);

    // The residuals are holomorphic in the entries: Cauchy-Riemann for each
    // entry k pairs d re / d re(a_k) with d im / d im(a_k).
    for (int i = 0; i < 6; ++i) {
      for (int e = 0; e < 9; ++e) {
        CHECK(std::abs(exact(i, e) - exact(6 + i, 9 + e)) <= 1e-10 * norm);
        CHECK(std::abs(exact(i, 9 + e) + exact(6 + i, e)) <= 1e-10 * norm);
      }
    }
  }
}

TEST_CASE("recover_a matches coordinates") {
  SeedStream rng(63);
  for (int k = 0; k < 10; ++k) {
    const Mat3 a0 = random_sl3(rng);
    const TraceCoords target = coords_of(a0, transpose(a0));
    const Recovery rec = recover_a(target, rng);
    CHECK(rec.residual <= 1e-10);
    CHECK(coord_distance(coords_of(rec.a, transpose(rec.a)), target) <= 1e-8 * (1.0 + std::abs(target.sbar)));
    CHECK(std::abs(det(rec.a) - 1.0) <= 1e-9);
  }

  const Recovery id = refine_a(Mat3::identity(), {3.0, 3.0, 3.0, 3.0, 3.0});
  CHECK(id.residual == 0.0);
  CHECK(id.a == Mat3::identity());

  RecoverOptions hopeless;
  hopeless.restarts = 2;
  hopeless.max_iter = 1;
  hopeless.tol = 1e-300;
  try {
    recover_a({1.0, 2.0, 3.0, 4.0, 5.0}, rng, hopeless);
    FAIL("expected RecoveryError");
  } catch (const RecoveryError& e) {
    CHECK(e.best().residual > 0.0);
    CHECK(e.best().restarts == 2);
  }
}

TEST_CASE("relation checker") {
  CHECK(check_relation(Mat3::identity(), Mat3::identity()) == 0.0);
  SeedStream rng(64);
  const Mat3 y = random_sl3(rng);
  CHECK(check_relation(y, y) < 1e-13);
  const Cplx w{0.3, 1.1};
  const Mat3 d1 = Mat3::diag(2.0, w, 1.0 / (2.0 * w));
  const Mat3 d2 = Mat3::diag(-1.0, 3.0, -1.0 / 3.0);
  CHECK(check_relation(d1, d2) < 1e-13);
  CHECK(check_relation(random_sl3(rng), random_sl3(rng)) > 1e-3);
}

TEST_CASE("irreducibility") {
  CHECK_FALSE(is_irreducible(Mat3::identity(), Mat3::identity()));
  CHECK_FALSE(is_irreducible(Mat3::diag(2.0, 1.0, 0.5), Mat3::diag(3.0, 1.0, 1.0 / 3.0)));
  SeedStream rng(65);
  const Mat3 g = random_sl3(rng);
  const Mat3 gi = adjugate(g);
  Mat3 upper1 = Mat3::diag(2.0, 1.0, 0.5);
  upper1(0, 1) = 1.0;
  Mat3 upper2 = Mat3::diag(3.0, 1.0, 1.0 / 3.0);
  upper2(1, 2) = 2.0;
  // Common eigenvector e1 survives conjugation.
  CHECK(share_eigenvector(g * upper1 * gi, g * upper2 * gi));
  CHECK(is_irreducible(random_sl3(rng), random_sl3(rng)));
  // Symmetric inputs: the transposed pair is the same pair, one pass suffices.
  const Mat3 p = random_sl3(rng), q = random_sl3(rng);
  const Irreducibility irr = check_irreducible(p * transpose(p), q * transpose(q));
  CHECK(irr.transpose_pass_skipped);
  CHECK(irr.irreducible);
  const Irreducibility generic = check_irreducible(p, q);
  CHECK_FALSE(generic.transpose_pass_skipped);
  CHECK(generic.irreducible);
}

TEST_CASE("round trip through the solver") {
  SeedStream rng(66);
  int successes = 0;
  for (int k = 0; k < 20; ++k) {
    const Mat3 a0 = random_surface_matrix(rng);
    const TraceCoords target = coords_of(a0, transpose(a0));
    CHECK(std::abs(f_eval(target)) <= 1e-8 * f_scale(target));
    const SolveReport rep = solve_point(target, rng);
    INFO(failure_name(rep.failure));
    CHECK(rep.success());
    if (!rep.success()) continue;
    ++successes;
    const Representation& r = *rep.representation;
    CHECK(r.relation_residual <= 1e-6);
    CHECK(r.symmetry_residual_y <= 1e-8);
    CHECK(r.symmetry_residual_z <= 1e-8);
    CHECK(r.det_residual_y <= 1e-8);
    CHECK(r.det_residual_z <= 1e-8);
    CHECK(is_irreducible(r.y, r.z));
    CHECK(rep.flags.ordinary_commutator);
    CHECK(rep.pencil_rank == 2);
    CHECK(rep.pencil_residual <= 1e-8);
    CHECK(rep.commuting_residual <= 1e-8);
    // The pair recovers the target: a = ybar z.
    CHECK(coord_distance(coords_of(adjugate(r.y) * r.z, r.z * adjugate(r.y)), target) <=
          1e-7 * (1.0 + std::abs(target.sbar)));
  }
  CHECK(successes == 20);
}

TEST_CASE("negative controls") {
  SeedStream rng(67);
  const SolveReport off = solve_point({1.0, 1.0, 1.0, 0.0, 0.0}, rng);
  CHECK(off.failure == SolveFailure::no_kernel);
  CHECK(off.pencil_rank == 3);
  CHECK(failure_name(off.failure) == "no kernel");

  // Moving a surface point by one in s leaves the other four equations solvable.
  const Mat3 a0 = random_surface_matrix(rng);
  TraceCoords shifted = coords_of(a0, transpose(a0));
  shifted.s += 1.0;
  const SolveReport moved = solve_point(shifted, rng);
  CHECK(moved.failure == SolveFailure::no_kernel);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    SeedStream r(seed);
    const SolveReport sym = solve_point({3.0, 3.0, 3.0, 3.0, 3.0}, r);
    CHECK(sym.failure == SolveFailure::non_ordinary_commutator);
    CHECK(failure_name(sym.failure) == "non-ordinary commutator");
  }
  const SolveReport id = solve_from_matrix(Mat3::identity());
  CHECK(id.failure == SolveFailure::non_ordinary_commutator);
}

TEST_CASE("six lifts") {
  SeedStream rng(68);
  for (int k = 0; k < 5; ++k) {
    const Mat3 a0 = random_surface_matrix(rng);
    const SolveReport rep = solve_point(coords_of(a0, transpose(a0)), rng);
    REQUIRE(rep.success());
    const LiftSet set = enumerate_lifts(rep);
    REQUIRE(set.lifts.size() == 6);
    CHECK(set.coord_spread <= 1e-7);
    CHECK(set.max_relation_residual <= 1e-6);
    CHECK(set.pairs_distinct);
    for (int sheet = 0; sheet < 2; ++sheet) {
      const Lift& base = set.lifts[3 * sheet];
      for (int j = 0; j < 3; ++j) {
        const Lift& l = set.lifts[3 * sheet + j];
        CHECK(l.sheet == sheet);
        CHECK(l.scaling == j);
        Cplx w = 1.0;
        for (int p = 0; p < j; ++p) w *= kOmega;
        CHECK(std::abs(l.trace_y / base.trace_y - w) < 1e-10);
      }
    }
    const Lift& first = set.lifts[0];
    const Lift& second = set.lifts[3];
    CHECK(std::abs(first.t1212bar - second.t2121bar) <= 1e-7 * (1.0 + std::abs(first.t1212bar)));
    CHECK(std::abs(first.t2121bar - second.t1212bar) <= 1e-7 * (1.0 + std::abs(first.t2121bar)));
  }

  SolveReport failed;
  failed.failure = SolveFailure::no_kernel;
  CHECK_THROWS_AS(enumerate_lifts(failed), LiftError);
}
