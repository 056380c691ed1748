#include "whitehead/reconstruct.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "whitehead/cubic.hpp"
#include "whitehead/skewmap.hpp"
#include "whitehead/words.hpp"

namespace whitehead {

Params to_params(const Mat3& a) {
  Params x{};
  const auto entries = a.entries();
  for (int k = 0; k < 9; ++k) {
    x[k] = entries[k].real();
    x[9 + k] = entries[k].imag();
  }
  return x;
}

Mat3 from_params(const Params& x) {
  Mat3 a;
  auto entries = a.entries();
  for (int k = 0; k < 9; ++k) entries[k] = Cplx{x[k], x[9 + k]};
  return a;
}

Residuals recovery_residuals(const Mat3& a, const TraceCoords& target) {
  const Mat3 adj = adjugate(a);
  const Mat3 at = transpose(a);
  const std::array<Cplx, 6> values{trace(a), trace(adj), trace(a * at), trace(adj * transpose(adj)), trace(adj * at),
                                   det(a)};
  const auto goal = target.as_array();
  Residuals out{};
  for (int k = 0; k < 6; ++k) {
    const Cplx want = k < 5 ? goal[k] : Cplx{1.0};
    const Cplx defect = (values[k] - want) / (1.0 + std::abs(want));
    out[k] = defect.real();
    out[6 + k] = defect.imag();
  }
  return out;
}

double residual_norm(const Residuals& r) {
  double sum = 0.0;
  for (double v : r) sum += v * v;
  return std::sqrt(sum);
}

Jacobian fd_jacobian(const Mat3& a, const TraceCoords& target, double step) {
  Jacobian jac;
  const Params x = to_params(a);
  for (int j = 0; j < kNumParams; ++j) {
    Params plus = x;
    Params minus = x;
    plus[j] += step;
    minus[j] -= step;
    const Residuals rp = recovery_residuals(from_params(plus), target);
    const Residuals rm = recovery_residuals(from_params(minus), target);
    for (int i = 0; i < kNumResiduals; ++i) jac(i, j) = (rp[i] - rm[i]) / (2.0 * step);
  }
  return jac;
}

Jacobian exact_jacobian(const Mat3& a, const TraceCoords& target) {
  return fd_jacobian(a, target, std::max(1.0, max_abs(a)));
}

Recovery refine_a(const Mat3& start, const TraceCoords& target, const RecoverOptions& opts) {
  using RowJacobian = Eigen::Matrix<double, kNumResiduals, kNumParams, Eigen::RowMajor>;
  using ResidualVec = Eigen::Matrix<double, kNumResiduals, 1>;
  using ParamVec = Eigen::Matrix<double, kNumParams, 1>;

  Params x = to_params(start);
  Residuals r = recovery_residuals(start, target);
  double cost = residual_norm(r);
  double damping = 1e-3;

  Recovery out{start, cost, 0, 0};
  // Near singular fibres the solution is only sqrt(residual) accurate, so
  // once tol is met keep going while the residual still drops.
  int polish = 0;
  for (int iter = 0; iter < opts.max_iter; ++iter) {
    if (cost <= opts.tol && ++polish > opts.polish_iter) break;
    ++out.iterations;
    const Jacobian jac = exact_jacobian(from_params(x), target);
    const Eigen::Map<const RowJacobian> j(jac.data.data());
    const Eigen::Map<const ResidualVec> rv(r.data());
    // 12 equations, 18 unknowns: solve in the row space,
    // step = -J^T (J J^T + damping I)^-1 r.
    const Eigen::Matrix<double, kNumResiduals, kNumResiduals> normal =
        j * j.transpose() + damping * Eigen::Matrix<double, kNumResiduals, kNumResiduals>::Identity();
    const ParamVec step = -(j.transpose() * normal.ldlt().solve(rv));

    Params trial = x;
    for (int k = 0; k < kNumParams; ++k) trial[k] += step[k];
    const Residuals trial_r = recovery_residuals(from_params(trial), target);
    const double trial_cost = residual_norm(trial_r);
    if (std::isfinite(trial_cost) && trial_cost < cost) {
      x = trial;
      r = trial_r;
      cost = trial_cost;
      damping = std::max(damping / 10.0, 1e-15);
    } else {
      damping *= 10.0;
      if (damping > 1e12 || cost <= opts.tol) break;
    }
  }
  out.a = from_params(x);
  out.residual = cost;
  return out;
}

Recovery recover_a(const TraceCoords& target, SeedStream& rng, const RecoverOptions& opts) {
  Recovery best{Mat3::identity(), std::numeric_limits<double>::infinity(), 0, 0};
  int iterations = 0;
  for (int attempt = 0; attempt < std::max(1, opts.restarts); ++attempt) {
    Recovery run = refine_a(random_sl3(rng), target, opts);
    iterations += run.iterations;
    run.iterations = iterations;
    run.restarts = attempt;
    if (run.residual <= opts.tol) return run;
    if (run.residual < best.residual) best = run;
  }
  best.iterations = iterations;
  best.restarts = opts.restarts;
  throw RecoveryError("recover_a: no start converged; best residual " + std::to_string(best.residual), best);
}

double check_relation(const Mat3& y, const Mat3& z) {
  static const Word lhs_word{1, 2, 1, -2, -2, 1, 2};
  static const Word rhs_word{2, 1, -2, -2, 1, 2, 1};
  const Mat3 lhs = eval_word(lhs_word, y, z);
  const Mat3 rhs = eval_word(rhs_word, y, z);
  return frobenius_norm(lhs - rhs) / std::max(1.0, frobenius_norm(lhs));
}

bool share_eigenvector(const Mat3& y, const Mat3& z, double tol) {
  const double ny = std::max(frobenius_norm(y), std::numeric_limits<double>::min());
  const double nz = std::max(frobenius_norm(z), std::numeric_limits<double>::min());
  const Spectrum sy = eigen(y, tol);
  const Spectrum sz = eigen(z, tol);
  for (const auto& ly : sy.distinct) {
    const Mat3 dy = (y - ly.value * Mat3::identity()) * (1.0 / ny);
    for (const auto& lz : sz.distinct) {
      const Mat3 dz = (z - lz.value * Mat3::identity()) * (1.0 / nz);
      const std::array<Vec3, 6> rows{dy.row(0), dy.row(1), dy.row(2), dz.row(0), dz.row(1), dz.row(2)};
      if (rank_above(rows, tol) < 3) return true;
    }
  }
  return false;
}

Irreducibility check_irreducible(const Mat3& y, const Mat3& z, double tol) {
  Irreducibility out;
  if (share_eigenvector(y, z, tol)) return out;
  if (is_symmetric(y, tol) && is_symmetric(z, tol)) {
    out.transpose_pass_skipped = true;
    out.irreducible = true;
    return out;
  }
  out.irreducible = !share_eigenvector(transpose(y), transpose(z), tol);
  return out;
}

bool is_irreducible(const Mat3& y, const Mat3& z, double tol) { return check_irreducible(y, z, tol).irreducible; }

Representation make_representation(const Mat3& y, const Mat3& z) {
  Representation rep;
  rep.y = y;
  rep.z = z;
  rep.relation_residual = check_relation(y, z);
  rep.symmetry_residual_y = frobenius_norm(y - transpose(y)) / std::max(1.0, frobenius_norm(y));
  rep.symmetry_residual_z = frobenius_norm(z - transpose(z)) / std::max(1.0, frobenius_norm(z));
  rep.det_residual_y = std::abs(det(y) - 1.0);
  rep.det_residual_z = std::abs(det(z) - 1.0);
  return rep;
}

std::string_view failure_name(SolveFailure f) {
  switch (f) {
    case SolveFailure::none: return "none";
    case SolveFailure::recovery_failed: return "recovery failed";
    case SolveFailure::non_ordinary_commutator: return "non-ordinary commutator";
    case SolveFailure::degenerate_pencil: return "degenerate pencil";
    case SolveFailure::no_kernel: return "no kernel";
    case SolveFailure::singular_y: return "det y0 = 0";
    case SolveFailure::relation_violated: return "relation violated";
    case SolveFailure::reducible_pair: return "reducible pair";
    case SolveFailure::coordinate_collision: return "coordinate collision";
  }
  return "unknown";
}

SolveReport solve_from_matrix(const Mat3& a, const SolveOptions& opts, double input_residual) {
  SolveReport report;
  report.a = a;
  const Mat3 b = transpose(a);
  report.target = coords_of(a, b);
  report.extended = extended_coords_of(a, b);
  report.flags.coords_separated = report.extended.separated(opts.separation_tol);

  auto fail = [&report](SolveFailure f) {
    if (report.failure == SolveFailure::none) report.failure = f;
  };

  const Mat3 c = commutator(a, adjugate(b));  // a bbar abar b
  const double ordinary_tol = std::max(opts.rank_tol, std::sqrt(std::max(input_residual, 0.0)));
  report.flags.ordinary_commutator = is_ordinary(c, opts.rank_tol) && minpoly_defect(c) > ordinary_tol;
  if (!report.flags.ordinary_commutator) fail(SolveFailure::non_ordinary_commutator);

  const Pencil pencil = transpose_pencil(a);
  const Colinearity col = colinearity_det(pencil.m1, pencil.m2, pencil.m3, opts.rank_tol);
  report.pencil_rank = col.rank;
  report.pencil_value = col.value;
  report.flags.rank2_pencil = col.rank == 2;
  if (col.degenerate()) {
    fail(SolveFailure::degenerate_pencil);
    return report;
  }
  if (!col.nullvec) {
    fail(SolveFailure::no_kernel);
    return report;
  }
  const Vec3& n = *col.nullvec;
  report.coeffs = NullspaceCoeffs{n[0], n[1], n[2]};
  const double m_scale =
      std::max({frobenius_norm(pencil.m1), frobenius_norm(pencil.m2), frobenius_norm(pencil.m3)});
  report.pencil_residual = frobenius_norm(n[0] * pencil.m1 + n[1] * pencil.m2 + n[2] * pencil.m3) /
                           std::max(m_scale, std::numeric_limits<double>::min());

  // y0 = lambda c + mu e + nu c^-1 commutes with c and satisfies y0 a = b y0.
  const Mat3 y0 = n[0] * c + n[1] * Mat3::identity() + n[2] * adjugate(c);
  const Cplx det_y0 = det(y0);
  const double y0_scale = std::max(1.0, frobenius_norm(y0));
  report.flags.dety_nonzero = std::abs(det_y0) > opts.det_tol * y0_scale * y0_scale * y0_scale;
  if (!report.flags.dety_nonzero) {
    fail(SolveFailure::singular_y);
    return report;
  }
  const Mat3 y = y0 * (1.0 / principal_cbrt(det_y0));
  const Mat3 z = y * a;
  report.representation = make_representation(y, z);
  report.commuting_residual =
      frobenius_norm(y * a - b * y) / std::max(1.0, frobenius_norm(y) * frobenius_norm(a));
  if (!(report.representation->relation_residual <= opts.relation_tol)) fail(SolveFailure::relation_violated);

  const Irreducibility irr = check_irreducible(y, z, opts.rank_tol);
  report.flags.irreducible = irr.irreducible;
  report.transpose_pass_skipped = irr.transpose_pass_skipped;
  if (!irr.irreducible) fail(SolveFailure::reducible_pair);
  if (!report.flags.coords_separated) fail(SolveFailure::coordinate_collision);
  return report;
}

SolveReport solve_point(const TraceCoords& target, SeedStream& rng, const SolveOptions& opts) {
  Recovery rec;
  try {
    rec = recover_a(target, rng, opts.recover);
  } catch (const RecoveryError& err) {
    SolveReport report;
    report.target = target;
    report.a = err.best().a;
    report.recovery_residual = err.best().residual;
    report.iterations = err.best().iterations;
    report.restarts = err.best().restarts;
    report.failure = SolveFailure::recovery_failed;
    return report;
  }
  SolveReport report = solve_from_matrix(rec.a, opts, rec.residual);
  report.target = target;
  report.recovery_residual = rec.residual;
  report.iterations = rec.iterations;
  report.restarts = rec.restarts;
  return report;
}

Mat3 random_surface_matrix(SeedStream& rng, const RecoverOptions& opts) {
  for (;;) {
    const Mat3 a0 = random_sl3(rng);
    const TraceCoords c = coords_of(a0, transpose(a0));
    const auto roots = sample(c, FreeCoord::s);
    const auto nearest = std::min_element(roots.begin(), roots.end(), [&c](const auto& x, const auto& y) {
      return std::abs(x.coords.s - c.s) < std::abs(y.coords.s - c.s);
    });
    const Recovery rec = refine_a(a0, nearest->coords, opts);
    if (rec.residual <= opts.tol) return rec.a;
  }
}

LiftSet enumerate_lifts(const SolveReport& report, const SolveOptions& opts) {
  if (!report.success() || !report.representation) {
    throw LiftError("enumerate_lifts: report is not a successful solve (" +
                    std::string(failure_name(report.failure)) + ")");
  }
  if (!report.flags.coords_separated) throw LiftError("enumerate_lifts: t1212bar == t2121bar");

  const SolveReport swapped = solve_from_matrix(transpose(report.a), opts, report.recovery_residual);
  if (!swapped.success() || !swapped.representation) {
    throw LiftError("enumerate_lifts: swapped sheet failed (" + std::string(failure_name(swapped.failure)) + ")");
  }

  LiftSet out;
  const std::array<const Representation*, 2> sheets{&*report.representation, &*swapped.representation};
  for (int sheet = 0; sheet < 2; ++sheet) {
    Cplx w = 1.0;
    for (int k = 0; k < 3; ++k) {
      Lift lift;
      lift.sheet = sheet;
      lift.scaling = k;
      lift.rep = make_representation(sheets[sheet]->y * w, sheets[sheet]->z * w);
      const Mat3 a = adjugate(lift.rep.y) * lift.rep.z;
      const Mat3 b = lift.rep.z * adjugate(lift.rep.y);
      const ExtendedCoords ext = extended_coords_of(a, b);
      lift.coords = ext.base;
      lift.trace_y = trace(lift.rep.y);
      lift.t1212bar = ext.t1212bar;
      lift.t2121bar = ext.t2121bar;
      out.max_relation_residual = std::max(out.max_relation_residual, lift.rep.relation_residual);
      out.lifts.push_back(lift);
      w *= kOmega;
    }
    if (std::abs(trace(sheets[sheet]->y)) <= opts.separation_tol * std::max(1.0, frobenius_norm(sheets[sheet]->y))) {
      out.trace_y_degenerate = true;
    }
  }

  out.pairs_distinct = true;
  for (std::size_t i = 0; i < out.lifts.size(); ++i) {
    for (std::size_t j = i + 1; j < out.lifts.size(); ++j) {
      out.coord_spread = std::max(out.coord_spread, coord_distance(out.lifts[i].coords, out.lifts[j].coords));
      const auto& p = out.lifts[i];
      const auto& q = out.lifts[j];
      const double gap = std::max(std::abs(p.trace_y - q.trace_y), std::abs(p.t1212bar - q.t1212bar));
      const double size = 1.0 + std::max(std::abs(p.trace_y), std::abs(p.t1212bar));
      if (gap <= opts.separation_tol * size) out.pairs_distinct = false;
    }
  }
  return out;
}

}  // namespace whitehead
