#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "whitehead/hypersurface.hpp"
#include "whitehead/mat3.hpp"
#include "whitehead/random.hpp"

namespace whitehead {

// --- recovering a from its trace coordinates -------------------------------

struct RecoverOptions {
  int restarts = 20;
  int max_iter = 200;
  double tol = 1e-10;
  /// Extra steps taken after tol is met, while the residual still drops.
  int polish_iter = 20;
};

inline constexpr int kNumParams = 18;    // re and im of the nine entries
inline constexpr int kNumResiduals = 12; // re and im of six complex equations

using Params = std::array<double, kNumParams>;
using Residuals = std::array<double, kNumResiduals>;

/// Row-major kNumResiduals x kNumParams.
struct Jacobian {
  std::array<double, kNumResiduals * kNumParams> data{};
  double& operator()(int i, int j) { return data[i * kNumParams + j]; }
  double operator()(int i, int j) const { return data[i * kNumParams + j]; }
};

Params to_params(const Mat3& a);
Mat3 from_params(const Params& x);

/// The six defect equations tr(a) - t, tr(adj a) - tbar, tr(a a^T) - s,
/// tr(adj a adj a^T) - sbar, tr(adj a a^T) - r, det a - 1, each divided by
/// 1 + |target value| (1 for det). Real parts first, then imaginary parts.
Residuals recovery_residuals(const Mat3& a, const TraceCoords& target);
double residual_norm(const Residuals& r);

/// Central differences with the given absolute step on every real parameter.
Jacobian fd_jacobian(const Mat3& a, const TraceCoords& target, double step = 1e-7);

/// Every residual is at most quadratic along a rank-one perturbation of a
/// (adj is linear there), so a central difference is exact for any step.
/// This one uses a step of max(1, max|a_ij|), which keeps rounding at eps.
Jacobian exact_jacobian(const Mat3& a, const TraceCoords& target);

struct Recovery {
  Mat3 a;
  double residual = 0.0;
  int iterations = 0;  // summed over all runs
  int restarts = 0;    // random starts used after the first run
};

class RecoveryError : public std::runtime_error {
 public:
  RecoveryError(const std::string& what, Recovery best) : std::runtime_error(what), best_(best) {}
  const Recovery& best() const { return best_; }

 private:
  Recovery best_;
};

/// One damped Gauss-Newton (Levenberg) run from `start`. Never throws; check
/// the returned residual.
Recovery refine_a(const Mat3& start, const TraceCoords& target, const RecoverOptions& opts = {});

/// Finds a with recovery_residuals below opts.tol from random SL(3,C) starts.
/// Throws RecoveryError carrying the best attempt when every start fails.
Recovery recover_a(const TraceCoords& target, SeedStream& rng, const RecoverOptions& opts = {});

// --- representations --------------------------------------------------------

/// ||y z y zbar^2 y z - z y zbar^2 y z y|| / max(1, ||lhs||), Frobenius norms.
double check_relation(const Mat3& y, const Mat3& z);

struct Irreducibility {
  bool irreducible = false;
  /// Both inputs symmetric: the transposed pair is the same pair, so the
  /// second pass was not run.
  bool transpose_pass_skipped = false;
};

/// True when y and z share an eigenvector: for some eigenvalues (l, m) the
/// stacked rows of (y - l e)/|y| and (z - m e)/|z| have rank < 3.
bool share_eigenvector(const Mat3& y, const Mat3& z, double tol = kRankTol);
Irreducibility check_irreducible(const Mat3& y, const Mat3& z, double tol = kRankTol);
bool is_irreducible(const Mat3& y, const Mat3& z, double tol = kRankTol);

struct NullspaceCoeffs {
  Cplx lambda, mu, nu;
};

struct Representation {
  Mat3 y, z;
  double relation_residual = 0.0;
  double symmetry_residual_y = 0.0;  // ||y - y^T|| / max(1, ||y||)
  double symmetry_residual_z = 0.0;
  double det_residual_y = 0.0;  // |det y - 1|
  double det_residual_z = 0.0;
};

/// Fills in every residual for the pair.
Representation make_representation(const Mat3& y, const Mat3& z);

enum class SolveFailure {
  none,
  recovery_failed,
  non_ordinary_commutator,
  degenerate_pencil,
  no_kernel,
  singular_y,
  relation_violated,
  reducible_pair,
  coordinate_collision,
};

/// "non-ordinary commutator", "no kernel", ...
std::string_view failure_name(SolveFailure f);

struct SolveFlags {
  bool ordinary_commutator = false;
  bool rank2_pencil = false;
  bool dety_nonzero = false;
  bool irreducible = false;
  bool coords_separated = false;
};

struct SolveOptions {
  RecoverOptions recover;
  double rank_tol = kRankTol;
  double relation_tol = 1e-6;
  /// |det y0| must exceed this times max(1, ||y0||)^3.
  double det_tol = 1e-8;
  double separation_tol = 1e-8;
};

struct SolveReport {
  TraceCoords target{};
  Mat3 a;
  double recovery_residual = 0.0;
  ExtendedCoords extended{};
  SolveFlags flags;
  int pencil_rank = 0;
  Cplx pencil_value;                     // triple product, equals K
  std::optional<NullspaceCoeffs> coeffs;
  double pencil_residual = 0.0;          // ||l M1 + m M2 + n M3|| / max ||Mi||
  std::optional<Representation> representation;
  double commuting_residual = 0.0;       // ||y a - a^T y|| / (||y|| ||a||)
  bool transpose_pass_skipped = false;
  int iterations = 0;
  int restarts = 0;
  SolveFailure failure = SolveFailure::none;

  bool success() const { return failure == SolveFailure::none; }
};

/// Everything after recovery: b = a^T, c = [a, bbar], the pencil, y, z and
/// every assumption flag. target is coords_of(a, a^T).
///
/// input_residual is how far a is from an exact solution (the recovery
/// residual). On singular fibres a, and so c, is only good to about its
/// square root, so c counts as non-ordinary when minpoly_defect(c) is below
/// max(rank_tol, sqrt(input_residual)), as well as when eigen() says so.
SolveReport solve_from_matrix(const Mat3& a, const SolveOptions& opts = {}, double input_residual = 0.0);

/// recover_a followed by solve_from_matrix; target is kept as given.
SolveReport solve_point(const TraceCoords& target, SeedStream& rng, const SolveOptions& opts = {});

/// A matrix a whose coordinates lie on the hypersurface: a random SL(3,C)
/// draw a0, its coordinate s replaced by the nearest root of F in s, and a
/// refined from a0 onto the new coordinates.
Mat3 random_surface_matrix(SeedStream& rng, const RecoverOptions& opts = {});

// --- the six lifts ----------------------------------------------------------

struct Lift {
  int sheet = 0;    // 0: pair (a, a^T); 1: pair (a^T, a)
  int scaling = 0;  // k in omega^k
  Representation rep;
  TraceCoords coords{};  // of (ybar z, z ybar)
  Cplx trace_y;
  Cplx t1212bar;
  Cplx t2121bar;
};

struct LiftSet {
  std::vector<Lift> lifts;  // sheet-major, 6 entries
  double coord_spread = 0.0;       // max distance between lift coordinates
  double max_relation_residual = 0.0;
  bool trace_y_degenerate = false; // tr(y) == 0 on a sheet
  bool pairs_distinct = false;     // the six (tr y, t1212bar) pairwise distinct
};

class LiftError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Six representations over one point: omega^k (y, z) for k = 0, 1, 2 on the
/// reported sheet and on the sheet obtained by rerunning with a^T in place of
/// a. Throws LiftError if the report failed, the coordinates collide, or the
/// swapped sheet fails.
LiftSet enumerate_lifts(const SolveReport& report, const SolveOptions& opts = {});

}  // namespace whitehead
