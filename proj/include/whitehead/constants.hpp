#pragma once

// Default tolerances and the sign conventions pinned by the test suite.

namespace whitehead {

/// Relative pivot threshold for numerical rank and eigenspace dimensions.
inline constexpr double kRankTol = 1e-8;
/// Default bound for matrix identity checks.
inline constexpr double kIdentityTol = 1e-10;
/// |det - 1| allowed before a matrix is refused as an SL(3,C) element.
inline constexpr double kDetGuardTol = 1e-8;
/// Skewness bound ||u + u^T|| <= kSkewTol * ||u|| accepted by to_vec.
inline constexpr double kSkewTol = 1e-9;

// With u^ = (u12, u13, u23):
//   (uv - vu)^   = kCommutatorSign  * (u^ x v^)
//   tr(u v w)    = kTraceTripleSign * det[u^, v^, w^]
//   k_matrix(a,b) = kPencilSign * colinearity_det(M1, M2, M3).value
// The ordering (u12, u13, u23) is not the Hodge ordering (u23, -u13, u12),
// which is where the commutator sign comes from.
inline constexpr int kCommutatorSign = -1;
inline constexpr int kTraceTripleSign = 1;
inline constexpr int kPencilSign = 1;

}  // namespace whitehead
