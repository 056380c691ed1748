#pragma once

#include <optional>
#include <stdexcept>

#include "whitehead/mat3.hpp"

namespace whitehead {

/// u^ = (u12, u13, u23) for a skew-symmetric u.
struct SkewVec {
  Vec3 v{};
  friend bool operator==(const SkewVec&, const SkewVec&) = default;
};

class NotSkewError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws NotSkewError unless ||u + u^T|| <= tol ||u||.
SkewVec to_vec(const Mat3& u, double tol = kSkewTol);
Mat3 to_skew(const SkewVec& x);

SkewVec cross(const SkewVec& x, const SkewVec& y);
/// det[x, y, z] with the vectors as columns.
Cplx triple(const SkewVec& x, const SkewVec& y, const SkewVec& z);

struct Colinearity {
  Cplx value;  // triple(m1^, m2^, m3^)
  int rank = 0;
  /// Kernel vector (lambda, mu, nu) of [m1^ m2^ m3^] when rank == 2: unit norm,
  /// first component above 1e-3 of the largest made real positive.
  std::optional<Vec3> nullvec;
  bool degenerate() const { return rank <= 1; }
};

/// Dependence test for three skew matrices. The rank is taken after scaling
/// each column to unit norm, so it does not depend on the relative sizes of
/// the inputs.
Colinearity colinearity_det(const Mat3& m1, const Mat3& m2, const Mat3& m3, double tol = kRankTol);

/// Unit-normalize and fix the phase as described for Colinearity::nullvec.
Vec3 normalize_phase(Vec3 v);

}  // namespace whitehead
