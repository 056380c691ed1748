#include "whitehead/skewmap.hpp"

#include <algorithm>
#include <cmath>

namespace whitehead {

SkewVec to_vec(const Mat3& u, double tol) {
  if (!is_skew(u, tol)) throw NotSkewError("to_vec: matrix is not skew-symmetric");
  return {{u(0, 1), u(0, 2), u(1, 2)}};
}

Mat3 to_skew(const SkewVec& x) {
  Mat3 u;
  u(0, 1) = x.v[0];
  u(0, 2) = x.v[1];
  u(1, 2) = x.v[2];
  u(1, 0) = -x.v[0];
  u(2, 0) = -x.v[1];
  u(2, 1) = -x.v[2];
  return u;
}

namespace {

Vec3 cross3(const Vec3& x, const Vec3& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

}  // namespace

SkewVec cross(const SkewVec& x, const SkewVec& y) { return {cross3(x.v, y.v)}; }

Cplx triple(const SkewVec& x, const SkewVec& y, const SkewVec& z) {
  return det(Mat3::from_columns(x.v, y.v, z.v));
}

Vec3 normalize_phase(Vec3 v) {
  const double n = norm(v);
  if (n == 0.0) return v;
  double largest = 0.0;
  for (const auto& c : v) largest = std::max(largest, std::abs(c));
  for (const auto& c : v) {
    if (std::abs(c) > 1e-3 * largest) {
      const Cplx phase = std::abs(c) / c;
      for (auto& x : v) x *= phase / n;
      break;
    }
  }
  return v;
}

Colinearity colinearity_det(const Mat3& m1, const Mat3& m2, const Mat3& m3, double tol) {
  const SkewVec v1 = to_vec(m1);
  const SkewVec v2 = to_vec(m2);
  const SkewVec v3 = to_vec(m3);

  Colinearity out;
  out.value = triple(v1, v2, v3);

  std::array<Vec3, 3> columns{v1.v, v2.v, v3.v};
  std::array<double, 3> scale{};
  for (int k = 0; k < 3; ++k) {
    scale[k] = norm(columns[k]);
    if (scale[k] > 0.0) {
      for (auto& c : columns[k]) c /= scale[k];
    }
  }
  out.rank = rank(columns, tol);
  if (out.rank != 2) return out;

  // Kernel of the column-normalized matrix: the largest cross product of two
  // of its rows. Undo the column scaling afterwards.
  const Mat3 normalized = Mat3::from_columns(columns[0], columns[1], columns[2]);
  const std::array<Vec3, 3> rows{normalized.row(0), normalized.row(1), normalized.row(2)};
  Vec3 best{};
  double best_norm = -1.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const Vec3 candidate = cross3(rows[i], rows[j]);
      const double n = norm(candidate);
      if (n > best_norm) {
        best_norm = n;
        best = candidate;
      }
    }
  }
  for (int k = 0; k < 3; ++k) {
    // A zero column is itself in the kernel direction e_k; leave its weight as is.
    if (scale[k] > 0.0) best[k] /= scale[k];
  }
  out.nullvec = normalize_phase(best);
  return out;
}

}  // namespace whitehead
