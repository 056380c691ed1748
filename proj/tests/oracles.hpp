#pragma once

// Independent reference implementations used only by the tests. None of them
// shares code with the library beyond the Mat3 value type.

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <map>

#include "whitehead/mat3.hpp"
#include "whitehead/random.hpp"

namespace oracle {

using whitehead::Cplx;
using whitehead::Mat3;

inline Eigen::Matrix3cd to_eigen(const Mat3& x) {
  Eigen::Matrix3cd m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = x(i, j);
  return m;
}

inline Mat3 from_eigen(const Eigen::Matrix3cd& m) {
  Mat3 x;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) x(i, j) = m(i, j);
  return x;
}

// Six-term Leibniz expansion.
inline Cplx leibniz_det(const Mat3& x) {
  static constexpr int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  Cplx sum = 0.0;
  for (int p = 0; p < 6; ++p) {
    const Cplx term = x(0, perms[p][0]) * x(1, perms[p][1]) * x(2, perms[p][2]);
    sum += p < 3 ? term : -term;
  }
  return sum;
}

// Brute-force cofactor: (-1)^(i+j) times the minor with row j and column i removed.
inline Mat3 cofactor_adjugate(const Mat3& x) {
  Mat3 out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      int rows[2], cols[2], nr = 0, nc = 0;
      for (int k = 0; k < 3; ++k) {
        if (k != j) rows[nr++] = k;
        if (k != i) cols[nc++] = k;
      }
      const Cplx minor = x(rows[0], cols[0]) * x(rows[1], cols[1]) - x(rows[0], cols[1]) * x(rows[1], cols[0]);
      out(i, j) = ((i + j) % 2 == 0 ? 1.0 : -1.0) * minor;
    }
  }
  return out;
}

inline Mat3 product(const Mat3& x, const Mat3& y) { return from_eigen(to_eigen(x) * to_eigen(y)); }
inline Mat3 inverse(const Mat3& x) { return from_eigen(to_eigen(x).inverse()); }
inline Cplx trace(const Mat3& x) { return to_eigen(x).trace(); }

// Minimal polynomial test by least squares: x is special when it is scalar or
// x^2 + alpha x + beta e = 0 for some alpha, beta.
inline bool is_special(const Mat3& x, double tol = 1e-9) {
  const Eigen::Matrix3cd m = to_eigen(x);
  const Eigen::Matrix3cd m2 = m * m;
  const auto flat = [](const Eigen::Matrix3cd& a) { return Eigen::Map<const Eigen::Matrix<Cplx, 9, 1>>(a.data()); };
  const Eigen::Matrix3cd id = Eigen::Matrix3cd::Identity();
  const double scale = std::max(1.0, m2.norm());

  Eigen::Matrix<Cplx, 9, 1> one_col = flat(id);
  const Cplx lambda = one_col.dot(flat(m)) / 3.0;
  if ((m - lambda * id).norm() <= tol * std::max(1.0, m.norm())) return true;

  Eigen::Matrix<Cplx, 9, 2> basis;
  basis.col(0) = flat(m);
  basis.col(1) = flat(id);
  const Eigen::Matrix<Cplx, 9, 1> rhs = -flat(m2);
  const Eigen::Matrix<Cplx, 2, 1> coef = basis.colPivHouseholderQr().solve(rhs);
  return (basis * coef - rhs).norm() <= tol * scale;
}

// exp(x) by scaling and squaring with a degree 12 Taylor polynomial.
inline Mat3 expm(const Mat3& x) {
  Eigen::Matrix3cd m = to_eigen(x);
  const double n = m.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (n > 0.5) squarings = static_cast<int>(std::ceil(std::log2(n / 0.5)));
  m /= std::pow(2.0, squarings);
  Eigen::Matrix3cd term = Eigen::Matrix3cd::Identity();
  Eigen::Matrix3cd sum = term;
  for (int k = 1; k <= 12; ++k) {
    term = term * m / static_cast<double>(k);
    sum += term;
  }
  for (int k = 0; k < squarings; ++k) sum = sum * sum;
  return from_eigen(sum);
}

// The hypersurface polynomial transcribed directly into complex arithmetic.
inline Cplx f_direct(Cplx t, Cplx tb, Cplx s, Cplx sb, Cplx r) {
  return s * s * s - sb * sb * sb + (r * tb - 2.0 * t * t) * s * s - (r * t - 2.0 * tb * tb) * sb * sb +
         (t * t * t * t + t * t * tb + r * r * t - r * (t * t * tb + 3.0 * t)) * s -
         (tb * tb * tb * tb + tb * tb * t + r * r * tb - r * (tb * tb * t + 3.0 * tb)) * sb +
         (t * t * t - tb * tb * tb) * (r + 1.0 - t * tb);
}

inline Mat3 random_skew(whitehead::SeedStream& rng) {
  Mat3 u;
  u(0, 1) = rng.complex_normal();
  u(0, 2) = rng.complex_normal();
  u(1, 2) = rng.complex_normal();
  u(1, 0) = -u(0, 1);
  u(2, 0) = -u(0, 2);
  u(2, 1) = -u(1, 2);
  return u;
}

inline double rel_diff(Cplx x, Cplx y) { return std::abs(x - y) / std::max(1.0, std::max(std::abs(x), std::abs(y))); }

inline double rel_diff(const Mat3& x, const Mat3& y) {
  return (to_eigen(x) - to_eigen(y)).norm() / std::max(1.0, std::max(to_eigen(x).norm(), to_eigen(y).norm()));
}

}  // namespace oracle
