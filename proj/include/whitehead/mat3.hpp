#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "whitehead/constants.hpp"

namespace whitehead {

using Cplx = std::complex<double>;
using Vec3 = std::array<Cplx, 3>;

/// Primitive cube root of unity e^{2 pi i / 3}.
inline const Cplx kOmega{-0.5, 0.86602540378443864676};

/// 3x3 complex matrix, row-major value type.
class Mat3 {
 public:
  constexpr Mat3() = default;
  explicit constexpr Mat3(const std::array<Cplx, 9>& entries) : m_(entries) {}

  static Mat3 identity() { return diag(1.0, 1.0, 1.0); }
  static Mat3 diag(Cplx d0, Cplx d1, Cplx d2) {
    Mat3 out;
    out(0, 0) = d0;
    out(1, 1) = d1;
    out(2, 2) = d2;
    return out;
  }
  static Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
    Mat3 out;
    for (int i = 0; i < 3; ++i) {
      out(i, 0) = c0[i];
      out(i, 1) = c1[i];
      out(i, 2) = c2[i];
    }
    return out;
  }

  Cplx& operator()(int row, int col) { return m_[3 * row + col]; }
  const Cplx& operator()(int row, int col) const { return m_[3 * row + col]; }

  Vec3 row(int i) const { return {m_[3 * i], m_[3 * i + 1], m_[3 * i + 2]}; }
  Vec3 column(int j) const { return {m_[j], m_[3 + j], m_[6 + j]}; }

  std::span<const Cplx, 9> entries() const { return m_; }
  std::span<Cplx, 9> entries() { return m_; }

  Mat3& operator+=(const Mat3& rhs);
  Mat3& operator-=(const Mat3& rhs);
  Mat3& operator*=(Cplx k);

  friend bool operator==(const Mat3&, const Mat3&) = default;

 private:
  std::array<Cplx, 9> m_{};
};

Mat3 operator+(Mat3 lhs, const Mat3& rhs);
Mat3 operator-(Mat3 lhs, const Mat3& rhs);
Mat3 operator-(Mat3 x);
Mat3 operator*(const Mat3& lhs, const Mat3& rhs);
Mat3 operator*(Cplx k, Mat3 x);
Mat3 operator*(Mat3 x, Cplx k);
Vec3 operator*(const Mat3& x, const Vec3& v);

Cplx trace(const Mat3& x);
Cplx det(const Mat3& x);
Mat3 transpose(const Mat3& x);
/// Classical adjoint: x * adjugate(x) == det(x) * e. Equals the inverse on SL(3,C).
Mat3 adjugate(const Mat3& x);
/// Group commutator x y x^-1 y^-1, inverses taken as adjugates.
Mat3 commutator(const Mat3& x, const Mat3& y);

double frobenius_norm(const Mat3& x);
double max_abs(const Mat3& x);
double norm(const Vec3& v);

bool is_symmetric(const Mat3& x, double tol = kIdentityTol);
bool is_skew(const Mat3& x, double tol = kSkewTol);
bool is_unimodular(const Mat3& x, double tol = kDetGuardTol);

/// Numerical rank of a set of vectors in C^3 (equivalently of the matrix having
/// them as rows or columns). Complete pivoting; a pivot counts when it exceeds
/// tol times the first (largest) pivot.
int rank(std::span<const Vec3> vectors, double tol = kRankTol);
/// Same elimination, but a pivot counts when it exceeds `threshold` outright.
int rank_above(std::span<const Vec3> vectors, double threshold);
/// Column rank of x.
int rank(const Mat3& x, double tol = kRankTol);

struct DistinctEigenvalue {
  Cplx value;
  int multiplicity = 1;   // algebraic
  int geometric_dim = 1;  // dim ker(x - value e)
};

struct Spectrum {
  std::array<Cplx, 3> eigenvalues;  // with multiplicity
  std::vector<DistinctEigenvalue> distinct;
  /// Set when roots that were not bitwise equal were merged into one cluster
  /// (or a merged cluster had to be split back). Ill-conditioned, not an error.
  bool clustered = false;
};

/// Eigenvalues from the characteristic cubic (Cardano + Newton polish) and the
/// geometric dimension of each distinct eigenvalue from rank(x - lambda e).
/// Roots closer than sqrt(tol) relative are clustered before the rank test.
Spectrum eigen(const Mat3& x, double tol = kRankTol);

/// Minimal polynomial equals the characteristic polynomial, i.e. every
/// eigenspace is one-dimensional.
bool is_ordinary(const Mat3& x, double tol = kRankTol);

/// Smallest over largest singular value of the unit-normalised columns
/// vec(e), vec(x), vec(x^2). Zero exactly when x satisfies a polynomial of
/// degree <= 2, so it measures distance from being non-ordinary without
/// computing eigenvalues.
double minpoly_defect(const Mat3& x);

}  // namespace whitehead
