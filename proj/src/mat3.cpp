#include "whitehead/mat3.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "whitehead/cubic.hpp"

namespace whitehead {

Mat3& Mat3::operator+=(const Mat3& rhs) {
  for (int k = 0; k < 9; ++k) m_[k] += rhs.m_[k];
  return *this;
}

Mat3& Mat3::operator-=(const Mat3& rhs) {
  for (int k = 0; k < 9; ++k) m_[k] -= rhs.m_[k];
  return *this;
}

Mat3& Mat3::operator*=(Cplx k) {
  for (auto& entry : m_) entry *= k;
  return *this;
}

Mat3 operator+(Mat3 lhs, const Mat3& rhs) { return lhs += rhs; }
Mat3 operator-(Mat3 lhs, const Mat3& rhs) { return lhs -= rhs; }
Mat3 operator-(Mat3 x) { return x *= -1.0; }
Mat3 operator*(Cplx k, Mat3 x) { return x *= k; }
Mat3 operator*(Mat3 x, Cplx k) { return x *= k; }

Mat3 operator*(const Mat3& lhs, const Mat3& rhs) {
  Mat3 out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      out(i, j) = lhs(i, 0) * rhs(0, j) + lhs(i, 1) * rhs(1, j) + lhs(i, 2) * rhs(2, j);
    }
  }
  return out;
}

Vec3 operator*(const Mat3& x, const Vec3& v) {
  Vec3 out;
  for (int i = 0; i < 3; ++i) out[i] = x(i, 0) * v[0] + x(i, 1) * v[1] + x(i, 2) * v[2];
  return out;
}

Cplx trace(const Mat3& x) { return x(0, 0) + x(1, 1) + x(2, 2); }

Cplx det(const Mat3& x) {
  return x(0, 0) * (x(1, 1) * x(2, 2) - x(1, 2) * x(2, 1)) -
         x(0, 1) * (x(1, 0) * x(2, 2) - x(1, 2) * x(2, 0)) +
         x(0, 2) * (x(1, 0) * x(2, 1) - x(1, 1) * x(2, 0));
}

Mat3 transpose(const Mat3& x) {
  Mat3 out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out(i, j) = x(j, i);
  }
  return out;
}

Mat3 adjugate(const Mat3& x) {
  Mat3 out;
  // out(j, i) is the (i, j) cofactor; cyclic indices give the signs for free.
  for (int i = 0; i < 3; ++i) {
    const int i1 = (i + 1) % 3;
    const int i2 = (i + 2) % 3;
    for (int j = 0; j < 3; ++j) {
      const int j1 = (j + 1) % 3;
      const int j2 = (j + 2) % 3;
      out(j, i) = x(i1, j1) * x(i2, j2) - x(i1, j2) * x(i2, j1);
    }
  }
  return out;
}

Mat3 commutator(const Mat3& x, const Mat3& y) { return x * y * adjugate(x) * adjugate(y); }

double frobenius_norm(const Mat3& x) {
  double sum = 0.0;
  for (const auto& entry : x.entries()) sum += std::norm(entry);
  return std::sqrt(sum);
}

double max_abs(const Mat3& x) {
  double best = 0.0;
  for (const auto& entry : x.entries()) best = std::max(best, std::abs(entry));
  return best;
}

double norm(const Vec3& v) { return std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2])); }

bool is_symmetric(const Mat3& x, double tol) {
  return frobenius_norm(x - transpose(x)) <= tol * std::max(1.0, frobenius_norm(x));
}

bool is_skew(const Mat3& x, double tol) {
  return frobenius_norm(x + transpose(x)) <= tol * frobenius_norm(x);
}

bool is_unimodular(const Mat3& x, double tol) { return std::abs(det(x) - 1.0) <= tol; }

namespace {

// Pivots above `absolute` count; with relative == true the threshold is
// instead absolute * (first pivot).
int pivoted_rank(std::span<const Vec3> vectors, double threshold, bool relative) {
  std::vector<Vec3> rows(vectors.begin(), vectors.end());
  const int n = static_cast<int>(rows.size());
  std::array<bool, 3> column_used{};
  double first_pivot = 0.0;
  int result = 0;
  for (int step = 0; step < std::min(n, 3); ++step) {
    int pivot_row = -1;
    int pivot_col = -1;
    double pivot_mag = 0.0;
    for (int i = step; i < n; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (column_used[j]) continue;
        const double mag = std::abs(rows[i][j]);
        if (mag > pivot_mag) {
          pivot_mag = mag;
          pivot_row = i;
          pivot_col = j;
        }
      }
    }
    if (step == 0) {
      if (pivot_mag == 0.0) return 0;
      first_pivot = pivot_mag;
    }
    if (pivot_row < 0 || pivot_mag <= (relative ? threshold * first_pivot : threshold)) break;
    std::swap(rows[step], rows[pivot_row]);
    column_used[pivot_col] = true;
    const Cplx pivot = rows[step][pivot_col];
    for (int i = step + 1; i < n; ++i) {
      const Cplx factor = rows[i][pivot_col] / pivot;
      for (int j = 0; j < 3; ++j) rows[i][j] -= factor * rows[step][j];
    }
    ++result;
  }
  return result;
}

}  // namespace

int rank(std::span<const Vec3> vectors, double tol) { return pivoted_rank(vectors, tol, true); }

int rank_above(std::span<const Vec3> vectors, double threshold) { return pivoted_rank(vectors, threshold, false); }

int rank(const Mat3& x, double tol) {
  const std::array<Vec3, 3> columns{x.column(0), x.column(1), x.column(2)};
  return rank(columns, tol);
}

namespace {

// Small pivots are judged against the size of x itself, not of x - value e,
// which can be tiny when x is close to a scalar matrix.
int geometric_dim(const Mat3& x, Cplx value, double tol) {
  const Mat3 shifted = x - value * Mat3::identity();
  const std::array<Vec3, 3> columns{shifted.column(0), shifted.column(1), shifted.column(2)};
  return 3 - rank_above(columns, tol * std::max(max_abs(x), std::abs(value)));
}

}  // namespace

Spectrum eigen(const Mat3& x, double tol) {
  Spectrum out;
  // lambda^3 - tr(x) lambda^2 + tr(adj x) lambda - det(x)
  out.eigenvalues = solve_cubic(1.0, -trace(x), trace(adjugate(x)), -det(x));
  const auto& roots = out.eigenvalues;

  double scale = 0.0;
  for (const auto& root : roots) scale = std::max(scale, std::abs(root));
  const double radius = std::sqrt(tol) * scale;

  // Cluster labels by single linkage over the three roots.
  std::array<int, 3> label{0, 1, 2};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (std::abs(roots[i] - roots[j]) <= radius) {
        const int from = label[j];
        const int to = label[i];
        for (auto& l : label) {
          if (l == from) l = to;
        }
      }
    }
  }

  for (int id = 0; id < 3; ++id) {
    std::vector<int> members;
    for (int k = 0; k < 3; ++k) {
      if (label[k] == id) members.push_back(k);
    }
    if (members.empty()) continue;
    if (members.size() == 1) {
      out.distinct.push_back({roots[members[0]], 1, std::max(1, geometric_dim(x, roots[members[0]], tol))});
      continue;
    }
    // The polished roots of a multiple root scatter unevenly, so their mean
    // is poor. The trace minus the simple roots is accurate.
    Cplx mean = trace(x);
    bool bitwise_equal = true;
    for (int k = 0; k < 3; ++k) {
      if (label[k] != id) mean -= roots[k];
    }
    for (int k : members) bitwise_equal = bitwise_equal && roots[k] == roots[members[0]];
    mean /= static_cast<double>(members.size());
    if (!bitwise_equal) out.clustered = true;

    const int multiplicity = static_cast<int>(members.size());
    const int dim = geometric_dim(x, mean, tol);
    if (dim >= 1) {
      out.distinct.push_back({mean, multiplicity, std::min(dim, multiplicity)});
    } else {
      // x - mean*e is nonsingular: the roots are close but genuinely distinct.
      for (int k : members) out.distinct.push_back({roots[k], 1, 1});
    }
  }
  return out;
}

bool is_ordinary(const Mat3& x, double tol) {
  const Spectrum spectrum = eigen(x, tol);
  if (spectrum.distinct.size() == 3) return true;
  return std::all_of(spectrum.distinct.begin(), spectrum.distinct.end(),
                     [](const DistinctEigenvalue& d) { return d.geometric_dim == 1; });
}

double minpoly_defect(const Mat3& x) {
  const std::array<Mat3, 3> powers{Mat3::identity(), x, x * x};
  Eigen::Matrix<std::complex<double>, 9, 3> krylov;
  for (int j = 0; j < 3; ++j) {
    const double n = frobenius_norm(powers[j]);
    if (n == 0.0) return 0.0;
    for (int k = 0; k < 9; ++k) krylov(k, j) = powers[j].entries()[k] / n;
  }
  const Eigen::JacobiSVD<Eigen::Matrix<std::complex<double>, 9, 3>> svd(krylov);
  const Eigen::Vector3d sv = svd.singularValues();
  return sv(2) / sv(0);
}

}  // namespace whitehead
