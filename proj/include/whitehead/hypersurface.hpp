#pragma once

#include <array>
#include <vector>

#include "whitehead/intpoly.hpp"
#include "whitehead/mat3.hpp"
#include "whitehead/random.hpp"

namespace whitehead {

/// t = tr(a) = tr(b), tbar = tr(abar), s = tr(ab), sbar = tr(abar bbar), r = tr(abar b)
/// for the symmetric pair b = a^T.
struct TraceCoords {
  Cplx t, tbar, s, sbar, r;

  std::array<Cplx, kNumVars> as_array() const { return {t, tbar, s, sbar, r}; }
  static TraceCoords from_array(const std::array<Cplx, kNumVars>& x) { return {x[0], x[1], x[2], x[3], x[4]}; }
  Cplx& operator[](Var v);
  Cplx operator[](Var v) const;

  friend bool operator==(const TraceCoords&, const TraceCoords&) = default;
};

/// Largest |difference| between corresponding coordinates.
double coord_distance(const TraceCoords& x, const TraceCoords& y);

/// Coordinates plus the two word traces tr(a b abar bbar), tr(b a bbar abar) that
/// distinguish the two conjugacy classes over one point.
struct ExtendedCoords {
  TraceCoords base;
  Cplx t1212bar;
  Cplx t2121bar;
  bool separated(double tol) const;
};

struct HypersurfacePoint {
  TraceCoords coords;
  double residual = 0.0;  // |F(coords)|
};

/// The defining polynomial F of the hypersurface.
const IntPoly5& hypersurface_polynomial();

TraceCoords coords_of(const Mat3& a, const Mat3& b);
ExtendedCoords extended_coords_of(const Mat3& a, const Mat3& b);

/// max(|tr a - tr b|, |tr(abar) - tr(bbar)|, |tr(abar b) - tr(a bbar)|), each relative to 1 + size.
/// Vanishes when b = a^T.
double slice_defect(const Mat3& a, const Mat3& b);

/// The three skew matrices whose dependence is the commuting condition y a = b y:
/// M1 = a bbar abar b a - b a bbar abar b, M2 = a - b, M3 = bbar a b - a b abar.
struct Pencil {
  Mat3 m1, m2, m3;
};
Pencil pencil_of(const Mat3& a, const Mat3& b);

/// pencil_of(a, a^T) written as X - X^T, so each matrix is skew to the last
/// bit even when it is tiny (a near e).
Pencil transpose_pencil(const Mat3& a);

/// tr(M1 M2 M3). For b = a^T it equals F(coords_of(a, b)).
Cplx k_matrix(const Mat3& a, const Mat3& b);

Cplx f_eval(const TraceCoords& c);
/// 1 + largest term magnitude of F at c.
double f_scale(const TraceCoords& c);
/// |F(c)| <= tol * f_scale(c)
bool on_hypersurface(const TraceCoords& c, double tol);

enum class FreeCoord { s, sbar };

/// Points of F = 0 over the four fixed coordinates of `fixed`; the value of the
/// free coordinate in `fixed` is ignored. Cardano roots, Newton-polished on F.
std::vector<HypersurfacePoint> sample(const TraceCoords& fixed, FreeCoord free);

/// Draws the four fixed coordinates as standard complex normals, then samples.
std::vector<HypersurfacePoint> sample_random(SeedStream& rng, FreeCoord free);

}  // namespace whitehead
