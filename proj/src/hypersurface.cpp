#include "whitehead/hypersurface.hpp"

#include <algorithm>
#include <cmath>

#include "whitehead/cubic.hpp"
#include "whitehead/words.hpp"

namespace whitehead {

Cplx& TraceCoords::operator[](Var v) {
  switch (v) {
    case Var::t: return t;
    case Var::tbar: return tbar;
    case Var::s: return s;
    case Var::sbar: return sbar;
    case Var::r: return r;
  }
  return r;
}

Cplx TraceCoords::operator[](Var v) const { return as_array()[static_cast<int>(v)]; }

double coord_distance(const TraceCoords& x, const TraceCoords& y) {
  const auto xs = x.as_array();
  const auto ys = y.as_array();
  double out = 0.0;
  for (int k = 0; k < kNumVars; ++k) out = std::max(out, std::abs(xs[k] - ys[k]));
  return out;
}

bool ExtendedCoords::separated(double tol) const {
  return std::abs(t1212bar - t2121bar) > tol * (1.0 + std::abs(t1212bar));
}

const IntPoly5& hypersurface_polynomial() {
  static const IntPoly5 f = [] {
    const auto t = IntPoly5::variable(Var::t);
    const auto tb = IntPoly5::variable(Var::tbar);
    const auto s = IntPoly5::variable(Var::s);
    const auto sb = IntPoly5::variable(Var::sbar);
    const auto r = IntPoly5::variable(Var::r);
    IntPoly5 out = s.pow(3) - sb.pow(3) + (r * tb - 2 * t.pow(2)) * s.pow(2) - (r * t - 2 * tb.pow(2)) * sb.pow(2) +
                   (t.pow(4) + t.pow(2) * tb + r.pow(2) * t - r * (t.pow(2) * tb + 3 * t)) * s -
                   (tb.pow(4) + tb.pow(2) * t + r.pow(2) * tb - r * (tb.pow(2) * t + 3 * tb)) * sb +
                   (t.pow(3) - tb.pow(3)) * (r + 1 - t * tb);
#ifdef WHITEHEAD_CORRUPT_F
    // Mutation-control build: one coefficient off by one.
    out += s.pow(3);
#endif
    return out;
  }();
  return f;
}

TraceCoords coords_of(const Mat3& a, const Mat3& b) {
  require_unimodular(a, "a");
  require_unimodular(b, "b");
  const Mat3 abar = adjugate(a);
  const Mat3 bbar = adjugate(b);
  return {trace(a), trace(abar), trace(a * b), trace(abar * bbar), trace(abar * b)};
}

ExtendedCoords extended_coords_of(const Mat3& a, const Mat3& b) {
  return {coords_of(a, b), word_trace(Word{1, 2, -1, -2}, a, b), word_trace(Word{2, 1, -2, -1}, a, b)};
}

double slice_defect(const Mat3& a, const Mat3& b) {
  const Mat3 abar = adjugate(a);
  const Mat3 bbar = adjugate(b);
  auto rel = [](Cplx x, Cplx y) { return std::abs(x - y) / (1.0 + std::max(std::abs(x), std::abs(y))); };
  return std::max({rel(trace(a), trace(b)), rel(trace(abar), trace(bbar)), rel(trace(abar * b), trace(a * bbar))});
}

Pencil pencil_of(const Mat3& a, const Mat3& b) {
  require_unimodular(a, "a");
  require_unimodular(b, "b");
  const Mat3 abar = adjugate(a);
  const Mat3 bbar = adjugate(b);
  return {a * bbar * abar * b * a - b * a * bbar * abar * b, a - b, bbar * a * b - a * b * abar};
}

Pencil transpose_pencil(const Mat3& a) {
  require_unimodular(a, "a");
  const Mat3 b = transpose(a);
  const Mat3 abar = adjugate(a);
  const Mat3 bbar = adjugate(b);
  const Mat3 x1 = a * bbar * abar * b * a;
  const Mat3 x3 = bbar * a * b;
  return {x1 - transpose(x1), a - b, x3 - transpose(x3)};
}

Cplx k_matrix(const Mat3& a, const Mat3& b) {
  const Pencil p = pencil_of(a, b);
  if (frobenius_norm(b - transpose(a)) <= 1e-12 * std::max(1.0, frobenius_norm(a))) {
    for (const Mat3* m : {&p.m1, &p.m2, &p.m3}) {
      if (!is_skew(*m, 1e-6)) throw std::logic_error("k_matrix: pencil matrix not skew although b = a^T");
    }
  }
  return trace(p.m1 * p.m2 * p.m3);
}

Cplx f_eval(const TraceCoords& c) { return hypersurface_polynomial().evaluate(c.as_array()); }

double f_scale(const TraceCoords& c) { return 1.0 + hypersurface_polynomial().term_scale(c.as_array()); }

bool on_hypersurface(const TraceCoords& c, double tol) { return std::abs(f_eval(c)) <= tol * f_scale(c); }

std::vector<HypersurfacePoint> sample(const TraceCoords& fixed, FreeCoord free) {
  const Var v = free == FreeCoord::s ? Var::s : Var::sbar;
  const IntPoly5& f = hypersurface_polynomial();
  const auto coeffs = f.coefficients_in(v, fixed.as_array());
  if (coeffs.size() != 4 || coeffs[3] == Cplx{}) {
    throw std::logic_error("sample: F is not a cubic in the free coordinate");
  }
  const auto roots = solve_cubic(coeffs[3], coeffs[2], coeffs[1], coeffs[0]);

  std::vector<HypersurfacePoint> out;
  for (Cplx root : roots) {
    TraceCoords c = fixed;
    c[v] = root;
    // Newton on F in the free coordinate; derivative from the univariate coefficients.
    for (int iter = 0; iter < 3; ++iter) {
      const Cplx value = f_eval(c);
      const Cplx x = c[v];
      const Cplx slope = (3.0 * coeffs[3] * x + 2.0 * coeffs[2]) * x + coeffs[1];
      if (value == Cplx{} || slope == Cplx{}) break;
      TraceCoords next = c;
      next[v] = x - value / slope;
      if (!(std::abs(f_eval(next)) < std::abs(value))) break;
      c = next;
    }
    out.push_back({c, std::abs(f_eval(c))});
  }
  return out;
}

std::vector<HypersurfacePoint> sample_random(SeedStream& rng, FreeCoord free) {
  TraceCoords fixed{};
  for (Var v : {Var::t, Var::tbar, Var::s, Var::sbar, Var::r}) fixed[v] = rng.complex_normal();
  return sample(fixed, free);
}

}  // namespace whitehead
