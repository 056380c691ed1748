#include "whitehead/cubic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace whitehead {

using Cplx = std::complex<double>;

Cplx principal_cbrt(Cplx z) {
  if (z == Cplx{}) return {};
  return std::polar(std::cbrt(std::abs(z)), std::arg(z) / 3.0);
}

namespace {

Cplx horner(const std::array<Cplx, 4>& c, Cplx x) { return ((c[3] * x + c[2]) * x + c[1]) * x + c[0]; }
Cplx horner_derivative(const std::array<Cplx, 4>& c, Cplx x) {
  return (3.0 * c[3] * x + 2.0 * c[2]) * x + c[1];
}

// Newton step kept only if it does not increase |p|; a vanishing derivative
// means the root is (numerically) multiple and Newton cannot improve it.
Cplx polish(const std::array<Cplx, 4>& c, Cplx x) {
  for (int step = 0; step < 2; ++step) {
    const Cplx value = horner(c, x);
    const Cplx slope = horner_derivative(c, x);
    if (value == Cplx{} || slope == Cplx{}) break;
    const Cplx next = x - value / slope;
    if (!(std::abs(horner(c, next)) <= std::abs(value))) break;
    x = next;
  }
  return x;
}

}  // namespace

std::array<Cplx, 3> solve_cubic(Cplx c3, Cplx c2, Cplx c1, Cplx c0) {
  if (c3 == Cplx{}) throw std::invalid_argument("solve_cubic: leading coefficient is zero");
  const Cplx b = c2 / c3;
  const Cplx c = c1 / c3;
  const Cplx d = c0 / c3;

  // x = y - b/3 gives y^3 + p y + q = 0.
  const Cplx shift = b / 3.0;
  const Cplx p = c - b * b / 3.0;
  const Cplx q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;

  const Cplx disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
  // Pick the sign that avoids cancellation in u^3.
  Cplx u3 = -q / 2.0 + disc;
  const Cplx alt = -q / 2.0 - disc;
  if (std::abs(alt) > std::abs(u3)) u3 = alt;
  const Cplx u = principal_cbrt(u3);

  const Cplx omega{-0.5, std::numbers::sqrt3 / 2.0};
  std::array<Cplx, 3> roots;
  if (u == Cplx{}) {
    // u3 == 0 forces p == q == 0: a triple root.
    roots = {-shift, -shift, -shift};
  } else {
    const Cplx v = -p / (3.0 * u);
    Cplx w = 1.0;
    for (auto& root : roots) {
      root = w * u + std::conj(w) * v - shift;
      w *= omega;
    }
  }

  const std::array<Cplx, 4> monic{d, c, b, 1.0};
  for (auto& root : roots) root = polish(monic, root);
  return roots;
}

}  // namespace whitehead
