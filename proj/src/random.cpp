#include "whitehead/random.hpp"

#include <cmath>
#include <numbers>

#include "whitehead/cubic.hpp"

namespace whitehead {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

SeedStream::SeedStream(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

double SeedStream::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double SeedStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Cplx SeedStream::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Cplx{re, im} * std::numbers::sqrt2 * 0.5;
}

SeedStream SeedStream::split(std::uint64_t tag) const {
  return SeedStream(splitmix64(seed_ ^ splitmix64(tag + 0x632be59bd9b4e019ULL)));
}

SeedStream SeedStream::split(std::string_view name) const {
  // FNV-1a
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : name) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return split(h);
}

Mat3 random_gaussian_matrix(SeedStream& rng) {
  Mat3 out;
  for (auto& entry : out.entries()) entry = rng.complex_normal();
  return out;
}

Mat3 random_sl3(SeedStream& rng) {
  for (;;) {
    Mat3 x = random_gaussian_matrix(rng);
    const Cplx d = det(x);
    if (std::abs(d) < 1e-8) continue;
    return x * (1.0 / principal_cbrt(d));
  }
}

}  // namespace whitehead
