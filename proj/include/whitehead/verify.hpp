#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace whitehead {

inline constexpr std::uint64_t kDefaultSeed = 42;

struct VerifyConfig {
  std::uint64_t seed = kDefaultSeed;
  int samples = 1000;
};

/// One identity family checked on `total` seeded inputs.
struct SuiteResult {
  std::string name;
  int passed = 0;
  int total = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  double seconds = 0.0;
  /// Replay data for the first few failures: suite, seed, sample index and inputs.
  std::vector<nlohmann::json> failures;

  bool ok() const { return total > 0 && passed == total; }
};

// Each suite draws from SeedStream(seed).split(<suite name>).split(sample index).

/// a^2, a^3 and both a b a expansions, plus their mutual consistency, on
/// independent random SL(3,C) pairs. Relative error <= 1e-9.
SuiteResult suite_cayley_hamilton(const VerifyConfig& cfg);
/// Commutator / cross product and trace / determinant lemmas with the pinned
/// signs, on random skew triples. Relative error <= 1e-9.
SuiteResult suite_skew_lemmas(const VerifyConfig& cfg);
/// The eight closed forms against direct word traces on (a, a^T). <= 1e-9.
SuiteResult suite_closed_forms(const VerifyConfig& cfg);
/// |k_matrix(a, a^T) - F(coords_of(a, a^T))| <= 1e-8 (1 + |K|).
SuiteResult suite_central_identity(const VerifyConfig& cfg);
/// F o swap == -F exactly, and numerically |F(swap c) + F(c)| <= 1e-12 f_scale(c).
SuiteResult suite_antisymmetry(const VerifyConfig& cfg);
/// The three exact expansion certificates against F (sample count ignored).
SuiteResult suite_certificates(const VerifyConfig& cfg);

std::vector<SuiteResult> run_verify(const VerifyConfig& cfg);

nlohmann::json to_json(const SuiteResult& result);

}  // namespace whitehead
