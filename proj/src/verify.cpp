#include "whitehead/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>

#include "whitehead/certificate.hpp"
#include "whitehead/constants.hpp"
#include "whitehead/hypersurface.hpp"
#include "whitehead/json_io.hpp"
#include "whitehead/random.hpp"
#include "whitehead/skewmap.hpp"
#include "whitehead/words.hpp"

namespace whitehead {

namespace {

constexpr std::size_t kMaxRecordedFailures = 5;

// Runs `check` once per sample. check returns the error of that sample and
// fills `inputs` with whatever is needed to replay it.
SuiteResult run_suite(const std::string& name, const VerifyConfig& cfg, double tolerance,
                      const std::function<double(SeedStream&, json&)>& check) {
  const auto start = std::chrono::steady_clock::now();
  SuiteResult result;
  result.name = name;
  result.tolerance = tolerance;
  const SeedStream suite_stream = SeedStream(cfg.seed).split(name);
  for (int i = 0; i < cfg.samples; ++i) {
    SeedStream rng = suite_stream.split(static_cast<std::uint64_t>(i));
    json inputs = json::object();
    const double err = check(rng, inputs);
    ++result.total;
    result.max_error = std::isfinite(err) ? std::max(result.max_error, err) : std::numeric_limits<double>::infinity();
    if (err <= tolerance) {
      ++result.passed;
    } else if (result.failures.size() < kMaxRecordedFailures) {
      result.failures.push_back({{"suite", name}, {"seed", cfg.seed}, {"sample", i}, {"error", err}, {"inputs", inputs}});
    }
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

double rel(const Mat3& lhs, const Mat3& rhs, std::initializer_list<double> term_norms) {
  double scale = 1.0;
  for (double n : term_norms) scale = std::max(scale, n);
  return frobenius_norm(lhs - rhs) / scale;
}

Mat3 random_skew(SeedStream& rng) {
  return to_skew({{rng.complex_normal(), rng.complex_normal(), rng.complex_normal()}});
}

}  // namespace

SuiteResult suite_cayley_hamilton(const VerifyConfig& cfg) {
  return run_suite("cayley_hamilton", cfg, 1e-9, [](SeedStream& rng, json& inputs) {
    const Mat3 a = random_sl3(rng);
    const Mat3 b = random_sl3(rng);
    inputs = {{"a", to_json(a)}, {"b", to_json(b)}};
    const Mat3 abar = adjugate(a);
    const Mat3 bbar = adjugate(b);
    const double na = frobenius_norm(a);
    const double nab = frobenius_norm(abar);
    const double nb = frobenius_norm(b);
    const double nbb = frobenius_norm(bbar);
    const double ta = std::abs(trace(a));
    const double tab = std::abs(trace(abar));

    const Mat3 aba = a * b * a;
    const double e_square = rel(a * a, ch_square(a), {na * na, ta * na, tab, nab});
    const double e_cube = rel(a * a * a, ch_cube(a), {na * na * na, (ta * ta + tab) * na, ta * tab, ta * nab});
    const double aba_scale = std::max({na * nb * na, nab * nb, std::abs(trace(a * b)) * na, std::abs(trace(b)) * nab,
                                       tab * nb, std::abs(trace(abar * b)), tab * std::abs(trace(b))});
    const double alt_scale =
        std::max({na * nb * na, std::abs(trace(a * b)) * na, std::abs(trace(abar * bbar)) * nbb, nbb * nab * nbb});
    const double e_aba = rel(aba, ch_aba(a, b), {aba_scale});
    const double e_alt = rel(aba, ch_aba_alt(a, b), {alt_scale});
    const double e_consistency = rel(ch_aba(a, b), ch_aba_alt(a, b), {aba_scale, alt_scale});
    return std::max({e_square, e_cube, e_aba, e_alt, e_consistency});
  });
}

SuiteResult suite_skew_lemmas(const VerifyConfig& cfg) {
  return run_suite("skew_lemmas", cfg, 1e-9, [](SeedStream& rng, json& inputs) {
    const Mat3 u = random_skew(rng);
    const Mat3 v = random_skew(rng);
    const Mat3 w = random_skew(rng);
    inputs = {{"u", to_json(u)}, {"v", to_json(v)}, {"w", to_json(w)}};
    const SkewVec uu = to_vec(u);
    const SkewVec vv = to_vec(v);
    const SkewVec ww = to_vec(w);
    const double nu = frobenius_norm(u);
    const double nv = frobenius_norm(v);
    const double nw = frobenius_norm(w);

    const SkewVec comm = to_vec(u * v - v * u);
    const SkewVec crossed = cross(uu, vv);
    double e_cross = 0.0;
    for (int k = 0; k < 3; ++k) {
      e_cross = std::max(e_cross, std::abs(comm.v[k] - static_cast<double>(kCommutatorSign) * crossed.v[k]));
    }
    e_cross /= std::max(1.0, nu * nv);
    const double e_triple = std::abs(trace(u * v * w) - static_cast<double>(kTraceTripleSign) * triple(uu, vv, ww)) /
                            std::max(1.0, nu * nv * nw);
    return std::max(e_cross, e_triple);
  });
}

SuiteResult suite_closed_forms(const VerifyConfig& cfg) {
  return run_suite("closed_forms", cfg, 1e-9, [](SeedStream& rng, json& inputs) {
    const Mat3 a = random_sl3(rng);
    const Mat3 b = transpose(a);
    inputs = {{"a", to_json(a)}};
    const auto coords = coords_of(a, b).as_array();
    double worst = 0.0;
    for (const auto& entry : closed_form_table()) {
      const Cplx direct = word_trace(entry.word, a, b);
      const Cplx predicted = entry.formula.evaluate(coords);
      const double scale = std::max({1.0, std::abs(direct), entry.formula.term_scale(coords)});
      worst = std::max(worst, std::abs(direct - predicted) / scale);
    }
    return worst;
  });
}

SuiteResult suite_central_identity(const VerifyConfig& cfg) {
  return run_suite("central_identity", cfg, 1e-8, [](SeedStream& rng, json& inputs) {
    const Mat3 a = random_sl3(rng);
    const Mat3 b = transpose(a);
    inputs = {{"a", to_json(a)}};
    const Cplx k = k_matrix(a, b);
    const Cplx f = f_eval(coords_of(a, b));
    return std::abs(static_cast<double>(kPencilSign) * k - f) / (1.0 + std::abs(k));
  });
}

SuiteResult suite_antisymmetry(const VerifyConfig& cfg) {
  const IntPoly5& f = hypersurface_polynomial();
  const bool symbolic = f.swap_conjugates() == -f;
  SuiteResult result = run_suite("antisymmetry", cfg, 1e-12, [symbolic](SeedStream& rng, json& inputs) {
    TraceCoords c{};
    for (Var v : {Var::t, Var::tbar, Var::s, Var::sbar, Var::r}) c[v] = rng.complex_normal();
    inputs = {{"coords", to_json(c)}};
    if (!symbolic) return std::numeric_limits<double>::infinity();
    const TraceCoords swapped{c.tbar, c.t, c.sbar, c.s, c.r};
    return std::abs(f_eval(swapped) + f_eval(c)) / f_scale(c);
  });
  if (!symbolic && result.failures.size() < kMaxRecordedFailures) {
    result.failures.insert(result.failures.begin(), json{{"suite", "antisymmetry"}, {"symbolic", false}});
  }
  return result;
}

SuiteResult suite_certificates(const VerifyConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  SuiteResult result;
  result.name = "certificates";
  result.tolerance = 0.0;
  for (const Certificate& cert : {verify_substituted(), verify_penultimate(), verify_explicit_products()}) {
    ++result.total;
    result.max_error = std::max(result.max_error, static_cast<double>(cert.diff.size()));
    if (cert.equal) {
      ++result.passed;
    } else {
      json diff = json::array();
      for (const auto& term : cert.diff) diff.push_back(to_json(term));
      result.failures.push_back({{"suite", "certificates"}, {"seed", cfg.seed}, {"certificate", cert.name}, {"diff", diff}});
    }
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<SuiteResult> run_verify(const VerifyConfig& cfg) {
  return {suite_cayley_hamilton(cfg), suite_skew_lemmas(cfg),  suite_closed_forms(cfg),
          suite_central_identity(cfg), suite_antisymmetry(cfg), suite_certificates(cfg)};
}

json to_json(const SuiteResult& r) {
  return {{"suite", r.name},        {"passed", r.passed},       {"total", r.total},
          {"ok", r.ok()},           {"max_error", r.max_error}, {"tolerance", r.tolerance},
          {"failures", r.failures}};
}

}  // namespace whitehead
