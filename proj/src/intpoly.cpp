#include "whitehead/intpoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace whitehead {

using Cplx = std::complex<double>;

namespace {

constexpr std::array<const char*, kNumVars> kVarNames{"t", "tbar", "s", "sbar", "r"};

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(x, y, &out)) {
    throw std::overflow_error("IntPoly5: coefficient overflow in " + std::to_string(x) + " + " + std::to_string(y));
  }
  return out;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(x, y, &out)) {
    throw std::overflow_error("IntPoly5: coefficient overflow in " + std::to_string(x) + " * " + std::to_string(y));
  }
  return out;
}

Exponent add_exponents(const Exponent& x, const Exponent& y) {
  Exponent out{};
  for (int k = 0; k < kNumVars; ++k) {
    const int e = x[k] + y[k];
    if (e > 255) throw std::overflow_error("IntPoly5: exponent overflow");
    out[k] = static_cast<std::uint8_t>(e);
  }
  return out;
}

int degree(const Exponent& e) {
  int d = 0;
  for (auto k : e) d += k;
  return d;
}

void accumulate(IntPoly5::TermMap& terms, const Exponent& exp, std::int64_t coef) {
  if (coef == 0) return;
  auto [it, inserted] = terms.try_emplace(exp, coef);
  if (inserted) return;
  it->second = checked_add(it->second, coef);
  if (it->second == 0) terms.erase(it);
}

Cplx ipow(Cplx x, int n) {
  Cplx out = 1.0;
  for (int k = 0; k < n; ++k) out *= x;
  return out;
}

using TermIter = IntPoly5::TermMap::const_iterator;

// Terms in [first, last) share exponents for variables < var and are sorted
// ascending in the exponent of var. Horner in var over descending degree.
Cplx horner(TermIter first, TermIter last, int var, const std::array<Cplx, kNumVars>& x) {
  if (var == kNumVars) return static_cast<double>(first->second);
  Cplx acc{};
  int current = -1;
  auto group_end = last;
  while (group_end != first) {
    auto group_begin = std::prev(group_end);
    const int e = group_begin->first[var];
    while (group_begin != first && std::prev(group_begin)->first[var] == e) --group_begin;
    if (current >= 0) acc *= ipow(x[var], current - e);
    acc += horner(group_begin, group_end, var + 1, x);
    current = e;
    group_end = group_begin;
  }
  if (current > 0) acc *= ipow(x[var], current);
  return acc;
}

}  // namespace

IntPoly5::IntPoly5(std::int64_t constant) {
  if (constant != 0) terms_.emplace(Exponent{}, constant);
}

IntPoly5 IntPoly5::variable(Var v) {
  Exponent e{};
  e[static_cast<int>(v)] = 1;
  return monomial(e, 1);
}

IntPoly5 IntPoly5::monomial(const Exponent& exp, std::int64_t coef) {
  IntPoly5 out;
  if (coef != 0) out.terms_.emplace(exp, coef);
  return out;
}

int IntPoly5::total_degree() const {
  int d = 0;
  for (const auto& [exp, coef] : terms_) d = std::max(d, degree(exp));
  return d;
}

int IntPoly5::degree_in(Var v) const {
  int d = 0;
  for (const auto& [exp, coef] : terms_) d = std::max(d, static_cast<int>(exp[static_cast<int>(v)]));
  return d;
}

std::int64_t IntPoly5::coefficient(const Exponent& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? 0 : it->second;
}

IntPoly5& IntPoly5::operator+=(const IntPoly5& rhs) {
  for (const auto& [exp, coef] : rhs.terms_) accumulate(terms_, exp, coef);
  return *this;
}

IntPoly5& IntPoly5::operator-=(const IntPoly5& rhs) {
  for (const auto& [exp, coef] : rhs.terms_) accumulate(terms_, exp, checked_mul(coef, -1));
  return *this;
}

IntPoly5& IntPoly5::operator*=(const IntPoly5& rhs) {
  TermMap product;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : rhs.terms_) accumulate(product, add_exponents(e1, e2), checked_mul(c1, c2));
  }
  terms_ = std::move(product);
  return *this;
}

IntPoly5& IntPoly5::operator*=(std::int64_t k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [exp, coef] : terms_) coef = checked_mul(coef, k);
  return *this;
}

IntPoly5 IntPoly5::pow(unsigned n) const {
  IntPoly5 out(1);
  for (unsigned k = 0; k < n; ++k) out *= *this;
  return out;
}

IntPoly5 IntPoly5::swap_conjugates() const {
  IntPoly5 out;
  for (const auto& [exp, coef] : terms_) {
    Exponent e = exp;
    std::swap(e[0], e[1]);
    std::swap(e[2], e[3]);
    out.terms_.emplace(e, coef);
  }
  return out;
}

Cplx IntPoly5::evaluate(const std::array<Cplx, kNumVars>& x) const {
  if (terms_.empty()) return {};
  return horner(terms_.begin(), terms_.end(), 0, x);
}

double IntPoly5::term_scale(const std::array<Cplx, kNumVars>& x) const {
  double scale = 0.0;
  for (const auto& [exp, coef] : terms_) {
    double mag = std::abs(static_cast<double>(coef));
    for (int k = 0; k < kNumVars; ++k) mag *= std::pow(std::abs(x[k]), exp[k]);
    scale = std::max(scale, mag);
  }
  return scale;
}

std::vector<Cplx> IntPoly5::coefficients_in(Var free, const std::array<Cplx, kNumVars>& x) const {
  const int v = static_cast<int>(free);
  std::vector<Cplx> out(static_cast<std::size_t>(degree_in(free)) + 1);
  for (const auto& [exp, coef] : terms_) {
    Cplx value = static_cast<double>(coef);
    for (int k = 0; k < kNumVars; ++k) {
      if (k != v && exp[k] != 0) value *= ipow(x[k], exp[k]);
    }
    out[exp[v]] += value;
  }
  return out;
}

std::vector<Term> IntPoly5::canonical_terms() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [exp, coef] : terms_) out.push_back({exp, coef});
  std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) {
    const int dx = degree(x.exp);
    const int dy = degree(y.exp);
    if (dx != dy) return dx > dy;
    return x.exp > y.exp;
  });
  return out;
}

std::string monomial_string(const Exponent& exp) {
  std::string out;
  for (int k = 0; k < kNumVars; ++k) {
    if (exp[k] == 0) continue;
    if (!out.empty()) out += ' ';
    out += kVarNames[k];
    if (exp[k] > 1) out += '^' + std::to_string(exp[k]);
  }
  return out.empty() ? "1" : out;
}

std::string IntPoly5::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& term : canonical_terms()) {
    const bool constant = degree(term.exp) == 0;
    std::int64_t mag = term.coef < 0 ? -term.coef : term.coef;
    if (out.empty()) {
      if (term.coef < 0) out += '-';
    } else {
      out += term.coef < 0 ? " - " : " + ";
    }
    if (mag != 1 || constant) {
      out += std::to_string(mag);
      if (!constant) out += ' ';
    }
    if (!constant) out += monomial_string(term.exp);
  }
  return out;
}

}  // namespace whitehead
