#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace whitehead {

/// The five trace coordinates, in storage order.
enum class Var : int { t = 0, tbar = 1, s = 2, sbar = 3, r = 4 };

inline constexpr int kNumVars = 5;
using Exponent = std::array<std::uint8_t, kNumVars>;

struct Term {
  Exponent exp{};
  std::int64_t coef = 0;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial in (t, tbar, s, sbar, r) with int64 coefficients.
/// Arithmetic is checked: coefficient or exponent overflow throws
/// std::overflow_error. Zero coefficients are never stored.
class IntPoly5 {
 public:
  using TermMap = std::map<Exponent, std::int64_t>;

  IntPoly5() = default;
  IntPoly5(std::int64_t constant);  // NOLINT(google-explicit-constructor): integer literals in formulas
  static IntPoly5 variable(Var v);
  static IntPoly5 monomial(const Exponent& exp, std::int64_t coef);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int total_degree() const;
  int degree_in(Var v) const;
  std::int64_t coefficient(const Exponent& exp) const;

  IntPoly5& operator+=(const IntPoly5& rhs);
  IntPoly5& operator-=(const IntPoly5& rhs);
  IntPoly5& operator*=(const IntPoly5& rhs);
  IntPoly5& operator*=(std::int64_t k);

  friend IntPoly5 operator+(IntPoly5 lhs, const IntPoly5& rhs) { return lhs += rhs; }
  friend IntPoly5 operator-(IntPoly5 lhs, const IntPoly5& rhs) { return lhs -= rhs; }
  friend IntPoly5 operator*(IntPoly5 lhs, const IntPoly5& rhs) { return lhs *= rhs; }
  friend IntPoly5 operator-(IntPoly5 x) { return x *= -1; }
  friend bool operator==(const IntPoly5&, const IntPoly5&) = default;

  IntPoly5 pow(unsigned n) const;

  /// Image under (t, tbar, s, sbar, r) -> (tbar, t, sbar, s, r).
  IntPoly5 swap_conjugates() const;

  /// Nested (Horner) evaluation, variables in storage order.
  std::complex<double> evaluate(const std::array<std::complex<double>, kNumVars>& x) const;
  /// max over terms of |coef * monomial(x)|: the floating-point scale of evaluate(x).
  double term_scale(const std::array<std::complex<double>, kNumVars>& x) const;

  /// Coefficients (ascending degree) of this polynomial viewed as univariate in
  /// `free`, with every other variable set from `x` (x[free] is ignored).
  std::vector<std::complex<double>> coefficients_in(Var free,
                                                    const std::array<std::complex<double>, kNumVars>& x) const;

  /// Terms in graded lexicographic order, highest first.
  std::vector<Term> canonical_terms() const;
  std::string to_string() const;

 private:
  TermMap terms_;
};

/// t^3 tbar style rendering of one monomial ("1" for the empty one).
std::string monomial_string(const Exponent& exp);

}  // namespace whitehead
