#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "whitehead/intpoly.hpp"
#include "whitehead/mat3.hpp"

namespace whitehead {

/// Raised when an argument that must lie in SL(3,C) has |det - 1| > kDetGuardTol.
class DetGuardError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Word in a, a^-1, b, b^-1 written as signed generator indices +1, -1, +2, -2,
/// so t_{1 2bar^2} = tr(a b^-1 b^-1) is the word {1, -2, -2}.
class Word {
 public:
  Word() = default;
  /// Throws std::invalid_argument on a token outside {+-1, +-2}.
  explicit Word(std::vector<int> tokens);
  Word(std::initializer_list<int> tokens) : Word(std::vector<int>(tokens)) {}

  const std::vector<int>& tokens() const { return tokens_; }
  bool empty() const { return tokens_.empty(); }
  std::size_t size() const { return tokens_.size(); }
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<int> tokens_;
};

class WordParseError : public std::invalid_argument {
 public:
  WordParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Signed integers separated by commas and/or whitespace: "1,-2,-2", "2 2 2".
/// Blank input is the empty word.
Word parse_word(std::string_view text);

/// Throws DetGuardError unless |det(x) - 1| <= tol.
void require_unimodular(const Mat3& x, const char* name, double tol = kDetGuardTol);

/// Left-to-right product of the letters, inverses as adjugates.
Mat3 eval_word(const Word& w, const Mat3& a, const Mat3& b);
Cplx word_trace(const Word& w, const Mat3& a, const Mat3& b);

// Right-hand sides of the Cayley-Hamilton consequences on SL(3,C). Each
// returns the combination that the literal product on the left must equal.

/// a^2 = tr(a) a - tr(abar) e + abar
Mat3 ch_square(const Mat3& a);
/// a^3 = (tr(a)^2 - tr(abar)) a + (1 - tr(a) tr(abar)) e + tr(a) abar
Mat3 ch_cube(const Mat3& a);
/// a b a expanded linearly in a, abar, b and the products abar b, b abar.
Mat3 ch_aba(const Mat3& a, const Mat3& b);
/// a b a = tr(ab) a - tr(abar bbar) bbar + bbar abar bbar
Mat3 ch_aba_alt(const Mat3& a, const Mat3& b);

/// Word trace paired with its closed form in the trace coordinates of the
/// symmetric pair (a, b = a^T).
struct ClosedForm {
  std::string name;  // subscript label, e.g. "1 2bar^2"
  Word word;
  IntPoly5 formula;
};

using ClosedFormTable = std::vector<ClosedForm>;

/// The eight closed forms, in the order
/// 2^3, 2bar^3, 1^2 2, 1bar^2 2bar, 1bar 2^2, 1 2bar^2, 1 2 1 2bar, 1bar 2bar 1bar 2.
const ClosedFormTable& closed_form_table();

/// Formula stored for `name`; throws std::out_of_range if absent.
const IntPoly5& closed_form(const ClosedFormTable& table, std::string_view name);

}  // namespace whitehead
