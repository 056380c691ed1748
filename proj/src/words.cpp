#include "whitehead/words.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

namespace whitehead {

Word::Word(std::vector<int> tokens) : tokens_(std::move(tokens)) {
  for (int token : tokens_) {
    if (token != 1 && token != -1 && token != 2 && token != -2) {
      throw std::invalid_argument("token " + std::to_string(token) + " out of alphabet");
    }
  }
}

std::string Word::to_string() const {
  std::string out;
  for (int token : tokens_) {
    if (!out.empty()) out += ',';
    out += std::to_string(token);
  }
  return out;
}

Word parse_word(std::string_view text) {
  std::vector<int> tokens;
  std::size_t pos = 0;
  bool expect_token = true;  // after a comma a token is mandatory
  bool saw_comma = false;
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };

  while (pos < text.size()) {
    const char c = text[pos];
    if (is_space(c)) {
      ++pos;
      continue;
    }
    if (c == ',') {
      if (expect_token) throw WordParseError("empty token", pos);
      expect_token = true;
      saw_comma = true;
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    if (c == '+' || c == '-') ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])) != 0) ++pos;
    if (pos < text.size() && !is_space(text[pos]) && text[pos] != ',') {
      throw WordParseError("unexpected character '" + std::string(1, text[pos]) + "'", pos);
    }
    std::string_view digits = text.substr(start, pos - start);
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    int value = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || end != digits.data() + digits.size()) {
      throw WordParseError("malformed integer '" + std::string(text.substr(start, pos - start)) + "'", start);
    }
    if (value != 1 && value != -1 && value != 2 && value != -2) {
      throw WordParseError("token " + std::to_string(value) + " out of alphabet", start);
    }
    tokens.push_back(value);
    expect_token = false;
  }
  if (saw_comma && expect_token) throw WordParseError("trailing comma", text.size());
  return Word(std::move(tokens));
}

void require_unimodular(const Mat3& x, const char* name, double tol) {
  const double defect = std::abs(det(x) - 1.0);
  if (!(defect <= tol)) {
    throw DetGuardError(std::string(name) + ": |det - 1| = " + std::to_string(defect) + " exceeds guard");
  }
}

Mat3 eval_word(const Word& w, const Mat3& a, const Mat3& b) {
  require_unimodular(a, "a");
  require_unimodular(b, "b");
  const Mat3 letters[4] = {adjugate(b), adjugate(a), a, b};  // indexed by token + 2, skipping 0
  Mat3 out = Mat3::identity();
  for (int token : w.tokens()) out = out * letters[token < 0 ? token + 2 : token + 1];
  return out;
}

Cplx word_trace(const Word& w, const Mat3& a, const Mat3& b) { return trace(eval_word(w, a, b)); }

Mat3 ch_square(const Mat3& a) {
  require_unimodular(a, "a");
  const Mat3 abar = adjugate(a);
  const Mat3 e = Mat3::identity();
  return trace(a) * a - trace(abar) * e + abar;
}

Mat3 ch_cube(const Mat3& a) {
  require_unimodular(a, "a");
  const Mat3 abar = adjugate(a);
  const Cplx t = trace(a);
  const Cplx tbar = trace(abar);
  return (t * t - tbar) * a + (1.0 - t * tbar) * Mat3::identity() + t * abar;
}

Mat3 ch_aba(const Mat3& a, const Mat3& b) {
  require_unimodular(a, "a");
  require_unimodular(b, "b");
  const Mat3 abar = adjugate(a);
  const Cplx tbar_a = trace(abar);
  const Cplx t_b = trace(b);
  return -(abar * b) - b * abar + trace(a * b) * a + t_b * abar + tbar_a * b +
         (trace(abar * b) - tbar_a * t_b) * Mat3::identity();
}

Mat3 ch_aba_alt(const Mat3& a, const Mat3& b) {
  require_unimodular(a, "a");
  require_unimodular(b, "b");
  const Mat3 abar = adjugate(a);
  const Mat3 bbar = adjugate(b);
  return trace(a * b) * a - trace(abar * bbar) * bbar + bbar * abar * bbar;
}

const ClosedFormTable& closed_form_table() {
  static const ClosedFormTable table = [] {
    const auto t = IntPoly5::variable(Var::t);
    const auto tb = IntPoly5::variable(Var::tbar);
    const auto s = IntPoly5::variable(Var::s);
    const auto sb = IntPoly5::variable(Var::sbar);
    const auto r = IntPoly5::variable(Var::r);
    return ClosedFormTable{
        {"2^3", Word{2, 2, 2}, t.pow(3) - 3 * t * tb + 3},
        {"2bar^3", Word{-2, -2, -2}, tb.pow(3) - 3 * t * tb + 3},
        {"1^2 2", Word{1, 1, 2}, t * s - t * tb + r},
        {"1bar^2 2bar", Word{-1, -1, -2}, tb * sb - t * tb + r},
        {"1bar 2^2", Word{-1, 2, 2}, t * r - tb.pow(2) + sb},
        {"1 2bar^2", Word{1, -2, -2}, tb * r - t.pow(2) + s},
        {"1 2 1 2bar", Word{1, 2, 1, -2}, t * sb + (s + tb) * r + tb * (1 - t * tb)},
        {"1bar 2bar 1bar 2", Word{-1, -2, -1, 2}, tb * s + (t + sb) * r + t * (1 - t * tb)},
    };
  }();
  return table;
}

const IntPoly5& closed_form(const ClosedFormTable& table, std::string_view name) {
  for (const auto& entry : table) {
    if (entry.name == name) return entry.formula;
  }
  throw std::out_of_range("no closed form named " + std::string(name));
}

}  // namespace whitehead
