#pragma once

#include <string>
#include <vector>

#include "whitehead/intpoly.hpp"
#include "whitehead/words.hpp"

namespace whitehead {

/// Outcome of an exact polynomial identity check lhs == rhs.
struct Certificate {
  std::string name;
  std::vector<Term> lhs_terms;  // canonical order
  std::vector<Term> rhs_terms;
  bool equal = false;
  std::vector<Term> diff;  // canonical terms of lhs - rhs; empty iff equal
};

Certificate certify(std::string name, const IntPoly5& lhs, const IntPoly5& rhs);

// Intermediate stages of the K expansion, each a polynomial once the closed
// forms of `table` are substituted for the word traces.

/// Stage before collecting: uses all eight closed forms, including 2^3 and 2bar^3.
IntPoly5 substituted_expression(const ClosedFormTable& table = closed_form_table());

/// Collected by word trace:
/// (r(t - tbar^2) + tbar t_{1 2bar^2}) t_{1 2 1 2bar} + ... + t^3 - tbar^3.
IntPoly5 penultimate_expression(const ClosedFormTable& table = closed_form_table());

/// The same stage with every closed form written out as an explicit product.
/// `include_last` drops the trailing t^3 - tbar^3 when false (mutation control).
IntPoly5 explicit_products_expression(bool include_last = true);

Certificate verify_substituted(const ClosedFormTable& table = closed_form_table());
Certificate verify_penultimate(const ClosedFormTable& table = closed_form_table());
Certificate verify_explicit_products();

}  // namespace whitehead
