#include "whitehead/certificate.hpp"

#include "whitehead/hypersurface.hpp"

namespace whitehead {

namespace {

struct Vars {
  IntPoly5 t = IntPoly5::variable(Var::t);
  IntPoly5 tb = IntPoly5::variable(Var::tbar);
  IntPoly5 s = IntPoly5::variable(Var::s);
  IntPoly5 sb = IntPoly5::variable(Var::sbar);
  IntPoly5 r = IntPoly5::variable(Var::r);
};

}  // namespace

Certificate certify(std::string name, const IntPoly5& lhs, const IntPoly5& rhs) {
  Certificate out;
  out.name = std::move(name);
  out.lhs_terms = lhs.canonical_terms();
  out.rhs_terms = rhs.canonical_terms();
  out.diff = (lhs - rhs).canonical_terms();
  out.equal = out.diff.empty();
  return out;
}

IntPoly5 substituted_expression(const ClosedFormTable& table) {
  const Vars v;
  const auto& [t, tb, s, sb, r] = v;
  const IntPoly5& t222 = closed_form(table, "2^3");
  const IntPoly5& tb222 = closed_form(table, "2bar^3");
  const IntPoly5& t112 = closed_form(table, "1^2 2");
  const IntPoly5& tb112 = closed_form(table, "1bar^2 2bar");
  const IntPoly5& tb122 = closed_form(table, "1bar 2^2");
  const IntPoly5& t1b2b2 = closed_form(table, "1 2bar^2");
  const IntPoly5& t121b2 = closed_form(table, "1 2 1 2bar");
  const IntPoly5& tb1b2b12 = closed_form(table, "1bar 2bar 1bar 2");

  return r * (t - tb.pow(2)) * t121b2 + r * (t * tb - 1) * t112 + r * tb * (2 * sb - s.pow(2)) +
         r * (t.pow(2) - tb) * tb1b2b12 + r * (1 - t * tb) * tb112 + r * t * (sb.pow(2) - 2 * s) +
         t1b2b2 * (tb * t121b2 - t * t112 + s.pow(2) - 2 * sb) - tb122 * s + t222 -
         tb122 * (t * tb1b2b12 - tb * tb112 + sb.pow(2) - 2 * s) + t1b2b2 * sb - tb222;
}

IntPoly5 penultimate_expression(const ClosedFormTable& table) {
  const Vars v;
  const auto& [t, tb, s, sb, r] = v;
  const IntPoly5& t112 = closed_form(table, "1^2 2");
  const IntPoly5& tb112 = closed_form(table, "1bar^2 2bar");
  const IntPoly5& tb122 = closed_form(table, "1bar 2^2");
  const IntPoly5& t1b2b2 = closed_form(table, "1 2bar^2");
  const IntPoly5& t121b2 = closed_form(table, "1 2 1 2bar");
  const IntPoly5& tb1b2b12 = closed_form(table, "1bar 2bar 1bar 2");

  return (r * (t - tb.pow(2)) + tb * t1b2b2) * t121b2 + (r * (t.pow(2) - tb) - t * tb122) * tb1b2b12 +
         (r * (t * tb - 1) - t * t1b2b2) * t112 + (r * (1 - t * tb) + tb * tb122) * tb112 +
         (s.pow(2) - sb) * t1b2b2 + (s - sb.pow(2)) * tb122 + r * tb * (2 * sb - s.pow(2)) +
         r * t * (sb.pow(2) - 2 * s) + t.pow(3) - tb.pow(3);
}

IntPoly5 explicit_products_expression(bool include_last) {
  const Vars v;
  const auto& [t, tb, s, sb, r] = v;
  IntPoly5 out = (r * t - t.pow(2) * tb + tb * s) * (t * sb + (s + tb) * r + tb * (1 - t * tb)) +
                 (t * tb.pow(2) - r * tb - t * sb) * (tb * s + (t + sb) * r + t * (1 - t * tb)) +
                 (t.pow(3) - r - t * s) * (t * s - t * tb + r) + (r + tb * sb - tb.pow(3)) * (tb * sb - t * tb + r) +
                 (s.pow(2) - sb) * (tb * r - t.pow(2) + s) + (s - sb.pow(2)) * (t * r - tb.pow(2) + sb) +
                 r * tb * (2 * sb - s.pow(2)) + r * t * (sb.pow(2) - 2 * s);
  if (include_last) out += t.pow(3) - tb.pow(3);
  return out;
}

Certificate verify_substituted(const ClosedFormTable& table) {
  return certify("substituted", substituted_expression(table), hypersurface_polynomial());
}

Certificate verify_penultimate(const ClosedFormTable& table) {
  return certify("penultimate", penultimate_expression(table), hypersurface_polynomial());
}

Certificate verify_explicit_products() {
  return certify("explicit_products", explicit_products_expression(), hypersurface_polynomial());
}

}  // namespace whitehead
