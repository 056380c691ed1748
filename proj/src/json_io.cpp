#include "whitehead/json_io.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

namespace whitehead {

namespace {

constexpr std::array<std::string_view, kNumVars> kVarKeys{"t", "tbar", "s", "sbar", "r"};

json optional_json(const auto& value) { return value ? to_json(*value) : json(nullptr); }

}  // namespace

std::string_view var_name(Var v) { return kVarKeys[static_cast<int>(v)]; }

json to_json(Cplx z) { return json::array({z.real(), z.imag()}); }

json to_json(const Mat3& x) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) rows.push_back(json::array({to_json(x(i, 0)), to_json(x(i, 1)), to_json(x(i, 2))}));
  return rows;
}

json to_json(const TraceCoords& c) {
  json out = json::object();
  const auto values = c.as_array();
  for (int k = 0; k < kNumVars; ++k) out[std::string(kVarKeys[k])] = to_json(values[k]);
  return out;
}

json to_json(const Term& term) {
  json exp = json::array();
  for (auto e : term.exp) exp.push_back(static_cast<int>(e));
  return {{"exp", exp}, {"coef", term.coef}};
}

json to_json(const Certificate& cert) {
  auto terms = [](const std::vector<Term>& ts) {
    json out = json::array();
    for (const auto& t : ts) out.push_back(to_json(t));
    return out;
  };
  return {{"name", cert.name},
          {"lhs_terms", terms(cert.lhs_terms)},
          {"rhs_terms", terms(cert.rhs_terms)},
          {"equal", cert.equal},
          {"diff", terms(cert.diff)}};
}

json to_json(const Representation& rep) {
  return {{"y", to_json(rep.y)},
          {"z", to_json(rep.z)},
          {"relation_residual", rep.relation_residual},
          {"symmetry_residual_y", rep.symmetry_residual_y},
          {"symmetry_residual_z", rep.symmetry_residual_z},
          {"det_residual_y", rep.det_residual_y},
          {"det_residual_z", rep.det_residual_z}};
}

json to_json(const SolveReport& report) {
  json coeffs = nullptr;
  if (report.coeffs) {
    coeffs = {{"lambda", to_json(report.coeffs->lambda)},
              {"mu", to_json(report.coeffs->mu)},
              {"nu", to_json(report.coeffs->nu)}};
  }
  return {{"schema", kSchema},
          {"kind", "solve"},
          {"success", report.success()},
          {"failure", report.success() ? json(nullptr) : json(std::string(failure_name(report.failure)))},
          {"target", to_json(report.target)},
          {"a", to_json(report.a)},
          {"recovery_residual", report.recovery_residual},
          {"extended", {{"t1212bar", to_json(report.extended.t1212bar)},
                        {"t2121bar", to_json(report.extended.t2121bar)}}},
          {"flags", {{"ordinary_commutator", report.flags.ordinary_commutator},
                     {"rank2_pencil", report.flags.rank2_pencil},
                     {"dety_nonzero", report.flags.dety_nonzero},
                     {"irreducible", report.flags.irreducible},
                     {"coords_separated", report.flags.coords_separated}}},
          {"pencil", {{"rank", report.pencil_rank},
                      {"value", to_json(report.pencil_value)},
                      {"residual", report.pencil_residual}}},
          {"coeffs", coeffs},
          {"representation", optional_json(report.representation)},
          {"commuting_residual", report.commuting_residual},
          {"irreducibility_transpose_skipped", report.transpose_pass_skipped},
          {"iterations", report.iterations},
          {"restarts", report.restarts}};
}

json to_json(const LiftSet& set) {
  json lifts = json::array();
  for (const auto& lift : set.lifts) {
    json entry = to_json(lift.rep);
    entry["sheet"] = lift.sheet;
    entry["scaling"] = lift.scaling;
    entry["coords"] = to_json(lift.coords);
    entry["trace_y"] = to_json(lift.trace_y);
    entry["t1212bar"] = to_json(lift.t1212bar);
    entry["t2121bar"] = to_json(lift.t2121bar);
    lifts.push_back(std::move(entry));
  }
  return {{"schema", kSchema},
          {"kind", "lifts"},
          {"coord_spread", set.coord_spread},
          {"max_relation_residual", set.max_relation_residual},
          {"trace_y_degenerate", set.trace_y_degenerate},
          {"pairs_distinct", set.pairs_distinct},
          {"lifts", lifts}};
}

Cplx cplx_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw FormatError("expected a complex number [re, im], got " + j.dump());
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Mat3 mat3_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw FormatError("expected a 3x3 matrix (three rows)");
  Mat3 out;
  for (int i = 0; i < 3; ++i) {
    if (!j[i].is_array() || j[i].size() != 3) throw FormatError("matrix row " + std::to_string(i) + " needs 3 entries");
    for (int k = 0; k < 3; ++k) out(i, k) = cplx_from_json(j[i][k]);
  }
  return out;
}

TraceCoords coords_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("expected a JSON object with trace coordinates");
  if (!j.contains("t")) {
    if (j.contains("coords")) return coords_from_json(j["coords"]);
    if (j.contains("target")) return coords_from_json(j["target"]);
  }
  TraceCoords c{};
  for (int k = 0; k < kNumVars; ++k) {
    const std::string key(kVarKeys[k]);
    if (!j.contains(key)) throw FormatError("missing coordinate \"" + key + "\"");
    c[static_cast<Var>(k)] = cplx_from_json(j[key]);
  }
  return c;
}

Representation representation_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("expected a JSON object with \"y\" and \"z\"");
  if (j.contains("y") && j.contains("z")) return make_representation(mat3_from_json(j["y"]), mat3_from_json(j["z"]));
  if (j.contains("representation") && j["representation"].is_object()) {
    return representation_from_json(j["representation"]);
  }
  throw FormatError("no representation (\"y\", \"z\") in input");
}

Cplx parse_complex(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ') s += ch;
  }
  if (s.empty()) throw FormatError("empty complex number");

  auto parse_real = [&text](std::string_view part, bool allow_unit) -> double {
    if (allow_unit && (part.empty() || part == "+")) return 1.0;
    if (allow_unit && part == "-") return -1.0;
    std::string buf(part);
    if (!buf.empty() && buf.front() == '+') buf.erase(0, 1);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{} || end != buf.data() + buf.size()) {
      throw FormatError("malformed complex number '" + std::string(text) + "'");
    }
    return value;
  };

  if (s.back() != 'i') return {parse_real(s, false), 0.0};
  s.pop_back();
  // Split at the last sign that does not belong to an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, parse_real(s, true)};
  return {parse_real(std::string_view(s).substr(0, split), false), parse_real(std::string_view(s).substr(split), true)};
}

TraceCoords parse_coord_assignments(std::string_view text, std::vector<Var>* assigned) {
  TraceCoords c{};
  std::vector<Var> seen;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (!item.empty()) {
      const std::size_t eq = item.find('=');
      if (eq == std::string_view::npos) throw FormatError("expected name=value, got '" + std::string(item) + "'");
      const std::string_view name = item.substr(0, eq);
      int index = -1;
      for (int k = 0; k < kNumVars; ++k) {
        if (kVarKeys[k] == name) index = k;
      }
      if (index < 0) throw FormatError("unknown coordinate '" + std::string(name) + "'");
      const Var v = static_cast<Var>(index);
      for (Var prior : seen) {
        if (prior == v) throw FormatError("coordinate '" + std::string(name) + "' given twice");
      }
      seen.push_back(v);
      c[v] = parse_complex(item.substr(eq + 1));
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (assigned) *assigned = seen;
  return c;
}

}  // namespace whitehead
