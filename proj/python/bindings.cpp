#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "whitehead/certificate.hpp"
#include "whitehead/hypersurface.hpp"
#include "whitehead/json_io.hpp"
#include "whitehead/reconstruct.hpp"
#include "whitehead/verify.hpp"
#include "whitehead/words.hpp"

namespace py = pybind11;
using namespace whitehead;

namespace {

using CArray = py::array_t<Cplx, py::array::c_style | py::array::forcecast>;

Mat3 to_mat3(const CArray& a) {
  if (a.ndim() != 2 || a.shape(0) != 3 || a.shape(1) != 3) throw py::value_error("expected a 3x3 array");
  Mat3 out;
  const auto view = a.unchecked<2>();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out(i, j) = view(i, j);
  return out;
}

CArray from_mat3(const Mat3& x) {
  CArray out({3, 3});
  auto view = out.mutable_unchecked<2>();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) view(i, j) = x(i, j);
  return out;
}

// Reports go through the same JSON documents the command-line tool prints.
py::object to_python(const json& doc) { return py::module_::import("json").attr("loads")(doc.dump()); }

SolveOptions options(int restarts, int max_iter, double tol) {
  SolveOptions opts;
  opts.recover.restarts = restarts;
  opts.recover.max_iter = max_iter;
  opts.recover.tol = tol;
  return opts;
}

FreeCoord free_coord(const std::string& name) {
  if (name == "s") return FreeCoord::s;
  if (name == "sbar") return FreeCoord::sbar;
  throw py::value_error("free must be 's' or 'sbar'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Trace coordinates, the defining hypersurface and representation reconstruction for SL(3,C) pairs.";
  m.attr("SCHEMA") = std::string(kSchema);
  m.attr("DEFAULT_SEED") = kDefaultSeed;

  py::register_exception<DetGuardError>(m, "DetGuardError", PyExc_ValueError);
  py::register_exception<WordParseError>(m, "WordParseError", PyExc_ValueError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

  py::class_<TraceCoords>(m, "TraceCoords")
      .def(py::init([](Cplx t, Cplx tbar, Cplx s, Cplx sbar, Cplx r) { return TraceCoords{t, tbar, s, sbar, r}; }),
           py::arg("t"), py::arg("tbar"), py::arg("s"), py::arg("sbar"), py::arg("r"))
      .def_readwrite("t", &TraceCoords::t)
      .def_readwrite("tbar", &TraceCoords::tbar)
      .def_readwrite("s", &TraceCoords::s)
      .def_readwrite("sbar", &TraceCoords::sbar)
      .def_readwrite("r", &TraceCoords::r)
      .def("as_tuple", [](const TraceCoords& c) { return py::make_tuple(c.t, c.tbar, c.s, c.sbar, c.r); })
      .def("to_json", [](const TraceCoords& c) { return to_python(to_json(c)); })
      .def("__eq__", [](const TraceCoords& a, const TraceCoords& b) { return a == b; })
      .def("__repr__", [](const TraceCoords& c) { return "TraceCoords(" + to_json(c).dump() + ")"; });

  m.def("random_sl3", [](std::uint64_t seed) { SeedStream rng(seed); return from_mat3(random_sl3(rng)); },
        py::arg("seed"), "Seeded random matrix of determinant 1.");
  m.def("coords_of", [](const CArray& a, std::optional<CArray> b) {
        const Mat3 x = to_mat3(a);
        return coords_of(x, b ? to_mat3(*b) : transpose(x));
      }, py::arg("a"), py::arg("b") = py::none(), "Trace coordinates of (a, b); b defaults to a^T.");
  m.def("word_trace", [](const std::string& word, const CArray& a, const CArray& b) {
        return word_trace(parse_word(word), to_mat3(a), to_mat3(b));
      }, py::arg("word"), py::arg("a"), py::arg("b"), "Trace of a word such as '1,-2,-2'.");
  m.def("k_matrix", [](const CArray& a, const CArray& b) { return k_matrix(to_mat3(a), to_mat3(b)); },
        py::arg("a"), py::arg("b"));
  m.def("f_eval", &f_eval, py::arg("coords"));
  m.def("f_scale", &f_scale, py::arg("coords"));
  m.def("on_hypersurface", &on_hypersurface, py::arg("coords"), py::arg("tol") = 1e-10);
  m.def("hypersurface_polynomial", [] { return hypersurface_polynomial().to_string(); });
  m.def("sample", [](const TraceCoords& fixed, const std::string& free) {
        std::vector<TraceCoords> out;
        for (const auto& p : sample(fixed, free_coord(free))) out.push_back(p.coords);
        return out;
      }, py::arg("fixed"), py::arg("free") = "s", "The points of F = 0 over four fixed coordinates.");

  m.def("is_ordinary", [](const CArray& x, double tol) { return is_ordinary(to_mat3(x), tol); }, py::arg("x"),
        py::arg("tol") = kRankTol);
  m.def("check_relation", [](const CArray& y, const CArray& z) { return check_relation(to_mat3(y), to_mat3(z)); },
        py::arg("y"), py::arg("z"));
  m.def("is_irreducible", [](const CArray& y, const CArray& z) { return is_irreducible(to_mat3(y), to_mat3(z)); },
        py::arg("y"), py::arg("z"));

  m.def("solve", [](const TraceCoords& target, std::uint64_t seed, int restarts, int max_iter, double tol) {
        SeedStream rng = SeedStream(seed).split("solve");
        return to_python(to_json(solve_point(target, rng, options(restarts, max_iter, tol))));
      }, py::arg("target"), py::arg("seed") = kDefaultSeed, py::arg("restarts") = 20, py::arg("max_iter") = 200,
      py::arg("tol") = 1e-10, "Solve report for a point, as the JSON document of the command-line tool.");
  m.def("solve_matrix", [](const CArray& a) { return to_python(to_json(solve_from_matrix(to_mat3(a)))); },
        py::arg("a"), "Solve report starting from a itself (no recovery step).");
  m.def("lifts", [](const TraceCoords& target, std::uint64_t seed) {
        SeedStream rng = SeedStream(seed).split("solve");
        const SolveReport report = solve_point(target, rng);
        return to_python(to_json(enumerate_lifts(report)));
      }, py::arg("target"), py::arg("seed") = kDefaultSeed, "The six representations over a point.");
  m.def("random_surface_matrix", [](std::uint64_t seed) {
        SeedStream rng(seed);
        return from_mat3(random_surface_matrix(rng));
      }, py::arg("seed"), "Seeded a whose coordinates lie on the hypersurface.");

  m.def("verify", [](std::uint64_t seed, int samples) {
        if (samples <= 0) throw py::value_error("samples must be positive");
        py::list out;
        for (const auto& r : run_verify({seed, samples})) out.append(to_python(to_json(r)));
        return out;
      }, py::arg("seed") = kDefaultSeed, py::arg("samples") = 1000);
  m.def("certificates", [] {
        py::dict out;
        for (const Certificate& c : {verify_substituted(), verify_penultimate(), verify_explicit_products()})
          out[py::str(c.name)] = c.equal;
        return out;
      });
}
