// Python bindings for the multiparameter persistence duality library.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mpd/cone.hpp"
#include "mpd/gen.hpp"
#include "mpd/io.hpp"
#include "mpd/resolve.hpp"

namespace py = pybind11;
using namespace mpd;

namespace {

Grade to_grade(const std::vector<int32_t>& v) { return Grade(v); }

py::tuple grade_tuple(const Grade& g) {
    py::tuple t(g.size());
    for (int i = 0; i < g.size(); ++i) t[static_cast<size_t>(i)] = g[i];
    return t;
}

py::list grades_list(const std::vector<Grade>& gs) {
    py::list out;
    for (const Grade& g : gs) out.append(grade_tuple(g));
    return out;
}

}  // namespace

PYBIND11_MODULE(_mpd, m) {
    m.doc() = "exact multiparameter persistence duality";

    py::register_exception<Error>(m, "MpdError", PyExc_ValueError);

    py::class_<Simplex>(m, "Simplex")
        .def(py::init([](std::vector<int> vs, std::vector<int32_t> g) {
                 return Simplex{std::move(vs), to_grade(g)};
             }),
             py::arg("vertices"), py::arg("grade"))
        .def_readonly("vertices", &Simplex::vertices)
        .def_property_readonly("grade", [](const Simplex& s) { return grade_tuple(s.grade); })
        .def("__repr__", [](const Simplex& s) {
            std::string r = "Simplex(" + std::to_string(s.vertices.size() - 1) + "-cell at " +
                            s.grade.str() + ")";
            return r;
        });

    py::class_<Multifiltration>(m, "Multifiltration")
        .def(py::init([](int params) {
                 Multifiltration k;
                 k.params = params;
                 return k;
             }),
             py::arg("params"))
        .def_readonly("params", &Multifiltration::params)
        .def_readonly("simplices", &Multifiltration::simplices)
        .def("add",
             [](Multifiltration& k, std::vector<int> vs, std::vector<int32_t> g) {
                 k.simplices.push_back({std::move(vs), to_grade(g)});
             },
             py::arg("vertices"), py::arg("grade"))
        .def("validate", &Multifiltration::validate)
        .def("__len__", [](const Multifiltration& k) { return k.simplices.size(); })
        .def("__eq__", [](const Multifiltration& a, const Multifiltration& b) { return a == b; });

    py::class_<FreeComplex>(m, "FreeComplex")
        .def_property_readonly("params", &FreeComplex::params)
        .def_property_readonly("p", &FreeComplex::p)
        .def_property_readonly("lo", &FreeComplex::lo)
        .def_property_readonly("hi", &FreeComplex::hi)
        .def("rank", &FreeComplex::rank, py::arg("d"))
        .def("total_rank", &FreeComplex::total_rank)
        .def("gens", [](const FreeComplex& c, int d) { return grades_list(c.gens(d)); },
             py::arg("d"))
        .def("validate", &FreeComplex::validate)
        .def("__eq__", [](const FreeComplex& a, const FreeComplex& b) { return a == b; })
        .def("__repr__", [](const FreeComplex& c) {
            return "FreeComplex(params=" + std::to_string(c.params()) +
                   ", p=" + std::to_string(c.p()) + ", degrees [" + std::to_string(c.lo()) +
                   ", " + std::to_string(c.hi()) + "], rank " + std::to_string(c.total_rank()) +
                   ")";
        });

    m.def("koszul", &koszul, py::arg("n"), py::arg("p"));
    m.def("chain_complex", &chain_complex, py::arg("filtration"), py::arg("p"),
          py::arg("reduced") = true);
    m.def("dagger", &dagger);
    m.def("minimize", &minimize);
    m.def("default_zeta",
          [](const FreeComplex& c) { return grade_tuple(default_zeta(c).zeta); });
    m.def("cone",
          [](const FreeComplex& c, std::optional<std::vector<int32_t>> zeta) {
              ConeThreshold t = zeta ? ConeThreshold{to_grade(*zeta)} : default_zeta(c);
              return cone_complex(c, t);
          },
          py::arg("complex"), py::arg("zeta") = py::none());
    m.def("restrict",
          [](const FreeComplex& c, std::vector<int32_t> zeta) {
              return restrict(c, ConeThreshold{to_grade(zeta)});
          },
          py::arg("complex"), py::arg("zeta"));

    m.def("hilbert",
          [](const FreeComplex& c, int d, std::vector<int32_t> lo, std::vector<int32_t> hi) {
              GridBox box(to_grade(lo), to_grade(hi));
              HilbertFunction h = hilbert_homology(c, box, d);
              py::dict out;
              for (int64_t i = 0; i < box.size(); ++i) {
                  Grade z = box.at(i);
                  out[grade_tuple(z)] = h.at(d, z);
              }
              return out;
          },
          py::arg("complex"), py::arg("d"), py::arg("lo"), py::arg("hi"),
          "dict mapping each grade in the box to dim H_d at that grade");

    m.def("mfr_direct", &mfr_direct, py::arg("complex"), py::arg("d"));
    m.def("mfr_cohomological", &mfr_cohomological, py::arg("complex"), py::arg("d"));
    m.def("dual_resolution", &dual_resolution);
    m.def("resolution_length", &resolution_length);
    m.def("betti",
          [](const FreeComplex& c, int d, const std::string& via) {
              FreeComplex g =
                  via == "direct" ? mfr_direct(c, d) : mfr_cohomological(c, d);
              py::dict out;
              for (const auto& [deg, gs] : betti_table(g).rows)
                  out[py::int_(deg)] = grades_list(gs);
              return out;
          },
          py::arg("complex"), py::arg("d"), py::arg("via") = "direct",
          "graded Betti numbers of H_d as {degree: [grade, ...]}");

    m.def("barcode",
          [](const FreeComplex& c, int d) {
              Barcode b = barcode_1d(c, d);
              b.normalize();
              py::list out;
              for (const Interval& iv : b.intervals)
                  out.append(py::make_tuple(iv.b, iv.bounded() ? py::object(py::int_(iv.d))
                                                               : py::object(py::none())));
              return out;
          },
          py::arg("complex"), py::arg("d"),
          "intervals [b, d) of H_d for one-parameter complexes; None = unbounded");
    m.def("relative_barcode",
          [](const Multifiltration& k, int q, uint32_t p) {
              Barcode b = relative_barcode_1d(k, q, p);
              b.normalize();
              py::list out;
              for (const Interval& iv : b.intervals)
                  out.append(py::make_tuple(iv.b, iv.bounded() ? py::object(py::int_(iv.d))
                                                               : py::object(py::none())));
              return out;
          },
          py::arg("filtration"), py::arg("q"), py::arg("p") = 2);

    m.def("parse_filtration",
          [](const std::string& text) {
              uint32_t p = 2;
              Multifiltration k = parse_filtration(text, &p);
              return py::make_tuple(k, p);
          },
          "returns (filtration, p)");
    m.def("serialize_filtration", &serialize_filtration, py::arg("filtration"), py::arg("p"));
    m.def("parse_complex", &parse_complex, py::arg("text"), py::arg("verify") = true);
    m.def("serialize_complex", &serialize_complex);

    m.def("random_complex",
          [](uint64_t seed, int n, uint32_t p, int max_total_rank, int32_t gmax) {
              std::mt19937_64 rng(seed);
              return random_complex(rng, n, p, max_total_rank, gmax);
          },
          py::arg("seed"), py::arg("n"), py::arg("p"), py::arg("max_total_rank") = 40,
          py::arg("gmax") = 6);
    m.def("random_filtration",
          [](uint64_t seed, int n, int max_simplices, int32_t gmax) {
              std::mt19937_64 rng(seed);
              return random_filtration(rng, n, max_simplices, gmax);
          },
          py::arg("seed"), py::arg("n"), py::arg("max_simplices") = 300, py::arg("gmax") = 8);
}
