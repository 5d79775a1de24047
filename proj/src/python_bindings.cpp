#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "knotmosaic/bounds.hpp"
#include "knotmosaic/census.hpp"
#include "knotmosaic/error.hpp"
#include "knotmosaic/gauss.hpp"
#include "knotmosaic/invariants.hpp"
#include "knotmosaic/moves.hpp"
#include "knotmosaic/render.hpp"
#include "knotmosaic/topology.hpp"

namespace py = pybind11;
using namespace knotmosaic;

PYBIND11_MODULE(_knotmosaic, m) {
    m.doc() = "knot mosaic toolkit";

    py::register_exception<Error>(m, "MosaicError");

    py::class_<Mosaic>(m, "Mosaic")
        .def(py::init([](const std::string& text) {
                 return parse_mosaic(text);
             }),
             py::arg("text"))
        .def_property_readonly("n", &Mosaic::size)
        .def("__str__", [](const Mosaic& m) { return serialize_mosaic(m); })
        .def("__eq__", [](const Mosaic& a, const Mosaic& b) { return a == b; })
        .def("tile", [](const Mosaic& m, int row, int col) {
            return kind_token(m.at(row, col));
        });

    m.def("parse_mosaic", &parse_mosaic, py::arg("text"));
    m.def("serialize_mosaic", &serialize_mosaic, py::arg("mosaic"));
    m.def("is_suitably_connected", [](const Mosaic& m) {
        return is_suitably_connected(m).ok();
    });
    m.def("diagnostics", [](const Mosaic& m) {
        return is_suitably_connected(m).to_string();
    });
    m.def("counts", [](const Mosaic& m) {
        Counts c = counts(m);
        return py::make_tuple(c.components, c.crossings, c.virtual_crossings);
    });
    m.def("gauss_code", [](const Mosaic& m) {
        return gauss_to_string(gauss_code(m));
    });
    m.def("writhe", &writhe);
    m.def("kauffman_bracket", [](const Mosaic& m) {
        return kauffman_bracket(m).to_string("A");
    });
    m.def("jones", [](const Mosaic& m) { return jones(m).to_string("t"); });
    m.def("span_crossing_bound",
          [](const Mosaic& m) { return span_crossing_bound(m); });
    m.def("grow", &grow);
    m.def("shrink", &shrink);
    m.def("mirror", &mirror);
    m.def("canonical_form", &canonical_form);

    m.def("census_count", [](int n, bool with_virtual) {
        CensusOptions opts;
        opts.alphabet = with_virtual ? Alphabet::Virtual : Alphabet::Classical;
        return count(n, opts).to_string();
    }, py::arg("n"), py::arg("with_virtual") = false);
    m.def("knot_census", [](int n) {
        py::list out;
        for (const KnotClass& cls : knot_census(n)) {
            py::dict d;
            d["jones"] = cls.jones.to_string("t");
            d["witness"] = serialize_mosaic(cls.witness);
            d["crossings"] = cls.witness_crossings;
            d["count"] = cls.count;
            out.append(d);
        }
        return out;
    }, py::arg("n"));

    m.def("min_mosaic_number", &min_mosaic_number);
    m.def("max_mosaic_number", &max_mosaic_number);
    m.def("max_crossings", [](int n, const std::string& subject) {
        return max_crossings(n, subject == "knot" ? Subject::Knot
                                                  : Subject::Link);
    }, py::arg("n"), py::arg("subject") = "link");

    m.def("compile_gauss", [](const std::string& text, bool allow_virtual) {
        return layout(parse_gauss(text), allow_virtual);
    }, py::arg("code"), py::arg("allow_virtual") = false);
    m.def("is_realizable", [](const std::string& text) {
        return is_realizable(parse_gauss(text));
    });
    m.def("invert_lists", [](const std::string& text) {
        return gauss_to_string(invert_lists(parse_gauss(text)));
    });

    m.def("simplify", [](const Mosaic& mosaic, int max_steps, int max_grow) {
        return simplify(mosaic, MoveCatalog::builtin(mosaic.alphabet()),
                        {max_steps, max_grow});
    }, py::arg("mosaic"), py::arg("max_steps") = 256, py::arg("max_grow") = 1);

    m.def("render_ascii", &render_ascii);
    m.def("render_svg", &render_svg);
    m.def("parse_ascii", &parse_ascii);
}
