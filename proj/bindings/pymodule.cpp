#include "arch/document.hpp"
#include "arch/echelon.hpp"
#include "arch/errors.hpp"
#include "arch/lattice.hpp"
#include "arch/parser.hpp"
#include "arch/relations.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace arch;

namespace {

Backend backend_arg(const std::string& field) { return backend_from_name(field); }

Matrix matrix_from_entries(const std::string& field,
                           const std::vector<std::vector<std::string>>& rows) {
    Backend b = backend_arg(field);
    if (rows.empty()) throw ParseError("a matrix needs at least one row");
    size_t cols = rows[0].size();
    std::vector<FieldElement> e;
    for (const auto& r : rows) {
        if (r.size() != cols) throw ParseError("ragged rows");
        for (const auto& s : r) e.push_back(parse_entry(s, b));
    }
    return Matrix(b, rows.size(), cols, e);
}

std::vector<std::vector<std::string>> matrix_entries(const Matrix& m) {
    std::vector<std::vector<std::string>> rows(m.rows());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) rows[i].push_back(entry_to_string(m.at(i, j)));
    return rows;
}

py::object valuation_obj(const Valuation& v) {
    if (v.is_infinity()) return py::none();
    return py::int_(v.value());
}

py::dict certificate_dict(const Certificate& c) {
    py::dict d;
    switch (c.kind) {
    case Certificate::Kind::BoundedMultiplier:
        d["kind"] = "bounded_multiplier";
        d["C"] = matrix_entries(*c.C);
        d["r"] = c.r;
        break;
    case Certificate::Kind::ScalarMultiplier:
        d["kind"] = "scalar_multiplier";
        d["alpha"] = entry_to_string(*c.alpha);
        break;
    case Certificate::Kind::ElementaryFactors: {
        d["kind"] = "elementary_factors";
        py::list fs;
        for (const auto& f : c.factors) {
            py::dict fd;
            fd["op"] = f.kind_name();
            fd["i"] = f.i;
            fd["j"] = f.j;
            fd["alpha"] = entry_to_string(f.alpha);
            fs.append(fd);
        }
        d["factors"] = fs;
        break;
    }
    }
    return d;
}

py::dict verdict_dict(const Matrix& a, const Matrix& b, const RelationVerdict& v) {
    py::dict d;
    d["holds"] = v.holds;
    if (v.certificate) {
        d["certificate"] = certificate_dict(*v.certificate);
        d["verified"] = verify_certificate(a, b, *v.certificate);
    }
    if (v.certificate_reverse) d["certificate_reverse"] = certificate_dict(*v.certificate_reverse);
    return d;
}

py::dict descriptor_dict(const ClassDescriptor& desc) {
    py::dict d;
    py::list pivots, positions, vals;
    for (const auto& [i, j] : desc.shape.pivots) pivots.append(py::make_tuple(i, j));
    for (const auto& [i, j] : desc.shape.positions) positions.append(py::make_tuple(i, j));
    for (const auto& v : desc.pivot_valuations) vals.append(valuation_obj(v));
    d["pivots"] = pivots;
    d["positions"] = positions;
    d["pivot_valuations"] = vals;
    return d;
}

} // namespace

PYBIND11_MODULE(archmat, m) {
    m.doc() = "exact arithmetic for archimedean classes of matrices over ordered fields";

    py::register_exception<Error>(m, "ArchError");

    py::class_<Matrix>(m, "Matrix")
        .def(py::init(&matrix_from_entries), py::arg("field"), py::arg("rows"))
        .def_property_readonly("field", [](const Matrix& a) {
            return std::string(backend_name(a.backend()));
        })
        .def_property_readonly("shape_tuple", [](const Matrix& a) {
            return py::make_tuple(a.rows(), a.cols());
        })
        .def("entries", &matrix_entries)
        .def("transpose", &Matrix::transpose)
        .def("__eq__", [](const Matrix& a, const Matrix& b) { return a == b; })
        .def("__mul__", [](const Matrix& a, const Matrix& b) { return a * b; })
        .def("__add__", [](const Matrix& a, const Matrix& b) { return a + b; })
        .def("__repr__", [](const Matrix& a) {
            return "Matrix(" + std::string(backend_name(a.backend())) + ", " +
                   std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + ")";
        });

    m.def("parse_document", [](const std::string& text) {
        MatrixDocument d = MatrixDocument::parse(text);
        return py::make_tuple(d.field, d.name, d.matrix);
    });
    m.def("serialize_document", [](const Matrix& a, const std::string& name) {
        MatrixDocument d{std::string(backend_name(a.backend())), name, a};
        return d.serialize();
    }, py::arg("matrix"), py::arg("name") = "");

    m.def("succeq", [](const Matrix& a, const Matrix& b) { return verdict_dict(a, b, succeq(a, b)); });
    m.def("sim", [](const Matrix& a, const Matrix& b) { return verdict_dict(a, b, sim(a, b)); });
    m.def("gg", [](const Matrix& a, const Matrix& b) { return verdict_dict(a, b, gg(a, b)); });
    m.def("equiv", [](const Matrix& a, const Matrix& b) { return equiv(a, b); });

    m.def("canon", &archimedean_canonical_form);
    m.def("descriptor", [](const Matrix& a) { return descriptor_dict(class_descriptor(a)); });
    m.def("qr", [](const Matrix& a) {
        QRPair p = qr_decompose(a);
        return py::make_tuple(p.Q, p.R);
    });
    m.def("is_psd", &is_psd);
    m.def("pinv", [](const Matrix& a) {
        return a.is_symmetric() ? moore_penrose_symmetric(a) : moore_penrose_general(a);
    });
    m.def("wval", [](const Matrix& a) { return valuation_obj(w_valuation(a)); });
    m.def("max_norm", [](const Matrix& a) { return entry_to_string(max_norm(a)); });
    m.def("meet", &meet);
    m.def("join", &join);
    m.def("psd_meet", &psd_meet);
    m.def("psd_join", &psd_join);
    m.def("box_mult", &box_mult);
    m.def("is_bounded", &is_bounded_matrix);
    m.def("is_bibounded", &is_bibounded_matrix);
    m.def("factor", [](const Matrix& a) {
        py::list fs;
        for (const auto& f : elementary_factorization(a)) {
            py::dict fd;
            fd["op"] = f.kind_name();
            fd["i"] = f.i;
            fd["j"] = f.j;
            fd["alpha"] = entry_to_string(f.alpha);
            fs.append(fd);
        }
        return fs;
    });
}
