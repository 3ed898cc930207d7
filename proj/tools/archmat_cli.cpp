#include "arch/document.hpp"
#include "arch/echelon.hpp"
#include "arch/errors.hpp"
#include "arch/lattice.hpp"
#include "arch/parser.hpp"
#include "arch/relations.hpp"
#include "arch/selftest.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace arch;

namespace {

constexpr int kHolds = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;

struct Output {
    std::ostringstream buf;
    std::string path; // empty = stdout

    template <class T> Output& operator<<(const T& v) {
        buf << v;
        return *this;
    }

    int flush(int code) {
        if (path.empty()) {
            std::cout << buf.str();
        } else {
            std::ofstream f(path);
            if (!f) {
                std::cerr << "error: cannot write " << path << "\n";
                return kError;
            }
            f << buf.str();
        }
        return code;
    }
};

std::string valuation_str(const Valuation& v) {
    return v.is_infinity() ? "infinity" : std::to_string(v.value());
}

void print_shape(Output& out, const Shape& s, const std::string& indent) {
    out << indent << "pivots:";
    for (const auto& [i, j] : s.pivots) out << " (" << i + 1 << "," << j + 1 << ")";
    out << "\n" << indent << "positions:";
    for (const auto& [i, j] : s.positions) out << " (" << i + 1 << "," << j + 1 << ")";
    out << "\n";
}

void print_descriptor(Output& out, const ClassDescriptor& d) {
    out << "descriptor:\n";
    print_shape(out, d.shape, "  ");
    out << "  pivot_valuations:";
    for (const auto& v : d.pivot_valuations) out << " " << valuation_str(v);
    out << "\n";
}

void print_certificate(Output& out, const Certificate& c, const std::string& key) {
    out << key << ":\n";
    switch (c.kind) {
    case Certificate::Kind::BoundedMultiplier:
        out << "  kind: bounded_multiplier\n  r: " << c.r << "\n  C:\n"
            << matrix_rows_to_string(*c.C, "    ");
        break;
    case Certificate::Kind::ScalarMultiplier:
        out << "  kind: scalar_multiplier\n  alpha: " << entry_to_string(*c.alpha) << "\n";
        break;
    case Certificate::Kind::ElementaryFactors:
        out << "  kind: elementary_factors\n  factors:\n";
        for (const auto& f : c.factors) {
            out << "    " << f.kind_name() << " i=" << f.i + 1;
            if (f.kind != ElementaryOp::Kind::Scale) out << " j=" << f.j + 1;
            if (f.kind != ElementaryOp::Kind::Swap)
                out << " alpha=" << entry_to_string(f.alpha);
            out << "\n";
        }
        break;
    }
}

MatrixDocument load_doc(const std::string& path) { return MatrixDocument::load(path); }

void require_compatible(const MatrixDocument& a, const MatrixDocument& b) {
    if (a.matrix.backend() != b.matrix.backend())
        throw BackendMismatch("the two documents use different fields");
    if (a.matrix.cols() != b.matrix.cols())
        throw Error("the two matrices have different column counts");
}

int cmd_compare(Output& out, const std::string& relation, const std::string& file_a,
                const std::string& file_b) {
    MatrixDocument da = load_doc(file_a), db = load_doc(file_b);
    require_compatible(da, db);
    const Matrix &a = da.matrix, &b = db.matrix;
    out << "command: compare\nrelation: " << relation << "\nfield: " << da.field << "\n";

    if (relation == "equiv") {
        bool h = equiv(a, b);
        out << "holds: " << (h ? "true" : "false") << "\n";
        return h ? kHolds : kNegative;
    }
    RelationVerdict v;
    if (relation == "succeq")
        v = succeq(a, b);
    else if (relation == "sim")
        v = sim(a, b);
    else if (relation == "gg")
        v = gg(a, b);
    else
        throw Error("unknown relation: " + relation);
    out << "holds: " << (v.holds ? "true" : "false") << "\n";
    if (!v.holds) return kNegative;
    bool verified = true;
    if (v.certificate) {
        print_certificate(out, *v.certificate, "certificate");
        verified = verified && verify_certificate(a, b, *v.certificate);
    }
    if (v.certificate_reverse) {
        print_certificate(out, *v.certificate_reverse, "certificate_reverse");
        verified = verified && verify_certificate(b, a, *v.certificate_reverse);
    }
    out << "verified: " << (verified ? "true" : "false") << "\n";
    return verified ? kHolds : kError;
}

int cmd_canon(Output& out, const std::string& file) {
    MatrixDocument d = load_doc(file);
    if (d.matrix.backend() != Backend::Qt) {
        std::cerr << "error: the archimedean canonical form is only defined over Q(t); "
                     "over Q the class descriptor (shape subcommand) is the invariant\n";
        return kError;
    }
    if (d.matrix.is_zero()) {
        std::cerr << "error: the zero matrix has no canonical representative\n";
        return kError;
    }
    Matrix c = archimedean_canonical_form(d.matrix);
    out << "command: canon\nfield: " << d.field << "\n";
    print_matrix_block(out.buf, "canonical_form", c, "  ");
    print_descriptor(out, class_descriptor(c));
    return kHolds;
}

int cmd_lattice(Output& out, const std::string& op, const std::string& file_a,
                const std::string& file_b) {
    MatrixDocument da = load_doc(file_a), db = load_doc(file_b);
    require_compatible(da, db);
    Matrix rep = op == "meet" ? meet(da.matrix, db.matrix) : join(da.matrix, db.matrix);
    out << "command: lattice\nop: " << op << "\nfield: " << da.field << "\n";
    print_matrix_block(out.buf, "representative", rep, "  ");
    print_descriptor(out, class_descriptor(rep));
    if (rep.backend() == Backend::Qt && !rep.is_zero())
        print_matrix_block(out.buf, "canonical_form", archimedean_canonical_form(rep), "  ");
    return kHolds;
}

int cmd_factor(Output& out, const std::string& file) {
    MatrixDocument d = load_doc(file);
    const Matrix& a = d.matrix;
    out << "command: factor\nfield: " << d.field << "\n";
    if (!a.is_square()) {
        std::cerr << "error: factor needs a square matrix\n";
        return kError;
    }
    if (!is_bibounded_matrix(a)) {
        out << "bibounded: false\n";
        for (size_t i = 0; i < a.rows(); ++i)
            for (size_t j = 0; j < a.cols(); ++j)
                if (!a.at(i, j).is_bounded()) {
                    out << "witness: entry (" << i + 1 << "," << j + 1
                        << ") is unbounded, valuation "
                        << valuation_str(a.at(i, j).natural_valuation()) << "\n";
                    return kNegative;
                }
        out << "witness: determinant valuation " << valuation_str(det(a).natural_valuation())
            << "\n";
        return kNegative;
    }
    std::vector<ElementaryOp> f = elementary_factorization(a);
    out << "bibounded: true\nfactors:\n";
    for (const auto& op : f) {
        out << "  " << op.kind_name() << " i=" << op.i + 1;
        if (op.kind != ElementaryOp::Kind::Scale) out << " j=" << op.j + 1;
        if (op.kind != ElementaryOp::Kind::Swap) out << " alpha=" << entry_to_string(op.alpha);
        out << "\n";
    }
    bool ok = elementary_product(f, a.backend(), a.rows()) == a;
    out << "product_check: " << (ok ? "true" : "false") << "\n";
    return ok ? kHolds : kError;
}

int cmd_shape(Output& out, const std::string& file) {
    MatrixDocument d = load_doc(file);
    out << "command: shape\nfield: " << d.field << "\n";
    ClassDescriptor desc = class_descriptor(d.matrix);
    print_descriptor(out, desc);
    return kHolds;
}

int cmd_psd(Output& out, const std::string& file) {
    MatrixDocument d = load_doc(file);
    out << "command: psd\nfield: " << d.field << "\n";
    if (!d.matrix.is_symmetric()) {
        std::cerr << "error: psd needs a symmetric matrix\n";
        return kError;
    }
    bool h = is_psd(d.matrix);
    out << "psd: " << (h ? "true" : "false") << "\n";
    return h ? kHolds : kNegative;
}

int cmd_pinv(Output& out, const std::string& file) {
    MatrixDocument d = load_doc(file);
    out << "command: pinv\nfield: " << d.field << "\n";
    Matrix p = d.matrix.is_symmetric() ? moore_penrose_symmetric(d.matrix)
                                       : moore_penrose_general(d.matrix);
    print_matrix_block(out.buf, "pseudoinverse", p, "  ");
    return kHolds;
}

int cmd_wval(Output& out, const std::string& file) {
    MatrixDocument d = load_doc(file);
    out << "command: wval\nfield: " << d.field << "\nw: "
        << valuation_str(w_valuation(d.matrix)) << "\n";
    return kHolds;
}

int cmd_selftest(Output& out, const std::string& field, std::uint64_t seed) {
    int failures = 0;
    if (field.empty() || field == "Q") {
        out << "== field Q ==\n";
        failures += run_selftest(Backend::Q, seed, out.buf);
    }
    if (field.empty() || field == "Qt" || field == "Q(t)") {
        out << "== field Q(t) ==\n";
        failures += run_selftest(Backend::Qt, seed, out.buf);
    }
    out << "failures: " << failures << "\n";
    return failures == 0 ? kHolds : kNegative;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for archimedean classes of matrices over ordered fields"};
    app.require_subcommand(1);

    Output out;
    app.add_option("--out", out.path, "write the output document to a file");

    std::string relation = "succeq", lattice_op = "meet", field, file_a, file_b;
    std::uint64_t seed = 0;

    auto* compare = app.add_subcommand("compare", "decide succeq / sim / gg / equiv");
    compare->add_option("relation", relation, "succeq | sim | gg | equiv")
        ->required()
        ->check(CLI::IsMember({"succeq", "sim", "gg", "equiv"}));
    compare->add_option("fileA", file_a)->required();
    compare->add_option("fileB", file_b)->required();

    auto* canon = app.add_subcommand("canon", "archimedean canonical form over Q(t)");
    canon->add_option("file", file_a)->required();

    auto* lattice = app.add_subcommand("lattice", "meet or join of two classes");
    lattice->add_option("--op", lattice_op, "meet | join")
        ->check(CLI::IsMember({"meet", "join"}));
    lattice->add_option("fileA", file_a)->required();
    lattice->add_option("fileB", file_b)->required();

    auto* factor = app.add_subcommand("factor", "bibounded elementary factorization");
    factor->add_option("file", file_a)->required();

    auto* shape = app.add_subcommand("shape", "class descriptor (shape, pivot valuations)");
    shape->add_option("file", file_a)->required();

    auto* psd = app.add_subcommand("psd", "positive semidefiniteness test");
    psd->add_option("file", file_a)->required();

    auto* pinv = app.add_subcommand("pinv", "Moore-Penrose pseudoinverse");
    pinv->add_option("file", file_a)->required();

    auto* wval = app.add_subcommand("wval", "valuation of the max norm");
    wval->add_option("file", file_a)->required();

    auto* selftest = app.add_subcommand("selftest", "randomized property suites");
    selftest->add_option("--field", field, "Q | Qt (default: both)")
        ->check(CLI::IsMember({"Q", "Qt", "Q(t)"}));
    selftest->add_option("--seed", seed, "random generator seed");

    for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kError;
    }

    try {
        int code;
        if (compare->parsed())
            code = cmd_compare(out, relation, file_a, file_b);
        else if (canon->parsed())
            code = cmd_canon(out, file_a);
        else if (lattice->parsed())
            code = cmd_lattice(out, lattice_op, file_a, file_b);
        else if (factor->parsed())
            code = cmd_factor(out, file_a);
        else if (shape->parsed())
            code = cmd_shape(out, file_a);
        else if (psd->parsed())
            code = cmd_psd(out, file_a);
        else if (pinv->parsed())
            code = cmd_pinv(out, file_a);
        else if (wval->parsed())
            code = cmd_wval(out, file_a);
        else
            code = cmd_selftest(out, field, seed);
        return out.flush(code);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
}
