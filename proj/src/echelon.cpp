#include "arch/echelon.hpp"

#include "arch/errors.hpp"
#include "arch/relations.hpp"

namespace arch {

namespace {

// First nonzero column of row i, or cols() when the row is zero.
size_t row_pivot_col(const Matrix& m, size_t i) {
    for (size_t j = 0; j < m.cols(); ++j)
        if (!m.at(i, j).is_zero()) return j;
    return m.cols();
}

} // namespace

bool is_row_echelon(const Matrix& c) {
    size_t last = 0;
    bool seen_zero_row = false;
    bool first = true;
    for (size_t i = 0; i < c.rows(); ++i) {
        size_t p = row_pivot_col(c, i);
        if (p == c.cols()) {
            seen_zero_row = true;
            continue;
        }
        if (seen_zero_row) return false;
        if (!first && p <= last) return false;
        last = p;
        first = false;
    }
    return true;
}

bool Shape::subset_of(const Shape& o) const {
    for (const auto& p : positions)
        if (!o.positions.count(p)) return false;
    return true;
}

QRPair qr_decompose(const Matrix& a) {
    if (a.rows() == 0 || a.is_zero()) throw ZeroMatrix();
    const Backend bk = a.backend();
    std::vector<Matrix> w;              // orthogonal unnormalized (row vectors)
    std::vector<FieldElement> wsq;      // <w_i, w_i>
    std::vector<FieldElement> wnorm;    // max norms
    std::vector<std::vector<FieldElement>> rcols; // column j of R
    for (size_t j = 0; j < a.cols(); ++j) {
        Matrix v(bk, 1, a.rows());
        for (size_t i = 0; i < a.rows(); ++i) v.at(0, i) = a.at(i, j);
        std::vector<FieldElement> coeffs;
        for (size_t i = 0; i < w.size(); ++i) {
            FieldElement c = dot(v, w[i]) / wsq[i];
            coeffs.push_back(c * wnorm[i]); // coefficient over the normalized column
            if (!c.is_zero())
                for (size_t k = 0; k < v.cols(); ++k)
                    v.at(0, k) = v.at(0, k) - c * w[i].at(0, k);
        }
        if (!v.is_zero()) {
            FieldElement nrm = max_norm(v);
            coeffs.push_back(nrm); // the new pivot
            wsq.push_back(dot(v, v));
            wnorm.push_back(nrm);
            w.push_back(std::move(v));
        }
        rcols.push_back(std::move(coeffs));
    }
    size_t r = w.size();
    Matrix q(bk, a.rows(), r);
    for (size_t i = 0; i < r; ++i)
        for (size_t k = 0; k < a.rows(); ++k) q.at(k, i) = w[i].at(0, k) / wnorm[i];
    Matrix rm(bk, r, a.cols());
    for (size_t j = 0; j < a.cols(); ++j)
        for (size_t i = 0; i < rcols[j].size(); ++i) rm.at(i, j) = rcols[j][i];
    return {std::move(q), std::move(rm)};
}

Shape shape_of(const Matrix& echelon) {
    if (!is_row_echelon(echelon)) throw NotEchelon();
    Shape s;
    for (size_t i = 0; i < echelon.rows(); ++i) {
        size_t p = row_pivot_col(echelon, i);
        if (p == echelon.cols()) break;
        s.pivots.emplace_back(i, p);
        for (size_t j = p; j < echelon.cols(); ++j) s.positions.emplace(i, j);
    }
    return s;
}

ClassDescriptor class_descriptor(const Matrix& a) {
    if (a.rows() == 0 || a.is_zero()) return {};
    QRPair qr = qr_decompose(a);
    ClassDescriptor d;
    d.shape = shape_of(qr.R);
    for (const auto& [i, j] : d.shape.pivots)
        d.pivot_valuations.push_back(qr.R.at(i, j).natural_valuation());
    return d;
}

GaussResult bibounded_gauss(const Matrix& a) {
    GaussResult g{{}, a};
    Matrix& m = g.E;
    size_t pr = 0;
    for (size_t col = 0; col < m.cols() && pr < m.rows(); ++col) {
        // largest absolute value below the current pivot row, first index wins
        size_t sel = m.rows();
        for (size_t i = pr; i < m.rows(); ++i) {
            if (m.at(i, col).is_zero()) continue;
            if (sel == m.rows() || m.at(i, col).abs() > m.at(sel, col).abs()) sel = i;
        }
        if (sel == m.rows()) continue;
        if (sel != pr) {
            ElementaryOp op = ElementaryOp::swap(pr, sel, m.backend());
            op.apply(m);
            g.ops.push_back(op);
        }
        for (size_t i = pr + 1; i < m.rows(); ++i) {
            if (m.at(i, col).is_zero()) continue;
            ElementaryOp op = ElementaryOp::add_multiple(i, pr, -m.at(i, col) / m.at(pr, col));
            op.apply(m);
            g.ops.push_back(op);
        }
        ++pr;
    }
    return g;
}

std::vector<ElementaryOp> elementary_factorization(const Matrix& a) {
    if (!a.is_square()) throw NotBibounded("matrix is not square");
    if (!is_bibounded_matrix(a)) throw NotBibounded();
    size_t n = a.rows();
    GaussResult g = bibounded_gauss(a);
    Matrix& u = g.E;
    std::vector<ElementaryOp> ops = std::move(g.ops);
    // u is upper triangular with bibounded diagonal; clear above the diagonal
    for (size_t i = 1; i < n; ++i)
        for (size_t j = 0; j < i; ++j) {
            if (u.at(j, i).is_zero()) continue;
            ElementaryOp op = ElementaryOp::add_multiple(j, i, -u.at(j, i) / u.at(i, i));
            op.apply(u);
            ops.push_back(op);
        }
    FieldElement one = FieldElement::one(a.backend());
    for (size_t i = 0; i < n; ++i) {
        if (u.at(i, i) == one) continue;
        ElementaryOp op = ElementaryOp::scale(i, one / u.at(i, i));
        op.apply(u);
        ops.push_back(op);
    }
    // E_k ... E_1 E_0 A = I, so A = inv(E_0) inv(E_1) ... inv(E_k)
    std::vector<ElementaryOp> factors;
    factors.reserve(ops.size());
    for (const auto& op : ops) factors.push_back(op.inverse());
    for (const auto& f : factors)
        if (!f.is_bibounded()) throw Error("factorization produced a non-bibounded factor");
    return factors;
}

bool succeq_via_gauss(const Matrix& a, const Matrix& b) {
    if (a.backend() != b.backend()) throw BackendMismatch();
    if (a.cols() != b.cols()) throw ColumnMismatch();
    if (!is_row_echelon(b)) throw NotEchelon();
    std::vector<std::pair<size_t, size_t>> pivots;
    for (size_t i = 0; i < b.rows(); ++i) {
        size_t p = row_pivot_col(b, i);
        if (p < b.cols()) pivots.emplace_back(i, p);
    }
    bool ok = true;
    for (size_t i = 0; i < a.rows(); ++i) {
        Matrix res = a.row(i);
        for (const auto& [pi, pc] : pivots) {
            FieldElement coeff = res.at(0, pc) / b.at(pi, pc);
            if (coeff.is_zero()) continue;
            if (!coeff.is_bounded()) ok = false;
            for (size_t j = 0; j < res.cols(); ++j)
                res.at(0, j) = res.at(0, j) - coeff * b.at(pi, j);
        }
        if (!res.is_zero()) return false;
    }
    return ok;
}

Matrix archimedean_canonical_form(const Matrix& a) {
    if (a.backend() != Backend::Qt)
        throw BackendMismatch("the archimedean canonical form requires the Q(t) backend");
    if (a.rows() == 0 || a.is_zero()) throw ZeroMatrix();
    QRPair qr = qr_decompose(a);
    Matrix c = std::move(qr.R);
    size_t r = c.rows();
    std::vector<size_t> k(r);
    std::vector<long> m(r);
    FieldElement one = FieldElement::one(Backend::Qt);
    for (size_t i = 0; i < r; ++i) {
        k[i] = row_pivot_col(c, i);
        auto [unit, mi] = c.at(i, k[i]).unit_decompose();
        m[i] = mi;
        if (unit != one) c.row_scale(i, one / unit);
    }
    // pivot columns left to right; kill all terms with exponents >= m_i above
    // each pivot (the multipliers are bounded, so the operations are bibounded)
    for (size_t i = 1; i < r; ++i) {
        FieldElement tm = FieldElement::t_power(m[i]);
        for (size_t jj = i; jj-- > 0;) {
            const FieldElement& entry = c.at(jj, k[i]);
            FieldElement tail = entry - entry.truncate_below(m[i]);
            if (tail.is_zero()) continue;
            c.row_add_multiple(jj, i, -(tail / tm));
        }
    }
    return c;
}

} // namespace arch
