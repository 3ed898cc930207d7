#include "arch/relations.hpp"

#include "arch/echelon.hpp"
#include "arch/errors.hpp"

namespace arch {

Certificate Certificate::bounded_multiplier(Matrix c, unsigned long r) {
    Certificate cert{Kind::BoundedMultiplier, std::move(c), r, std::nullopt, {}};
    return cert;
}

Certificate Certificate::scalar_multiplier(FieldElement a) {
    Certificate cert{Kind::ScalarMultiplier, std::nullopt, 0, std::move(a), {}};
    return cert;
}

Certificate Certificate::elementary_factors(std::vector<ElementaryOp> ops) {
    Certificate cert{Kind::ElementaryFactors, std::nullopt, 0, std::nullopt, std::move(ops)};
    return cert;
}

namespace {

// Constant term of the Laurent expansion of a bounded element.  In normal
// form a bounded element has den(0) = 1, so this is num(0).
mpq_class constant_term(const FieldElement& s) { return s.value().num().coeff(0); }

unsigned long multiplier_bound(const Matrix& c) {
    FieldElement s = gram(c).trace();
    mpq_class s0 = constant_term(s);
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), s0.get_num().get_mpz_t(), s0.get_den().get_mpz_t());
    f += 1;
    if (f < 1) f = 1;
    return f.get_ui();
}

} // namespace

RelationVerdict succeq(const Matrix& a, const Matrix& b) {
    if (a.backend() != b.backend()) throw BackendMismatch();
    if (a.cols() != b.cols()) throw ColumnMismatch();

    if (b.is_zero()) {
        RelationVerdict v;
        v.holds = a.is_zero();
        if (v.holds && a.rows() >= 1 && b.rows() >= 1)
            v.certificate = Certificate::bounded_multiplier(Matrix(a.backend(), a.rows(), b.rows()), 1);
        return v;
    }
    if (a.is_zero()) {
        RelationVerdict v;
        v.holds = true;
        if (a.rows() >= 1)
            v.certificate = Certificate::bounded_multiplier(Matrix(a.backend(), a.rows(), b.rows()), 1);
        return v;
    }

    // Bring B to echelon form E = GB with bibounded operations; since G and
    // G^-1 are bounded, A = CB with bounded C iff the (unique) coefficients
    // of A's rows against E's pivot rows are bounded and the residuals vanish.
    GaussResult ge = bibounded_gauss(b);
    const Matrix& e = ge.E;
    std::vector<std::pair<size_t, size_t>> pivots;
    for (size_t i = 0; i < e.rows(); ++i)
        for (size_t j = 0; j < e.cols(); ++j)
            if (!e.at(i, j).is_zero()) {
                pivots.emplace_back(i, j);
                break;
            }
    Matrix cp(a.backend(), a.rows(), b.rows());
    bool bounded = true;
    for (size_t i = 0; i < a.rows(); ++i) {
        Matrix res = a.row(i);
        for (const auto& [pi, pc] : pivots) {
            FieldElement coeff = res.at(0, pc) / e.at(pi, pc);
            if (coeff.is_zero()) continue;
            bounded = bounded && coeff.is_bounded();
            for (size_t j = 0; j < res.cols(); ++j)
                res.at(0, j) = res.at(0, j) - coeff * e.at(pi, j);
            cp.at(i, pi) = std::move(coeff);
        }
        if (!res.is_zero()) return {};
    }
    if (!bounded) return {};
    Matrix g = Matrix::identity(a.backend(), b.rows());
    for (const auto& op : ge.ops) op.apply(g); // g = G, so C = C' G
    Matrix c = cp * g;

    Matrix btb = gram(b);
    Matrix ata = gram(a);
    unsigned long r = multiplier_bound(c);
    FieldElement fr = FieldElement::from_int(a.backend(), static_cast<long>(r));
    while (!is_psd(btb.scaled(fr) - ata)) {
        r *= 2;
        fr = FieldElement::from_int(a.backend(), static_cast<long>(r));
    }

    RelationVerdict v;
    v.holds = true;
    v.certificate = Certificate::bounded_multiplier(std::move(c), r);
    return v;
}

RelationVerdict sim(const Matrix& a, const Matrix& b) {
    RelationVerdict fwd = succeq(a, b);
    if (!fwd.holds) return {};
    RelationVerdict bwd = succeq(b, a);
    if (!bwd.holds) return {};
    RelationVerdict v;
    v.holds = true;
    v.certificate = std::move(fwd.certificate);
    v.certificate_reverse = std::move(bwd.certificate);
    return v;
}

RelationVerdict gg(const Matrix& a, const Matrix& b) {
    if (a.backend() != b.backend()) throw BackendMismatch();
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) throw SizeMismatch();

    if (b.is_zero()) {
        RelationVerdict v;
        v.holds = a.is_zero();
        if (v.holds) v.certificate = Certificate::scalar_multiplier(FieldElement::zero(a.backend()));
        return v;
    }
    FieldElement alpha = FieldElement::zero(a.backend());
    bool found = false;
    for (size_t i = 0; i < b.rows() && !found; ++i)
        for (size_t j = 0; j < b.cols() && !found; ++j)
            if (!b.at(i, j).is_zero()) {
                alpha = a.at(i, j) / b.at(i, j);
                found = true;
            }
    if (a != b.scaled(alpha) || !alpha.is_bounded()) return {};
    RelationVerdict v;
    v.holds = true;
    v.certificate = Certificate::scalar_multiplier(std::move(alpha));
    return v;
}

bool equiv(const Matrix& a, const Matrix& b) {
    if (a.backend() != b.backend()) throw BackendMismatch();
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) throw SizeMismatch();
    bool az = a.is_zero(), bz = b.is_zero();
    if (az || bz) return az && bz;
    FieldElement na = max_norm(a), nb = max_norm(b);
    if (na.natural_valuation() != nb.natural_valuation()) return false;
    FieldElement one = FieldElement::one(a.backend());
    return a.scaled(one / na) == b.scaled(one / nb);
}

bool is_bounded_matrix(const Matrix& a) {
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            if (!a.at(i, j).is_bounded()) return false;
    return true;
}

bool is_bibounded_matrix(const Matrix& a) {
    if (a.rows() < a.cols() || !is_bounded_matrix(a)) return false;
    for (const FieldElement& m : minors(a, a.cols()))
        if (m.is_bibounded()) return true;
    return false;
}

Valuation w_valuation(const Matrix& a) { return max_norm(a).natural_valuation(); }

bool verify_certificate(const Matrix& a, const Matrix& b, const Certificate& cert) {
    try {
        switch (cert.kind) {
            case Certificate::Kind::BoundedMultiplier: {
                if (!cert.C) return false;
                const Matrix& c = *cert.C;
                if (c.rows() != a.rows() || c.cols() != b.rows()) return false;
                if (a != c * b) return false;
                if (!is_bounded_matrix(c)) return false;
                FieldElement fr = FieldElement::from_int(a.backend(), static_cast<long>(cert.r));
                return is_psd(gram(b).scaled(fr) - gram(a));
            }
            case Certificate::Kind::ScalarMultiplier: {
                if (!cert.alpha) return false;
                if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
                return cert.alpha->is_bounded() && a == b.scaled(*cert.alpha);
            }
            case Certificate::Kind::ElementaryFactors: {
                if (!a.is_square()) return false;
                for (const auto& op : cert.factors)
                    if (!op.is_bibounded()) return false;
                return elementary_product(cert.factors, a.backend(), a.rows()) == a;
            }
        }
    } catch (const Error&) {
        return false;
    }
    return false;
}

} // namespace arch
