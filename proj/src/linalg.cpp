#include "arch/linalg.hpp"

#include "arch/errors.hpp"

namespace arch {

RrefResult rref(const Matrix& a) {
    Matrix r = a;
    std::vector<size_t> pivots;
    size_t pr = 0;
    for (size_t col = 0; col < r.cols() && pr < r.rows(); ++col) {
        size_t sel = r.rows();
        for (size_t i = pr; i < r.rows(); ++i)
            if (!r.at(i, col).is_zero()) {
                sel = i;
                break;
            }
        if (sel == r.rows()) continue;
        if (sel != pr) r.row_swap(sel, pr);
        FieldElement inv = FieldElement::one(r.backend()) / r.at(pr, col);
        r.row_scale(pr, inv);
        for (size_t i = 0; i < r.rows(); ++i) {
            if (i == pr || r.at(i, col).is_zero()) continue;
            r.row_add_multiple(i, pr, -r.at(i, col));
        }
        pivots.push_back(col);
        ++pr;
    }
    return {r, pivots};
}

size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

Subspace::Subspace(size_t ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {
    if (basis_.cols() != ambient_) throw SizeMismatch("basis width does not match ambient dimension");
    RrefResult rr = rref(basis_);
    size_t d = rr.pivots.size();
    Matrix b(basis_.backend(), d, ambient_);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < ambient_; ++j) b.at(i, j) = rr.R.at(i, j);
    basis_ = std::move(b);
}

Subspace Subspace::zero(Backend b, size_t ambient) {
    return Subspace(ambient, Matrix(b, 0, ambient));
}

Subspace Subspace::full(Backend b, size_t ambient) {
    return Subspace(ambient, Matrix::identity(b, ambient));
}

bool Subspace::contains(const Matrix& row_vector) const {
    if (row_vector.rows() != 1 || row_vector.cols() != ambient_)
        throw SizeMismatch("expected a 1 x ambient row vector");
    Matrix v = row_vector;
    for (size_t i = 0; i < basis_.rows(); ++i) {
        size_t p = 0;
        while (p < ambient_ && basis_.at(i, p).is_zero()) ++p;
        if (p == ambient_) continue;
        const FieldElement& c = v.at(0, p);
        if (c.is_zero()) continue;
        FieldElement f = c; // pivot entries of an RREF basis are 1
        for (size_t j = 0; j < ambient_; ++j) v.at(0, j) = v.at(0, j) - f * basis_.at(i, j);
    }
    return v.is_zero();
}

bool Subspace::contains(const Subspace& other) const {
    for (size_t i = 0; i < other.basis_.rows(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw SizeMismatch();
    return Subspace(ambient_, Matrix::vstack(basis_, other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw SizeMismatch();
    // x lies in a row space iff it is orthogonal to the kernel of the basis
    // matrix (the standard form is anisotropic over an ordered field).
    Matrix c1 = kernel(basis_).basis();
    Matrix c2 = kernel(other.basis_).basis();
    return kernel(Matrix::vstack(c1, c2));
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace kernel(const Matrix& a) {
    RrefResult rr = rref(a);
    size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (size_t p : rr.pivots) is_pivot[p] = true;
    size_t nfree = n - rr.pivots.size();
    Matrix basis(a.backend(), nfree, n);
    size_t row = 0;
    for (size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        basis.at(row, f) = FieldElement::one(a.backend());
        for (size_t i = 0; i < rr.pivots.size(); ++i)
            basis.at(row, rr.pivots[i]) = -rr.R.at(i, f);
        ++row;
    }
    return Subspace(n, basis);
}

Matrix gram(const Matrix& a) {
    if (a.rows() == 0) return Matrix(a.backend(), a.cols(), a.cols());
    return a.transpose() * a;
}

FieldElement max_norm(const Matrix& a) {
    FieldElement best = FieldElement::zero(a.backend());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) {
            FieldElement v = a.at(i, j).abs();
            if (v > best) best = v;
        }
    return best;
}

FieldElement dot(const Matrix& u, const Matrix& v) {
    if (u.rows() != 1 || v.rows() != 1 || u.cols() != v.cols())
        throw SizeMismatch("dot expects two row vectors of equal length");
    FieldElement s = FieldElement::zero(u.backend());
    for (size_t j = 0; j < u.cols(); ++j) s = s + u.at(0, j) * v.at(0, j);
    return s;
}

namespace {

Matrix column(const Matrix& a, size_t j) {
    Matrix c(a.backend(), 1, a.rows());
    for (size_t i = 0; i < a.rows(); ++i) c.at(0, i) = a.at(i, j);
    return c;
}

} // namespace

Matrix gram_schmidt(const Matrix& columns) {
    if (columns.rows() == 0) throw ZeroMatrix();
    std::vector<Matrix> w;      // orthogonal, unnormalized (as row vectors)
    std::vector<FieldElement> wn; // their squared norms
    for (size_t j = 0; j < columns.cols(); ++j) {
        Matrix v = column(columns, j);
        for (size_t i = 0; i < w.size(); ++i) {
            FieldElement c = dot(v, w[i]) / wn[i];
            if (c.is_zero()) continue;
            for (size_t k = 0; k < v.cols(); ++k) v.at(0, k) = v.at(0, k) - c * w[i].at(0, k);
        }
        if (v.is_zero()) continue;
        wn.push_back(dot(v, v));
        w.push_back(std::move(v));
    }
    if (w.empty()) throw ZeroMatrix();
    Matrix q(columns.backend(), columns.rows(), w.size());
    for (size_t i = 0; i < w.size(); ++i) {
        FieldElement norm = max_norm(w[i]);
        for (size_t k = 0; k < columns.rows(); ++k) q.at(k, i) = w[i].at(0, k) / norm;
    }
    return q;
}

CongruenceDiag congruence_diagonalize(const Matrix& a) {
    if (!a.is_symmetric()) throw NotSymmetric();
    size_t n = a.rows();
    Matrix m = a;
    Matrix e = Matrix::identity(a.backend(), n);
    auto sym_swap = [&](size_t i, size_t j) {
        m.row_swap(i, j);
        for (size_t k = 0; k < n; ++k) std::swap(m.at(k, i), m.at(k, j));
        e.row_swap(i, j);
    };
    auto sym_add = [&](size_t i, size_t j, const FieldElement& c) {
        m.row_add_multiple(i, j, c);
        for (size_t k = 0; k < n; ++k) m.at(k, i) = m.at(k, i) + c * m.at(k, j);
        e.row_add_multiple(i, j, c);
    };
    FieldElement one = FieldElement::one(a.backend());
    for (size_t k = 0; k < n; ++k) {
        if (m.at(k, k).is_zero()) {
            bool fixed = false;
            for (size_t j = k + 1; j < n && !fixed; ++j)
                if (!m.at(j, j).is_zero()) {
                    sym_swap(k, j);
                    fixed = true;
                }
            if (!fixed)
                for (size_t j = k + 1; j < n && !fixed; ++j)
                    if (!m.at(k, j).is_zero()) {
                        sym_add(k, j, one);
                        fixed = true;
                    }
            if (!fixed) continue;
        }
        for (size_t j = k + 1; j < n; ++j)
            if (!m.at(j, k).is_zero()) sym_add(j, k, -m.at(j, k) / m.at(k, k));
    }
    // m is now E A E^T; with P = E^{-T} we get A = P^T m P.
    Matrix p = inverse(e).transpose();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j && !m.at(i, j).is_zero()) throw Error("congruence diagonalization failed");
    return {p, m};
}

namespace {

// Fraction-free (Bareiss) helpers on dense polynomial matrices; they avoid
// the per-operation gcd reductions of rational-function arithmetic.
using PMat = std::vector<std::vector<Poly>>;

int poly_sign(const Poly& p) { return p.is_zero() ? 0 : sgn(p.lowest_coeff()); }

Poly poly_lcm(const Poly& a, const Poly& b) {
    Poly g = Poly::gcd(a, b);
    return (a * b).exact_div(g);
}

// Row denominators d_i, so that a_ij * d_i is a polynomial.
std::vector<Poly> row_denominators(const Matrix& a) {
    std::vector<Poly> d(a.rows(), Poly::one());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) d[i] = poly_lcm(d[i], a.at(i, j).value().den());
    return d;
}

// Bareiss determinant with row pivoting; destroys its argument.
Poly bareiss_det(PMat m) {
    size_t n = m.size();
    if (n == 0) return Poly::one();
    int sign = 1;
    Poly prev = Poly::one();
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t s = n;
            for (size_t i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    s = i;
                    break;
                }
            if (s == n) return Poly();
            std::swap(m[k], m[s]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).exact_div(prev);
        prev = m[k][k];
    }
    return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

} // namespace

bool is_psd(const Matrix& a) {
    if (!a.is_symmetric()) throw NotSymmetric();
    size_t n = a.rows();
    if (n == 0) return true;
    // D A D with the positive diagonal D of row denominators is a congruence,
    // so it preserves positive semidefiniteness and clears all denominators.
    std::vector<Poly> d = row_denominators(a);
    PMat m(n, std::vector<Poly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            const RationalFunction& v = a.at(i, j).value();
            m[i][j] = v.num() * d[i].exact_div(v.den()) * d[j];
        }
    std::vector<size_t> live(n);
    for (size_t i = 0; i < n; ++i) live[i] = i;
    Poly prev = Poly::one();
    while (!live.empty()) {
        size_t pivot = live.size();
        for (size_t ii = 0; ii < live.size(); ++ii) {
            size_t i = live[ii];
            int s = poly_sign(m[i][i]);
            if (s < 0) return false;
            if (s == 0) {
                for (size_t jj = 0; jj < live.size(); ++jj)
                    if (!m[i][live[jj]].is_zero()) return false; // 2x2 minor -a_ij^2 < 0
            } else if (pivot == live.size()) {
                pivot = ii;
            }
        }
        if (pivot == live.size()) return true; // remaining block is zero
        size_t p = live[pivot];
        live.erase(live.begin() + static_cast<long>(pivot));
        for (size_t i : live)
            for (size_t j : live)
                m[i][j] = (m[p][p] * m[i][j] - m[i][p] * m[p][j]).exact_div(prev);
        prev = m[p][p];
    }
    return true;
}

bool psd_leq(const Matrix& a, const Matrix& b) { return is_psd(b - a); }

Matrix inverse(const Matrix& a) {
    if (!a.is_square()) throw SizeMismatch("inverse of a non-square matrix");
    size_t n = a.rows();
    if (n <= 6) {
        // adjugate route on the denominator-cleared polynomial matrix:
        // A = diag(1/d_i) N, so A^-1[j][k] = cof_kj(N) d_k / det(N)
        Backend bk = a.backend();
        std::vector<Poly> d = row_denominators(a);
        PMat nm(n, std::vector<Poly>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                const RationalFunction& v = a.at(i, j).value();
                nm[i][j] = v.num() * d[i].exact_div(v.den());
            }
        Poly det = bareiss_det(nm);
        if (det.is_zero()) throw NotInvertible();
        Matrix inv(bk, n, n);
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                PMat sub(n - 1, std::vector<Poly>(n - 1));
                for (size_t i = 0, si = 0; i < n; ++i) {
                    if (i == k) continue;
                    for (size_t c = 0, sc = 0; c < n; ++c) {
                        if (c == j) continue;
                        sub[si][sc++] = nm[i][c];
                    }
                    ++si;
                }
                Poly cof = bareiss_det(std::move(sub));
                if ((j + k) % 2) cof = -cof;
                inv.at(j, k) = FieldElement(bk, RationalFunction(cof * d[k], det));
            }
        return inv;
    }
    Matrix m = a;
    Matrix inv = Matrix::identity(a.backend(), n);
    for (size_t col = 0; col < n; ++col) {
        size_t sel = n;
        for (size_t i = col; i < n; ++i)
            if (!m.at(i, col).is_zero()) {
                sel = i;
                break;
            }
        if (sel == n) throw NotInvertible();
        if (sel != col) {
            m.row_swap(sel, col);
            inv.row_swap(sel, col);
        }
        FieldElement f = FieldElement::one(a.backend()) / m.at(col, col);
        m.row_scale(col, f);
        inv.row_scale(col, f);
        for (size_t i = 0; i < n; ++i) {
            if (i == col || m.at(i, col).is_zero()) continue;
            FieldElement c = -m.at(i, col);
            m.row_add_multiple(i, col, c);
            inv.row_add_multiple(i, col, c);
        }
    }
    return inv;
}

FieldElement det(const Matrix& a) {
    if (!a.is_square()) throw SizeMismatch("determinant of a non-square matrix");
    size_t n = a.rows();
    Matrix m = a;
    FieldElement d = FieldElement::one(a.backend());
    for (size_t col = 0; col < n; ++col) {
        size_t sel = n;
        for (size_t i = col; i < n; ++i)
            if (!m.at(i, col).is_zero()) {
                sel = i;
                break;
            }
        if (sel == n) return FieldElement::zero(a.backend());
        if (sel != col) {
            m.row_swap(sel, col);
            d = -d;
        }
        d = d * m.at(col, col);
        for (size_t i = col + 1; i < n; ++i) {
            if (m.at(i, col).is_zero()) continue;
            m.row_add_multiple(i, col, -m.at(i, col) / m.at(col, col));
        }
    }
    return d;
}

Matrix moore_penrose_symmetric(const Matrix& c) {
    if (!c.is_symmetric()) throw NotSymmetric();
    size_t n = c.rows();
    RrefResult rr = rref(c); // row space of a symmetric matrix = image
    size_t r = rr.pivots.size();
    if (r == 0) return Matrix(c.backend(), n, n);
    Matrix bc(c.backend(), n, r); // columns form a basis of im C
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < n; ++j) bc.at(j, i) = rr.R.at(i, j);
    Matrix m = bc.transpose() * c * bc;
    return bc * inverse(m) * bc.transpose();
}

Matrix moore_penrose_general(const Matrix& b) {
    if (b.rows() == 0) return Matrix(b.backend(), b.cols(), 1); // unused in practice
    return moore_penrose_symmetric(gram(b)) * b.transpose();
}

Matrix parallel_sum(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw SizeMismatch();
    if (!is_psd(a) || !is_psd(b)) throw NotPSD();
    return a * moore_penrose_symmetric(a + b) * b;
}

namespace {

void combinations(size_t n, size_t k, std::vector<std::vector<size_t>>& out) {
    std::vector<size_t> c(k);
    for (size_t i = 0; i < k; ++i) c[i] = i;
    for (;;) {
        out.push_back(c);
        long i = static_cast<long>(k) - 1;
        while (i >= 0 && c[static_cast<size_t>(i)] == n - k + static_cast<size_t>(i)) --i;
        if (i < 0) return;
        ++c[static_cast<size_t>(i)];
        for (size_t j = static_cast<size_t>(i) + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

} // namespace

std::vector<FieldElement> minors(const Matrix& a, size_t k) {
    if (k == 0 || k > a.rows() || k > a.cols()) throw BadSize("minor size out of range");
    std::vector<std::vector<size_t>> rsets, csets;
    combinations(a.rows(), k, rsets);
    combinations(a.cols(), k, csets);
    std::vector<FieldElement> out;
    out.reserve(rsets.size() * csets.size());
    for (const auto& rs : rsets)
        for (const auto& cs : csets) out.push_back(det(a.submatrix(rs, cs)));
    return out;
}

} // namespace arch
