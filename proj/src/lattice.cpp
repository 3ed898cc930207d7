#include "arch/lattice.hpp"

#include "arch/errors.hpp"

namespace arch {

Matrix meet(const Matrix& a, const Matrix& b) { return Matrix::vstack(a, b); }

Matrix join(const Matrix& a, const Matrix& b) {
    if (a.backend() != b.backend()) throw BackendMismatch();
    if (a.cols() != b.cols()) throw ColumnMismatch();
    Matrix ga = gram(a), gb = gram(b);
    Matrix p = moore_penrose_symmetric(ga + gb);
    Matrix top = a.rows() == 0 ? a : a * p * gb;
    Matrix bottom = b.rows() == 0 ? b : b * p * ga;
    return Matrix::vstack(top, bottom);
}

Matrix psd_meet(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw SizeMismatch();
    if (!is_psd(a) || !is_psd(b)) throw NotPSD();
    return a + b;
}

Matrix psd_join(const Matrix& a, const Matrix& b) { return parallel_sum(a, b); }

Subspace class_kernel(const Matrix& a) { return kernel(a); }

Matrix box_mult(const Matrix& a, const Matrix& b) {
    if (a.backend() != b.backend()) throw BackendMismatch();
    if (a.cols() != b.cols()) throw SizeMismatch("box product needs equal column counts");
    FieldElement c = max_norm(a) * max_norm(b);
    return Matrix::identity(a.backend(), a.cols()).scaled(c);
}

} // namespace arch
