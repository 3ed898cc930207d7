#include "arch/random_gen.hpp"

#include "arch/errors.hpp"
#include "arch/linalg.hpp"

namespace arch {

long RandomGen::uniform(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(eng_);
}

mpq_class RandomGen::rational(long height) {
    mpq_class q(uniform(-height, height), uniform(1, height));
    q.canonicalize();
    return q;
}

FieldElement RandomGen::scalar(Backend b) {
    if (b == Backend::Q) return FieldElement::from_rational(b, rational(6));
    // sparse Laurent polynomial with exponents in [-2, 2]
    FieldElement x = FieldElement::zero(b);
    long terms = uniform(0, 2);
    for (long k = 0; k <= terms; ++k) {
        long c = uniform(-3, 3);
        if (c == 0) continue;
        x = x + FieldElement::t_power(uniform(-2, 2)).scaled_by(c);
    }
    return x;
}

FieldElement RandomGen::bounded_scalar(Backend b) {
    if (b == Backend::Q) return FieldElement::from_rational(b, rational(6));
    FieldElement x = FieldElement::zero(b);
    long terms = uniform(0, 2);
    for (long k = 0; k <= terms; ++k) {
        long c = uniform(-3, 3);
        if (c == 0) continue;
        x = x + FieldElement::t_power(uniform(0, 2)).scaled_by(c);
    }
    return x;
}

FieldElement RandomGen::bibounded_scalar(Backend b) {
    long c0 = uniform(1, 4) * (uniform(0, 1) ? 1 : -1);
    if (b == Backend::Q) return FieldElement::from_int(b, c0);
    FieldElement x = FieldElement::from_int(b, c0);
    if (uniform(0, 1)) x = x + FieldElement::t_power(uniform(1, 2)).scaled_by(uniform(-2, 2));
    return x;
}

Matrix RandomGen::matrix(Backend b, size_t rows, size_t cols) {
    Matrix m(b, rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            if (uniform(0, 3) != 0) m.at(i, j) = scalar(b); // keep some sparsity
    return m;
}

Matrix RandomGen::nonzero_matrix(Backend b, size_t rows, size_t cols) {
    for (;;) {
        Matrix m = matrix(b, rows, cols);
        if (!m.is_zero()) return m;
    }
}

Matrix RandomGen::symmetric(Backend b, size_t n) {
    Matrix m(b, n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            FieldElement x = scalar(b);
            m.at(i, j) = x;
            m.at(j, i) = x;
        }
    return m;
}

Matrix RandomGen::psd(Backend b, size_t n) { return gram(matrix(b, n, n)); }

Matrix RandomGen::invertible_psd(Backend b, size_t n) {
    for (;;) {
        Matrix g = matrix(b, n, n);
        if (!det(g).is_zero()) return gram(g);
    }
}

ElementaryOp RandomGen::bibounded_op(Backend b, size_t n) {
    if (n == 1) return ElementaryOp::scale(0, bibounded_scalar(b));
    switch (uniform(0, 2)) {
        case 0: {
            size_t i = static_cast<size_t>(uniform(0, static_cast<long>(n) - 1));
            size_t j = static_cast<size_t>(uniform(0, static_cast<long>(n) - 2));
            if (j >= i) ++j;
            return ElementaryOp::add_multiple(i, j, bounded_scalar(b));
        }
        case 1:
            return ElementaryOp::scale(static_cast<size_t>(uniform(0, static_cast<long>(n) - 1)),
                                       bibounded_scalar(b));
        default: {
            size_t i = static_cast<size_t>(uniform(0, static_cast<long>(n) - 1));
            size_t j = static_cast<size_t>(uniform(0, static_cast<long>(n) - 2));
            if (j >= i) ++j;
            return ElementaryOp::swap(i, j, b);
        }
    }
}

Matrix RandomGen::bibounded_square(Backend b, size_t n) {
    Matrix q = Matrix::identity(b, n);
    long count = uniform(2, 5);
    for (long k = 0; k < count; ++k) bibounded_op(b, n).apply(q);
    return q;
}

} // namespace arch
