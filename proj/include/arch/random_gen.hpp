#ifndef ARCH_RANDOM_GEN_HPP
#define ARCH_RANDOM_GEN_HPP

#include "arch/elementary.hpp"
#include "arch/matrix.hpp"

#include <cstdint>
#include <random>

namespace arch {

/// Deterministic generator of small exact matrices for property suites.
class RandomGen {
public:
    explicit RandomGen(std::uint64_t seed) : eng_(seed) {}

    long uniform(long lo, long hi); // inclusive

    mpq_class rational(long height);
    FieldElement scalar(Backend b);          // small height / degree, exponents in [-2, 2]
    FieldElement bounded_scalar(Backend b);   // valuation >= 0
    FieldElement bibounded_scalar(Backend b); // valuation == 0

    Matrix matrix(Backend b, size_t rows, size_t cols);
    Matrix nonzero_matrix(Backend b, size_t rows, size_t cols);
    Matrix symmetric(Backend b, size_t n);
    Matrix psd(Backend b, size_t n);            // G^T G
    Matrix invertible_psd(Backend b, size_t n); // G^T G with G invertible

    ElementaryOp bibounded_op(Backend b, size_t n);
    Matrix bibounded_square(Backend b, size_t n); // product of bibounded elementary matrices

private:
    std::mt19937_64 eng_;
};

} // namespace arch

#endif
