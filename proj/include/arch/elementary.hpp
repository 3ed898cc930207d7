#ifndef ARCH_ELEMENTARY_HPP
#define ARCH_ELEMENTARY_HPP

#include "arch/matrix.hpp"

#include <string>

namespace arch {

/// Elementary row operation.  Indices are 0-based.
///   AddMultiple(i, j, alpha): row_i += alpha * row_j   (E_ij(alpha))
///   Scale(i, alpha):          row_i *= alpha           (E_i(alpha))
///   Swap(i, j):               exchange rows i and j    (P_ij)
struct ElementaryOp {
    enum class Kind { AddMultiple, Scale, Swap };

    Kind kind;
    size_t i = 0;
    size_t j = 0;
    FieldElement alpha;

    static ElementaryOp add_multiple(size_t i, size_t j, FieldElement a) {
        return {Kind::AddMultiple, i, j, std::move(a)};
    }
    static ElementaryOp scale(size_t i, FieldElement a) {
        return {Kind::Scale, i, i, std::move(a)};
    }
    static ElementaryOp swap(size_t i, size_t j, Backend b) {
        return {Kind::Swap, i, j, FieldElement::zero(b)};
    }

    /// AddMultiple needs alpha bounded, Scale needs alpha bibounded, Swap is
    /// always bibounded.
    bool is_bibounded() const;

    ElementaryOp inverse() const;
    Matrix to_matrix(Backend b, size_t n) const;
    void apply(Matrix& m) const;

    std::string kind_name() const;
};

/// Left-to-right product L_1 * L_2 * ... * L_k as n x n matrices.
Matrix elementary_product(const std::vector<ElementaryOp>& ops, Backend b, size_t n);

} // namespace arch

#endif
