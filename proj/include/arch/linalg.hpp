#ifndef ARCH_LINALG_HPP
#define ARCH_LINALG_HPP

#include "arch/matrix.hpp"

#include <utility>
#include <vector>

namespace arch {

/// Subspace of F^n, stored as a reduced-row-echelon basis so that equality of
/// subspaces is entry-wise comparison of the bases.
class Subspace {
public:
    Subspace(size_t ambient, Matrix basis); // basis rows get reduced to RREF
    static Subspace zero(Backend b, size_t ambient);
    static Subspace full(Backend b, size_t ambient);

    size_t ambient() const { return ambient_; }
    size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; } // dim x ambient, RREF, no zero rows

    bool contains(const Matrix& row_vector) const; // 1 x ambient
    bool contains(const Subspace& other) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    size_t ambient_;
    Matrix basis_;
};

struct RrefResult {
    Matrix R;
    std::vector<size_t> pivots; // pivot column per nonzero row
};

RrefResult rref(const Matrix& a);
size_t rank(const Matrix& a);
Subspace kernel(const Matrix& a);

/// A^T A, defined as the n x n zero matrix when A has zero rows.
Matrix gram(const Matrix& a);

FieldElement max_norm(const Matrix& a);
FieldElement dot(const Matrix& u, const Matrix& v); // 1 x n row vectors

/// Orthogonal, l-infinity-normalized spanning vectors of the column space,
/// returned as columns; dependent columns are skipped.  Throws ZeroMatrix on
/// rank 0.
Matrix gram_schmidt(const Matrix& columns);

struct CongruenceDiag {
    Matrix P; // invertible
    Matrix D; // diagonal, A = P^T D P
};

CongruenceDiag congruence_diagonalize(const Matrix& a);

bool is_psd(const Matrix& a);
bool psd_leq(const Matrix& a, const Matrix& b); // a <=_n b, i.e. b - a PSD

Matrix inverse(const Matrix& a); // throws NotInvertible
FieldElement det(const Matrix& a);

Matrix moore_penrose_symmetric(const Matrix& c);
Matrix moore_penrose_general(const Matrix& b); // (B^T B)^+ B^T

Matrix parallel_sum(const Matrix& a, const Matrix& b); // A(A+B)^+B for PSD inputs

/// All k x k minors in lexicographic order of (row set, column set).
std::vector<FieldElement> minors(const Matrix& a, size_t k);

} // namespace arch

#endif
