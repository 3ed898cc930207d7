#ifndef ARCH_ECHELON_HPP
#define ARCH_ECHELON_HPP

#include "arch/elementary.hpp"
#include "arch/linalg.hpp"

#include <set>
#include <utility>
#include <vector>

namespace arch {

struct QRPair {
    Matrix Q; // m x r, orthogonal l-infinity-normalized columns
    Matrix R; // r x n, row echelon with positive pivots and no zero rows
};

/// Positions above the staircase of a row echelon form, plus the pivot list.
/// Indices are 0-based.
struct Shape {
    std::set<std::pair<size_t, size_t>> positions;
    std::vector<std::pair<size_t, size_t>> pivots; // (row, col)

    bool operator==(const Shape& o) const = default;
    bool subset_of(const Shape& o) const;
    bool empty() const { return positions.empty(); }
};

/// Complete computable invariant of an archimedean class: the shape of its
/// echelon representative and the valuations of the pivots.
struct ClassDescriptor {
    Shape shape;
    std::vector<Valuation> pivot_valuations;

    bool operator==(const ClassDescriptor& o) const = default;
};

bool is_row_echelon(const Matrix& c);

/// Unique QR decomposition: A = QR.  Throws ZeroMatrix on rank 0.
QRPair qr_decompose(const Matrix& a);

Shape shape_of(const Matrix& echelon); // throws NotEchelon

ClassDescriptor class_descriptor(const Matrix& a); // empty descriptor for rank 0

struct GaussResult {
    std::vector<ElementaryOp> ops; // applied left to right to A they yield E
    Matrix E;                      // row echelon form
};

/// Gaussian elimination restricted to bibounded operations: in every column
/// the pivot is an element of the largest absolute value (smallest row index
/// among ties), so the elimination multipliers are bounded.
GaussResult bibounded_gauss(const Matrix& a);

/// Factors a bibounded square matrix into bibounded elementary matrices whose
/// left-to-right product equals the matrix exactly.  Throws NotBibounded.
std::vector<ElementaryOp> elementary_factorization(const Matrix& a);

/// Decides A >=_n B for a row echelon form B by eliminating the rows of A
/// with B's pivots: true iff every multiplier is bounded and the A-rows
/// reduce to zero.  Agrees with succeq.
bool succeq_via_gauss(const Matrix& a, const Matrix& b); // throws NotEchelon

/// The unique archimedean canonical form of the class of A over Q(t):
/// pivots t^{m_i}, entries above each pivot truncated below t^{m_i}.
Matrix archimedean_canonical_form(const Matrix& a); // throws ZeroMatrix, BackendMismatch

} // namespace arch

#endif
