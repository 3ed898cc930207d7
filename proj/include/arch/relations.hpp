#ifndef ARCH_RELATIONS_HPP
#define ARCH_RELATIONS_HPP

#include "arch/elementary.hpp"
#include "arch/linalg.hpp"

#include <optional>
#include <vector>

namespace arch {

/// Machine-checkable witness of a positive relation verdict.
struct Certificate {
    enum class Kind { BoundedMultiplier, ScalarMultiplier, ElementaryFactors };

    Kind kind;
    // BoundedMultiplier: A = C * B with every entry of C bounded and
    // r * B^T B - A^T A positive semidefinite.
    std::optional<Matrix> C;
    unsigned long r = 0;
    // ScalarMultiplier: A = alpha * B with alpha bounded.
    std::optional<FieldElement> alpha;
    // ElementaryFactors: A equals the left-to-right product of the factors,
    // each of them bibounded (certifies A ~_n I_n).
    std::vector<ElementaryOp> factors;

    static Certificate bounded_multiplier(Matrix c, unsigned long r);
    static Certificate scalar_multiplier(FieldElement a);
    static Certificate elementary_factors(std::vector<ElementaryOp> ops);
};

struct RelationVerdict {
    bool holds = false;
    std::optional<Certificate> certificate;         // witness for the forward direction
    std::optional<Certificate> certificate_reverse; // second witness for sim
};

/// A >=_n B in the archimedean preorder: A^T A <=_n r B^T B for some natural r.
RelationVerdict succeq(const Matrix& a, const Matrix& b);

/// Archimedean equivalence: succeq both ways.
RelationVerdict sim(const Matrix& a, const Matrix& b);

/// The coarse relation >>_n: A = alpha * B for a bounded scalar alpha.
RelationVerdict gg(const Matrix& a, const Matrix& b);

/// The congruence ==_n: equal after l-infinity normalization, with equal
/// valuations of the max norms.
bool equiv(const Matrix& a, const Matrix& b);

bool is_bounded_matrix(const Matrix& a);
bool is_bibounded_matrix(const Matrix& a);

/// w(A) = v_F(max norm of A) = min entry valuation.
Valuation w_valuation(const Matrix& a);

/// Re-checks a certificate against A and B using only exact linear algebra,
/// without recursing into the deciders.
bool verify_certificate(const Matrix& a, const Matrix& b, const Certificate& cert);

} // namespace arch

#endif
