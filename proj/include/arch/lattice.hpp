#ifndef ARCH_LATTICE_HPP
#define ARCH_LATTICE_HPP

#include "arch/linalg.hpp"

namespace arch {

/// Representative of the greatest lower bound of the classes of A and B
/// under >=_n: the vertical stack [A; B].
Matrix meet(const Matrix& a, const Matrix& b);

/// Representative of the least upper bound:
/// [A(A^T A+B^T B)^+ B^T B ; B(A^T A+B^T B)^+ A^T A].
Matrix join(const Matrix& a, const Matrix& b);

/// Lattice operations on the PSD side: [A] meet [B] = [A+B],
/// [A] join [B] = [A:B].
Matrix psd_meet(const Matrix& a, const Matrix& b);
Matrix psd_join(const Matrix& a, const Matrix& b);

/// Kernel of the archimedean class (class-invariant).
Subspace class_kernel(const Matrix& a);

/// The surrogate class multiplication A box B = |A| |B| I_n (max norms).
Matrix box_mult(const Matrix& a, const Matrix& b);

} // namespace arch

#endif
