#ifndef ARCH_POLYNOMIAL_HPP
#define ARCH_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace arch {

/// Dense univariate polynomial in t over Q.  Coefficients are stored in
/// increasing exponent order; the zero polynomial has an empty vector.
class Poly {
public:
    Poly() = default;
    explicit Poly(const mpq_class& c);
    explicit Poly(std::vector<mpq_class> coeffs);

    static Poly one();
    static Poly t_power(long e); // t^e, e >= 0

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; } // -1 for zero
    long ord() const;                                                     // lowest nonzero exponent; 0 for zero
    const mpq_class& coeff(long e) const;                                 // 0 outside range
    const mpq_class& lowest_coeff() const;                                // coeff(ord())
    const mpq_class& leading_coeff() const;

    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_constant() const { return coeffs_.size() <= 1; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const mpq_class& c) const;
    Poly shifted(long e) const; // multiply by t^e, e >= 0

    // Euclidean division; o must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& o) const;
    Poly exact_div(const Poly& o) const;

    static Poly gcd(const Poly& a, const Poly& b); // monic (or zero)

    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    const std::vector<mpq_class>& coeffs() const { return coeffs_; }

private:
    void trim();
    std::vector<mpq_class> coeffs_;
};

} // namespace arch

#endif
