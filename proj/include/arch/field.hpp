#ifndef ARCH_FIELD_HPP
#define ARCH_FIELD_HPP

#include "arch/polynomial.hpp"

#include <compare>
#include <string>
#include <utility>

namespace arch {

enum class Backend { Q, Qt };

std::string backend_name(Backend b);

/// Element of the value group extended by infinity (the valuation of zero).
/// The value group is Z for Q(t) and trivial for Q.
class Valuation {
public:
    Valuation() : finite_(true), v_(0) {}
    explicit Valuation(long v) : finite_(true), v_(v) {}
    static Valuation infinity() {
        Valuation x;
        x.finite_ = false;
        return x;
    }

    bool is_infinity() const { return !finite_; }
    long value() const; // throws on infinity

    Valuation operator+(const Valuation& o) const;
    bool operator==(const Valuation& o) const {
        return finite_ == o.finite_ && (!finite_ || v_ == o.v_);
    }
    bool operator!=(const Valuation& o) const { return !(*this == o); }
    bool operator<(const Valuation& o) const;
    bool operator<=(const Valuation& o) const { return *this < o || *this == o; }
    bool operator>(const Valuation& o) const { return o < *this; }
    bool operator>=(const Valuation& o) const { return o <= *this; }

    std::string str() const;

private:
    bool finite_;
    long v_;
};

/// Quotient of polynomials in t over Q, kept in normal form: numerator and
/// denominator coprime and the lowest nonzero coefficient of the denominator
/// equal to 1.  With t a positive infinitesimal this realizes an effective
/// sub-field of the Laurent series field ordered by the sign of the lowest
/// nonzero coefficient.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Poly::one()) {}
    explicit RationalFunction(const mpq_class& c) : num_(c), den_(Poly::one()) {}
    RationalFunction(Poly num, Poly den);

    static RationalFunction t();
    static RationalFunction t_power(long e); // any sign of e

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    mpq_class constant_value() const; // requires is_constant()

    int sign() const; // sign of the lowest nonzero coefficient of num
    Valuation valuation() const;

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;

    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

private:
    void normalize();
    Poly num_, den_;
};

/// Exact element of one of the two ordered-field backends.  Values are
/// immutable; mixing backends in an operation throws BackendMismatch.
class FieldElement {
public:
    FieldElement() : backend_(Backend::Q), v_() {}
    FieldElement(Backend b, RationalFunction v);

    static FieldElement from_int(Backend b, long n);
    static FieldElement from_rational(Backend b, const mpq_class& q);
    static FieldElement t(); // the positive infinitesimal of the Qt backend
    static FieldElement t_power(long e);
    static FieldElement zero(Backend b) { return from_int(b, 0); }
    static FieldElement one(Backend b) { return from_int(b, 1); }

    Backend backend() const { return backend_; }
    const RationalFunction& value() const { return v_; }
    mpq_class rational() const; // Q backend only

    bool is_zero() const { return v_.is_zero(); }
    int sign() const { return v_.sign(); }
    FieldElement abs() const { return sign() < 0 ? -*this : *this; }

    FieldElement scaled_by(long n) const { return *this * from_int(backend_, n); }

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    bool operator<(const FieldElement& o) const { return (o - *this).sign() > 0; }
    bool operator<=(const FieldElement& o) const { return (o - *this).sign() >= 0; }
    bool operator>(const FieldElement& o) const { return o < *this; }
    bool operator>=(const FieldElement& o) const { return o <= *this; }

    Valuation natural_valuation() const;
    bool is_bounded() const;
    bool is_bibounded() const;

    /// a = unit * t^m with unit bibounded; throws ZeroInput on zero.
    /// For the Q backend returns (a, 0).
    std::pair<FieldElement, long> unit_decompose() const;

    /// All terms of the Laurent expansion at t = 0 with exponent < m.
    /// Qt backend only.
    FieldElement truncate_below(long m) const;

private:
    void require_same(const FieldElement& o) const;
    Backend backend_;
    RationalFunction v_;
};

} // namespace arch

#endif
