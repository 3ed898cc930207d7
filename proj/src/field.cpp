#include "arch/field.hpp"

#include "arch/errors.hpp"

namespace arch {

std::string backend_name(Backend b) { return b == Backend::Q ? "Q" : "Q(t)"; }

long Valuation::value() const {
    if (!finite_) throw Error("valuation is infinite");
    return v_;
}

Valuation Valuation::operator+(const Valuation& o) const {
    if (!finite_ || !o.finite_) return infinity();
    return Valuation(v_ + o.v_);
}

bool Valuation::operator<(const Valuation& o) const {
    if (!finite_) return false;
    if (!o.finite_) return true;
    return v_ < o.v_;
}

std::string Valuation::str() const {
    return finite_ ? std::to_string(v_) : std::string("infinity");
}

RationalFunction::RationalFunction(Poly num, Poly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::one();
        return;
    }
    Poly g = den_.degree() == 0 ? Poly::one() : Poly::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
    }
    const mpq_class& low = den_.lowest_coeff();
    if (low != 1) {
        mpq_class inv = 1 / low;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RationalFunction RationalFunction::t() { return RationalFunction(Poly::t_power(1), Poly::one()); }

RationalFunction RationalFunction::t_power(long e) {
    if (e >= 0) return RationalFunction(Poly::t_power(e), Poly::one());
    return RationalFunction(Poly::one(), Poly::t_power(-e));
}

mpq_class RationalFunction::constant_value() const {
    if (!is_constant()) throw Error("not a constant");
    return num_.coeff(0);
}

int RationalFunction::sign() const {
    if (num_.is_zero()) return 0;
    return sgn(num_.lowest_coeff());
}

Valuation RationalFunction::valuation() const {
    if (num_.is_zero()) return Valuation::infinity();
    return Valuation(num_.ord() - den_.ord());
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

FieldElement::FieldElement(Backend b, RationalFunction v) : backend_(b), v_(std::move(v)) {
    if (backend_ == Backend::Q && !v_.is_constant())
        throw BackendMismatch("symbol t is not an element of the Q backend");
}

FieldElement FieldElement::from_int(Backend b, long n) {
    return FieldElement(b, RationalFunction(mpq_class(n)));
}

FieldElement FieldElement::from_rational(Backend b, const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    return FieldElement(b, RationalFunction(c));
}

FieldElement FieldElement::t() { return FieldElement(Backend::Qt, RationalFunction::t()); }

FieldElement FieldElement::t_power(long e) {
    return FieldElement(Backend::Qt, RationalFunction::t_power(e));
}

mpq_class FieldElement::rational() const {
    if (backend_ != Backend::Q) throw BackendMismatch("rational() requires the Q backend");
    return v_.constant_value();
}

void FieldElement::require_same(const FieldElement& o) const {
    if (backend_ != o.backend_) throw BackendMismatch();
}

FieldElement FieldElement::operator-() const { return FieldElement(backend_, -v_); }

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same(o);
    return FieldElement(backend_, v_ + o.v_);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same(o);
    return FieldElement(backend_, v_ - o.v_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same(o);
    return FieldElement(backend_, v_ * o.v_);
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    require_same(o);
    return FieldElement(backend_, v_ / o.v_);
}

bool FieldElement::operator==(const FieldElement& o) const {
    require_same(o);
    return v_ == o.v_;
}

Valuation FieldElement::natural_valuation() const { return v_.valuation(); }

bool FieldElement::is_bounded() const { return natural_valuation() >= Valuation(0); }

bool FieldElement::is_bibounded() const { return natural_valuation() == Valuation(0); }

std::pair<FieldElement, long> FieldElement::unit_decompose() const {
    if (is_zero()) throw ZeroInput("unit_decompose of zero");
    long m = natural_valuation().value();
    if (backend_ == Backend::Q) return {*this, 0};
    FieldElement unit = *this / t_power(m);
    return {unit, m};
}

FieldElement FieldElement::truncate_below(long m) const {
    if (backend_ != Backend::Qt)
        throw BackendMismatch("truncate_below requires the Q(t) backend");
    if (is_zero()) return *this;
    long o = natural_valuation().value();
    if (o >= m) return zero(backend_);
    // Strip t^ord from both sides, then long-divide to get the first m - o
    // expansion coefficients.
    Poly n0 = v_.num().exact_div(Poly::t_power(v_.num().ord()));
    Poly d0 = v_.den().exact_div(Poly::t_power(v_.den().ord()));
    long count = m - o;
    std::vector<mpq_class> c(static_cast<size_t>(count), mpq_class(0));
    Poly r = n0;
    const mpq_class& d0c = d0.coeff(0);
    for (long k = 0; k < count; ++k) {
        mpq_class ck = r.coeff(k) / d0c;
        if (ck != 0) r = r - d0.scaled(ck).shifted(k);
        c[static_cast<size_t>(k)] = ck;
    }
    Poly p{std::vector<mpq_class>(c)};
    RationalFunction res =
        o >= 0 ? RationalFunction(p.shifted(o), Poly::one())
               : RationalFunction(p, Poly::t_power(-o));
    return FieldElement(backend_, res);
}

} // namespace arch
