#include "arch/polynomial.hpp"

#include "arch/errors.hpp"

#include <algorithm>

namespace arch {

namespace {
const mpq_class kZero(0);
}

Poly::Poly(const mpq_class& c) {
    if (c != 0) coeffs_.push_back(c);
}

Poly::Poly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

Poly Poly::one() { return Poly(mpq_class(1)); }

Poly Poly::t_power(long e) {
    Poly p;
    p.coeffs_.assign(static_cast<size_t>(e) + 1, kZero);
    p.coeffs_.back() = 1;
    return p;
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

long Poly::ord() const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return static_cast<long>(i);
    return 0;
}

const mpq_class& Poly::coeff(long e) const {
    if (e < 0 || e >= static_cast<long>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(e)];
}

const mpq_class& Poly::lowest_coeff() const { return coeff(ord()); }

const mpq_class& Poly::leading_coeff() const {
    return coeffs_.empty() ? kZero : coeffs_.back();
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), kZero);
    for (size_t i = 0; i < r.coeffs_.size(); ++i)
        r.coeffs_[i] = coeff(static_cast<long>(i)) + o.coeff(static_cast<long>(i));
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    Poly r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, kZero);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    r.trim();
    return r;
}

Poly Poly::scaled(const mpq_class& c) const {
    if (c == 0) return Poly();
    Poly r(*this);
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

Poly Poly::shifted(long e) const {
    if (is_zero() || e == 0) return *this;
    Poly r;
    r.coeffs_.assign(static_cast<size_t>(e), kZero);
    r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& o) const {
    if (o.is_zero()) throw DivisionByZero();
    Poly q, r(*this);
    const long dn = o.degree();
    const mpq_class& lc = o.leading_coeff();
    if (r.degree() >= dn) q.coeffs_.assign(static_cast<size_t>(r.degree() - dn) + 1, kZero);
    while (!r.is_zero() && r.degree() >= dn) {
        long k = r.degree() - dn;
        mpq_class c = r.leading_coeff() / lc;
        q.coeffs_[static_cast<size_t>(k)] = c;
        r = r - o.scaled(c).shifted(k);
    }
    q.trim();
    return {q, r};
}

Poly Poly::exact_div(const Poly& o) const {
    auto [q, r] = divmod(o);
    if (!r.is_zero()) throw Error("exact_div: division is not exact");
    return q;
}

namespace {

// Integer polynomial helpers for the primitive-remainder-sequence gcd: the
// naive rational Euclid suffers catastrophic coefficient growth.
using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly to_primitive_integer(const Poly& p) {
    mpz_class lcm(1);
    for (long i = 0; i <= p.degree(); ++i) {
        const mpq_class& c = p.coeff(i);
        if (c != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    ZPoly z(static_cast<size_t>(p.degree()) + 1);
    mpz_class content(0);
    for (long i = 0; i <= p.degree(); ++i) {
        mpq_class c = p.coeff(i) * lcm;
        z[static_cast<size_t>(i)] = c.get_num();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z[static_cast<size_t>(i)].get_mpz_t());
    }
    if (content > 1)
        for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
    ztrim(z);
    return z;
}

void make_primitive(ZPoly& p) {
    mpz_class content(0);
    for (const auto& c : p) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content > 1)
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
}

// Pseudo-remainder of x by y: lc(y)^(deg x - deg y + 1) * x mod y over Z.
ZPoly pseudo_rem(ZPoly x, const ZPoly& y) {
    const size_t dy = y.size() - 1;
    const mpz_class& lc = y.back();
    while (x.size() > dy) {
        mpz_class c = x.back();
        size_t shift = x.size() - 1 - dy;
        for (auto& xi : x) xi *= lc;
        for (size_t i = 0; i < y.size(); ++i) x[shift + i] -= c * y[i];
        ztrim(x);
        if (x.empty()) break;
    }
    return x;
}

} // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) {
        const Poly& x = a.is_zero() ? b : a;
        return x.is_zero() ? x : x.scaled(1 / x.leading_coeff());
    }
    if (a.degree() == 0 || b.degree() == 0) return one();
    ZPoly x = to_primitive_integer(a), y = to_primitive_integer(b);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        ZPoly r = pseudo_rem(std::move(x), y);
        make_primitive(r);
        x = std::move(y);
        y = std::move(r);
    }
    std::vector<mpq_class> coeffs(x.size());
    for (size_t i = 0; i < x.size(); ++i) coeffs[i] = mpq_class(x[i]) / mpq_class(x.back());
    return Poly(std::move(coeffs));
}

} // namespace arch
