#include "arch/parser.hpp"

#include "arch/errors.hpp"

#include <cctype>

namespace arch {

namespace {

class EntryParser {
public:
    EntryParser(const std::string& text, Backend backend) : s_(text), backend_(backend) {}

    FieldElement parse() {
        FieldElement r = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg + " at offset " + std::to_string(pos_) + " in \"" + s_ + "\"");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    FieldElement expr() {
        FieldElement r = term();
        for (;;) {
            if (accept('+'))
                r = r + term();
            else if (accept('-'))
                r = r - term();
            else
                return r;
        }
    }

    FieldElement term() {
        FieldElement r = unary();
        for (;;) {
            if (accept('*'))
                r = r * unary();
            else if (accept('/')) {
                FieldElement d = unary();
                if (d.is_zero()) fail("division by zero");
                r = r / d;
            } else
                return r;
        }
    }

    FieldElement unary() {
        if (accept('-')) return -unary();
        return power();
    }

    FieldElement power() {
        FieldElement base = atom();
        if (accept('^')) {
            long e = integer();
            return pow_elem(base, e);
        }
        return base;
    }

    long integer() {
        bool neg = accept('-');
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected integer exponent");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        return neg ? -v : v;
    }

    FieldElement atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            FieldElement r = expr();
            if (!accept(')')) fail("expected ')'");
            return r;
        }
        if (c == 't') {
            if (backend_ != Backend::Qt) fail("symbol t is only available in the Q(t) field");
            ++pos_;
            return FieldElement::t();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                digits += s_[pos_++];
            return FieldElement::from_rational(backend_, mpq_class(mpz_class(digits)));
        }
        fail("unexpected character");
    }

    FieldElement pow_elem(const FieldElement& base, long e) {
        if (e < 0) {
            if (base.is_zero()) fail("zero raised to a negative power");
            return FieldElement::one(base.backend()) / pow_elem(base, -e);
        }
        FieldElement r = FieldElement::one(base.backend());
        FieldElement b = base;
        for (long k = e; k > 0; k >>= 1) {
            if (k & 1) r = r * b;
            if (k > 1) b = b * b;
        }
        return r;
    }

    const std::string& s_;
    Backend backend_;
    size_t pos_ = 0;
};

std::string q_str(const mpq_class& q) { return q.get_str(); }

std::string term_str(const mpq_class& c, long e) {
    if (e == 0) return q_str(c);
    std::string tpart = e == 1 ? "t" : "t^" + std::to_string(e);
    if (c == 1) return tpart;
    if (c == -1) return "-" + tpart;
    return q_str(c) + "*" + tpart;
}

} // namespace

FieldElement parse_entry(const std::string& text, Backend backend) {
    return EntryParser(text, backend).parse();
}

std::string poly_to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (long e = 0; e <= p.degree(); ++e) {
        const mpq_class& c = p.coeff(e);
        if (c == 0) continue;
        std::string t = term_str(c, e);
        if (!out.empty() && t[0] != '-') out += "+";
        out += t;
    }
    return out;
}

std::string entry_to_string(const FieldElement& a) {
    const RationalFunction& v = a.value();
    if (v.den().is_one()) return poly_to_string(v.num());
    return "(" + poly_to_string(v.num()) + ")/(" + poly_to_string(v.den()) + ")";
}

} // namespace arch
