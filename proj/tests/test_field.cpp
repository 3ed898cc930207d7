#include "arch/field.hpp"
#include "arch/errors.hpp"
#include "arch/parser.hpp"
#include "arch/polynomial.hpp"

#include <doctest.h>

using namespace arch;

namespace {
FieldElement qt(const std::string& s) { return parse_entry(s, Backend::Qt); }
FieldElement q(const std::string& s) { return parse_entry(s, Backend::Q); }
std::string str(const FieldElement& a) { return entry_to_string(a); }
} // namespace

TEST_CASE("polynomial arithmetic and gcd") {
    Poly a = Poly::t_power(2) + Poly::one(); // 1 + t^2
    Poly b = Poly::t_power(1) + Poly::one(); // 1 + t
    CHECK(a.degree() == 2);
    CHECK((a * b).degree() == 3);
    CHECK(a.ord() == 0);
    CHECK(Poly::t_power(3).ord() == 3);
    // gcd oracle: g divides both and the cofactors are coprime
    Poly p = a * b, r = b * b;
    Poly g = Poly::gcd(p, r);
    CHECK(p.divmod(g).second.is_zero());
    CHECK(r.divmod(g).second.is_zero());
    CHECK(Poly::gcd(p.exact_div(g), r.exact_div(g)).degree() == 0);
}

TEST_CASE("entry arithmetic in canonical form") {
    CHECK(str(q("1/2 + 1/3")) == "5/6");
    CHECK(str(qt("t * (1/t)")) == "1");
    CHECK(str(qt("1/(1+t) - 1")) == "(-t)/(1+t)");
    CHECK(str(qt("(1+t)^2")) == "1+2*t+t^2");
    CHECK(str(qt("t^-2")) == "(1)/(t^2)");
    // round trip: canonical strings re-parse to equal elements
    for (const char* s : {"t", "1/2", "(1+t)/(2+t^3)", "-3*t^2", "t^-1 + 5"}) {
        FieldElement x = qt(s);
        CHECK(parse_entry(entry_to_string(x), Backend::Qt) == x);
    }
}

TEST_CASE("ordering by the sign of the lowest coefficient") {
    CHECK(qt("t - 1/1000000").sign() == -1); // t is smaller than every positive rational
    CHECK(qt("t^2/(1+t)").sign() == 1);
    CHECK(qt("0").sign() == 0);
    CHECK(qt("t") > qt("0"));
    CHECK(qt("t") < qt("1/1000000"));
    CHECK(qt("1/t") > qt("1000000"));
    CHECK(q("-2/3") < q("1/2"));
}

TEST_CASE("natural valuation") {
    CHECK(qt("t^3/(2+t)").natural_valuation() == Valuation(3));
    CHECK(q("7/5").natural_valuation() == Valuation(0));
    CHECK(q("0").natural_valuation().is_infinity());
    CHECK(qt("1/t").natural_valuation() == Valuation(-1));
    // oracle: v(ab) = v(a) + v(b)
    FieldElement a = qt("t^2*(3+t)"), b = qt("(1+t)/t");
    CHECK((a * b).natural_valuation() == a.natural_valuation() + b.natural_valuation());
}

TEST_CASE("bounded and bibounded predicates") {
    CHECK(!qt("1/t").is_bounded());
    CHECK(qt("t").is_bounded());
    CHECK(!qt("t").is_bibounded());
    CHECK(qt("3+t").is_bibounded());
    CHECK(q("5").is_bibounded());
    CHECK(!q("0").is_bibounded());
}

TEST_CASE("unit decomposition a = u t^m") {
    auto [u, m] = qt("2*t^2").unit_decompose();
    CHECK(str(u) == "2");
    CHECK(m == 2);
    auto [u2, m2] = qt("t/(1+t)").unit_decompose();
    CHECK(str(u2) == "(1)/(1+t)");
    CHECK(m2 == 1);
    auto [u3, m3] = q("5").unit_decompose();
    CHECK(str(u3) == "5");
    CHECK(m3 == 0);
    CHECK_THROWS_AS(qt("0").unit_decompose(), ZeroInput);
    // oracle: reassembling u * t^m gives the element back
    FieldElement x = qt("(3*t^2 + t^3)/(1+t)");
    auto [u4, m4] = x.unit_decompose();
    CHECK(u4.is_bibounded());
    CHECK(u4 * FieldElement::t_power(m4) == x);
}

TEST_CASE("truncation below an exponent") {
    CHECK(str(qt("1/(1-t)").truncate_below(2)) == "1+t");
    CHECK(str(qt("t^3").truncate_below(2)) == "0");
    CHECK(str(qt("1/t + 5").truncate_below(1)) == "(1+5*t)/(t)");
    // oracle: the difference has valuation >= the cut
    FieldElement x = qt("(1+t)/(1 - t + t^2)");
    for (long m : {0L, 1L, 3L}) {
        FieldElement tail = x - x.truncate_below(m);
        CHECK((tail.is_zero() || tail.natural_valuation() >= Valuation(m)));
    }
}

TEST_CASE("backend separation") {
    CHECK_THROWS_AS(parse_entry("t", Backend::Q), ParseError);
    CHECK_THROWS_AS(q("1") + qt("1"), BackendMismatch);
    CHECK_THROWS_AS(qt("1") / qt("0"), DivisionByZero);
    CHECK_THROWS_AS(parse_entry("1 +", Backend::Q), ParseError);
    CHECK_THROWS_AS(parse_entry("t^(1/2)", Backend::Qt), ParseError);
}
