/* Core algebra: finite fields, polynomials in th, fractions, multivariate
 * polynomials, series, and the text/JSON formats.
 */

#include "doctest.h"

#include "carlitz/fq.hpp"
#include "carlitz/frac.hpp"
#include "carlitz/grammar.hpp"
#include "carlitz/multipoly.hpp"
#include "carlitz/theta_poly.hpp"
#include "carlitz/zseries.hpp"

using namespace carlitz;

TEST_CASE("finite field axioms across small q") {
    for (int q : {2, 3, 4, 5, 8, 9, 16, 25, 27, 49}) {
        const Fq& F = Fq::get(q);
        CHECK(F.q() == q);
        for (int a = 0; a < q; ++a) {
            fq_elem x = fq_elem(a);
            CHECK(F.add(x, F.neg(x)) == 0);
            CHECK(F.mul(x, 1) == x);
            if (a != 0) {
                CHECK(F.mul(x, F.inv(x)) == 1);
                // Fermat: x^(q-1) = 1
                CHECK(F.pow(x, q - 1) == 1);
            }
            // Frobenius is additive and multiplicative
            for (int b = 0; b < q; ++b) {
                fq_elem y = fq_elem(b);
                CHECK(F.frobenius(F.add(x, y)) ==
                      F.add(F.frobenius(x), F.frobenius(y)));
                CHECK(F.frobenius(F.mul(x, y)) ==
                      F.mul(F.frobenius(x), F.frobenius(y)));
                CHECK(F.mul(x, y) == F.mul(y, x));
            }
        }
        // generator has full multiplicative order
        fq_elem g = F.gen();
        fq_elem acc = 1;
        for (int k = 1; k < q - 1; ++k) {
            acc = F.mul(acc, g);
            CHECK(acc != 1);
        }
        CHECK(F.mul(acc, g) == 1);
    }
}

TEST_CASE("prime field inverses and integer reduction") {
    const Fq& F3 = Fq::get(3);
    CHECK(F3.inv(2) == 2);
    CHECK(F3.from_int(5) == 2);
    CHECK(F3.from_int(-1) == 2);
    const Fq& F5 = Fq::get(5);
    CHECK(F5.inv(2) == 3);
    CHECK(F5.from_int(12) == 2);
}

TEST_CASE("F4 arithmetic with the standard modulus") {
    const Fq& F = Fq::get(4); // x^2 + x + 1
    fq_elem g = F.gen();
    CHECK(g == 2);
    CHECK(F.mul(g, g) == F.add(g, 1));  // g^2 = g + 1
    CHECK(F.frobenius(g) == F.mul(g, g)); // x -> x^2
    CHECK(F.to_string(g) == "g");
    CHECK(F.to_string(F.mul(g, g)) == "g^2");
}

TEST_CASE("F9 packs codes base p") {
    const Fq& F = Fq::get(9); // x^2 + 1, p = 3
    CHECK(F.p() == 3);
    // codes 0..2 form the prime subfield
    CHECK(F.add(2, 2) == 1);
    CHECK(F.mul(2, 2) == 1);
    // Frobenius is x -> x^3 and fixes the prime subfield
    CHECK(F.frobenius(2) == 2);
    fq_elem g = F.gen();
    CHECK(F.pow(g, 8) == 1);
    CHECK(F.pow(g, 4) != 1);
}

TEST_CASE("unsupported fields are rejected") {
    CHECK_THROWS_AS(Fq::get(6), InvalidInput);
    CHECK_THROWS_AS(Fq::get(1), InvalidInput);
    // reducible modulus
    CHECK_THROWS_AS(Fq::get(2, 2, {1, 0, 1}), InvalidInput); // x^2+1=(x+1)^2
}

TEST_CASE("theta polynomial arithmetic") {
    const Fq& F = Fq::get(3);
    ThetaPoly a = parse_theta_poly(F, "th^2 + 2*th + 1");
    ThetaPoly b = parse_theta_poly(F, "th + 1");
    CHECK(a == b * b);
    CHECK((a + b).to_string() == "th^2+2");  // 2th+th = 3th = 0
    CHECK(a.degree() == 2);
    CHECK(ThetaPoly::zero(F).degree() == std::nullopt);
    CHECK((a - a).is_zero());
    CHECK(a.eval(1) == F.from_int(4));

    auto [quo, rem] = divrem(a, b);
    CHECK(quo == b);
    CHECK(rem.is_zero());
    CHECK(div_exact(a, b) == b);
    CHECK_THROWS_AS(div_exact(b, a), IntegralityViolation);
    CHECK(gcd(a, b) == b.monic());

    ThetaPoly c = parse_theta_poly(F, "2*th^2 + 1");
    auto [q2, r2] = divrem(c, b);
    CHECK(q2 * b + r2 == c);
    CHECK(*r2.degree() < *b.degree());
}

TEST_CASE("frobenius spread raises to the q^j power") {
    const Fq& F = Fq::get(3);
    ThetaPoly a = parse_theta_poly(F, "th + 2");
    CHECK(a.frobenius_spread(1, 3) == a.pow(3));
    CHECK(a.frobenius_spread(2, 3) == a.pow(9));
    const Fq& F4 = Fq::get(4);
    ThetaPoly b(F4, {F4.gen(), 1}); // th + g
    // coefficients are NOT fixed by x -> x^4? They are: x^4 = x in F_4.
    CHECK(b.frobenius_spread(1, 4) == b.pow(4));
}

TEST_CASE("monic enumeration order is the base-q code") {
    const Fq& F = Fq::get(2);
    auto ms = monic_enum(F, 2);
    REQUIRE(ms.size() == 4);
    CHECK(ms[0].to_string() == "th^2");
    CHECK(ms[1].to_string() == "th^2+1");
    CHECK(ms[2].to_string() == "th^2+th");
    CHECK(ms[3].to_string() == "th^2+th+1");
    auto m1 = monic_enum(Fq::get(3), 1);
    REQUIRE(m1.size() == 3);
    CHECK(m1[0].to_string() == "th");
    CHECK(m1[1].to_string() == "th+1");
    CHECK(m1[2].to_string() == "th+2");
    auto m0 = monic_enum(F, 0);
    REQUIRE(m0.size() == 1);
    CHECK(m0[0].is_one());
}

TEST_CASE("fractions reduce and respect the valuation") {
    const Fq& F = Fq::get(3);
    ThetaPoly n = parse_theta_poly(F, "th^2 + 2*th + 1");
    ThetaPoly d = parse_theta_poly(F, "2*th + 2");
    Frac f(n, d); // (th+1)^2 / 2(th+1) = 2(th+1) after monic normalization
    CHECK(f.den().is_one());
    CHECK(f == Frac(parse_theta_poly(F, "2*th + 2")));
    CHECK(f.is_integral());
    CHECK(*f.valuation() == -1);

    Frac g(parse_theta_poly(F, "1"), parse_theta_poly(F, "th"));
    CHECK(*g.valuation() == 1);
    CHECK((f * g * g).valuation() == 1);
    CHECK((g - g).valuation() == std::nullopt);
    CHECK(g + g == g * Frac::of_int(F, 2));
}

TEST_CASE("fraction arithmetic round trips") {
    const Fq& F = Fq::get(5);
    Frac a(parse_theta_poly(F, "th + 1"), parse_theta_poly(F, "th^2 + 2"));
    Frac b(parse_theta_poly(F, "3*th"), parse_theta_poly(F, "th + 4"));
    CHECK((a + b) - b == a);
    CHECK((a * b) / b == a);
    CHECK(a * a.inv() == Frac::of_int(F, 1));
    CHECK(a.pow(3) == a * a * a);
    CHECK(a.pow(-2) == (a * a).inv());
    CHECK(a.frobenius_power(1) == a.pow(5));
}

TEST_CASE("monomial order: graded, then reading order") {
    MonoLess lt;
    Mono one;
    Mono t1 = Mono::var(Var::t(1));
    Mono t2 = Mono::var(Var::t(2));
    Mono x1 = Mono::var(Var::x(1));
    Mono z = Mono::var(Var::z());
    CHECK(lt(one, t1));
    CHECK(lt(t1, t2));
    CHECK(lt(t2, x1));
    CHECK(lt(x1, z));
    CHECK(lt(t1, x1.times(z)));                       // degree wins
    CHECK(lt(x1.pow(2), x1.times(Mono::var(Var::x(2))))); // X1^2 < X1*X2
    CHECK(!lt(t1, t1));
    CHECK(lt(t1.times(t2), t2.pow(2)));
}

TEST_CASE("multivariate arithmetic and substitution") {
    const Fq& F = Fq::get(3);
    MultiPoly p = parse_poly(F, "X1^2 + th*X1 + t1");
    MultiPoly q = parse_poly(F, "X1 - t1");
    MultiPoly r = p * q;
    CHECK(r.degree_in(Var::x(1)) == 3);
    CHECK(r + p * -q == MultiPoly::zero(F));
    CHECK(p.pow(2) == p * p);

    // substitute X1 -> t1 + 1
    MultiPoly s = p.subst(Var::x(1), parse_poly(F, "t1 + 1"));
    CHECK(s == parse_poly(F, "(t1+1)^2 + th*(t1+1) + t1"));
    CHECK(p.subst_scalar(Var::x(1), Frac::of_int(F, 0)) ==
          parse_poly(F, "t1"));

    // freshman's dream
    CHECK(p.frobenius_power(1) == p.pow(3));
    // phi twists coefficients only
    MultiPoly tp = parse_poly(F, "th*t1 + 2");
    MultiPoly tw = tp.phi(1);
    CHECK(tw == parse_poly(F, "th^3*t1 + 2"));

    // derivative: exponents reduce mod p
    MultiPoly d = parse_poly(F, "X1^3 + X1^2 + t1*X1").derivative(Var::x(1));
    CHECK(d == parse_poly(F, "2*X1 + t1"));
}

TEST_CASE("split by a marker variable") {
    const Fq& F = Fq::get(2);
    MultiPoly p = parse_poly(F, "X1*Z + X1*Z^2 + t1");
    auto parts = p.split_by(Var::Z());
    REQUIRE(parts.size() == 3);
    CHECK(parts.at(0) == parse_poly(F, "t1"));
    CHECK(parts.at(1) == parse_poly(F, "X1"));
    CHECK(parts.at(2) == parse_poly(F, "X1"));
}

TEST_CASE("series precision tracking") {
    const Fq& F = Fq::get(3);
    MultiPoly one = MultiPoly::of_int(F, 1);
    MultiPoly th = parse_poly(F, "th");
    // exact polynomial 1 + th z
    ZSeries e = ZSeries::exact_poly(F, {one, th});
    CHECK(e.exact());
    CHECK(e.degree_z() == 1);
    // truncated series with 3 known coefficients
    ZSeries t(F, {one, one, one}, 3);
    CHECK(!t.exact());
    CHECK(t.prec() == 3);
    CHECK_THROWS_AS((void)t.coeff(3), PrecisionLoss);
    CHECK_THROWS_AS((void)t.degree_z(), PrecisionLoss);

    ZSeries prod = e * t;
    CHECK(!prod.exact());
    // exact factor of z-degree 1 extends the window to 3 + 1
    CHECK(prod.prec() == 4);
    CHECK(prod.coeff(2) == one + th);

    ZSeries tt = t * t;
    CHECK(tt.prec() == 3);
    CHECK(tt.coeff(2) == MultiPoly::of_int(F, 3 * 1)); // 1+1+1 = 0 mod 3
    CHECK(tt.coeff(2).is_zero());

    CHECK((t - t).is_zero());
    CHECK(e == e.truncated(2) + ZSeries(F, {MultiPoly(F), MultiPoly(F)}, 2));
}

TEST_CASE("canonical text output") {
    const Fq& F2 = Fq::get(2);
    const Fq& F3 = Fq::get(3);
    CHECK(format_poly(parse_poly(F3, "1 - z")) == "1 - z");
    CHECK(format_poly(parse_poly(F3, "1 + 2*z")) == "1 - z");
    CHECK(format_poly(parse_poly(F2, "X1*X2*Z + X1*X2*Z^2")) ==
          "X1*X2*Z + X1*X2*Z^2");
    CHECK(format_poly(parse_poly(F2, "Z^2*X2*X1 + Z*X2*X1")) ==
          "X1*X2*Z + X1*X2*Z^2");
    CHECK(format_poly(MultiPoly::zero(F3)) == "0");
    CHECK(format_poly(parse_poly(F3, "2")) == "-1");
    CHECK(format_poly(parse_poly(F3, "t2 + t1 + X1")) == "t1 + t2 + X1");
    // multi-term coefficients never fold into a bare minus
    CHECK(format_poly(parse_poly(F3, "(2*th+1)*X1")) == "(2*th+1)*X1");
    CHECK(format_poly(parse_poly(F3, "2*th*X1")) == "-th*X1");
    CHECK(format_poly(parse_poly(F3, "X1/th + X2/(th+1)")) ==
          "1/th*X1 + 1/(th+1)*X2");
}

TEST_CASE("parse errors are reported") {
    const Fq& F = Fq::get(3);
    CHECK_THROWS_AS(parse_poly(F, "X1 +"), ParseError);
    CHECK_THROWS_AS(parse_poly(F, "t0"), ParseError);
    CHECK_THROWS_AS(parse_poly(F, "X1 ) "), ParseError);
    CHECK_THROWS_AS(parse_poly(F, "y"), ParseError);
    CHECK_THROWS_AS(parse_poly(F, "X1 / X2"), ParseError);
    CHECK_THROWS_AS(parse_poly(F, "1/0"), ParseError);
    CHECK_THROWS_AS(parse_poly(F, "g"), ParseError); // no generator for prime q
    CHECK_NOTHROW(parse_poly(Fq::get(4), "g*X1 + g^2"));
}

TEST_CASE("text and JSON round trips") {
    const Fq& F = Fq::get(3);
    for (const char* s : {
             "1 - z",
             "X1*X2*Z + X1*X2*Z^2",
             "(th^2+2)/(th+1)*t1^5*X2 + 2*th^4",
             "t1*t2*t3*z^3 + th*Z^9",
             "0",
         }) {
        MultiPoly p = parse_poly(F, s);
        CHECK(parse_poly(F, format_poly(p)) == p);
        CHECK(poly_from_json(poly_to_json(p)) == p);
    }
    const Fq& F4 = Fq::get(4);
    MultiPoly p = parse_poly(F4, "g*th*X1 + g^2*t1 + 1");
    CHECK(parse_poly(F4, format_poly(p)) == p);
    CHECK(poly_from_json(poly_to_json(p)) == p);
}
