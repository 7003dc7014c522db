/* H basis, sup and Gauss norms, dot action. */

#include "doctest.h"

#include "carlitz/carlitz_module.hpp"
#include "carlitz/errors.hpp"
#include "carlitz/grammar.hpp"
#include "carlitz/norms.hpp"

#include <random>

using namespace carlitz;

namespace {

MultiPoly mp(const Fq& F, const std::string& s) { return parse_poly(F, s); }

MultiPoly rand_xpoly(const Fq& F, std::mt19937& rng, int nv, int maxdeg,
                     int terms) {
    MultiPoly r = MultiPoly::zero(F);
    for (int i = 0; i < terms; ++i) {
        Mono m = Mono::one();
        for (int v = 1; v <= nv; ++v) {
            std::uint32_t e = rng() % std::uint32_t(maxdeg + 1);
            if (e) m = m.times(Mono::var(Var::x(v), e));
        }
        int d = int(rng() % 3);
        unsigned long long lim = 1;
        for (int k = 0; k < d; ++k) lim *= (unsigned long long)F.q();
        r.add_term(m, Frac(ThetaPoly::monic_of_index(F, d, (long long)(rng() % lim))));
    }
    return r;
}

} // namespace

TEST_CASE("norm values multiply, compare and print") {
    NormValue a = NormValue::q_pow(3, 2), b = NormValue::q_pow(3, -1);
    CHECK((a * b) == NormValue::q_pow(3, 1));
    CHECK(NormValue::zero(3) < b);
    CHECK(b < a);
    CHECK((a * NormValue::zero(3)).is_zero());
    CHECK(a.pow_q(2) == NormValue::q_pow(3, 18));
    CHECK(a.to_string() == "q^(2/2) = 3");
    CHECK(b.to_string() == "q^(-1/2)");
    CHECK(NormValue::q_pow(3, -2).to_string() == "q^(-2/2) = 1/3");
    CHECK(NormValue::zero(3).to_string() == "0");
    CHECK(NormValue::q_pow(2, 3).to_string() == "q^(3/1) = 8");
}

TEST_CASE("H polynomials follow the digit recipe") {
    const Fq& F3 = Fq::get(3);
    Var v = Var::x(1);
    CHECK(h_poly(F3, 0, v) == mp(F3, "1"));
    CHECK(h_poly(F3, 1, v) == mp(F3, "X1"));
    CHECK(h_poly(F3, 2, v) == mp(F3, "X1^2"));
    CHECK(h_poly(F3, 3, v) == mp(F3, "th*X1 + X1^3"));
    CHECK(h_poly(F3, 4, v) == mp(F3, "th*X1^2 + X1^4"));
    const Fq& F2 = Fq::get(2);
    CHECK(h_poly(F2, 2, v) == mp(F2, "th*X1 + X1^2"));
    CHECK(h_poly(F2, 3, v) == mp(F2, "th*X1^2 + X1^3"));
}

TEST_CASE("X^q expands as H_q - θ H_1") {
    for (int q : {2, 3, 5}) {
        const Fq& F = Fq::get(q);
        HExpansion E = h_expand(
            MultiPoly::variable(F, Var::x(1), std::uint32_t(q)));
        REQUIRE(E.coeff.size() == 2);
        CHECK(E.coeff.at({std::uint32_t(q)}) == Frac::of_int(F, 1));
        CHECK(E.coeff.at({1u}) == -Frac(ThetaPoly::theta_power(F, 1)));
    }
}

TEST_CASE("h_expand round trips and detects integrality") {
    for (int q : {2, 3, 4}) {
        const Fq& F = Fq::get(q);
        std::mt19937 rng(std::uint32_t(q * 4099));
        for (int trial = 0; trial < 10; ++trial) {
            MultiPoly G = rand_xpoly(F, rng, 2, q + 2, 4);
            HExpansion E = h_expand(G);
            CHECK(h_unexpand(E, F) == G);
            // integral input gives integral H coefficients
            for (const auto& [k, c] : E.coeff) CHECK(c.is_integral());
        }
    }
}

TEST_CASE("sup norm of monomials, H basis and small polynomials") {
    const Fq& F = Fq::get(3);
    // ‖X^n‖ = q^{n/(q-1)}
    for (int n = 1; n <= 7; ++n)
        CHECK(sup_norm(MultiPoly::variable(F, Var::x(1), std::uint32_t(n))) ==
              NormValue::q_pow(3, n));
    // ‖H_N‖ = q^{digit_sum(N)/(q-1)}
    for (long long N : {1, 2, 3, 4, 5, 9, 10, 13, 26}) {
        CHECK(sup_norm(h_poly(F, N, Var::x(1))) ==
              NormValue::q_pow(3, digit_sum(N, 3)));
    }
    // products across variables add exponents
    CHECK(sup_norm(mp(F, "X1^2*X2")) == NormValue::q_pow(3, 3));
    // θ-coefficients contribute |·|_∞
    CHECK(sup_norm(mp(F, "th^2*X1")) == NormValue::q_pow(3, 2 * 2 + 1));
    CHECK(sup_norm(mp(F, "X1/th")) == NormValue::q_pow(3, -2 + 1));
    CHECK(sup_norm(MultiPoly::zero(F)).is_zero());
    CHECK_THROWS_AS(sup_norm(mp(F, "t1*X1")), InvalidInput);
}

TEST_CASE("sup norm is submultiplicative but not multiplicative") {
    for (int q : {2, 3}) {
        const Fq& F = Fq::get(q);
        // X (X^{q-1} + θ) = C_θ(X) = H_q: the norm drops strictly
        MultiPoly a = MultiPoly::variable(F, Var::x(1));
        MultiPoly b = MultiPoly::variable(F, Var::x(1), std::uint32_t(q - 1)) +
                      MultiPoly::constant(Frac(ThetaPoly::theta_power(F, 1)));
        NormValue lhs = sup_norm(a * b);
        NormValue rhs = sup_norm(a) * sup_norm(b);
        CHECK(lhs == NormValue::q_pow(q, 1));
        CHECK(rhs == NormValue::q_pow(q, q));
        CHECK(lhs < rhs);
        std::mt19937 rng(std::uint32_t(17 * q));
        for (int trial = 0; trial < 6; ++trial) {
            MultiPoly u = rand_xpoly(F, rng, 2, q, 3);
            MultiPoly v = rand_xpoly(F, rng, 2, q, 3);
            CHECK(sup_norm(u * v) <= sup_norm(u) * sup_norm(v));
        }
    }
}

TEST_CASE("the diagonal action is an isometry") {
    for (int q : {2, 3}) {
        const Fq& F = Fq::get(q);
        std::mt19937 rng(std::uint32_t(23 * q));
        for (int trial = 0; trial < 6; ++trial) {
            int d = 1 + int(rng() % 2);
            unsigned long long lim = 1;
            for (int k = 0; k < d; ++k) lim *= (unsigned long long)F.q();
            ThetaPoly a =
                ThetaPoly::monic_of_index(F, d, (long long)(rng() % lim));
            MultiPoly G = rand_xpoly(F, rng, 2, q + 1, 3);
            CHECK(sup_norm(carlitz_action(a, G)) == sup_norm(G));
        }
    }
}

TEST_CASE("gauss norm is multiplicative on t polynomials") {
    const Fq& F = Fq::get(3);
    std::mt19937 rng(515);
    auto rand_tpoly = [&](int terms) {
        MultiPoly r = MultiPoly::zero(F);
        for (int i = 0; i < terms; ++i) {
            Mono m = Mono::var(Var::t(1 + int(rng() % 2)), 1 + rng() % 2);
            int dn = int(rng() % 3), dd = int(rng() % 2);
            unsigned long long ln = 1, ld = 1;
            for (int k = 0; k < dn; ++k) ln *= 3;
            for (int k = 0; k < dd; ++k) ld *= 3;
            r.add_term(m, Frac(ThetaPoly::monic_of_index(F, dn, (long long)(rng() % ln)),
                               ThetaPoly::monic_of_index(F, dd, (long long)(rng() % ld))));
        }
        return r;
    };
    for (int trial = 0; trial < 8; ++trial) {
        MultiPoly f = rand_tpoly(3), g = rand_tpoly(3);
        if (f.is_zero() || g.is_zero()) continue;
        CHECK(gauss_norm(f * g) == gauss_norm(f) * gauss_norm(g));
    }
    CHECK(gauss_norm(mp(F, "t1/th + th^2*t2")) == NormValue::q_pow(3, 4));
}

TEST_CASE("dot action: digit shifts on H, linear norms, Z spreading") {
    const Fq& F = Fq::get(3);
    // t_i . H_N(X_i) = H_{3N}(X_i)
    for (long long N : {1, 2, 3, 5, 8}) {
        MultiPoly lhs = dot_action(MultiPoly::variable(F, Var::t(1)),
                                   h_poly(F, N, Var::x(1)));
        CHECK(lhs == h_poly(F, 3 * N, Var::x(1)));
    }
    // t_1^2 t_2 . X1X2 = H_9(X1) H_3(X2)
    CHECK(dot_action(mp(F, "t1^2*t2"), mp(F, "X1*X2")) ==
          h_poly(F, 9, Var::x(1)) * h_poly(F, 3, Var::x(2)));
    // z moves Z^n to Z^{nq}
    CHECK(dot_action(mp(F, "z"), mp(F, "X1*Z + X1*Z^2")) ==
          mp(F, "X1*Z^3 + X1*Z^6"));
    CHECK(dot_action(mp(F, "t1*z"), mp(F, "X1*Z")) ==
          carlitz_poly(ThetaPoly::theta_power(F, 1), Var::x(1)) *
              mp(F, "Z^3"));
    // ‖f.F‖ = ‖f‖_∞ ‖F‖ on q-power-linear F
    std::mt19937 rng(999);
    for (int trial = 0; trial < 6; ++trial) {
        MultiPoly f = MultiPoly::zero(F);
        for (int i = 0; i < 3; ++i) {
            Mono m = Mono::var(Var::t(1), rng() % 3)
                         .times(Mono::var(Var::t(2), rng() % 3));
            int dn = int(rng() % 3);
            unsigned long long ln = 1;
            for (int k = 0; k < dn; ++k) ln *= 3;
            f.add_term(m, Frac(ThetaPoly::monic_of_index(F, dn, (long long)(rng() % ln))));
        }
        std::uint32_t e1 = rng() % 2 ? 3 : 1, e2 = rng() % 2 ? 9 : 3;
        MultiPoly F0 =
            MultiPoly::monomial(Frac::of_int(F, 1),
                                Mono::var(Var::x(1), e1).times(Mono::var(Var::x(2), e2)));
        if (f.is_zero()) continue;
        CHECK(sup_norm(dot_action(f, F0)) == gauss_norm(f) * sup_norm(F0));
    }
    CHECK_THROWS_AS(dot_action(mp(F, "X1"), mp(F, "X1")), InvalidInput);
    CHECK_THROWS_AS(dot_action(mp(F, "t1"), mp(F, "t1")), InvalidInput);
}

TEST_CASE("integral polynomials of norm at most one are constants") {
    for (int q : {2, 3}) {
        const Fq& F = Fq::get(q);
        std::mt19937 rng(std::uint32_t(31 * q));
        for (int trial = 0; trial < 12; ++trial) {
            MultiPoly G = rand_xpoly(F, rng, 2, q + 1, 3);
            if (G.is_zero()) continue;
            bool small = !(NormValue::one(q) < sup_norm(G));
            if (small) {
                // must be a constant from F_q
                CHECK(G.terms().size() == 1);
                CHECK(G.terms().begin()->first.is_one());
                CHECK(*G.terms().begin()->second.num().degree() == 0);
            }
        }
        // and conversely F_q constants have norm exactly one
        CHECK(sup_norm(MultiPoly::of_int(F, 1)) == NormValue::one(q));
    }
}
