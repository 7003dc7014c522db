/* Tests for certified Laurent windows and the approximate τ-operator
 * exponential and logarithm.
 */

#include "doctest.h"

#include <random>

#include "carlitz/carlitz_module.hpp"
#include "carlitz/laurent.hpp"

using namespace carlitz;

namespace {

ThetaPoly tpoly(const Fq& F, std::initializer_list<int> low_first) {
    std::vector<fq_elem> c;
    for (int v : low_first)
        c.push_back(F.from_int(v));
    return ThetaPoly(F, c);
}

ThetaPoly rand_monic(const Fq& F, std::mt19937& rng, int deg) {
    if (deg < 0) deg = 0;
    std::vector<fq_elem> c(size_t(deg) + 1);
    for (auto& v : c) v = fq_elem(rng() % F.q());
    c.back() = 1;
    return ThetaPoly(F, c);
}

Frac rand_frac(const Fq& F, std::mt19937& rng, int maxdeg) {
    int nd = int(rng() % unsigned(maxdeg)) + 1;
    int dd = int(rng() % unsigned(maxdeg)) + 1;
    ThetaPoly num = rand_monic(F, rng, nd);
    return Frac(num, rand_monic(F, rng, dd));
}

// digits of two certified windows for the same value must agree strictly
// above both floors
void check_digits_match(const LaurentScalar& a, const LaurentScalar& b) {
    long long lo = std::max(a.lo(), b.lo());
    long long hi = std::max(a.hi(), b.hi());
    for (long long e = lo; e <= hi; ++e)
        CHECK(a.coeff(e) == b.coeff(e));
}

} // namespace

TEST_CASE("window digits of rational functions") {
    const Fq& F = Fq::get(3);
    ThetaPoly th = ThetaPoly::theta_power(F, 1);

    LaurentScalar w = LaurentScalar::of_frac(Frac(th).inv(), -5);
    CHECK(w.hi() == -1);
    CHECK(w.lo() == -5);
    CHECK(w.coeff(-1) == 1);
    for (long long e = -5; e <= -2; ++e) CHECK(w.coeff(e) == 0);
    CHECK(w.top_exp().has_value());
    CHECK(*w.top_exp() == -1);
    CHECK(w.norm_bound_exp() == -1);

    // 1/(th - 1) = th^-1 + th^-2 + th^-3 + ...
    LaurentScalar g =
        LaurentScalar::of_frac(Frac(tpoly(F, {-1, 1})).inv(), -6);
    for (long long e = -6; e <= -1; ++e) CHECK(g.coeff(e) == 1);

    // th^2/(th^2 + 1) = 1 - th^-2 + th^-4 - ...
    Frac x(ThetaPoly::theta_power(F, 2), tpoly(F, {1, 0, 1}));
    LaurentScalar h = LaurentScalar::of_frac(x, -7);
    CHECK(h.coeff(0) == 1);
    CHECK(h.coeff(-2) == 2);
    CHECK(h.coeff(-4) == 1);
    CHECK(h.coeff(-6) == 2);
    CHECK(h.coeff(-1) == 0);
    CHECK(h.coeff(-3) == 0);

    // values entirely below the floor collapse to a pure bound
    LaurentScalar s =
        LaurentScalar::of_frac(Frac(ThetaPoly::theta_power(F, 5)).inv(), -3);
    CHECK(s.provably_small());
    CHECK(s.norm_bound_exp() == -4);

    LaurentScalar z = LaurentScalar::of_frac(Frac(ThetaPoly::zero(F)), -3);
    CHECK(z.provably_small());
}

TEST_CASE("windows of polynomials") {
    const Fq& F = Fq::get(3);
    ThetaPoly p = tpoly(F, {0, 2, 1}); // th^2 + 2 th

    LaurentScalar w = LaurentScalar::of_poly(p, -3);
    CHECK(w.hi() == 2);
    CHECK(w.coeff(2) == 1);
    CHECK(w.coeff(1) == 2);
    CHECK(w.coeff(0) == 0);
    CHECK(w.norm_bound_exp() == 2);

    // digits below the floor are dropped but the bound stays sound
    LaurentScalar t = LaurentScalar::of_poly(tpoly(F, {1, 0, 1}), 1);
    CHECK(t.coeff(2) == 1);
    CHECK(t.coeff(1) == 0);
    CHECK(t.coeff(0) == 0);
    CHECK(t.lo() == 1);

    CHECK(LaurentScalar::of_poly(ThetaPoly::zero(F), -2).provably_small());
}

TEST_CASE("addition aligns windows at the shallower floor") {
    const Fq& F = Fq::get(5);
    std::mt19937 rng(91);
    for (int trial = 0; trial < 20; ++trial) {
        Frac x = rand_frac(F, rng, 4);
        Frac y = rand_frac(F, rng, 4);
        LaurentScalar wx = LaurentScalar::of_frac(x, -8);
        LaurentScalar wy = LaurentScalar::of_frac(y, -5);
        LaurentScalar sum = wx + wy;
        CHECK(sum.lo() == -5);
        check_digits_match(sum, LaurentScalar::of_frac(x + y, -5));
        LaurentScalar diff = wx - wx;
        CHECK(diff.provably_small());
        CHECK(diff.norm_bound_exp() == -9);
    }
}

TEST_CASE("multiplication certifies the product window") {
    std::mt19937 rng(17);
    for (int q : {2, 3, 4}) {
        const Fq& F = Fq::get(q);
        for (int trial = 0; trial < 15; ++trial) {
            Frac x = rand_frac(F, rng, 3);
            Frac y = rand_frac(F, rng, 3);
            LaurentScalar wx = LaurentScalar::of_frac(x, -20);
            LaurentScalar wy = LaurentScalar::of_frac(y, -20);
            LaurentScalar prod = wx * wy;
            check_digits_match(prod, LaurentScalar::of_frac(x * y, -12));
        }

        // a * (1/a) recovers 1 on the certified part of the window
        ThetaPoly a = rand_monic(F, rng, 3);
        LaurentScalar wa = LaurentScalar::of_poly(a, 0);
        LaurentScalar wi = LaurentScalar::of_frac(Frac(a).inv(), -12);
        LaurentScalar one = wa * wi;
        CHECK(one.coeff(0) == 1);
        CHECK(*one.top_exp() == 0);
        for (long long e = one.lo(); e < 0; ++e) CHECK(one.coeff(e) == 0);

        // a pure bound times a window stays a pure bound with a sound floor
        LaurentScalar small(F, -6, -6);
        LaurentScalar mixed = small * wa;
        CHECK(mixed.provably_small());
        CHECK(mixed.norm_bound_exp() == *wa.top_exp() + small.lo() - 1);
    }
}

TEST_CASE("Frobenius spread maps digit positions exactly") {
    const Fq& F = Fq::get(3);
    ThetaPoly th = ThetaPoly::theta_power(F, 1);
    LaurentScalar w = LaurentScalar::of_frac(Frac(th).inv(), -4);
    LaurentScalar sp = w.frobenius_spread(1);
    CHECK(sp.coeff(-3) == 1);
    CHECK(sp.lo() == -14);
    check_digits_match(
        sp, LaurentScalar::of_frac(Frac(ThetaPoly::theta_power(F, 3)).inv(),
                                   -14));

    // the spread is a ring map: spread of a product = product of spreads
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        Frac x = rand_frac(F, rng, 3);
        Frac y = rand_frac(F, rng, 3);
        LaurentScalar wx = LaurentScalar::of_frac(x, -10);
        LaurentScalar wy = LaurentScalar::of_frac(y, -10);
        check_digits_match((wx * wy).frobenius_spread(1),
                           wx.frobenius_spread(1) * wy.frobenius_spread(1));
        check_digits_match((wx + wy).frobenius_spread(2),
                           wx.frobenius_spread(2) + wy.frobenius_spread(2));
    }
}

TEST_CASE("scaling shifting truncation and printing") {
    const Fq& F = Fq::get(3);
    LaurentScalar g =
        LaurentScalar::of_frac(Frac(tpoly(F, {-1, 1})).inv(), -3);
    CHECK(g.to_string() == "th^-1 + th^-2 + th^-3 + O(th^-4)");

    LaurentScalar sh = g.shifted(3);
    CHECK(sh.coeff(2) == 1);
    CHECK(sh.coeff(0) == 1);
    CHECK(sh.lo() == 0);

    LaurentScalar sc = g.scaled(2);
    CHECK(sc.coeff(-1) == 2);
    CHECK(sc.coeff(-2) == 2);

    LaurentScalar tr = g.truncated(-2);
    CHECK(tr.lo() == -2);
    CHECK(tr.coeff(-1) == 1);
    CHECK(tr.coeff(-2) == 1);
    CHECK(tr.coeff(-3) == 0);

    CHECK(LaurentScalar(F, -2, -2).to_string() == "O(th^-3)");
    CHECK(LaurentScalar::of_poly(tpoly(F, {0, 2, 1}), 0).to_string() ==
          "th^2 + 2*th + O(th^-1)");

    LaurentScalar tp = g.times_poly(tpoly(F, {-1, 1}));
    CHECK(tp.coeff(0) == 1);
    CHECK(tp.lo() == g.lo() + 1);
    for (long long e = tp.lo(); e < 0; ++e) CHECK(tp.coeff(e) == 0);
}

TEST_CASE("exact coefficient bundles become certified windows") {
    const Fq& F = Fq::get(3);
    Frac c1(ThetaPoly::theta_power(F, 1), tpoly(F, {1, 1}));
    MultiPoly f = MultiPoly::monomial(
                      c1, Mono::var(Var::t(1), 2)) +
                  MultiPoly::monomial(Frac::of_int(F, 2),
                                      Mono::var(Var::t(2), 1));
    TateApprox ta = TateApprox::of_exact(f, 2, -10);
    CHECK(ta.c.size() == 2);
    CHECK(ta.err_exp == -11);
    CHECK(ta.gauss_bound_exp() == 0);

    TateApprox d = ta.sub_exact(f);
    CHECK(d.gauss_bound_exp() <= -10);

    CHECK_THROWS_AS(
        TateApprox::of_exact(MultiPoly::variable(F, Var::x(1)), 1, -5),
        InvalidInput);
    CHECK_THROWS_AS(
        TateApprox::of_exact(MultiPoly::variable(F, Var::z()), 1, -5),
        InvalidInput);
    CHECK_THROWS_AS(TateApprox::of_exact(f, 1, -5), InvalidInput);
}

TEST_CASE("the operator exponential of zero stays below target") {
    const Fq& F = Fq::get(3);
    TateApprox zero(F, 1, -20);
    TauApproxResult r = exp_tau_approx(zero, -10);
    CHECK(r.value.gauss_bound_exp() <= -10);
    CHECK(r.j_cap >= 0);
}

TEST_CASE("scalar exponential and logarithm invert on the convergence domain") {
    for (auto [q, vmin] : {std::pair{3, 2}, std::pair{2, 3}}) {
        const Fq& F = Fq::get(q);
        Frac x = Frac(ThetaPoly::theta_power(F, vmin)).inv();
        TateApprox fx(F, 0, -41);
        fx.add_at(Mono(), LaurentScalar::of_frac(x, -40));

        TauApproxResult ex = exp_tau_approx(fx, -15);
        TauApproxResult back = log_tau_approx(ex.value, -10);
        TateApprox diff = back.value.sub_exact(MultiPoly::constant(x));
        CHECK(diff.gauss_bound_exp() <= -10);

        TauApproxResult lg = log_tau_approx(fx, -15);
        TauApproxResult fwd = exp_tau_approx(lg.value, -10);
        TateApprox diff2 = fwd.value.sub_exact(MultiPoly::constant(x));
        CHECK(diff2.gauss_bound_exp() <= -10);
    }
}

TEST_CASE("scalar exponential matches the explicit partial sum") {
    const Fq& F = Fq::get(3);
    Frac x = Frac(ThetaPoly::theta_power(F, 2)).inv();
    TateApprox fx(F, 0, -61);
    fx.add_at(Mono(), LaurentScalar::of_frac(x, -60));
    TauApproxResult ex = exp_tau_approx(fx, -40);

    Frac partial = x + x.pow(3) / Frac(carlitz_D(F, 1)) +
                   x.pow(9) / Frac(carlitz_D(F, 2));
    auto it = ex.value.c.find(Mono());
    REQUIRE(it != ex.value.c.end());
    check_digits_match(it->second, LaurentScalar::of_frac(partial, -40));
}

TEST_CASE("the one-variable exponential recovers the unit at one") {
    // exp_tau of the d <= 6 part of sum_d b_d(t1)/l_d must sit within
    // q^-6 of the constant 1; the dropped tail is bounded by q^-7
    const Fq& F = Fq::get(3);
    MultiPoly m = MultiPoly::zero(F);
    for (int d = 0; d <= 6; ++d)
        m = m + b_poly(F, d, 1).scaled(Frac(carlitz_l(F, d)).inv());
    TateApprox f = TateApprox::of_exact(m, 1, -40);
    f.err_exp = -7;

    TauApproxResult r = exp_tau_approx(f, -6);
    TateApprox diff = r.value.sub_exact(MultiPoly::of_int(F, 1));
    CHECK(diff.gauss_bound_exp() <= -6);
}

TEST_CASE("inputs outside the convergence domain are rejected") {
    const Fq& F = Fq::get(3);

    TateApprox big(F, 1, -20);
    big.add_at(Mono(), LaurentScalar::of_poly(ThetaPoly::theta_power(F, 40),
                                              -20));
    CHECK_THROWS_AS(exp_tau_approx(big, -10), PrecisionLoss);

    TateApprox unit(F, 1, -20);
    unit.add_at(Mono(), LaurentScalar::of_poly(ThetaPoly::constant(F, 1),
                                               -20));
    CHECK_THROWS_AS(log_tau_approx(unit, -10), PrecisionLoss);

    TateApprox bad(F, 1, -20);
    bad.add_at(Mono::var(Var::t(2), 1),
               LaurentScalar::of_frac(Frac(ThetaPoly::theta_power(F, 1)).inv(),
                                      -20));
    CHECK_THROWS_AS(exp_tau_approx(bad, -10), InvalidInput);
}
