#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tmot/anderson.hpp"
#include "tmot/error.hpp"

using namespace tmot;

namespace {

struct Ctx {
    FqPtr field = FqField::of_order(3);
    FieldElem th = FieldElem::theta(field);

    SkewPoly rho(TwistPair tw) const { return SkewPoly::variable(tw, field, Var::rho); }
    SkewPoly sig(TwistPair tw) const { return SkewPoly::variable(tw, field, Var::sigma); }
    SkewPoly c(TwistPair tw, const FieldElem& x) const { return SkewPoly::constant(tw, x); }
    SkewPoly one(TwistPair tw) const { return c(tw, FieldElem::one(field)); }
    SkewPoly zero(TwistPair tw) const { return SkewPoly::zero(tw, field); }

    ModElem mod(TwistPair tw, const std::vector<SkewPoly>& coeffs) const {
        int d = static_cast<int>(coeffs.size());
        ModElem r = ModElem::zero(tw, field, d);
        for (int i = 0; i < d; ++i)
            r = r + ModElem::basis_vector(tw, field, d, i + 1).times_left(coeffs[i]);
        return r;
    }

    // phi_t of the d-th Carlitz tensor power: theta diagonal, 1 superdiagonal,
    // tau in the lower-left corner.
    TModuleData carlitz_power(int d) const {
        TwistPair tw{1, 0};
        TModuleData tm{d, SkewMat(d, std::vector<SkewPoly>(d, zero(tw))), field, th};
        for (int i = 0; i < d; ++i) tm.D[i][i] = c(tw, th);
        for (int i = 0; i + 1 < d; ++i) tm.D[i][i + 1] = one(tw);
        tm.D[d - 1][0] = tm.D[d - 1][0] + rho(tw);
        return tm;
    }

    TModuleData example_64() const {
        TwistPair tw{1, 0};
        SkewPoly r = rho(tw);
        TModuleData tm{2, {}, field, th};
        tm.D = {{c(tw, th) + r * r, r * r * r}, {one(tw) + r, c(tw, th) + r * r}};
        return tm;
    }

    // Reads a t-polynomial produced by a forward analysis (sigma variable)
    // as input for the reverse direction (rho variable).
    SkewPoly to_reverse(const SkewPoly& f, TwistPair out) const {
        SkewPoly r = SkewPoly::zero(out, field);
        for (const auto& [m, co] : f.terms()) r.set_coeff({m.j, 0}, co);
        return r;
    }

    MotiveData reverse_input(const AnalysisResult& res) const {
        TwistPair out = reverse_twist(res.side);
        MotiveData m{res.model.s1, {}, res.side, field};
        for (const auto& row : res.model.action) {
            m.Theta.emplace_back();
            for (const auto& f : row) m.Theta.back().push_back(to_reverse(f, out));
        }
        return m;
    }
};

}  // namespace

TEST_CASE("presentations from t-modules") {
    Ctx x;
    TwistPair mo{1, 0};

    SUBCASE("second Carlitz tensor power") {
        Presentation p = presentation_from_tmodule(x.carlitz_power(2), Side::motive);
        CHECK(p.twist == mo);
        REQUIRE(p.gens.size() == 2);
        // p1 = t k1 - theta k1 - k2, p2 = -tau k1 + t k2 - theta k2
        CHECK(p.gens[0] == x.mod(mo, {x.sig(mo) - x.c(mo, x.th), -x.one(mo)}));
        CHECK(p.gens[1] == x.mod(mo, {-x.rho(mo), x.sig(mo) - x.c(mo, x.th)}));
    }

    SUBCASE("Drinfeld module") {
        SkewPoly psi = x.c(mo, x.th) + x.c(mo, x.th) * x.rho(mo) + x.rho(mo) * x.rho(mo);
        TModuleData tm{1, {{psi}}, x.field, x.th};
        Presentation p = presentation_from_tmodule(tm, Side::motive);
        REQUIRE(p.gens.size() == 1);
        CHECK(p.gens[0] == x.mod(mo, {x.sig(mo) - psi}));
    }

    SUBCASE("comotive side applies the starred transpose") {
        TwistPair co{-1, 0};
        Presentation p = presentation_from_tmodule(x.example_64(), Side::comotive);
        CHECK(p.twist == co);
        REQUIRE(p.gens.size() == 2);
        SkewPoly s = x.rho(co);
        // p1 = t k1 - sigma^2 k1 - theta k1 - sigma k2 - k2
        CHECK(p.gens[0] ==
              x.mod(co, {x.sig(co) - s * s - x.c(co, x.th), -s - x.one(co)}));
        CHECK(p.gens[1] == x.mod(co, {-s * s * s, x.sig(co) - s * s - x.c(co, x.th)}));
    }

    SUBCASE("star transpose is an involution") {
        TModuleData tm = x.example_64();
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) CHECK(tm.D[j][i].star().unstar() == tm.D[j][i]);
    }

    SUBCASE("nilpotence violation is rejected") {
        TModuleData tm{2, {}, x.field, x.th};
        tm.D = {{x.c(mo, x.th), x.zero(mo)}, {x.zero(mo), x.c(mo, x.th + FieldElem::one(x.field))}};
        CHECK_THROWS_WITH_AS(presentation_from_tmodule(tm, Side::motive),
                             "not an Anderson t-module", Error);
    }
}

TEST_CASE("Carlitz tensor powers are abelian of rank 1") {
    Ctx x;
    TwistPair mo{1, 0};
    for (int d = 1; d <= 5; ++d) {
        AnalysisResult res = analyze_tmodule(x.carlitz_power(d), Side::motive);
        REQUIRE(res.report.finite);
        CHECK(res.report.rank == 1);
        CHECK(res.model.s1 == 1);
        SkewPoly expect = x.one(mo);
        for (int i = 0; i < d; ++i) expect = expect * (x.sig(mo) - x.c(mo, x.th));
        CHECK(res.model.action[0][0] == expect);
        CHECK(res.perfection_level == 0);
    }
}

TEST_CASE("quasi-periodic extension is not abelian") {
    Ctx x;
    TwistPair mo{1, 0};
    SkewPoly psi = x.c(mo, x.th) + x.rho(mo) + x.rho(mo) * x.rho(mo);
    TModuleData tm{2, {}, x.field, x.th};
    tm.D = {{psi, x.zero(mo)}, {x.rho(mo), x.c(mo, x.th)}};
    AnalysisResult res = analyze_tmodule(tm, Side::motive, OrderSpec({2, 1}));
    CHECK(!res.report.finite);
    CHECK(res.report.rank == 2);
}

TEST_CASE("full analysis of the dimension-2 example, motive side") {
    Ctx x;
    TwistPair mo{1, 0};
    AnalysisResult res = analyze_tmodule(x.example_64(), Side::motive, OrderSpec({2, 1}));
    REQUIRE(res.report.finite);
    CHECK(res.report.n == std::vector<long>{3, 2});
    CHECK(res.report.rank == 3);
    CHECK(res.model.s1 == 3);
    // basis e1 = tau k2, e2 = k2, e3 = k1
    SkewMat expected_basis = {
        {x.one(mo), x.zero(mo), x.zero(mo), x.zero(mo), x.zero(mo)},
        {x.zero(mo), x.one(mo), x.zero(mo), x.zero(mo), x.zero(mo)},
        {x.zero(mo), x.zero(mo), x.zero(mo), x.zero(mo), x.one(mo)},
    };
    CHECK(mat_equal(res.model.basis, expected_basis));
    SkewPoly t = x.sig(mo);
    SkewPoly b = t - x.c(mo, x.th);
    // tau(e1) = tau^2 k2 = (t-th)k2 - tau k1 - k1 with tau k1 = (t-th^q)e1 - (t-th)e3
    SkewMat expected_action = {
        {-(t - x.c(mo, x.th.frobenius(1))), b, b - x.one(mo)},
        {x.one(mo), x.zero(mo), x.zero(mo)},
        {t - x.c(mo, x.th.frobenius(1)), x.zero(mo), -b},
    };
    CHECK(mat_equal(res.model.action, expected_action));
    CHECK(res.perfection_level == 0);
}

TEST_CASE("full analysis of the dimension-2 example, comotive side") {
    Ctx x;
    TwistPair co{-1, 0};
    AnalysisResult res = analyze_tmodule(x.example_64(), Side::comotive);
    REQUIRE(res.report.finite);
    CHECK(res.report.n == std::vector<long>{2, 3});
    CHECK(res.report.rank == 3);
    // basis c1 = sigma k1, c2 = k1, c3 = k2
    SkewMat expected_basis = {
        {x.one(co), x.zero(co), x.zero(co), x.zero(co), x.zero(co)},
        {x.zero(co), x.one(co), x.zero(co), x.zero(co), x.zero(co)},
        {x.zero(co), x.zero(co), x.zero(co), x.zero(co), x.one(co)},
    };
    CHECK(mat_equal(res.model.basis, expected_basis));
    SkewPoly t = x.sig(co);
    SkewPoly b = t - x.c(co, x.th);
    SkewMat expected_action = {
        {-(t - x.c(co, x.th.frobenius(-1))), b, b - x.one(co)},
        {x.one(co), x.zero(co), x.zero(co)},
        {t - x.c(co, x.th.frobenius(-1)), x.zero(co), -b},
    };
    CHECK(mat_equal(res.model.action, expected_action));
    CHECK(res.perfection_level == 1);
}

TEST_CASE("effectiveness check") {
    Ctx x;
    TwistPair rv{0, 1};
    SkewPoly b = x.rho(rv) - x.c(rv, x.th);

    MotiveData cube{1, {{b * b * b}}, Side::motive, x.field};
    EffectiveCheck ec = check_effective(cube);
    CHECK(ec.effective);
    CHECK(ec.c == FieldElem::one(x.field));
    CHECK(ec.s == 3);

    MotiveData tri{2, {{b, x.one(rv)}, {x.zero(rv), b}}, Side::motive, x.field};
    ec = check_effective(tri);
    CHECK(ec.effective);
    CHECK(ec.s == 2);

    MotiveData bad{1, {{x.rho(rv) - x.c(rv, x.th * x.th)}}, Side::motive, x.field};
    ec = check_effective(bad);
    CHECK(!ec.effective);

    MotiveData sing{2, {{b, x.zero(rv)}, {b, x.zero(rv)}}, Side::motive, x.field};
    ec = check_effective(sing);
    CHECK(!ec.effective);
    CHECK_THROWS_AS(tmodule_from_motive(sing), Error);
}

TEST_CASE("reverse direction: Carlitz module and its square") {
    Ctx x;
    TwistPair rv{0, 1};
    TwistPair mo{1, 0};
    SkewPoly b = x.rho(rv) - x.c(rv, x.th);

    SUBCASE("theta = [(t - theta)] gives phi_t = theta + tau") {
        ReverseResult res = tmodule_from_motive({1, {{b}}, Side::motive, x.field});
        REQUIRE(res.has_tmodule);
        CHECK(res.tm.d == 1);
        CHECK(res.tm.D[0][0] == x.c(mo, x.th) + x.rho(mo));
    }

    SUBCASE("theta = [(t - theta)^2] gives a dimension-2 module of rank 1") {
        ReverseResult res = tmodule_from_motive({1, {{b * b}}, Side::motive, x.field});
        REQUIRE(res.has_tmodule);
        CHECK(res.tm.d == 2);
        AnalysisResult fwd = analyze_tmodule(res.tm, Side::motive);
        REQUIRE(fwd.report.finite);
        CHECK(fwd.report.rank == 1);
        CHECK(fwd.model.action[0][0] == (x.sig(mo) - x.c(mo, x.th)) * (x.sig(mo) - x.c(mo, x.th)));
    }
}

TEST_CASE("reverse round-trip through the dimension-2 example") {
    Ctx x;

    SUBCASE("motive side") {
        AnalysisResult fwd = analyze_tmodule(x.example_64(), Side::motive, OrderSpec({2, 1}));
        REQUIRE(fwd.report.finite);
        ReverseResult rev = tmodule_from_motive(x.reverse_input(fwd));
        REQUIRE(rev.has_tmodule);
        CHECK(rev.tm.d == 2);
        AnalysisResult again = analyze_tmodule(rev.tm, Side::motive);
        REQUIRE(again.report.finite);
        CHECK(again.report.rank == 3);
    }

    SUBCASE("comotive side") {
        AnalysisResult fwd = analyze_tmodule(x.example_64(), Side::comotive);
        REQUIRE(fwd.report.finite);
        ReverseResult rev = tmodule_from_motive(x.reverse_input(fwd));
        REQUIRE(rev.has_tmodule);
        CHECK(rev.tm.d == 2);
        AnalysisResult again = analyze_tmodule(rev.tm, Side::comotive);
        REQUIRE(again.report.finite);
        CHECK(again.report.rank == 3);
    }
}
