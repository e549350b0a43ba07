#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tmot/error.hpp"
#include "tmot/oracle.hpp"

using namespace tmot;

namespace {

const TwistPair kMotive{1, 0};

struct Ctx {
    FqPtr field = FqField::of_order(3);
    FieldElem th = FieldElem::theta(field);
    SkewPoly rho = SkewPoly::variable(kMotive, field, Var::rho);
    SkewPoly sig = SkewPoly::variable(kMotive, field, Var::sigma);

    SkewPoly c(const FieldElem& x) const { return SkewPoly::constant(kMotive, x); }
    SkewPoly one() const { return c(FieldElem::one(field)); }
    SkewPoly zero() const { return SkewPoly::zero(kMotive, field); }

    ModElem mod(const std::vector<SkewPoly>& coeffs) const {
        int d = static_cast<int>(coeffs.size());
        ModElem r = ModElem::zero(kMotive, field, d);
        for (int i = 0; i < d; ++i)
            r = r + ModElem::basis_vector(kMotive, field, d, i + 1).times_left(coeffs[i]);
        return r;
    }
};

}  // namespace

TEST_CASE("full sheet is spanned by the unit generator") {
    Ctx x;
    ModElem k1 = ModElem::basis_vector(kMotive, x.field, 1, 1);
    TruncatedModule t({k1}, {1, 1}, OrderSpec::identity(1));
    CHECK(t.dimension() == 4);
    CHECK(t.quotient_dimension() == 0);
    CHECK(t.contains(k1.shifted({1, 1})));
}

TEST_CASE("two-sheet example: membership and all four checks") {
    Ctx x;
    SkewPoly s2 = x.sig * x.sig;
    ModElem g1 = x.mod({x.rho * x.rho, -s2 + x.c(x.th)});
    ModElem g2 = x.mod({-s2 + x.c(x.th), x.one()});
    ModElem g3 = x.mod({x.zero(), x.rho * x.rho -
                                      (s2 - x.c(x.th)) * (s2 - x.c(x.th.frobenius(2)))});
    OrderSpec ord = OrderSpec::identity(2);

    TruncatedModule span({g1, g2, g3}, {3, 4}, ord);
    CHECK(span.contains(g2.shifted({2, 0})));
    CHECK(!span.contains(ModElem::basis_vector(kMotive, x.field, 2, 1)));

    JanetSet J = janet_algorithm({g1, g2, g3}, ord);
    OracleVerdict v = verify_janet(J, {g1, g2, g3}, {4, 4});
    CHECK(v.membership_forward);
    CHECK(v.membership_backward);
    CHECK(v.cones_disjoint);
    CHECK(v.cone_cover);
    CHECK(v.staircase_basis);
    CHECK(v.pass());
}

TEST_CASE("negative controls") {
    Ctx x;
    SkewPoly s2 = x.sig * x.sig;
    ModElem g1 = x.mod({x.rho * x.rho, -s2 + x.c(x.th)});
    ModElem g2 = x.mod({-s2 + x.c(x.th), x.one()});
    ModElem g3 = x.mod({x.zero(), x.rho * x.rho -
                                      (s2 - x.c(x.th)) * (s2 - x.c(x.th.frobenius(2)))});
    OrderSpec ord = OrderSpec::identity(2);
    JanetSet J = janet_algorithm({g1, g2, g3}, ord);

    SUBCASE("enlarged multiplicative set breaks disjointness") {
        JanetSet bad = J;
        for (auto& p : bad.pairs)
            if (!p.mult_rho) p.mult_rho = true;
        OracleVerdict v = verify_janet(bad, {g1, g2, g3}, {4, 4});
        CHECK(!v.cones_disjoint);
        CHECK(!v.pass());
    }

    SUBCASE("dropped element breaks leading-monomial coverage") {
        JanetSet bad = J;
        for (size_t i = 0; i < bad.pairs.size(); ++i)
            if (bad.pairs[i].b == g3) bad.pairs.erase(bad.pairs.begin() + static_cast<long>(i--));
        OracleVerdict v = verify_janet(bad, {g1, g2, g3}, {4, 4});
        CHECK(!v.cone_cover);
        CHECK(!v.pass());
    }

    SUBCASE("foreign element breaks forward membership") {
        JanetSet bad = J;
        ConePair extra{ModElem::basis_vector(kMotive, x.field, 2, 1), true, true};
        bad.pairs.push_back(extra);
        OracleVerdict v = verify_janet(bad, {g1, g2, g3}, {4, 4});
        CHECK(!v.membership_forward);
    }
}

TEST_CASE("second Carlitz tensor power staircase inside a small box") {
    Ctx x;
    ModElem p1 = x.mod({x.sig - x.c(x.th), -x.one()});
    ModElem p2 = x.mod({-x.rho, x.sig - x.c(x.th)});
    OrderSpec ord = OrderSpec::identity(2);
    JanetSet J = janet_algorithm({p1, p2}, ord);

    OracleVerdict v = verify_janet(J, {p1, p2}, {3, 4});
    CHECK(v.pass());

    // Staircase in the (2,2) box: k1, k2, sigma k2, sigma^2 k2.
    TruncatedModule span({p1, p2}, {2, 2}, ord);
    long in_cones = 0;
    for (const ModMono& m : span.columns()) {
        bool hit = false;
        for (const auto& p : J.pairs) hit = hit || JanetSet::cone_contains(p, ord, m);
        if (hit) ++in_cones;
    }
    CHECK(static_cast<long>(span.columns().size()) - in_cones == 4);
    CHECK(span.quotient_dimension() >= 4);
}

TEST_CASE("random presentations certify against the oracle") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 25; ++trial) {
        FqPtr field = FqField::of_order(trial % 2 == 0 ? 2 : 3);
        FieldElem th = FieldElem::theta(field);
        int d = 1 + static_cast<int>(rng() % 2);
        // Random operator polynomial in rho of degree <= 2 with small
        // polynomial coefficients in theta.
        auto rand_poly = [&]() {
            SkewPoly f = SkewPoly::zero(kMotive, field);
            for (long k = 0; k <= 2; ++k) {
                FieldElem c = FieldElem::zero(field);
                for (long e = 0; e <= 2; ++e) {
                    long a = static_cast<long>(rng() % field->q());
                    FieldElem term = FieldElem::from_int(field, a);
                    for (long i = 0; i < e; ++i) term = term * th;
                    c = c + term;
                }
                if (!c.is_zero() && rng() % 2) f.set_coeff({k, 0}, c);
            }
            return f;
        };
        // Presentation of a module map: p_i = t k_i - sum_j D_ij k_j.
        std::vector<ModElem> gens;
        for (int i = 0; i < d; ++i) {
            ModElem g = ModElem::basis_vector(kMotive, field, d, i + 1).shifted({0, 1});
            for (int s = 1; s <= d; ++s)
                g = g - ModElem::basis_vector(kMotive, field, d, s).times_left(rand_poly());
            gens.push_back(g);
        }
        OrderSpec ord = OrderSpec::identity(d);
        JanetSet J = janet_algorithm(gens, ord, 50);
        long n_max = 0;
        for (const auto& p : J.pairs) n_max = std::max(n_max, p.b.degree(Var::rho));
        OracleVerdict v = verify_janet(J, gens, {n_max + 2, 4});
        CHECK(v.pass());
    }
}

TEST_CASE("budget guard") {
    Ctx x;
    ModElem k1 = ModElem::basis_vector(kMotive, x.field, 1, 1);
    CHECK_THROWS_AS(TruncatedModule({k1}, {400, 400}, OrderSpec::identity(1)), Error);
}
