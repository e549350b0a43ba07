#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tmot/janet.hpp"

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

    // element sum_i coeffs[i] * kappa_{i+1}
    ModElem mod(const std::vector<SkewPoly>& coeffs) const {
        int d = static_cast<int>(coeffs.size());
        ModElem r = ModElem::zero(kMotive, field, d);
        for (int i = 0; i < d; ++i)
            r = r + ModElem::basis_vector(kMotive, field, d, i + 1).times_left(coeffs[i]);
        return r;
    }
};

}  // namespace

TEST_CASE("janet decomposition and normal forms on the two-sheet example") {
    Ctx x;
    SkewPoly s2 = x.sig * x.sig;
    ModElem g1 = x.mod({x.rho * x.rho, -s2 + x.c(x.th)});
    ModElem g2 = x.mod({-s2 + x.c(x.th), x.one()});
    ModElem g3 = x.mod({SkewPoly::zero(kMotive, x.field),
                        x.rho * x.rho - (s2 - x.c(x.th)) * (s2 - x.c(x.th.frobenius(2)))});
    OrderSpec ord = OrderSpec::identity(2);

    auto reduced = auto_reduce({g1, g2, g3}, ord);
    REQUIRE(reduced.size() == 3);
    CHECK(reduced[0] == g1);
    CHECK(reduced[1] == g2);
    CHECK(reduced[2] == g3);

    JanetSet J = janet_decomposition(reduced, ord);
    REQUIRE(J.pairs.size() == 4);
    CHECK(J.pairs[0].b == g1);
    CHECK((J.pairs[0].mult_rho && J.pairs[0].mult_sigma));
    CHECK(J.pairs[1].b == g2.shifted({1, 0}));
    CHECK((!J.pairs[1].mult_rho && J.pairs[1].mult_sigma));
    CHECK(J.pairs[2].b == g2);
    CHECK((!J.pairs[2].mult_rho && J.pairs[2].mult_sigma));
    CHECK(J.pairs[3].b == g3);
    CHECK((J.pairs[3].mult_rho && J.pairs[3].mult_sigma));

    // rho^2 g_2 reduces to zero against J
    CHECK(normal_form(g2.shifted({2, 0}), J).is_zero());
    CHECK(normal_form(ModElem::zero(kMotive, x.field, 2), J).is_zero());

    // a single reduction step against g3 alone
    JanetSet only_g3;
    only_g3.ord = ord;
    only_g3.pairs.push_back({g3, true, true});
    ModElem target = ModElem::basis_vector(kMotive, x.field, 2, 2).shifted({2, 2});
    ModElem expected =
        x.mod({SkewPoly::zero(kMotive, x.field),
               s2 * (s2 - x.c(x.th)) * (s2 - x.c(x.th.frobenius(2)))});
    CHECK(normal_form(target, only_g3) == expected);
    CHECK(target - normal_form(target, only_g3) == g3.shifted({0, 2}));

    // already a Janet basis: the algorithm terminates in one round
    JanetSet final = janet_algorithm({g1, g2, g3}, ord);
    CHECK(final.certified);
    REQUIRE(final.pairs.size() == 4);
    CHECK(final.pairs[0].b == g1);
    CHECK(final.pairs[1].b == g2.shifted({1, 0}));
    CHECK(final.pairs[2].b == g2);
    CHECK(final.pairs[3].b == g3);
}

TEST_CASE("normal form idempotence and membership on the example") {
    Ctx x;
    SkewPoly s2 = x.sig * x.sig;
    ModElem g1 = x.mod({x.rho * x.rho, -s2 + x.c(x.th)});
    ModElem g2 = x.mod({-s2 + x.c(x.th), x.one()});
    OrderSpec ord = OrderSpec::identity(2);
    JanetSet J = janet_algorithm({g1, g2}, ord);

    ModElem probe = x.mod({x.rho * x.sig + x.c(x.th), x.rho * x.rho * x.sig - x.one()});
    ModElem nf = normal_form(probe, J);
    CHECK(normal_form(nf, J) == nf);
    CHECK(normal_form(probe - nf, J).is_zero());
}

TEST_CASE("auto reduction cancels leading terms") {
    Ctx x;
    ModElem k1 = ModElem::basis_vector(kMotive, x.field, 2, 1);
    ModElem k2 = ModElem::basis_vector(kMotive, x.field, 2, 2);
    auto reduced = auto_reduce({k1, k1 + k2}, OrderSpec::identity(2));
    REQUIRE(reduced.size() == 2);
    CHECK(reduced[0] == k1);
    CHECK(reduced[1] == k2);

    auto dropped = auto_reduce({k1, k1}, OrderSpec::identity(2));
    REQUIRE(dropped.size() == 1);
    CHECK(dropped[0] == k1);
}

TEST_CASE("second Carlitz tensor power") {
    Ctx x;
    // rho plays tau, sigma plays t
    ModElem p1 = x.mod({x.sig - x.c(x.th), -x.one()});
    ModElem p2 = x.mod({-x.rho, x.sig - x.c(x.th)});
    OrderSpec ord = OrderSpec::identity(2);

    JanetSet J1 = janet_decomposition(auto_reduce({p1, p2}, ord), ord);
    REQUIRE(J1.pairs.size() == 2);
    CHECK(J1.pairs[0].b == p2);
    CHECK((J1.pairs[0].mult_rho && J1.pairs[0].mult_sigma));
    CHECK(J1.pairs[1].b == p1);
    CHECK((!J1.pairs[1].mult_rho && J1.pairs[1].mult_sigma));

    ModElem p3 = x.mod({SkewPoly::zero(kMotive, x.field),
                        -x.rho + (x.sig - x.c(x.th)) * (x.sig - x.c(x.th.frobenius(1)))});
    CHECK(normal_form(p1.shifted({1, 0}), J1) == p3);

    JanetSet J = janet_algorithm({p1, p2}, ord);
    CHECK(J.certified);
    REQUIRE(J.pairs.size() == 3);
    CHECK(J.pairs[0].b == p2);
    CHECK(J.pairs[1].b == p1);
    CHECK(J.pairs[2].b == p3);
    CHECK((J.pairs[2].mult_rho && J.pairs[2].mult_sigma));
}

TEST_CASE("dimension-two module with swapped sheet order") {
    Ctx x;
    SkewPoly zero = SkewPoly::zero(kMotive, x.field);
    // p1 = t k1 - tau^2 k1 - theta k1 - tau^3 k2, p2 = t k2 - tau k1 - k1 - tau^2 k2 - theta k2
    ModElem p1 = x.mod({x.sig - x.rho * x.rho - x.c(x.th), -x.rho * x.rho * x.rho});
    ModElem p2 = x.mod({-x.rho - x.one(), x.sig - x.rho * x.rho - x.c(x.th)});
    OrderSpec ord({2, 1});

    ModElem p1r = p1 - p2.shifted({1, 0});
    auto reduced = auto_reduce({p1, p2}, ord);
    REQUIRE(reduced.size() == 2);
    CHECK(reduced[0] == p2);
    CHECK(reduced[1] == p1r);

    JanetSet J = janet_algorithm({p1, p2}, ord);
    CHECK(J.certified);
    REQUIRE(J.pairs.size() == 4);
    CHECK(J.pairs[0].b == p2);
    CHECK((J.pairs[0].mult_rho && J.pairs[0].mult_sigma));
    CHECK(J.pairs[1].b == p1r);
    CHECK((!J.pairs[1].mult_rho && J.pairs[1].mult_sigma));

    FieldElem thq = x.th.frobenius(1), thq2 = x.th.frobenius(2), thq3 = x.th.frobenius(3);
    ModElem p3 = x.mod(
        {x.rho * x.rho + x.c(FieldElem::from_int(x.field, 2)) * x.rho * x.sig -
             x.c(thq) * x.rho - x.c(thq2) * x.rho + x.sig - x.c(thq2),
         -(x.sig - x.c(x.th)) * (x.sig - x.c(thq2))});
    CHECK(J.pairs[2].b == p3);
    CHECK((!J.pairs[2].mult_rho && J.pairs[2].mult_sigma));

    ModElem p4 = x.mod(
        {x.rho * x.rho * x.rho +
             (x.c(FieldElem::from_int(x.field, 2)) * x.sig - x.c(thq2) - x.c(thq3)) * x.rho *
                 x.rho -
             (x.sig - x.c(x.th)) * (x.sig - x.c(thq3)),
         zero});
    CHECK(J.pairs[3].b == p4);
    CHECK((J.pairs[3].mult_rho && J.pairs[3].mult_sigma));
}
