#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tmot/error.hpp"
#include "tmot/expr.hpp"
#include "tmot/report.hpp"

using namespace tmot;

namespace {

const TwistPair kMotive{1, 0};

ExprContext motive_ctx(const FqPtr& field) { return {kMotive, field, "tau", "t"}; }

FieldElem theta_pow(const FqPtr& field, long e) {
    FieldElem th = FieldElem::theta(field);
    FieldElem r = FieldElem::one(field);
    for (long i = 0; i < e; ++i) r = r * th;
    return r;
}

}  // namespace

TEST_CASE("expression parser basics") {
    FqPtr field = FqField::of_order(3);
    ExprContext ctx = motive_ctx(field);

    SUBCASE("juxtaposition keeps written order: tau*T normalizes to T^3 tau") {
        SkewPoly p = parse_expression("tau*T", ctx);
        CHECK(p.terms().size() == 1);
        CHECK(p.coeff({1, 0}) == theta_pow(field, 3));
        CHECK(parse_expression("tau T", ctx) == p);
        CHECK(parse_expression("T^3 tau", ctx) == p);
    }

    SUBCASE("precedence and unary minus") {
        SkewPoly p = parse_expression("2*T^2 + 1 - T", ctx);
        CHECK(p.coeff({0, 0}) ==
              theta_pow(field, 2) + theta_pow(field, 2) + FieldElem::one(field) -
                  FieldElem::theta(field));
        CHECK(parse_expression("-T^2", ctx).coeff({0, 0}) == -theta_pow(field, 2));
        CHECK(parse_expression("(1 + tau)^2", ctx) ==
              parse_expression("1 + 2*tau + tau^2", ctx));
        CHECK(parse_expression("tau^0", ctx) == parse_expression("1", ctx));
    }

    SUBCASE("division by constants") {
        CHECK(parse_expression("T/2", ctx).coeff({0, 0}) ==
              FieldElem::theta(field) * FieldElem::from_int(field, 2));
        FieldElem frac = parse_expression("(T^2 + 1)/(T + 2)", ctx).coeff({0, 0});
        CHECK(frac * (FieldElem::theta(field) + FieldElem::from_int(field, 2)) ==
              theta_pow(field, 2) + FieldElem::one(field));
        CHECK_THROWS_WITH_AS(parse_expression("T/tau", ctx), doctest::Contains("constant"),
                             Error);
        CHECK_THROWS_AS(parse_expression("T/0", ctx), Error);
    }

    SUBCASE("position-annotated errors") {
        CHECK_THROWS_WITH_AS(parse_expression("T +", ctx), doctest::Contains("column 4"), Error);
        CHECK_THROWS_WITH_AS(parse_expression("T + $", ctx),
                             doctest::Contains("line 1, column 5"), Error);
        CHECK_THROWS_WITH_AS(parse_expression("1 +\n x", ctx), doctest::Contains("line 2"),
                             Error);
        CHECK_THROWS_AS(parse_expression("T^(1/3)", ctx), Error);
        CHECK_THROWS_AS(parse_expression("", ctx), Error);
    }

    SUBCASE("variables disallowed by context are rejected") {
        ExprContext no_t{kMotive, field, "tau", ""};
        CHECK_THROWS_WITH_AS(parse_expression("t + tau", no_t),
                             doctest::Contains("unknown symbol 't'"), Error);
    }
}

TEST_CASE("rendered expressions parse back") {
    FqPtr field = FqField::of_order(3);
    ExprContext ctx = motive_ctx(field);
    VarNames names = var_names(kMotive);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        SkewPoly p = SkewPoly::zero(kMotive, field);
        for (int t = 0; t < 4; ++t) {
            Mono2 m{static_cast<long>(rng() % 3), static_cast<long>(rng() % 3)};
            FieldElem num = FieldElem::zero(field);
            for (long e = 0; e <= 2; ++e)
                num = num + theta_pow(field, e) *
                                FieldElem::from_int(field, static_cast<long>(rng() % 3));
            FieldElem den = FieldElem::theta(field) +
                            FieldElem::from_int(field, 1 + static_cast<long>(rng() % 2));
            if (!num.is_zero() && rng() % 2) p.set_coeff(m, rng() % 2 ? num : num / den);
        }
        CHECK(parse_expression(render_skew(p, names), ctx) == p);
    }
}

TEST_CASE("json round-trips") {
    FqPtr field = FqField::of_order(3);

    SUBCASE("coefficients with perfection levels") {
        FieldElem x = FieldElem::theta(field).frobenius(-2) + FieldElem::one(field);
        FieldElem y = x / (FieldElem::theta(field) + FieldElem::from_int(field, 2));
        for (const FieldElem& c : {x, y, FieldElem::zero(field)}) {
            Json j = coeff_to_json(c);
            CHECK(coeff_from_json(j, field) == c);
        }
    }

    SUBCASE("module elements") {
        SkewPoly tau = SkewPoly::variable(kMotive, field, Var::rho);
        ModElem g = ModElem::basis_vector(kMotive, field, 2, 1).times_left(tau * tau) -
                    ModElem::basis_vector(kMotive, field, 2, 2).scaled_left(
                        FieldElem::theta(field).frobenius(-1));
        Json j = elem_to_json(g, var_names(kMotive));
        CHECK(elem_from_json(j, kMotive, field, 2) == g);
    }

    SUBCASE("field blocks") {
        CHECK(*field_from_json(Json{{"q", 9}}) == *field_from_json(Json{{"p", 3}, {"n", 2}}));
        CHECK(field_from_json(Json{{"q", 5}})->p == 5);
        CHECK_THROWS_AS(field_from_json(Json{{"n", 2}}), Error);
        Json round = field_to_json(FqField::of_order(4));
        CHECK(*field_from_json(round) == *FqField::of_order(4));
    }
}

TEST_CASE("janet report serialization survives a verify round-trip") {
    FqPtr field = FqField::of_order(3);
    FieldElem th = FieldElem::theta(field);
    SkewPoly sig = SkewPoly::variable(kMotive, field, Var::sigma);
    SkewPoly rho = SkewPoly::variable(kMotive, field, Var::rho);
    std::vector<ModElem> gens;
    ModElem p1 = ModElem::basis_vector(kMotive, field, 2, 1).times_left(
                     sig - SkewPoly::constant(kMotive, th)) -
                 ModElem::basis_vector(kMotive, field, 2, 2);
    ModElem p2 = ModElem::basis_vector(kMotive, field, 2, 2).times_left(
                     sig - SkewPoly::constant(kMotive, th)) -
                 ModElem::basis_vector(kMotive, field, 2, 1).times_left(rho);
    gens = {p1, p2};
    OrderSpec ord = OrderSpec::identity(2);
    JanetSet J = janet_algorithm(gens, ord);
    Presentation pres{kMotive, gens};
    Json doc = janet_report_to_json(pres, J, field, 2);

    // Rebuild everything from the serialized report.
    FqPtr f2 = field_from_json(doc.at("field"));
    TwistPair twist{doc.at("twist").at(0).get<int>(), doc.at("twist").at(1).get<int>()};
    CHECK(twist == kMotive);
    std::vector<ModElem> gens2;
    for (const auto& g : doc.at("generators")) gens2.push_back(elem_from_json(g, twist, f2, 2));
    CHECK(gens2.size() == 2);
    CHECK(gens2[0] == p1);
    CHECK(gens2[1] == p2);
    JanetSet J2;
    J2.ord = OrderSpec(doc.at("order").get<std::vector<int>>());
    for (const auto& p : doc.at("janet").at("pairs"))
        J2.pairs.push_back({elem_from_json(p.at("element"), twist, f2, 2),
                            p.at("mult_rho").get<bool>(), p.at("mult_sigma").get<bool>()});
    OracleVerdict v = verify_janet(J2, gens2, {3, 4});
    CHECK(v.pass());
}

TEST_CASE("diagrams cover every cone pair") {
    FqPtr field = FqField::of_order(3);
    ModElem k1 = ModElem::basis_vector(kMotive, field, 1, 1);
    JanetSet J = janet_algorithm({k1.shifted({1, 0}), k1.shifted({0, 2})},
                                 OrderSpec::identity(1));
    std::string art = ascii_diagram(J, 1);
    CHECK(art.find('X') != std::string::npos);
    CHECK(art.find('#') != std::string::npos);
    std::string svg = svg_diagram(J, 1);
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("<rect") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
}
