#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>

#include "tmot/field.hpp"

namespace tmot {

// Which of the two skew variables a univariate operation works in.
enum class Var { rho, sigma };

// Monomial rho^k sigma^j. The default ordering (k first, then j) is exactly
// the lexicographic order with sigma < rho used throughout.
struct Mono2 {
    long k = 0;
    long j = 0;
    auto operator<=>(const Mono2& other) const = default;
    long deg(Var v) const { return v == Var::rho ? k : j; }
    Mono2 times(const Mono2& other) const { return {k + other.k, j + other.j}; }
};

// Element of the skew ring K{rho, sigma}: rho*sigma = sigma*rho,
// rho*x = gamma_rho(x)*rho, sigma*x = gamma_sigma(x)*sigma.
class SkewPoly {
public:
    SkewPoly() = default;
    SkewPoly(TwistPair twist, FqPtr field);

    static SkewPoly zero(TwistPair twist, const FqPtr& field) { return SkewPoly(twist, field); }
    static SkewPoly constant(TwistPair twist, FieldElem c);
    static SkewPoly monomial(TwistPair twist, Mono2 m, FieldElem c);
    static SkewPoly variable(TwistPair twist, const FqPtr& field, Var v);

    const TwistPair& twist() const { return twist_; }
    const FqPtr& field() const { return field_; }
    const std::map<Mono2, FieldElem>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    FieldElem coeff(Mono2 m) const;
    void set_coeff(Mono2 m, FieldElem c);

    // Degree in one variable (-1 for zero), and univariateness in it.
    long degree(Var v) const;
    bool univariate_in(Var v) const;

    Mono2 leading_mono() const;  // under the sigma < rho lex order
    FieldElem leading_coeff() const;

    SkewPoly operator+(const SkewPoly& other) const;
    SkewPoly operator-(const SkewPoly& other) const;
    SkewPoly operator-() const;
    SkewPoly operator*(const SkewPoly& other) const;  // twisted product
    SkewPoly scaled_left(const FieldElem& c) const;    // c * this

    // Applies Frobenius^power to every coefficient, leaving the variables
    // untouched (gamma applied "to the coefficients of p").
    SkewPoly coeff_twist(long power) const;

    // Right division in a univariate subring: f = quot*g + rem, deg rem < deg g.
    static void right_divmod(const SkewPoly& f, const SkewPoly& g, Var v, SkewPoly& quot,
                             SkewPoly& rem);
    // Left division: f = g*quot + rem. Needs the variable's twist invertible,
    // which Frobenius powers always are over the perfection.
    static void left_divmod(const SkewPoly& f, const SkewPoly& g, Var v, SkewPoly& quot,
                            SkewPoly& rem);

    // sum a_i rho^i  ->  sum sigma^i a_i = sum a_i^(1/q^i) sigma^i, an
    // anti-isomorphism onto the opposite ring. Input is univariate in rho with
    // twist (1,0); the image is univariate in rho with twist (-1,0).
    SkewPoly star() const;
    // Inverse of star.
    SkewPoly unstar() const;

    bool operator==(const SkewPoly& other) const;
    bool operator!=(const SkewPoly& other) const { return !(*this == other); }

    int max_level() const;

private:
    TwistPair twist_;
    FqPtr field_;
    std::map<Mono2, FieldElem> terms_;  // no zero coefficients stored
};

}  // namespace tmot
