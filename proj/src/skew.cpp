#include "tmot/skew.hpp"

#include <algorithm>

namespace tmot {

SkewPoly::SkewPoly(TwistPair twist, FqPtr field) : twist_(twist), field_(std::move(field)) {
    if (!field_) fail_internal("SkewPoly without field");
}

SkewPoly SkewPoly::constant(TwistPair twist, FieldElem c) {
    SkewPoly p(twist, c.field());
    p.set_coeff({0, 0}, std::move(c));
    return p;
}

SkewPoly SkewPoly::monomial(TwistPair twist, Mono2 m, FieldElem c) {
    SkewPoly p(twist, c.field());
    p.set_coeff(m, std::move(c));
    return p;
}

SkewPoly SkewPoly::variable(TwistPair twist, const FqPtr& field, Var v) {
    Mono2 m = v == Var::rho ? Mono2{1, 0} : Mono2{0, 1};
    return monomial(twist, m, FieldElem::one(field));
}

bool SkewPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono2{0, 0});
}

FieldElem SkewPoly::coeff(Mono2 m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? FieldElem::zero(field_) : it->second;
}

void SkewPoly::set_coeff(Mono2 m, FieldElem c) {
    if (c.is_zero())
        terms_.erase(m);
    else
        terms_.insert_or_assign(m, std::move(c));
}

long SkewPoly::degree(Var v) const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.deg(v));
    return d;
}

bool SkewPoly::univariate_in(Var v) const {
    Var other = v == Var::rho ? Var::sigma : Var::rho;
    for (const auto& [m, c] : terms_)
        if (m.deg(other) != 0) return false;
    return true;
}

Mono2 SkewPoly::leading_mono() const {
    if (is_zero()) fail_internal("leading monomial of zero skew polynomial");
    return terms_.rbegin()->first;
}

FieldElem SkewPoly::leading_coeff() const {
    if (is_zero()) fail_internal("leading coefficient of zero skew polynomial");
    return terms_.rbegin()->second;
}

SkewPoly SkewPoly::operator+(const SkewPoly& other) const {
    if (twist_ != other.twist_) fail_internal("twist mismatch in skew addition");
    SkewPoly r = *this;
    for (const auto& [m, c] : other.terms_) r.set_coeff(m, r.coeff(m) + c);
    return r;
}

SkewPoly SkewPoly::operator-() const {
    SkewPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

SkewPoly SkewPoly::operator-(const SkewPoly& other) const { return *this + (-other); }

SkewPoly SkewPoly::operator*(const SkewPoly& other) const {
    if (twist_ != other.twist_) fail_internal("twist mismatch in skew multiplication");
    SkewPoly r(twist_, field_);
    for (const auto& [m1, c1] : terms_) {
        long power = twist_.power(m1.k, m1.j);
        for (const auto& [m2, c2] : other.terms_) {
            Mono2 m = m1.times(m2);
            r.set_coeff(m, r.coeff(m) + c1 * c2.frobenius(power));
        }
    }
    return r;
}

SkewPoly SkewPoly::scaled_left(const FieldElem& c) const {
    SkewPoly r(twist_, field_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.set_coeff(m, c * v);
    return r;
}

SkewPoly SkewPoly::coeff_twist(long power) const {
    SkewPoly r(twist_, field_);
    for (const auto& [m, c] : terms_) r.set_coeff(m, c.frobenius(power));
    return r;
}

void SkewPoly::right_divmod(const SkewPoly& f, const SkewPoly& g, Var v, SkewPoly& quot,
                            SkewPoly& rem) {
    if (g.is_zero()) fail_input("skew division by zero polynomial");
    if (f.twist_ != g.twist_) fail_internal("twist mismatch in skew division");
    if (!f.univariate_in(v) || !g.univariate_in(v))
        fail_input("right division requires univariate operands");
    long tw = v == Var::rho ? f.twist_.a_rho : f.twist_.a_sigma;
    long dg = g.degree(v);
    FieldElem gl = g.leading_coeff();
    quot = SkewPoly::zero(f.twist_, f.field());
    rem = f;
    while (!rem.is_zero() && rem.degree(v) >= dg) {
        long a = rem.degree(v) - dg;
        Mono2 ma = v == Var::rho ? Mono2{a, 0} : Mono2{0, a};
        // lc(c * x^a * g) = c * Frob^(a*tw)(lc(g))
        FieldElem c = rem.leading_coeff() / gl.frobenius(a * tw);
        SkewPoly step = SkewPoly::monomial(f.twist_, ma, c);
        quot = quot + step;
        rem = rem - step * g;
    }
}

void SkewPoly::left_divmod(const SkewPoly& f, const SkewPoly& g, Var v, SkewPoly& quot,
                           SkewPoly& rem) {
    if (g.is_zero()) fail_input("skew division by zero polynomial");
    if (f.twist_ != g.twist_) fail_internal("twist mismatch in skew division");
    if (!f.univariate_in(v) || !g.univariate_in(v))
        fail_input("left division requires univariate operands");
    long tw = v == Var::rho ? f.twist_.a_rho : f.twist_.a_sigma;
    long dg = g.degree(v);
    FieldElem gl = g.leading_coeff();
    quot = SkewPoly::zero(f.twist_, f.field());
    rem = f;
    while (!rem.is_zero() && rem.degree(v) >= dg) {
        long a = rem.degree(v) - dg;
        Mono2 ma = v == Var::rho ? Mono2{a, 0} : Mono2{0, a};
        // lc(g * c x^a) = lc(g) * Frob^(dg*tw)(c)
        FieldElem c = (rem.leading_coeff() / gl).frobenius(-dg * tw);
        SkewPoly step = SkewPoly::monomial(f.twist_, ma, c);
        quot = quot + step;
        rem = rem - g * step;
    }
}

SkewPoly SkewPoly::star() const {
    if (!univariate_in(Var::rho) || twist_ != TwistPair{1, 0})
        fail_internal("star expects a univariate tau-polynomial");
    SkewPoly r(TwistPair{-1, 0}, field_);
    for (const auto& [m, c] : terms_) r.set_coeff(m, c.frobenius(-m.k));
    return r;
}

SkewPoly SkewPoly::unstar() const {
    if (!univariate_in(Var::rho) || twist_ != TwistPair{-1, 0})
        fail_internal("unstar expects a univariate sigma-polynomial");
    SkewPoly r(TwistPair{1, 0}, field_);
    for (const auto& [m, c] : terms_) r.set_coeff(m, c.frobenius(m.k));
    return r;
}

bool SkewPoly::operator==(const SkewPoly& other) const {
    return twist_ == other.twist_ && terms_ == other.terms_;
}

int SkewPoly::max_level() const {
    int lvl = 0;
    for (const auto& [m, c] : terms_) lvl = std::max(lvl, c.level());
    return lvl;
}

}  // namespace tmot
