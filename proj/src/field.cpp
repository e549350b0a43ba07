#include "tmot/field.hpp"

#include <numeric>
#include <sstream>

namespace tmot {

FqPoly::FqPoly(FqPtr field, std::vector<long> coeff_codes) : field_(std::move(field)) {
    if (!field_) fail_internal("FqPoly without field");
    for (size_t i = 0; i < coeff_codes.size(); ++i)
        if (coeff_codes[i] != 0) terms_[static_cast<long>(i)] = coeff_codes[i];
}

FqPoly::FqPoly(FqPtr field, std::map<long, long> term_codes)
    : field_(std::move(field)), terms_(std::move(term_codes)) {
    if (!field_) fail_internal("FqPoly without field");
    std::erase_if(terms_, [](const auto& t) { return t.second == 0; });
}

FqPoly FqPoly::constant(const Fq& c) {
    if (c.is_zero()) return zero(c.field());
    return FqPoly(c.field(), {c.code()});
}

void FqPoly::add_term(long exp, const Fq& c) {
    auto it = terms_.find(exp);
    Fq s = (it == terms_.end() ? Fq::zero(field_) : Fq(field_, it->second)) + c;
    if (s.is_zero()) {
        if (it != terms_.end()) terms_.erase(it);
    } else {
        terms_[exp] = s.code();
    }
}

Fq FqPoly::coeff(long i) const {
    auto it = terms_.find(i);
    return it == terms_.end() ? Fq::zero(field_) : Fq(field_, it->second);
}

Fq FqPoly::leading() const {
    if (is_zero()) fail_internal("leading coefficient of zero polynomial");
    return Fq(field_, terms_.rbegin()->second);
}

FqPoly FqPoly::operator+(const FqPoly& other) const {
    FqPoly r = *this;
    for (const auto& [e, c] : other.terms_) r.add_term(e, Fq(other.field_, c));
    return r;
}

FqPoly FqPoly::operator-() const {
    FqPoly r = *this;
    for (auto& [e, c] : r.terms_) c = (-Fq(field_, c)).code();
    return r;
}

FqPoly FqPoly::operator-(const FqPoly& other) const {
    FqPoly r = *this;
    for (const auto& [e, c] : other.terms_) r.add_term(e, -Fq(other.field_, c));
    return r;
}

FqPoly FqPoly::operator*(const FqPoly& other) const {
    FqPoly r = zero(field_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : other.terms_)
            r.add_term(e1 + e2, Fq(field_, c1) * Fq(field_, c2));
    return r;
}

FqPoly FqPoly::scaled(const Fq& c) const {
    if (c.is_zero()) return zero(field_);
    FqPoly r = *this;
    for (auto& [e, code] : r.terms_) code = (Fq(field_, code) * c).code();
    return r;
}

void FqPoly::divmod(const FqPoly& f, const FqPoly& g, FqPoly& quot, FqPoly& rem) {
    if (g.is_zero()) fail_internal("polynomial division by zero");
    const FqPtr& field = f.field_;
    FqPoly r = f;
    FqPoly q = zero(field);
    long gd = g.degree();
    Fq lead_inv = g.leading().inverse();
    while (!r.is_zero() && r.degree() >= gd) {
        long shift = r.degree() - gd;
        Fq factor = r.leading() * lead_inv;
        q.terms_[shift] = factor.code();
        for (const auto& [e, c] : g.terms_) r.add_term(e + shift, -(factor * Fq(field, c)));
    }
    quot = std::move(q);
    rem = std::move(r);
}

FqPoly FqPoly::gcd(FqPoly a, FqPoly b) {
    if (a.is_zero()) return b.is_zero() ? b : b.scaled(b.leading().inverse());
    if (b.is_zero()) return a.scaled(a.leading().inverse());
    // Frobenius twists stretch exponents by powers of q, so operands often sit
    // in a sublattice u^m. Peel off the common power of u and the exponent
    // content first; Euclid then runs at 1/m of the degree.
    long ma = a.terms_.begin()->first, mb = b.terms_.begin()->first;
    long shift = std::min(ma, mb);
    if (ma > 0) {
        std::map<long, long> t;
        for (const auto& [e, c] : a.terms_) t[e - ma] = c;
        a.terms_ = std::move(t);
    }
    if (mb > 0) {
        std::map<long, long> t;
        for (const auto& [e, c] : b.terms_) t[e - mb] = c;
        b.terms_ = std::move(t);
    }
    long m = 0;
    for (const auto& [e, c] : a.terms_) m = std::gcd(m, e);
    for (const auto& [e, c] : b.terms_) m = std::gcd(m, e);
    if (m > 1) {
        a = a.unstretched(m);
        b = b.unstretched(m);
    }
    while (!b.is_zero()) {
        FqPoly q, r;
        divmod(a, b, q, r);
        a = std::exchange(b, r);
    }
    if (m > 1) a = a.stretched(m);
    if (shift > 0) {
        std::map<long, long> t;
        for (const auto& [e, c] : a.terms_) t[e + shift] = c;
        a.terms_ = std::move(t);
    }
    return a.scaled(a.leading().inverse());
}

FqPoly FqPoly::stretched(long factor) const {
    if (is_zero() || factor == 1) return *this;
    std::map<long, long> r;
    for (const auto& [e, c] : terms_) r[e * factor] = c;
    return FqPoly(field_, std::move(r));
}

bool FqPoly::divisible_exponents(long factor) const {
    for (const auto& [e, c] : terms_)
        if (e % factor != 0) return false;
    return true;
}

FqPoly FqPoly::unstretched(long factor) const {
    if (is_zero() || factor == 1) return *this;
    std::map<long, long> r;
    for (const auto& [e, c] : terms_) r[e / factor] = c;
    return FqPoly(field_, std::move(r));
}

bool FqPoly::operator==(const FqPoly& other) const {
    return same_field(field_, other.field_) && terms_ == other.terms_;
}

// ---------------------------------------------------------------------------

FieldElem::FieldElem(int level, FqPoly num, FqPoly den)
    : level_(level), num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

FieldElem FieldElem::make(int level, FqPoly num, FqPoly den) {
    if (den.is_zero()) fail_input("zero denominator");
    return FieldElem(level, std::move(num), std::move(den));
}

FieldElem FieldElem::zero(const FqPtr& field) {
    return FieldElem(0, FqPoly::zero(field), FqPoly::constant(Fq::one(field)));
}

FieldElem FieldElem::one(const FqPtr& field) { return from_int(field, 1); }

FieldElem FieldElem::theta(const FqPtr& field) {
    return FieldElem(0, FqPoly::variable(field), FqPoly::constant(Fq::one(field)));
}

FieldElem FieldElem::from_int(const FqPtr& field, long value) {
    return from_fq(Fq::from_int(field, value));
}

FieldElem FieldElem::from_fq(const Fq& c) {
    return FieldElem(0, FqPoly::constant(c), FqPoly::constant(Fq::one(c.field())));
}

FqPoly FieldElem::exact_div(const FqPoly& a, const FqPoly& b) {
    if (b.degree() == 0) return a.scaled(b.leading().inverse());
    FqPoly q, r;
    FqPoly::divmod(a, b, q, r);
    if (!r.is_zero()) fail_internal("inexact polynomial division");
    return q;
}

// Assemble a fraction already known to be reduced: only monic-normalize the
// denominator and restore level minimality.
FieldElem FieldElem::from_reduced(int level, FqPoly num, FqPoly den) {
    FieldElem r;
    r.level_ = level;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    const FqPtr& field = r.num_.field();
    if (r.num_.is_zero()) {
        r.den_ = FqPoly::constant(Fq::one(field));
        r.level_ = 0;
        return r;
    }
    Fq lead_inv = r.den_.leading().inverse();
    r.num_ = r.num_.scaled(lead_inv);
    r.den_ = r.den_.scaled(lead_inv);
    long q = field->q();
    while (r.level_ > 0 && r.num_.divisible_exponents(q) && r.den_.divisible_exponents(q)) {
        r.num_ = r.num_.unstretched(q);
        r.den_ = r.den_.unstretched(q);
        --r.level_;
    }
    return r;
}

void FieldElem::canonicalize() {
    const FqPtr& field = num_.field();
    if (num_.is_zero()) {
        den_ = FqPoly::constant(Fq::one(field));
        level_ = 0;
        return;
    }
    FqPoly g = FqPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        FqPoly q, r;
        FqPoly::divmod(num_, g, q, r);
        num_ = q;
        FqPoly::divmod(den_, g, q, r);
        den_ = q;
    }
    Fq lead_inv = den_.leading().inverse();
    num_ = num_.scaled(lead_inv);
    den_ = den_.scaled(lead_inv);
    long q = field->q();
    while (level_ > 0 && num_.divisible_exponents(q) && den_.divisible_exponents(q)) {
        num_ = num_.unstretched(q);
        den_ = den_.unstretched(q);
        --level_;
    }
}

FieldElem FieldElem::lifted_to(int level) const {
    if (level <= level_) return *this;
    long factor = 1;
    long q = field()->q();
    for (int i = level_; i < level; ++i) factor *= q;
    FieldElem r = *this;
    r.level_ = level;
    r.num_ = num_.stretched(factor);
    r.den_ = den_.stretched(factor);
    return r;  // stays canonical apart from level minimality, which holds by construction
}

FieldElem FieldElem::operator+(const FieldElem& other) const {
    if (is_zero()) return other;
    if (other.is_zero()) return *this;
    int lvl = std::max(level_, other.level_);
    FieldElem a = lifted_to(lvl), b = other.lifted_to(lvl);
    // Reduced-fraction addition: gcd work stays on the stored denominators
    // instead of their product.
    FqPoly g = FqPoly::gcd(a.den_, b.den_);
    if (g.degree() <= 0)
        return from_reduced(lvl, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    FqPoly t = a.num_ * exact_div(b.den_, g) + b.num_ * exact_div(a.den_, g);
    FqPoly h = FqPoly::gcd(t, g);
    if (h.degree() <= 0) return from_reduced(lvl, std::move(t), exact_div(a.den_, g) * b.den_);
    return from_reduced(lvl, exact_div(t, h), exact_div(a.den_, g) * exact_div(b.den_, h));
}

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    r.num_ = -r.num_;
    return r;
}

FieldElem FieldElem::operator-(const FieldElem& other) const { return *this + (-other); }

FieldElem FieldElem::operator*(const FieldElem& other) const {
    if (is_zero() || other.is_zero()) return zero(field());
    int lvl = std::max(level_, other.level_);
    FieldElem a = lifted_to(lvl), b = other.lifted_to(lvl);
    FqPoly g1 = FqPoly::gcd(a.num_, b.den_);
    FqPoly g2 = FqPoly::gcd(b.num_, a.den_);
    if (g1.degree() > 0) {
        a.num_ = exact_div(a.num_, g1);
        b.den_ = exact_div(b.den_, g1);
    }
    if (g2.degree() > 0) {
        b.num_ = exact_div(b.num_, g2);
        a.den_ = exact_div(a.den_, g2);
    }
    return from_reduced(lvl, a.num_ * b.num_, a.den_ * b.den_);
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) fail_input("division by zero in K");
    return FieldElem(level_, den_, num_);
}

FieldElem FieldElem::operator/(const FieldElem& other) const { return *this * other.inverse(); }

FieldElem FieldElem::frobenius(long power) const {
    if (is_zero()) return *this;
    FieldElem r = *this;
    long q = field()->q();
    for (; power > 0; --power) {
        if (r.level_ > 0) {
            --r.level_;  // f(u)^q = f(u^q), and u^q is the variable one level down
        } else {
            r.num_ = r.num_.stretched(q);
            r.den_ = r.den_.stretched(q);
        }
    }
    for (; power < 0; ++power) {
        ++r.level_;  // same coefficients read one level up give the q-th root
    }
    r.canonicalize();
    return r;
}

bool FieldElem::is_one() const {
    return level_ == 0 && num_.degree() == 0 && num_.coeff(0).is_one() && den_.degree() == 0;
}

bool FieldElem::operator==(const FieldElem& other) const {
    return level_ == other.level_ && num_ == other.num_ && den_ == other.den_;
}

namespace {

void render_term(std::ostream& out, const Fq& c, long exp, int level, long q) {
    long m = 1;
    for (int i = 0; i < level; ++i) m *= q;
    long g = std::gcd(exp, m);
    long e = exp / g, d = m / g;
    bool unit_coeff = c.is_one();
    bool ext_coeff = c.field()->n > 1 && c.code() >= c.field()->p;
    if (exp == 0) {
        out << (ext_coeff ? "(" + c.str() + ")" : c.str());
        return;
    }
    if (!unit_coeff) out << (ext_coeff ? "(" + c.str() + ")" : c.str()) << "*";
    out << "T";
    if (d > 1)
        out << "^(" << e << "/" << d << ")";
    else if (e != 1)
        out << "^" << e;
}

void render_poly(std::ostream& out, const FqPoly& p, int level, long q) {
    if (p.is_zero()) {
        out << "0";
        return;
    }
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!first) out << " + ";
        render_term(out, Fq(p.field(), it->second), it->first, level, q);
        first = false;
    }
}

int term_count(const FqPoly& p) { return static_cast<int>(p.terms().size()); }

}  // namespace

std::string FieldElem::str() const {
    std::ostringstream out;
    long q = field()->q();
    if (den_.degree() == 0) {
        render_poly(out, num_, level_, q);
        return out.str();
    }
    if (term_count(num_) > 1) {
        out << "(";
        render_poly(out, num_, level_, q);
        out << ")";
    } else {
        render_poly(out, num_, level_, q);
    }
    out << "/(";
    render_poly(out, den_, level_, q);
    out << ")";
    return out.str();
}

}  // namespace tmot
