#include "tmot/freemod.hpp"

#include <algorithm>

namespace tmot {

OrderSpec::OrderSpec(std::vector<int> perm) : perm_(std::move(perm)) {
    int d = static_cast<int>(perm_.size());
    rank_.assign(d, -1);
    for (int r = 0; r < d; ++r) {
        int s = perm_[r];
        if (s < 1 || s > d || rank_[s - 1] != -1) fail_input("order is not a permutation");
        rank_[s - 1] = r;
    }
}

OrderSpec OrderSpec::identity(int d) {
    std::vector<int> perm(d);
    for (int i = 0; i < d; ++i) perm[i] = i + 1;
    return OrderSpec(std::move(perm));
}

int OrderSpec::rank_of(int sheet) const {
    if (sheet < 1 || sheet > sheets()) fail_internal("sheet out of range");
    return rank_[sheet - 1];
}

bool OrderSpec::less(const ModMono& a, const ModMono& b) const {
    int ra = rank_of(a.sheet), rb = rank_of(b.sheet);
    if (ra != rb) return ra > rb;  // earlier rank = greater sheet
    return a.m < b.m;
}

ModElem::ModElem(TwistPair twist, FqPtr field, int d)
    : twist_(twist), field_(std::move(field)), d_(d) {
    if (!field_) fail_internal("ModElem without field");
    if (d_ <= 0) fail_internal("ModElem of nonpositive rank");
}

ModElem ModElem::basis_vector(TwistPair twist, const FqPtr& field, int d, int sheet) {
    ModElem e(twist, field, d);
    if (sheet < 1 || sheet > d) fail_internal("sheet out of range");
    e.set_coeff({sheet, {0, 0}}, FieldElem::one(field));
    return e;
}

FieldElem ModElem::coeff(const ModMono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? FieldElem::zero(field_) : it->second;
}

void ModElem::set_coeff(const ModMono& m, FieldElem c) {
    if (m.sheet < 1 || m.sheet > d_) fail_internal("sheet out of range");
    if (c.is_zero())
        terms_.erase(m);
    else
        terms_.insert_or_assign(m, std::move(c));
}

ModElem ModElem::operator+(const ModElem& other) const {
    if (twist_ != other.twist_ || d_ != other.d_) fail_internal("mismatched module elements");
    ModElem r = *this;
    for (const auto& [m, c] : other.terms_) r.set_coeff(m, r.coeff(m) + c);
    return r;
}

ModElem ModElem::operator-() const {
    ModElem r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

ModElem ModElem::operator-(const ModElem& other) const { return *this + (-other); }

ModElem ModElem::scaled_left(const FieldElem& c) const {
    ModElem r(twist_, field_, d_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.set_coeff(m, c * v);
    return r;
}

ModElem ModElem::shifted(Mono2 m) const {
    ModElem r(twist_, field_, d_);
    long power = twist_.power(m.k, m.j);
    for (const auto& [mm, c] : terms_)
        r.set_coeff({mm.sheet, m.times(mm.m)}, c.frobenius(power));
    return r;
}

ModElem ModElem::times_left(const SkewPoly& p) const {
    if (p.twist() != twist_) fail_internal("twist mismatch in module multiplication");
    ModElem r(twist_, field_, d_);
    for (const auto& [m, c] : p.terms()) r = r + shifted(m).scaled_left(c);
    return r;
}

std::pair<ModMono, FieldElem> ModElem::leading(const OrderSpec& ord) const {
    if (is_zero()) fail_internal("leading monomial of zero module element");
    if (ord.sheets() != d_) fail_internal("order rank mismatch");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (ord.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
}

long ModElem::degree(Var v) const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.m.deg(v));
    return d;
}

long ModElem::degree_on_sheet(int sheet, Var v) const {
    long d = -1;
    for (const auto& [m, c] : terms_)
        if (m.sheet == sheet) d = std::max(d, m.m.deg(v));
    return d;
}

SkewPoly ModElem::sigma_coefficient(int sheet, long rho_deg) const {
    SkewPoly p(twist_, field_);
    for (const auto& [m, c] : terms_)
        if (m.sheet == sheet && m.m.k == rho_deg) p.set_coeff({0, m.m.j}, c);
    return p;
}

bool ModElem::operator==(const ModElem& other) const {
    return twist_ == other.twist_ && d_ == other.d_ && terms_ == other.terms_;
}

int ModElem::max_level() const {
    int lvl = 0;
    for (const auto& [m, c] : terms_) lvl = std::max(lvl, c.level());
    return lvl;
}

}  // namespace tmot
