#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tmot/skew.hpp"

namespace tmot {

// Monomial m*kappa_i of the free module F = (+)_i D*kappa_i. Sheets are
// 1-based. The structural <=> is storage order only; the module order lives
// in OrderSpec.
struct ModMono {
    int sheet = 1;
    Mono2 m;
    auto operator<=>(const ModMono& other) const = default;
};

// Position-over-term order: sheets ranked by a permutation (earlier = greater),
// ties broken by the lex order with sigma < rho.
class OrderSpec {
public:
    OrderSpec() = default;
    explicit OrderSpec(std::vector<int> perm);  // perm[r] = sheet at rank r, 1-based
    static OrderSpec identity(int d);

    int sheets() const { return static_cast<int>(perm_.size()); }
    const std::vector<int>& perm() const { return perm_; }
    int rank_of(int sheet) const;

    // Strict "less" in the module order.
    bool less(const ModMono& a, const ModMono& b) const;
    bool greater(const ModMono& a, const ModMono& b) const { return less(b, a); }

    bool operator==(const OrderSpec& other) const { return perm_ == other.perm_; }

private:
    std::vector<int> perm_;
    std::vector<int> rank_;  // rank_[sheet-1]
};

class ModElem {
public:
    ModElem() = default;
    ModElem(TwistPair twist, FqPtr field, int d);

    static ModElem zero(TwistPair twist, const FqPtr& field, int d) {
        return ModElem(twist, field, d);
    }
    static ModElem basis_vector(TwistPair twist, const FqPtr& field, int d, int sheet);

    const TwistPair& twist() const { return twist_; }
    const FqPtr& field() const { return field_; }
    int dim() const { return d_; }
    const std::map<ModMono, FieldElem>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    FieldElem coeff(const ModMono& m) const;
    void set_coeff(const ModMono& m, FieldElem c);

    ModElem operator+(const ModElem& other) const;
    ModElem operator-(const ModElem& other) const;
    ModElem operator-() const;
    ModElem scaled_left(const FieldElem& c) const;
    // Left multiplication by the ring monomial rho^k sigma^j (coefficients twisted).
    ModElem shifted(Mono2 m) const;
    ModElem times_left(const SkewPoly& p) const;

    std::pair<ModMono, FieldElem> leading(const OrderSpec& ord) const;
    // Max rho-degree over the support (-1 for zero); used by Janet decomposition.
    long degree(Var v) const;
    long degree_on_sheet(int sheet, Var v) const;

    // The K<sigma>-coefficient of this element at the generator rho^k kappa_i,
    // i.e. the polynomial sum_l c_{i,k,l} sigma^l.
    SkewPoly sigma_coefficient(int sheet, long rho_deg) const;

    bool operator==(const ModElem& other) const;
    bool operator!=(const ModElem& other) const { return !(*this == other); }

    int max_level() const;

private:
    TwistPair twist_;
    FqPtr field_;
    int d_ = 0;
    std::map<ModMono, FieldElem> terms_;
};

}  // namespace tmot
