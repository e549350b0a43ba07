#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tmot/fq.hpp"

namespace tmot {

// Sparse univariate polynomial over F_q. The variable is u = theta^(1/q^e)
// for whatever perfection level e the surrounding FieldElem carries. Sparse
// storage matters: Frobenius twisting sends theta to theta^(q^k), so exponents
// grow exponentially while term counts stay small.
class FqPoly {
public:
    FqPoly() = default;
    FqPoly(FqPtr field, std::vector<long> coeff_codes);  // dense codes, ascending
    FqPoly(FqPtr field, std::map<long, long> term_codes);

    static FqPoly zero(const FqPtr& field) { return FqPoly(field, std::vector<long>{}); }
    static FqPoly constant(const Fq& c);
    static FqPoly variable(const FqPtr& field) { return FqPoly(field, std::vector<long>{0, 1}); }

    const FqPtr& field() const { return field_; }
    bool is_zero() const { return terms_.empty(); }
    long degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
    Fq coeff(long i) const;
    Fq leading() const;
    bool is_constant() const { return degree() <= 0; }
    bool is_monic() const { return !is_zero() && leading().is_one(); }

    FqPoly operator+(const FqPoly& other) const;
    FqPoly operator-(const FqPoly& other) const;
    FqPoly operator-() const;
    FqPoly operator*(const FqPoly& other) const;
    FqPoly scaled(const Fq& c) const;

    // f = q*g + r, deg r < deg g.
    static void divmod(const FqPoly& f, const FqPoly& g, FqPoly& quot, FqPoly& rem);
    static FqPoly gcd(FqPoly a, FqPoly b);  // monic

    // Exponent stretch u -> u^factor; over F_q this equals the factor-th power
    // map when factor is a power of p.
    FqPoly stretched(long factor) const;
    bool divisible_exponents(long factor) const;
    FqPoly unstretched(long factor) const;

    bool operator==(const FqPoly& other) const;
    bool operator!=(const FqPoly& other) const { return !(*this == other); }

    const std::map<long, long>& terms() const { return terms_; }

private:
    FqPtr field_;
    std::map<long, long> terms_;  // exponent -> nonzero Fq code
    void add_term(long exp, const Fq& c);
};

// Frobenius twist data for a two-variable skew ring: the commutation
// endomorphisms are gamma_rho = Frob^a_rho, gamma_sigma = Frob^a_sigma.
struct TwistPair {
    int a_rho = 0;
    int a_sigma = 0;
    bool operator==(const TwistPair& other) const = default;
    // Total Frobenius power picked up by a coefficient passing rho^k sigma^j.
    long power(long k, long j) const { return k * a_rho + j * a_sigma; }
};

// Element of the perfection of K = F_q(theta): a reduced fraction of
// polynomials in u = theta^(1/q^level), with the level kept minimal.
class FieldElem {
public:
    FieldElem() = default;

    static FieldElem zero(const FqPtr& field);
    static FieldElem one(const FqPtr& field);
    static FieldElem theta(const FqPtr& field);
    static FieldElem from_int(const FqPtr& field, long value);
    static FieldElem from_fq(const Fq& c);
    static FieldElem make(int level, FqPoly num, FqPoly den);

    const FqPtr& field() const { return num_.field(); }
    int level() const { return level_; }
    const FqPoly& num() const { return num_; }
    const FqPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;

    FieldElem operator+(const FieldElem& other) const;
    FieldElem operator-(const FieldElem& other) const;
    FieldElem operator-() const;
    FieldElem operator*(const FieldElem& other) const;
    FieldElem operator/(const FieldElem& other) const;
    FieldElem inverse() const;

    // x -> x^(q^power); negative powers take q-th roots (raising the level as
    // far as needed, then re-canonicalizing).
    FieldElem frobenius(long power) const;

    bool operator==(const FieldElem& other) const;
    bool operator!=(const FieldElem& other) const { return !(*this == other); }

    std::string str() const;

private:
    int level_ = 0;
    FqPoly num_, den_;

    FieldElem(int level, FqPoly num, FqPoly den);
    void canonicalize();
    FieldElem lifted_to(int level) const;
    static FieldElem from_reduced(int level, FqPoly num, FqPoly den);
    static FqPoly exact_div(const FqPoly& a, const FqPoly& b);
};

}  // namespace tmot
