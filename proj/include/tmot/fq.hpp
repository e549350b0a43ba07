#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tmot/error.hpp"

namespace tmot {

// The finite field F_q, q = p^n. For n > 1 elements are residue polynomials
// over F_p modulo a fixed monic irreducible of degree n; an element is encoded
// as the base-p digit string of its residue, so codes run over [0, q).
struct FqField {
    long p = 0;
    int n = 1;
    std::vector<long> modulus;  // coefficients c0..cn, cn = 1; empty when n == 1

    long q() const;
    bool operator==(const FqField& other) const = default;

    static std::shared_ptr<const FqField> prime(long p);
    // Built-in irreducibles cover the non-prime q <= 16 (4, 8, 9, 16).
    static std::shared_ptr<const FqField> of_order(long q);
    static std::shared_ptr<const FqField> extension(long p, std::vector<long> modulus);
};

using FqPtr = std::shared_ptr<const FqField>;

class Fq {
public:
    Fq() = default;
    Fq(FqPtr field, long code);

    static Fq zero(const FqPtr& field) { return Fq(field, 0); }
    static Fq one(const FqPtr& field) { return Fq(field, 1); }
    // Image of an integer under Z -> F_q (lands in the prime subfield).
    static Fq from_int(const FqPtr& field, long value);

    const FqPtr& field() const { return field_; }
    long code() const { return code_; }
    bool is_zero() const { return code_ == 0; }
    bool is_one() const { return code_ == 1; }

    Fq operator+(const Fq& other) const;
    Fq operator-(const Fq& other) const;
    Fq operator-() const;
    Fq operator*(const Fq& other) const;
    Fq operator/(const Fq& other) const;
    Fq inverse() const;

    bool operator==(const Fq& other) const;
    bool operator!=(const Fq& other) const { return !(*this == other); }

    std::string str() const;

private:
    FqPtr field_;
    long code_ = 0;
};

bool same_field(const FqPtr& a, const FqPtr& b);

}  // namespace tmot
