#include "tmot/fq.hpp"

#include <algorithm>
#include <sstream>

namespace tmot {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::vector<long> digits_of(long code, long p, int n) {
    std::vector<long> d(n, 0);
    for (int i = 0; i < n; ++i) {
        d[i] = code % p;
        code /= p;
    }
    return d;
}

long code_of(const std::vector<long>& d, long p) {
    long c = 0;
    for (size_t i = d.size(); i-- > 0;) c = c * p + d[i];
    return c;
}

long mod_inverse(long a, long p) {
    long t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        long quot = r / new_r;
        t = std::exchange(new_t, t - quot * new_t);
        r = std::exchange(new_r, r - quot * new_r);
    }
    if (r != 1) fail_internal("element not invertible mod p");
    return ((t % p) + p) % p;
}

void trim(std::vector<long>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// Dense F_p[x] arithmetic on small residues.
std::vector<long> poly_mul(const std::vector<long>& a, const std::vector<long>& b, long p) {
    if (a.empty() || b.empty()) return {};
    std::vector<long> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

std::vector<long> poly_mod(std::vector<long> a, const std::vector<long>& m, long p) {
    trim(a);
    long lead_inv = mod_inverse(m.back(), p);
    while (a.size() >= m.size()) {
        long factor = a.back() * lead_inv % p;
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) a[shift + i] = ((a[shift + i] - factor * m[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

// Extended Euclid in F_p[x]; returns s with s*a = gcd (mod m), gcd forced monic.
std::vector<long> poly_inverse_mod(const std::vector<long>& a, const std::vector<long>& m, long p) {
    std::vector<long> r0 = m, r1 = a, s0 = {}, s1 = {1};
    trim(r1);
    while (!r1.empty()) {
        // r0 = q*r1 + r
        std::vector<long> q;
        std::vector<long> rem = r0;
        long lead_inv = mod_inverse(r1.back(), p);
        if (rem.size() >= r1.size()) q.assign(rem.size() - r1.size() + 1, 0);
        while (rem.size() >= r1.size() && !rem.empty()) {
            long factor = rem.back() * lead_inv % p;
            size_t shift = rem.size() - r1.size();
            q[shift] = factor;
            for (size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] = ((rem[shift + i] - factor * r1[i]) % p + p) % p;
            trim(rem);
        }
        std::vector<long> s_new = s0;
        std::vector<long> qs = poly_mul(q, s1, p);
        s_new.resize(std::max(s_new.size(), qs.size()), 0);
        for (size_t i = 0; i < qs.size(); ++i) s_new[i] = ((s_new[i] - qs[i]) % p + p) % p;
        trim(s_new);
        r0 = std::exchange(r1, rem);
        s0 = std::exchange(s1, s_new);
    }
    if (r0.size() != 1) fail_internal("element not invertible in F_q");
    long g_inv = mod_inverse(r0[0], p);
    for (auto& c : s0) c = c * g_inv % p;
    return poly_mod(std::move(s0), m, p);
}

}  // namespace

long FqField::q() const {
    long result = 1;
    for (int i = 0; i < n; ++i) result *= p;
    return result;
}

FqPtr FqField::prime(long p) {
    if (!is_prime(p)) fail_input("field characteristic must be prime, got " + std::to_string(p));
    auto f = std::make_shared<FqField>();
    f->p = p;
    f->n = 1;
    return f;
}

FqPtr FqField::extension(long p, std::vector<long> modulus) {
    if (!is_prime(p)) fail_input("field characteristic must be prime, got " + std::to_string(p));
    if (modulus.size() < 3 || modulus.back() != 1)
        fail_input("irreducible must be monic of degree >= 2");
    for (auto& c : modulus) c = ((c % p) + p) % p;
    if (modulus.back() != 1) fail_input("irreducible must be monic");
    auto f = std::make_shared<FqField>();
    f->p = p;
    f->n = static_cast<int>(modulus.size()) - 1;
    f->modulus = std::move(modulus);
    return f;
}

FqPtr FqField::of_order(long q) {
    switch (q) {
        case 4: return extension(2, {1, 1, 1});
        case 8: return extension(2, {1, 1, 0, 1});
        case 9: return extension(3, {1, 0, 1});
        case 16: return extension(2, {1, 1, 0, 0, 1});
        default: break;
    }
    if (is_prime(q)) return prime(q);
    fail_input("no built-in irreducible for q = " + std::to_string(q) +
               "; supply one explicitly (built-ins cover q <= 16)");
}

bool same_field(const FqPtr& a, const FqPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

Fq::Fq(FqPtr field, long code) : field_(std::move(field)), code_(code) {
    if (!field_) fail_internal("Fq element without field");
    if (code_ < 0 || code_ >= field_->q()) fail_internal("Fq code out of range");
}

Fq Fq::from_int(const FqPtr& field, long value) {
    long p = field->p;
    return Fq(field, ((value % p) + p) % p);
}

Fq Fq::operator+(const Fq& other) const {
    if (!same_field(field_, other.field_)) fail_internal("Fq field mismatch");
    long p = field_->p;
    if (field_->n == 1) return Fq(field_, (code_ + other.code_) % p);
    auto a = digits_of(code_, p, field_->n);
    auto b = digits_of(other.code_, p, field_->n);
    for (int i = 0; i < field_->n; ++i) a[i] = (a[i] + b[i]) % p;
    return Fq(field_, code_of(a, p));
}

Fq Fq::operator-() const {
    long p = field_->p;
    if (field_->n == 1) return Fq(field_, (p - code_) % p);
    auto a = digits_of(code_, p, field_->n);
    for (auto& d : a) d = (p - d) % p;
    return Fq(field_, code_of(a, p));
}

Fq Fq::operator-(const Fq& other) const { return *this + (-other); }

Fq Fq::operator*(const Fq& other) const {
    if (!same_field(field_, other.field_)) fail_internal("Fq field mismatch");
    long p = field_->p;
    if (field_->n == 1) return Fq(field_, code_ * other.code_ % p);
    auto a = digits_of(code_, p, field_->n);
    auto b = digits_of(other.code_, p, field_->n);
    trim(a);
    trim(b);
    auto r = poly_mod(poly_mul(a, b, p), field_->modulus, p);
    return Fq(field_, code_of(r, p));
}

Fq Fq::inverse() const {
    if (is_zero()) fail_internal("division by zero in F_q");
    long p = field_->p;
    if (field_->n == 1) return Fq(field_, mod_inverse(code_, p));
    auto a = digits_of(code_, p, field_->n);
    trim(a);
    auto r = poly_inverse_mod(a, field_->modulus, p);
    return Fq(field_, code_of(r, p));
}

Fq Fq::operator/(const Fq& other) const { return *this * other.inverse(); }

bool Fq::operator==(const Fq& other) const {
    return same_field(field_, other.field_) && code_ == other.code_;
}

std::string Fq::str() const {
    if (field_->n == 1) return std::to_string(code_);
    auto d = digits_of(code_, field_->p, field_->n);
    std::ostringstream out;
    bool first = true;
    for (size_t i = d.size(); i-- > 0;) {
        if (d[i] == 0) continue;
        if (!first) out << "+";
        if (i == 0 || d[i] != 1) out << d[i];
        if (i > 0 && d[i] != 1) out << "*";
        if (i == 1) out << "a";
        if (i > 1) out << "a^" << i;
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

}  // namespace tmot
