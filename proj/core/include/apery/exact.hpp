#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace apery {

using BigInt = mpz_class;
// mpq_class keeps itself canonical after every arithmetic operation; only
// construction from a raw num/den pair needs an explicit canonicalize().
using BigRational = mpq_class;

struct NotPIntegral : std::domain_error {
    using std::domain_error::domain_error;
};
struct NotInvertible : std::domain_error {
    using std::domain_error::domain_error;
};
struct ModulusMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InvalidModulus : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

BigRational make_rational(const BigInt& num, const BigInt& den);
BigRational make_rational(long num, long den = 1);
// Accepts "7", "-1/2", " 3 / 8 ".
BigRational parse_rational(std::string_view text);
std::string to_string(const BigRational& r);
std::string to_string(const BigInt& n);

bool is_prime(std::uint64_t n);

// C(x, k) = x(x-1)...(x-k+1)/k!
BigRational rat_binomial(const BigRational& x, long k);
BigInt int_binomial(long n, long k);

// p-adic valuation; zero maps to the infinite sentinel.
class Valuation {
public:
    static Valuation infinite() { return Valuation(); }
    explicit Valuation(long v) : finite_(true), value_(v) {}

    bool is_infinite() const { return !finite_; }
    long value() const;

    bool operator>=(long e) const { return !finite_ || value_ >= e; }
    bool operator<(long e) const { return finite_ && value_ < e; }
    bool operator==(const Valuation& o) const {
        return finite_ == o.finite_ && (!finite_ || value_ == o.value_);
    }

private:
    Valuation() = default;
    bool finite_ = false;
    long value_ = 0;
};

Valuation vp(const BigInt& n, std::uint64_t p);
Valuation vp(const BigRational& r, std::uint64_t p);
bool is_p_integral(const BigRational& r, std::uint64_t p);

class PrimePowerModulus {
public:
    PrimePowerModulus(std::uint64_t p, int e);

    std::uint64_t p() const { return p_; }
    int e() const { return e_; }
    std::uint64_t N() const { return n_; }
    std::string label() const { return std::to_string(p_) + "^" + std::to_string(e_); }

    bool operator==(const PrimePowerModulus& o) const = default;

private:
    std::uint64_t p_;
    int e_;
    std::uint64_t n_;
};

class Residue {
public:
    Residue(std::uint64_t value, const PrimePowerModulus& m);
    static Residue from_int(long long v, const PrimePowerModulus& m);
    static Residue from_big(const BigInt& v, const PrimePowerModulus& m);

    std::uint64_t value() const { return v_; }
    const PrimePowerModulus& modulus() const { return m_; }
    bool is_zero() const { return v_ == 0; }
    bool is_unit() const { return v_ % m_.p() != 0; }

    Residue operator+(const Residue& o) const;
    Residue operator-(const Residue& o) const;
    Residue operator*(const Residue& o) const;
    Residue operator-() const;
    Residue& operator+=(const Residue& o) { return *this = *this + o; }
    Residue& operator-=(const Residue& o) { return *this = *this - o; }
    Residue& operator*=(const Residue& o) { return *this = *this * o; }

    Residue inv() const;
    Residue pow(const BigInt& exponent) const;
    Residue pow(long long exponent) const;

    bool operator==(const Residue& o) const { return v_ == o.v_ && m_ == o.m_; }

private:
    std::uint64_t v_;
    PrimePowerModulus m_;
};

Residue reduce_mod(const BigRational& r, const PrimePowerModulus& m);
Residue reduce_mod(const BigInt& r, const PrimePowerModulus& m);
bool congruent(const BigRational& a, const BigRational& b, const PrimePowerModulus& m);

// C(x, k) mod p^e for k < p (all of 1..k are units).
Residue residue_binomial(const Residue& x, unsigned k);

}  // namespace apery
