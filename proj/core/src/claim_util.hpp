#pragma once

#include "apery/claims.hpp"

#include <limits>

namespace apery::detail {

inline BigRational Q(long n, long d = 1) { return make_rational(n, d); }
inline BigRational Q(const BigInt& n) { return BigRational(n); }

inline int sgn(long long k) { return (k % 2 == 0) ? 1 : -1; }

inline std::function<bool(std::uint64_t)> above(std::uint64_t k) {
    return [k](std::uint64_t p) { return p > k; };
}
inline std::function<bool(std::uint64_t)> odd_prime() {
    return [](std::uint64_t) { return true; };
}
inline std::function<bool(std::uint64_t)> if_mod(std::uint64_t above_k, std::uint64_t m,
                                                 std::vector<std::uint64_t> classes) {
    return [=](std::uint64_t p) {
        if (p <= above_k) return false;
        for (auto c : classes)
            if (p % m == c) return true;
        return false;
    };
}

inline ClaimSpec claim(std::string id, ClaimClass cls, std::string statement, int exponent,
                       std::function<bool(std::uint64_t)> applies, std::function<void(Cell&)> eval,
                       std::string flag = "") {
    std::string family = id.substr(0, id.find('-'));
    return ClaimSpec{std::move(id), cls, std::move(family), std::move(statement), exponent, std::move(applies),
                     std::move(eval), std::move(flag)};
}

inline long legendre_l(long a, std::uint64_t p) { return legendre(Q(a), p); }

// floor(a/b) for b > 0
inline long fdiv(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && (a < 0)) --q;
    return q;
}

inline BigRational pow_q(const BigRational& b, long k) {
    BigRational r = 1;
    if (k < 0) return 1 / pow_q(b, -k);
    for (long i = 0; i < k; ++i) r *= b;
    return r;
}

inline BigInt pow_z(long b, unsigned long k) {
    BigInt r;
    mpz_class base(b);
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), k);
    return r;
}

// q_p(a) = (a^{p-1}-1)/p exactly
inline BigRational qp(long a, std::uint64_t p) { return BigRational(fermat_quotient_exact(BigInt(a), p)); }

inline BigRational beta(const BigRational& x, std::uint64_t p) { return bernoulli_bracket_exact(x, p); }

// exact C(n,k) as a rational
inline BigRational binq(long n, long k) { return BigRational(int_binomial(n, k)); }

// sum_{k} C(x,k) C(-1-x,k) w(k) over 0 <= k < p, mod p^e, with x p-integral
Residue cc_sum(Cell& c, const BigRational& x, int e, const std::function<Residue(unsigned)>& w);

// seeded integer sequence u_0..u_{n-1} with entries in [-100, 100]
std::vector<long> random_sequence(Cell& c, unsigned n);

// terms u_0..u_{count-1} mod p^e of a sequence given exactly as integers
std::vector<Residue> reduce_all(const std::vector<BigInt>& u, const PrimePowerModulus& M);

// seeded draw of a p-integral rational satisfying pred
BigRational draw(Cell& c, const std::function<bool(const BigRational&)>& pred, long num = 60, long den = 12);

// C(a k, b k) products over k < p, reduced mod p^e; each factor is (a, b)
std::vector<Residue> binom_products(Cell& c, int e, std::initializer_list<std::pair<int, int>> factors);

// normalized x for alpha p = x^2 + d y^2, or nullopt when p has no representation
std::optional<long> form_x(const Cell& c, long d, long alpha, SignRule rule);

// true when q reduces to 0 mod p
bool zero_mod(const Cell& c, const BigRational& q);

}  // namespace apery::detail

namespace apery::detail {

const auto Cj = ClaimClass::Conjecture;

inline long lp(std::uint64_t p) { return static_cast<long>(p); }

// sum_{n<p} w(n) u_n / d^n
inline Residue sum_over(Cell& c, Named s, const BigRational& d, int e,
                        const std::function<Residue(unsigned)>& w = nullptr) {
    return series(c.named_prefix(s, e), c.R(1 / d, e), static_cast<unsigned>(c.p), w);
}

// sum_{n<p} C(2n,n) u_n / d^n
inline Residue sum_central(Cell& c, Named s, const BigRational& d, int e) {
    const auto& cb = c.central(e);
    return sum_over(c, s, d, e, [&](unsigned k) { return cb[k]; });
}

inline BigRational exact(Cell& c, Named s, unsigned long n) {
    if (n > std::numeric_limits<unsigned>::max()) throw IndexCapExceeded("index out of range");
    return BigRational(c.named_exact(s, static_cast<unsigned>(n)));
}

// 2x - p/(2x)
inline BigRational two_x_form(long x, std::uint64_t p) { return Q(2 * x) - Q(lp(p), 2 * x); }

// 4x^2 - 2p - p^2/(4x^2)
inline BigRational four_x2_form(long x, std::uint64_t p) {
    BigRational x2 = Q(x) * Q(x);
    return 4 * x2 - Q(2 * lp(p)) - Q(lp(p)) * Q(lp(p)) / (4 * x2);
}

inline BigRational inv_binq(long n, long k) { return 1 / binq(n, k); }

inline BigRational leg_q(const BigRational& a, std::uint64_t p) { return Q(legendre(a, p)); }

using Lhs = std::function<Residue(Cell&)>;
using Rhs = std::function<BigRational(Cell&)>;

inline void simple(std::vector<ClaimSpec>& out, const char* id, const char* text, int e,
                   std::function<bool(std::uint64_t)> app, Lhs lhs, Rhs rhs, std::string flag = "") {
    out.push_back(claim(id, Cj, text, e, std::move(app), [=](Cell& c) { c.check("", lhs(c), rhs(c)); },
                        std::move(flag)));
}

// u_{idx(p)} = rhs mod p^e with the left side taken exactly
inline void at_index(std::vector<ClaimSpec>& out, const char* id, const char* text, int e,
                     std::function<bool(std::uint64_t)> app, Named s, std::function<unsigned long(long)> idx,
                     Rhs rhs) {
    out.push_back(claim(id, Cj, text, e, std::move(app), [=](Cell& c) {
        c.check("", c.R(exact(c, s, idx(lp(c.p))), e), rhs(c));
    }));
}

inline BigRational factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return BigRational(r);
}

inline long L_of(Cell& c) {
    auto rep = c.ctx.rep(27, 4);
    if (!rep) throw std::logic_error("4p = L^2 + 27M^2 has no solution");
    return normalize(*rep, SignRule::Mod3IsOne);
}

inline long need_x(Cell& c, long d, long alpha, SignRule rule) {
    auto x = form_x(c, d, alpha, rule);
    if (!x) throw std::logic_error("p has no representation x^2 + " + std::to_string(d) + "y^2");
    return *x;
}

// -L + p/L for p = 1 mod 3, else `other`
inline Rhs minus_L(std::function<BigRational(Cell&)> other) {
    return [other](Cell& c) -> BigRational {
        if (c.p % 3 != 1) return other(c);
        long L = L_of(c);
        return Q(-L) + Q(lp(c.p), L);
    };
}

inline BigRational leg(long a, std::uint64_t p) { return leg_q(Q(a), p); }

inline unsigned long ipow(std::uint64_t p, int r) {
    unsigned long v = 1;
    for (int i = 0; i < r; ++i) v *= p;
    return v;
}

inline std::string mr(long m, int r) { return "m=" + std::to_string(m) + " r=" + std::to_string(r); }

}  // namespace apery::detail
