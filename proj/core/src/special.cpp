#include "apery/special.hpp"

namespace apery {

PAdicInfo fractional_info(const BigRational& x, std::uint64_t p) {
    PrimePowerModulus M(p, 1);
    std::uint64_t a = reduce_mod(x, M).value();
    BigRational xp = (x - BigRational(BigInt(static_cast<unsigned long>(a)))) / BigRational(BigInt(static_cast<unsigned long>(p)));
    return PAdicInfo{x, p, a, xp};
}

namespace {

std::vector<BigInt> pascal_row(unsigned n) {
    std::vector<BigInt> r(n + 1);
    r[0] = 1;
    for (unsigned k = 0; k < n; ++k) {
        r[k + 1] = r[k] * (n - k);
        mpz_divexact_ui(r[k + 1].get_mpz_t(), r[k + 1].get_mpz_t(), k + 1);
    }
    return r;
}

BigInt pow2(unsigned k) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
    return r;
}

}  // namespace

SpecialTables special_tables(std::uint64_t p) {
    if (p < 3 || !is_prime(p)) throw InvalidModulus("special tables need an odd prime");
    SpecialTables t;
    t.p = p;
    unsigned nb = static_cast<unsigned>(p - 1);  // B_0..B_{p-2}
    unsigned ne = static_cast<unsigned>(p - 2);  // E_0..E_{p-3}
    t.B.assign(nb, BigRational(0));
    t.B[0] = 1;
    for (unsigned m = 1; m < nb; ++m) {
        if (m >= 3 && (m & 1)) continue;
        auto row = pascal_row(m + 1);
        BigRational s = 0;
        for (unsigned k = 0; k < m; ++k)
            if (t.B[k] != 0) s += BigRational(row[k]) * t.B[k];
        t.B[m] = -s / (m + 1);
    }
    t.E.assign(ne, BigInt(0));
    t.U.assign(ne, BigInt(0));
    t.s.assign(ne, BigInt(0));
    t.E[0] = 1;
    t.U[0] = 1;
    t.s[0] = 1;
    for (unsigned n2 = 2; n2 < ne; n2 += 2) {
        auto row = pascal_row(n2);
        BigInt se = 0, su = 0;
        for (unsigned k2 = 2; k2 <= n2; k2 += 2) {
            se += row[k2] * t.E[n2 - k2];
            su += row[k2] * t.U[n2 - k2];
        }
        t.E[n2] = -se;
        t.U[n2] = -2 * su;
    }
    for (unsigned n = 1; n < ne; ++n) {
        auto row = pascal_row(n);
        BigInt acc = 0;
        for (unsigned k = 0; k < n; ++k) acc += row[k] * pow2(2 * n - 1 - 2 * k) * t.s[k];
        t.s[n] = 1 - acc;
    }
    return t;
}

BigRational bernoulli_poly(const SpecialTables& t, unsigned n, const BigRational& x) {
    if (n >= t.B.size()) throw std::out_of_range("Bernoulli table too short");
    auto row = pascal_row(n);
    BigRational s = 0, xp = 1;
    // sum_k C(n,k) B_k x^{n-k}, accumulated from k = n downwards
    for (unsigned j = 0; j <= n; ++j) {
        unsigned k = n - j;
        if (t.B[k] != 0) s += BigRational(row[k]) * t.B[k] * xp;
        xp *= x;
    }
    return s;
}

BigRational euler_poly(const SpecialTables& t, unsigned n, const BigRational& x) {
    if (n >= t.E.size()) throw std::out_of_range("Euler table too short");
    auto row = pascal_row(n);
    BigRational y = 2 * x - 1, yp = 1, s = 0;
    for (unsigned j = 0; j <= n; ++j) {
        unsigned k = n - j;
        if (t.E[k] != 0) s += BigRational(row[k] * t.E[k]) * yp;
        yp *= y;
    }
    return s / BigRational(pow2(n));
}

Residue bernoulli_poly_mod(const SpecialTables& t, unsigned n, const BigRational& x) {
    return reduce_mod(bernoulli_poly(t, n, x), PrimePowerModulus(t.p, 1));
}

Residue euler_poly_mod(const SpecialTables& t, unsigned n, const BigRational& x) {
    return reduce_mod(euler_poly(t, n, x), PrimePowerModulus(t.p, 1));
}

Residue bernoulli_poly_mod(unsigned n, const BigRational& x, std::uint64_t p) {
    if (n + 2 > p) throw std::out_of_range("bernoulli_poly_mod needs n <= p-2");
    return bernoulli_poly_mod(special_tables(p), n, x);
}

Residue euler_poly_mod(unsigned n, const BigRational& x, std::uint64_t p) {
    if (n + 3 > p) throw std::out_of_range("euler_poly_mod needs n <= p-3");
    return euler_poly_mod(special_tables(p), n, x);
}

BigRational harmonic(unsigned n, unsigned r) {
    BigRational s = 0;
    for (unsigned k = 1; k <= n; ++k) {
        BigInt d = 1;
        for (unsigned i = 0; i < r; ++i) d *= k;
        s += BigRational(BigInt(1), d);
    }
    return s;
}

Residue harmonic_mod(unsigned n, unsigned r, const PrimePowerModulus& m) {
    if (n >= m.p()) throw NotInvertible("harmonic_mod needs n < p");
    Residue s(0, m);
    for (unsigned k = 1; k <= n; ++k) s += Residue(k, m).pow(static_cast<long long>(r)).inv();
    return s;
}

BigInt fermat_quotient_exact(const BigInt& a, std::uint64_t p) {
    if (mpz_divisible_ui_p(a.get_mpz_t(), static_cast<unsigned long>(p))) throw DivisibleBase("p divides the base");
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(p - 1));
    r -= 1;
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(p));
    return r;
}

Residue fermat_quotient(const BigInt& a, const PrimePowerModulus& m) {
    if (mpz_divisible_ui_p(a.get_mpz_t(), static_cast<unsigned long>(m.p()))) throw DivisibleBase("p divides the base");
    BigInt Np1 = BigInt(static_cast<unsigned long>(m.N())) * static_cast<unsigned long>(m.p());
    BigInt r;
    BigInt ex(static_cast<unsigned long>(m.p() - 1));
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), ex.get_mpz_t(), Np1.get_mpz_t());
    r -= 1;
    if (r < 0) r += Np1;
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(m.p()));
    return Residue::from_big(r, m);
}

int legendre(const BigRational& a, std::uint64_t p) {
    PrimePowerModulus M(p, 1);
    auto sym = [&](const BigInt& n) {
        Residue r = Residue::from_big(n, M);
        if (r.is_zero()) return 0;
        return r.pow(static_cast<long long>((p - 1) / 2)).value() == 1 ? 1 : -1;
    };
    int d = sym(BigInt(a.get_den()));
    if (d == 0) throw NotPIntegral("legendre symbol of a non-p-integral rational");
    return sym(BigInt(a.get_num())) * d;
}

BigRational bernoulli_bracket_exact(const BigRational& x, std::uint64_t p) {
    auto info = fractional_info(x, p);
    unsigned a = static_cast<unsigned>(info.bracket);
    return harmonic(a, 1) - BigRational(BigInt(static_cast<unsigned long>(p))) * info.xprime * harmonic(a, 2);
}

Residue bernoulli_bracket(const BigRational& x, std::uint64_t p) {
    return reduce_mod(bernoulli_bracket_exact(x, p), PrimePowerModulus(p, 2));
}

}  // namespace apery
