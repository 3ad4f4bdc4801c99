#pragma once

#include "apery/exact.hpp"

#include <vector>

namespace apery {

struct DivisibleBase : std::domain_error {
    using std::domain_error::domain_error;
};

struct PAdicInfo {
    BigRational x;
    std::uint64_t p;
    std::uint64_t bracket;  // <x>_p in [0, p)
    BigRational xprime;     // (x - <x>_p) / p
};

PAdicInfo fractional_info(const BigRational& x, std::uint64_t p);

struct SpecialTables {
    std::uint64_t p;
    std::vector<BigRational> B;  // B_0 .. B_{p-2}
    std::vector<BigInt> E;       // E_0 .. E_{p-3}
    std::vector<BigInt> U;       // U_0 .. U_{p-3}
    std::vector<BigInt> s;       // s_0 .. s_{p-3}
};

SpecialTables special_tables(std::uint64_t p);

// Exact polynomial values; n bounded by the table sizes.
BigRational bernoulli_poly(const SpecialTables& t, unsigned n, const BigRational& x);
BigRational euler_poly(const SpecialTables& t, unsigned n, const BigRational& x);

Residue bernoulli_poly_mod(unsigned n, const BigRational& x, std::uint64_t p);
Residue euler_poly_mod(unsigned n, const BigRational& x, std::uint64_t p);
Residue bernoulli_poly_mod(const SpecialTables& t, unsigned n, const BigRational& x);
Residue euler_poly_mod(const SpecialTables& t, unsigned n, const BigRational& x);

BigRational harmonic(unsigned n, unsigned r = 1);
Residue harmonic_mod(unsigned n, unsigned r, const PrimePowerModulus& m);

Residue fermat_quotient(const BigInt& a, const PrimePowerModulus& m);
// exact integer (a^{p-1} - 1) / p
BigInt fermat_quotient_exact(const BigInt& a, std::uint64_t p);

int legendre(const BigRational& a, std::uint64_t p);

// H_<x> - p x' H^(2)_<x>, the harmonic stand-in for the Bernoulli quotient.
BigRational bernoulli_bracket_exact(const BigRational& x, std::uint64_t p);
Residue bernoulli_bracket(const BigRational& x, std::uint64_t p);

}  // namespace apery
