#include "apery/special.hpp"
#include "oracle_values.hpp"

#include <doctest.h>

#include <random>

using namespace apery;

namespace {

BigRational Q(const char* s) { return parse_rational(s); }

std::vector<std::uint64_t> primes(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = lo; p <= hi; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

}  // namespace

TEST_CASE("fractional_info examples") {
    auto a = fractional_info(Q("-1/2"), 5);
    CHECK(a.bracket == 2);
    CHECK(a.xprime == Q("-1/2"));
    auto b = fractional_info(Q("-1/3"), 7);
    CHECK(b.bracket == 2);
    CHECK(b.xprime == Q("-1/3"));
    auto c = fractional_info(4, 7);
    CHECK(c.bracket == 4);
    CHECK(c.xprime == 0);
    CHECK_THROWS_AS(fractional_info(Q("1/7"), 7), NotPIntegral);
}

TEST_CASE("fractional_info reconstructs x") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> num(-200, 200), den(1, 50);
    for (std::uint64_t p : {3u, 5u, 7u, 13u, 31u}) {
        for (int t = 0; t < 50; ++t) {
            long d = den(rng);
            if (d % static_cast<long>(p) == 0) continue;
            BigRational x = make_rational(num(rng), d);
            auto info = fractional_info(x, p);
            CHECK(info.bracket < p);
            CHECK(BigRational(static_cast<unsigned long>(info.bracket)) + BigRational(static_cast<unsigned long>(p)) * info.xprime == x);
            CHECK(is_p_integral(info.xprime, p));
        }
    }
}

TEST_CASE("special tables match the independent oracle") {
    auto t = special_tables(17);
    REQUIRE(t.B.size() == 16);
    REQUIRE(t.E.size() == 15);
    for (unsigned n = 0; n < oracle::bernoulli.size(); ++n) CHECK(t.B[n] == Q(oracle::bernoulli[n].c_str()));
    for (unsigned n = 0; n < oracle::euler.size(); ++n) CHECK(t.E[n].get_str() == oracle::euler[n]);
    for (unsigned n = 0; n < oracle::U.size(); ++n) CHECK(t.U[n].get_str() == oracle::U[n]);
    for (unsigned n = 0; n < oracle::s.size(); ++n) CHECK(t.s[n].get_str() == oracle::s[n]);
    CHECK(t.B[2] == Q("1/6"));
    CHECK(t.B[12] == Q("-691/2730"));
    CHECK(t.E[4] == 5);
    CHECK(t.U[2] == -2);
    CHECK(t.s[2] == -3);
    CHECK_THROWS_AS(special_tables(9), InvalidModulus);
}

TEST_CASE("polynomial values") {
    auto t = special_tables(11);
    CHECK(bernoulli_poly(t, 2, 0) == Q("1/6"));
    CHECK(bernoulli_poly(t, 2, Q("1/2")) == Q("-1/12"));
    CHECK(euler_poly(t, 2, 0) == 0);
    CHECK(euler_poly(t, 3, Q("1/2")) == 0);
    CHECK(bernoulli_poly_mod(2, 0, 7) == reduce_mod(Q("1/6"), PrimePowerModulus(7, 1)));
    CHECK(euler_poly_mod(4, Q("1/2"), 7).value() == 6);
    CHECK(euler_poly_mod(4, Q("1/2"), 7) == reduce_mod(BigRational(4 * 5), PrimePowerModulus(7, 1)));
    CHECK_THROWS(bernoulli_poly_mod(6, 0, 7));
    CHECK_THROWS(euler_poly_mod(5, 0, 7));
}

TEST_CASE("Bernoulli and Euler polynomial congruences at p-2 and p-3") {
    for (std::uint64_t p : primes(5, 97)) {
        INFO("p=" << p);
        auto t = special_tables(p);
        PrimePowerModulus m(p, 1);
        unsigned n = static_cast<unsigned>(p);
        Residue U = reduce_mod(t.U[n - 3], m), E = reduce_mod(t.E[n - 3], m);
        CHECK(bernoulli_poly_mod(t, n - 2, Q("1/3")) == Residue(6, m) * U);
        CHECK(bernoulli_poly_mod(t, n - 2, Q("1/4")) == Residue(8, m) * E);
        CHECK(euler_poly_mod(t, n - 3, Q("1/3")) == Residue(9, m) * U);
        CHECK(euler_poly_mod(t, n - 3, Q("1/6")) == Residue(20, m) * E);
        CHECK(euler_poly_mod(t, n - 3, Q("1/2")) == Residue(4, m) * E);
        CHECK(bernoulli_poly_mod(n - 2, Q("1/3"), p) == bernoulli_poly_mod(t, n - 2, Q("1/3")));
    }
}

TEST_CASE("harmonic numbers") {
    CHECK(harmonic(3) == Q(oracle::H3.c_str()));
    CHECK(harmonic(0, 2) == 0);
    CHECK(harmonic(2, 2) == Q("5/4"));
    CHECK(harmonic_mod(3, 1, PrimePowerModulus(5, 1)).value() == 1);
    CHECK(harmonic_mod(0, 2, PrimePowerModulus(5, 2)).value() == 0);
    for (std::uint64_t p : {7u, 11u, 13u}) CHECK(harmonic_mod(static_cast<unsigned>((p - 1) / 2), 2, PrimePowerModulus(p, 1)).is_zero());
    for (std::uint64_t p : primes(5, 61)) CHECK(harmonic_mod(static_cast<unsigned>(p - 1), 1, PrimePowerModulus(p, 2)).is_zero());
    CHECK_THROWS_AS(harmonic_mod(5, 1, PrimePowerModulus(5, 1)), NotInvertible);
}

TEST_CASE("Fermat quotients") {
    CHECK(fermat_quotient(2, PrimePowerModulus(5, 1)).value() == 3);
    CHECK(fermat_quotient(4, PrimePowerModulus(3, 1)).value() == 2);
    CHECK(fermat_quotient_exact(4, 3) == 5);
    for (std::uint64_t p : {3u, 5u, 7u, 11u}) CHECK(fermat_quotient(1, PrimePowerModulus(p, 3)).is_zero());
    CHECK_THROWS_AS(fermat_quotient(10, PrimePowerModulus(5, 1)), DivisibleBase);
    for (std::uint64_t p : primes(3, 40)) {
        for (int e = 1; e <= 3; ++e) {
            PrimePowerModulus m(p, e);
            for (long a = 1; a < 30; ++a) {
                if (a % static_cast<long>(p) == 0) continue;
                CHECK(fermat_quotient(a, m) == reduce_mod(fermat_quotient_exact(a, p), m));
            }
        }
    }
}

TEST_CASE("Legendre symbol") {
    CHECK(legendre(2, 7) == 1);
    CHECK(legendre(3, 7) == -1);
    CHECK(legendre(14, 7) == 0);
    CHECK(legendre(Q("3/2"), 7) == -1);
    for (std::uint64_t p : primes(3, 101)) {
        PrimePowerModulus m(p, 1);
        for (long a = -30; a <= 30; ++a) {
            if (a % static_cast<long>(p) != 0) CHECK(legendre(a * a, p) == 1);
            Residue r = Residue::from_int(a, m).pow(static_cast<long long>((p - 1) / 2));
            int expect = r.is_zero() ? 0 : (r.value() == 1 ? 1 : -1);
            CHECK(legendre(a, p) == expect);
        }
        if (p > 3) CHECK(legendre(Q("-5/6"), p) == legendre(-5, p) * legendre(6, p));
    }
}

TEST_CASE("Bernoulli bracket") {
    PrimePowerModulus m25(5, 2);
    CHECK(bernoulli_bracket(Q("-1/2"), 5).value() == 14);
    Residue q = fermat_quotient(2, m25);
    CHECK(bernoulli_bracket(Q("-1/2"), 5) == Residue(2, m25) * -q + Residue(5, m25) * q * q);
    for (std::uint64_t p : {5u, 7u, 11u}) {
        PrimePowerModulus m(p, 2);
        for (unsigned x = 0; x < p; ++x) CHECK(bernoulli_bracket(x, p) == harmonic_mod(x, 1, m));
    }
    CHECK(bernoulli_bracket_exact(Q("-1/2"), 5) == harmonic(2) + Q("5/2") * harmonic(2, 2));
}
