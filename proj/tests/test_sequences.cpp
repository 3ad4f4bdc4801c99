#include "apery/sequences.hpp"
#include "oracle_values.hpp"

#include <doctest.h>

#include <random>

using namespace apery;

namespace {

BigRational Q(const char* s) { return parse_rational(s); }

BigRational pw(long b, unsigned n) {
    BigRational r = 1;
    for (unsigned i = 0; i < n; ++i) r *= b;
    return r;
}

std::vector<BigRational> random_xs(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
    std::vector<BigRational> xs;
    while (static_cast<int>(xs.size()) < count) xs.push_back(make_rational(num(rng), den(rng)));
    return xs;
}

BigInt binom(long n, long k) { return int_binomial(n, k); }

}  // namespace

TEST_CASE("apery_term examples") {
    CHECK(apery_term(AperyParams(17, 5, 1, Kind::First), 2) == 73);
    CHECK(apery_term(AperyParams(7, 2, -8, Kind::Second), 2) == 10);
    CHECK(apery_term(AperyParams(Q("3/5"), Q("-2/9"), 4, Kind::First), 1) == Q("-2/9"));
    CHECK(apery_term(AperyParams(10, 3, 9, Kind::Second), 1) == 3);
    CHECK(apery_term(AperyParams(17, 5, 1, Kind::First), 0) == 1);
    CHECK_THROWS(AperyParams(1, 1, 0, Kind::First));
}

TEST_CASE("g_of_x and v_of_x examples") {
    for (auto x : {Q("-1/2"), Q("2/7"), Q("5")}) {
        CHECK(g_of_x(x, 1) == x * x + x + 1);
        CHECK(v_of_x(x, 1) == 2 * x * x + 2 * x + 1);
    }
    CHECK(g_of_x(Q("-1/6"), 1) * 432 == 372);
    CHECK(v_of_x(Q("-1/3"), 1) * 27 == 15);

    BigInt g2 = 0;
    for (long k = 0; k <= 2; ++k) {
        BigInt t = binom(2, k) * binom(2 * k, k) * binom(2 * k, k);
        mpz_class s;
        mpz_ui_pow_ui(s.get_mpz_t(), 16, static_cast<unsigned long>(2 - k));
        g2 += (k & 1 ? -1 : 1) * t * s;
    }
    CHECK(g_of_x(Q("-1/2"), 2) * 256 == BigRational(g2));

    BigInt v4 = 0;
    for (long k = 0; k <= 2; ++k) {
        mpz_class s;
        mpz_ui_pow_ui(s.get_mpz_t(), 16, static_cast<unsigned long>(2 - k));
        v4 += binom(2 * k, k) * binom(2 * k, k) * binom(2 * k, k) * binom(4 - 2 * k, 2 - k) * s;
    }
    CHECK(v_of_x(Q("-1/4"), 2) * 4096 == BigRational(v4));
    CHECK(named_term(Named::V4, 2) == v4);
}

TEST_CASE("named term examples") {
    CHECK(named_term(Named::Q, 1) == -6);
    CHECK(named_term(Named::a, 2) == 15);
    CHECK(named_term(Named::T, 1) == 4);
    CHECK(named_term(Named::f, 2) == 10);
    CHECK(named_term(Named::G3, 6).get_str() == oracle::G3_6);
}

TEST_CASE("named ids round-trip") {
    for (Named s : kAllNamed) CHECK(parse_named(named_id(s)) == s);
    CHECK(parse_named("Ap") == Named::Ap);
    CHECK_FALSE(parse_named("NOPE"));
}

TEST_CASE("named sequences match the independent oracle") {
    for (const auto& [id, values] : oracle::named) {
        auto s = parse_named(id);
        REQUIRE(s);
        AperyParams P = named_params(*s);
        auto rec = apery_terms(P, static_cast<unsigned>(values.size()));
        for (unsigned n = 0; n < values.size(); ++n) {
            INFO(id << " n=" << n);
            CHECK(named_term(*s, n).get_str() == values[n]);
            CHECK(rec[n] == BigRational(BigInt(values[n])));
            if (auto alt = named_term_alt(*s, n)) CHECK(alt->get_str() == values[n]);
        }
    }
}

TEST_CASE("g and v match the independent oracle") {
    struct Row {
        const char* x;
        const std::vector<std::string>& g;
        const std::vector<std::string>& v;
    };
    for (const Row& r : {Row{"-1/2", oracle::g_m1_2, oracle::v_m1_2}, Row{"2/7", oracle::g_p2_7, oracle::v_p2_7},
                         Row{"-5/3", oracle::g_m5_3, oracle::v_m5_3}}) {
        BigRational x = Q(r.x);
        for (unsigned n = 0; n < r.g.size(); ++n) {
            INFO("x=" << r.x << " n=" << n);
            CHECK(g_of_x(x, n) == Q(r.g[n].c_str()));
            CHECK(v_of_x(x, n) == Q(r.v[n].c_str()));
            CHECK(apery_term(g_params(x), n) == Q(r.g[n].c_str()));
            CHECK(apery_term(v_params(x), n) == Q(r.v[n].c_str()));
        }
    }
}

TEST_CASE("scaled families equal m^n G_n(x) and m^n V_n(x)") {
    for (Named s : kAllNamed) {
        auto sc = named_scaling(s);
        if (!sc) continue;
        for (unsigned n = 0; n <= 20; ++n) {
            BigRational u = sc->is_v ? v_of_x(sc->x, n) : g_of_x(sc->x, n);
            CHECK(BigRational(named_term(s, n)) == u * pw(sc->m, n));
            AperyParams P = sc->is_v ? v_params(sc->x, sc->m) : g_params(sc->x, sc->m);
            CHECK(apery_term(P, n) == BigRational(named_term(s, n)));
        }
    }
}

TEST_CASE("alternative closed forms agree for random x") {
    for (const auto& x : random_xs(31, 10)) {
        for (unsigned n = 0; n <= 30; ++n) {
            INFO("x=" << to_string(x) << " n=" << n);
            CHECK(g_of_x(x, n) == g_of_x_alt(x, n));
            BigRational v = v_of_x(x, n);
            CHECK(v == v_of_x_alt1(x, n));
            CHECK(v == v_of_x_alt2(x, n));
        }
    }
}

TEST_CASE("recurrence equals the definitional sum for random x") {
    for (const auto& x : random_xs(77, 6)) {
        auto g = apery_terms(g_params(x), 25);
        auto v = apery_terms(v_params(x), 25);
        for (unsigned n = 0; n < 25; ++n) {
            CHECK(g[n] == g_of_x(x, n));
            CHECK(v[n] == v_of_x(x, n));
        }
    }
}

TEST_CASE("V and V4 second forms") {
    for (unsigned n = 0; n <= 30; ++n) {
        BigInt s1 = 0, s4 = 0;
        for (unsigned k = 0; k <= n; ++k) {
            BigInt c = binom(2 * k, k), d = binom(2 * (n - k), n - k);
            s1 += c * c * d * d;
            mpz_class p16;
            mpz_ui_pow_ui(p16.get_mpz_t(), 16, n - k);
            s4 += c * c * c * d * p16;
        }
        CHECK(named_term(Named::V, n) == s1);
        CHECK(named_term(Named::V4, n) == s4);
    }
}

TEST_CASE("prefix_mod examples") {
    PrimePowerModulus m5(5, 1), m343(7, 3);
    auto g = prefix_mod_g(Q("-1/2"), m5, 5);
    for (unsigned n = 0; n < 5; ++n) CHECK(g[n] == reduce_mod(g_of_x(Q("-1/2"), n), m5));
    auto f = prefix_mod_named(Named::f, m343, 7);
    for (unsigned n = 0; n < 7; ++n) CHECK(f[n] == reduce_mod(named_term(Named::f, n), m343));
    auto one = prefix_mod(named_params(Named::A), m5, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].value() == 1);
    CHECK_THROWS(prefix_mod(named_params(Named::A), m5, 6));
}

TEST_CASE("prefix_mod agrees with the definitional reduction") {
    for (std::uint64_t p : {5u, 7u, 11u, 13u}) {
        for (int e = 1; e <= 4; ++e) {
            PrimePowerModulus m(p, e);
            for (Named s : kAllNamed) {
                auto pre = prefix_mod_named(s, m, static_cast<unsigned>(p));
                for (unsigned n = 0; n < p; ++n) CHECK(pre[n] == reduce_mod(named_term(s, n), m));
            }
            for (auto x : {Q("-1/3"), Q("2/9"), Q("-7/4")}) {
                auto g = prefix_mod_g(x, m, static_cast<unsigned>(p));
                auto v = prefix_mod_v(x, m, static_cast<unsigned>(p));
                for (unsigned n = 0; n < p; ++n) {
                    CHECK(g[n] == reduce_mod(g_of_x(x, n), m));
                    CHECK(v[n] == reduce_mod(v_of_x(x, n), m));
                }
            }
        }
    }
}

TEST_CASE("binomial_transform is an involution") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long> d(-1000, 1000);
    for (int t = 0; t < 20; ++t) {
        std::vector<BigRational> u(20);
        for (auto& x : u) x = d(rng);
        CHECK(binomial_transform(binomial_transform(u)) == u);
    }
    std::vector<BigRational> f(15);
    for (unsigned n = 0; n < 15; ++n) f[n] = (n & 1 ? -1 : 1) * BigRational(named_term(Named::f, n));
    auto a = binomial_transform(f);
    for (unsigned n = 0; n < 15; ++n) CHECK(a[n] == BigRational(named_term(Named::a, n)));
}
