#include "apery/identities.hpp"

#include <doctest.h>

#include <set>

using namespace apery;

TEST_CASE("catalog") {
    auto ids = identity_ids();
    std::set<std::string> unique(ids.begin(), ids.end());
    CHECK(unique.size() == ids.size());
    for (const char* id : {"I2.1", "I2.2", "I2.3", "I2.4", "I2.5", "I2.6", "I3.3", "I3.5", "I3.6", "I3.7", "I3.8",
                           "I3.9", "I3.10", "I4.2", "I4.3", "I4.4", "IT3.1", "IT4.1", "IINV", "I5.1", "IREC",
                           "ILC3.11", "ILC4.12"}) {
        CHECK_MESSAGE(unique.count(id) == 1, id);
        CHECK(!identity_statement(id).empty());
    }
    CHECK_THROWS_AS(check_identity("NOPE", 5, {}), UnknownIdentity);
}

TEST_CASE("x samples are seeded") {
    auto a = identity_x_samples(1), b = identity_x_samples(1), c = identity_x_samples(2);
    CHECK(a.size() == 10);
    CHECK(a == b);
    CHECK(a != c);
}

TEST_CASE("small instances") {
    auto xs = identity_x_samples();
    auto i33 = check_identity("I3.3", 4, xs);
    CHECK(i33.pass);
    CHECK(i33.instances > 0);
    auto i310 = check_identity("I3.10", 2, xs);
    CHECK(i310.pass);
    BigRational lhs = 0;
    BigRational z = 1;
    for (long k = 0; k <= 2; ++k, z /= -4)
        lhs += BigRational(int_binomial(2, k) * int_binomial(2 + k, k) * int_binomial(2 * k, k)) * z;
    CHECK(lhs == make_rational(1, 4));
    CHECK(BigRational(int_binomial(2, 1) * int_binomial(2, 1)) / 16 == make_rational(1, 4));
    auto rec = check_identity("IREC", 40, xs);
    CHECK(rec.pass);
}

TEST_CASE("every identity holds for n <= 30") {
    for (const auto& c : check_all_identities(30)) {
        INFO(c.id << ": " << c.counterexample);
        CHECK(c.pass);
        CHECK(c.instances > 0);
        CHECK(c.conjecture == (c.id.rfind("ILC", 0) == 0));
    }
}

TEST_CASE("log-behavior checks over another seed") {
    auto xs = identity_x_samples(7);
    CHECK(check_identity("ILC3.11", 25, xs, 7).pass);
    CHECK(check_identity("ILC4.12", 25, xs, 7).pass);
}
