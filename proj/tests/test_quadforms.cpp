#include "apery/exact.hpp"
#include "apery/quadforms.hpp"
#include "apery/special.hpp"

#include <doctest.h>

using namespace apery;

namespace {

struct Form {
    long d, alpha;
};

const Form kForms[] = {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {7, 1}, {9, 1}, {15, 1}, {5, 2}, {9, 2}, {27, 4}};

long mod(long a, long m) { return ((a % m) + m) % m; }

bool satisfies(long x, SignRule rule) {
    switch (rule) {
        case SignRule::Mod3IsOne: return mod(x, 3) == 1;
        case SignRule::Mod4IsOne: return mod(x, 4) == 1;
        case SignRule::Legendre7IsOne: return legendre(x, 7) == 1;
        case SignRule::None: return x > 0;
    }
    return false;
}

}  // namespace

TEST_CASE("represent examples") {
    auto a = represent(13, 3, 1);
    REQUIRE(a);
    CHECK(a->x == 1);
    CHECK(a->y == 2);
    auto b = represent(7, 27, 4);
    REQUIRE(b);
    CHECK(b->x == 1);
    CHECK(b->y == 1);
    CHECK_FALSE(represent(5, 3, 1));
    CHECK_THROWS(represent(7, 6, 1));
    auto c = represent_form(23, 3, 5);
    REQUIRE(c);
    CHECK(c->first == 1);
    CHECK(c->second == 2);
}

TEST_CASE("normalize examples") {
    auto r7 = represent(7, 3, 1);
    REQUIRE(r7);
    CHECK(r7->x == 2);
    CHECK(normalize(*r7, SignRule::Mod3IsOne) == -2);
    CHECK(normalize(QuadRepresentation{1, 3, 1, 2}, SignRule::Mod3IsOne) == 1);
    auto r11 = represent(11, 2, 1);
    REQUIRE(r11);
    CHECK(r11->x == 3);
    CHECK(normalize(*r11, SignRule::Mod4IsOne) == -3);
    CHECK(normalize(*r11, SignRule::None) == 3);
    CHECK_THROWS_AS(normalize(QuadRepresentation{1, 1, 2, 1}, SignRule::Mod4IsOne), NormalizationImpossible);
    CHECK_THROWS_AS(normalize(QuadRepresentation{1, 2, 3, 1}, SignRule::Mod3IsOne), NormalizationImpossible);
    CHECK_THROWS_AS(normalize(QuadRepresentation{1, 2, 7, 1}, SignRule::Legendre7IsOne), NormalizationImpossible);
}

TEST_CASE("representations satisfy the form and match the class predicate") {
    for (std::uint64_t p = 3; p <= 500; ++p) {
        if (!is_prime(p)) continue;
        for (const Form& f : kForms) {
            INFO("p=" << p << " d=" << f.d << " alpha=" << f.alpha);
            auto r = represent(p, f.d, f.alpha);
            CHECK(r.has_value() == representable_by_class(p, f.d, f.alpha));
            if (!r) continue;
            CHECK(r->x > 0);
            CHECK(r->y > 0);
            CHECK(r->x * r->x + f.d * r->y * r->y == f.alpha * static_cast<long>(p));
        }
    }
}

TEST_CASE("each sign rule picks exactly one of x and -x") {
    struct Pair {
        Form f;
        SignRule rule;
    };
    const Pair pairs[] = {{{3, 1}, SignRule::Mod3IsOne},  {{9, 1}, SignRule::Mod3IsOne},
                          {{27, 4}, SignRule::Mod3IsOne}, {{15, 1}, SignRule::Mod3IsOne},
                          {{2, 1}, SignRule::Mod4IsOne},  {{4, 1}, SignRule::Mod4IsOne},
                          {{7, 1}, SignRule::Legendre7IsOne}};
    for (std::uint64_t p = 3; p <= 500; ++p) {
        if (!is_prime(p)) continue;
        for (const Pair& pr : pairs) {
            auto r = represent(p, pr.f.d, pr.f.alpha);
            if (!r) continue;
            INFO("p=" << p << " d=" << pr.f.d);
            long x = normalize(*r, pr.rule);
            CHECK((x == r->x || x == -r->x));
            CHECK(satisfies(x, pr.rule));
            CHECK_FALSE(satisfies(-x, pr.rule));
        }
    }
}
