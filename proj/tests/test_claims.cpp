#include "apery/claims.hpp"
#include "oracle_values.hpp"

#include <doctest.h>
#include <json.hpp>

#include <set>
#include <sstream>

using namespace apery;

namespace {

std::string render(const Report& r, Format f) {
    std::ostringstream os;
    write_report(r, f, os);
    return os.str();
}

std::size_t count(const Report& r, Status s) {
    auto it = r.counts.find(s);
    return it == r.counts.end() ? 0 : it->second;
}

}  // namespace

TEST_CASE("registry shape") {
    const auto& reg = registry();
    REQUIRE(!reg.empty());
    std::set<std::string> ids;
    for (const auto& c : reg) {
        INFO(c.id);
        CHECK(ids.insert(c.id).second);
        CHECK(c.family == c.id.substr(0, c.id.find('-')));
        CHECK(c.exponent >= 1);
        CHECK(c.exponent <= 6);
        CHECK(!c.statement.empty());
        CHECK(static_cast<bool>(c.eval));
        CHECK(static_cast<bool>(c.applies));
        CHECK((c.cls == ClaimClass::Conjecture) == (c.id[0] == 'C'));
    }
    for (const auto* c : select_claims({"T4.2"})) CHECK(c->exponent == 3);
    for (const auto* c : select_claims({"T4.5"})) CHECK(c->exponent == 5);
    for (const char* fam : {"T3.2", "T3.9", "T4.2", "T4.8", "T5.1", "T5.6", "L2.1", "L2.4", "E2.7", "E2.22", "E3.2",
                            "E3.4", "R3.1", "R3.3", "R4.1", "R4.3", "C3.1", "C3.10", "C4.1", "C4.11", "C5.1", "C5.14"})
        CHECK_MESSAGE(!select_claims({fam}).empty(), fam);
}

TEST_CASE("claim selection") {
    auto all = select_claims({"all"});
    auto th = select_claims({"all-theorems"});
    auto cj = select_claims({"all-conjectures"});
    CHECK(all.size() == registry().size());
    CHECK(th.size() + cj.size() == all.size());
    for (const auto* c : th) CHECK(c->cls != ClaimClass::Conjecture);
    for (const auto* c : cj) CHECK(c->cls == ClaimClass::Conjecture);
    CHECK(select_claims({}).empty());
    CHECK(select_claims({"T4.2-V6"}).size() == 1);
    CHECK(select_claims({"T4.2", "T4.2-V6"}).size() == select_claims({"T4.2"}).size());
    CHECK_THROWS_AS(select_claims({"NOPE"}), UnknownClaim);
    CHECK_THROWS_AS(find_claim("T4.2"), UnknownClaim);
    CHECK(find_claim("T4.2-V6").id == "T4.2-V6");
}

TEST_CASE("T3.2-G6 applicability excludes p = 3") {
    const auto& c = find_claim("T3.2-G6");
    CHECK_FALSE(c.applies(3));
    CHECK(c.applies(5));
    auto out = evaluate("T3.2-G6", 3);
    REQUIRE(out.size() == 1);
    CHECK(out[0].status == Status::NotApplicable);
}

TEST_CASE("T4.2 at p = 7") {
    auto out = evaluate("T4.2-V6", 7);
    REQUIRE(out.size() == 1);
    CHECK(out[0].status == Status::Holds);
    CHECK(out[0].lhs == std::to_string(oracle::V6_7_mod343));
    CHECK(out[0].rhs == "312");
    CHECK(out[0].modulus == "7^3");
    for (const auto& o : evaluate("T4.2", 7)) CHECK(o.status == Status::Holds);
}

TEST_CASE("T3.8 at p = 5 takes the zero branch") {
    auto out = evaluate("T3.8", 5);
    REQUIRE(out.size() == 3);
    for (const auto& o : out) {
        CHECK(o.status == Status::Holds);
        CHECK(o.rhs == "0");
    }
}

TEST_CASE("spot values") {
    auto g3 = evaluate("T3.4-G3", 7);
    REQUIRE(g3.size() == 1);
    CHECK(g3[0].status == Status::Holds);
    CHECK(g3[0].lhs == std::to_string(oracle::G3_6_mod343));
    CHECK(g3[0].rhs == std::to_string(oracle::G3_6_rhs_mod343));
    auto g6 = evaluate("T3.2-G6", 13);
    REQUIRE(g6.size() == 1);
    CHECK(g6[0].status == Status::Holds);
    CHECK(g6[0].lhs == std::to_string(oracle::G6_sum13_mod2197));
}

TEST_CASE("sweep examples") {
    Report r = sweep({"T4.2"}, 5, 50, 2);
    CHECK(!r.outcomes.empty());
    for (const auto& o : r.outcomes) CHECK(o.status == Status::Holds);
    CHECK_FALSE(r.theorem_failure);

    Report e = sweep({}, 5, 97, 1);
    CHECK(e.outcomes.empty());
    CHECK_FALSE(e.theorem_failure);
    CHECK_FALSE(e.conjecture_failure);

    Report c = sweep({"C4.1"}, 5, 97, 2);
    CHECK(count(c, Status::Holds) > 0);
    CHECK(count(c, Status::Fails) == 0);
    CHECK(count(c, Status::Error) == 0);
}

TEST_CASE("theorem sweep over a short range") {
    Report r = sweep({"all-theorems"}, 5, 31, 2);
    CHECK(count(r, Status::Fails) == 0);
    CHECK(count(r, Status::Error) == 0);
    CHECK_FALSE(r.theorem_failure);
}

TEST_CASE("conjecture FAILS carry witnesses") {
    Report r = sweep({"C4.8"}, 11, 11, 1);
    REQUIRE(r.outcomes.size() == 1);
    const auto& o = r.outcomes[0];
    CHECK(o.status == Status::Fails);
    CHECK(o.note.find("counterexample-or-bug") != std::string::npos);
    CHECK(!o.lhs.empty());
    CHECK(!o.rhs.empty());
    CHECK(o.modulus == "11^3");
    CHECK(r.conjecture_failure);
    CHECK_FALSE(r.theorem_failure);
}

TEST_CASE("report is independent of the worker count") {
    Report a = sweep({"T3.2", "T4.5", "C3.2"}, 5, 61, 1);
    Report b = sweep({"T3.2", "T4.5", "C3.2"}, 5, 61, 4);
    for (Format f : {Format::Jsonl, Format::Csv, Format::Text}) CHECK(render(a, f) == render(b, f));
}

TEST_CASE("seed controls the sampled parameters") {
    RunOptions s1, s2;
    s2.seed = s1.seed + 1;
    auto a = render(sweep({"T3.2-x"}, 7, 23, 1, s1), Format::Jsonl);
    auto b = render(sweep({"T3.2-x"}, 7, 23, 1, s1), Format::Jsonl);
    auto c = render(sweep({"T3.2-x"}, 7, 23, 1, s2), Format::Jsonl);
    CHECK(a == b);
    CHECK(a != c);
}

TEST_CASE("pinned x") {
    RunOptions o;
    o.x = parse_rational("-2/5");
    auto out = evaluate("T3.2-x", 7, o);
    REQUIRE(out.size() == 1);
    CHECK(out[0].params == "x=-2/5");
    CHECK(out[0].status == Status::Holds);
}

TEST_CASE("index cap turns large indices into NOT_APPLICABLE") {
    RunOptions o;
    o.index_cap = 10;
    bool capped = false;
    for (const auto& out : evaluate("C3.7-G3", 7, o)) {
        CHECK(out.status != Status::Error);
        if (out.status == Status::NotApplicable && out.note.find("cap") != std::string::npos) capped = true;
    }
    CHECK(capped);
}

TEST_CASE("alternative readings are opt-in") {
    auto off = evaluate("C3.1-b-alt", 5);
    REQUIRE(off.size() == 1);
    CHECK(off[0].status == Status::NotApplicable);
    RunOptions o;
    o.alt_readings = true;
    auto on = evaluate("C3.1-b-alt", 5, o);
    REQUIRE(on.size() == 1);
    CHECK(on[0].status != Status::NotApplicable);
}

TEST_CASE("report formats") {
    Report r = sweep({"T3.2-G6"}, 3, 13, 1);
    std::istringstream js(render(r, Format::Jsonl));
    std::string line;
    std::size_t n = 0;
    while (std::getline(js, line)) {
        auto j = nlohmann::json::parse(line);
        for (const char* k : {"claim_id", "prime", "params", "status", "modulus", "lhs", "rhs"}) CHECK(j.contains(k));
        CHECK_FALSE(j.contains("elapsed_ms"));
        ++n;
    }
    CHECK(n == r.outcomes.size());

    std::string csv = render(r, Format::Csv);
    CHECK(csv.rfind("claim_id,prime,params,status,modulus,lhs,rhs,note\n", 0) == 0);

    std::string text = render(r, Format::Text);
    CHECK(text.find("HOLDS") != std::string::npos);
    CHECK(text.find("total:") != std::string::npos);

    std::ostringstream timed;
    write_report(r, Format::Jsonl, timed, true);
    CHECK(timed.str().find("elapsed_ms") != std::string::npos);

    CHECK(parse_format("csv") == Format::Csv);
    CHECK_FALSE(parse_format("xml"));
}

TEST_CASE("series helper") {
    PrimePowerModulus m(5, 2);
    std::vector<Residue> u{Residue(1, m), Residue(2, m), Residue(3, m)};
    CHECK(series(u, Residue(2, m), 3).value() == 1 + 4 + 12);
    CHECK(series(u, Residue(1, m), 3, [&](unsigned n) { return Residue(n + 1, m); }).value() == 1 + 4 + 9);
}
