#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = apery::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / ("apery_test_" + name);
    std::ofstream(path) << content;
    return path;
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("seq") {
    auto r = run({"seq", "G6", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n372\n148644\n");
    CHECK(run({"seq", "g(-1/2)", "--n", "3"}).out == "1\n3/4\n41/64\n");
    CHECK(run({"seq", "v(-1/2)", "--n", "2"}).out == "1\n1/2\n");
    CHECK(run({"seq", "Ap", "--n", "3"}).out == "1\n3\n19\n");
    CHECK(run({"seq", "NOPE"}).code == 2);
    CHECK(run({"seq", "g(1/0)"}).code == 2);
}

TEST_CASE("verify exit codes") {
    auto r = run({"verify", "--claims", "T4.2", "--primes", "5..50", "--format", "jsonl", "--workers", "2"});
    CHECK(r.code == 0);
    CHECK(lines(r.out) > 0);
    std::istringstream in(r.out);
    std::string line;
    while (std::getline(in, line)) CHECK(nlohmann::json::parse(line)["status"] == "HOLDS");

    CHECK(run({"verify", "--claims", "NOPE", "--primes", "5..7"}).code == 2);
    CHECK(run({"verify", "--primes", "2..7"}).code == 2);
    CHECK(run({"verify", "--primes", "11..7"}).code == 2);
    CHECK(run({"verify", "--primes", "five"}).code == 2);
    CHECK(run({"verify", "--claims", "T4.2", "--primes", "5..7", "--format", "xml"}).code == 2);
    CHECK(run({"verify", "--claims", "T4.2", "--primes", "5..7", "--workers", "0"}).code == 2);
    CHECK(run({"verify", "--claims", "T3.2-x", "--primes", "5..7", "--x", "one"}).code == 2);
    CHECK(run({"verify", "--bogus"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("conjecture FAILS fail the exit code only when strict") {
    auto lax = run({"verify", "--claims", "C4.8", "--primes", "11..11"});
    CHECK(lax.code == 0);
    CHECK(lax.out.find("\"FAILS\"") != std::string::npos);
    CHECK(lax.err.find("counterexample-or-bug") != std::string::npos);
    CHECK(run({"verify", "--claims", "C4.8", "--primes", "11..11", "--strict-conjectures"}).code == 1);
}

TEST_CASE("verify output is independent of workers") {
    std::vector<std::string> base{"verify", "--claims", "T3.3,C3.2,C4.10", "--primes", "5..41"};
    auto w1 = base, w3 = base;
    w1.insert(w1.end(), {"--workers", "1"});
    w3.insert(w3.end(), {"--workers", "3"});
    for (const char* fmt : {"jsonl", "csv", "text"}) {
        auto a = w1, b = w3;
        a.insert(a.end(), {"--format", fmt});
        b.insert(b.end(), {"--format", fmt});
        CHECK(run(a).out == run(b).out);
    }
}

TEST_CASE("verify writes to --output") {
    auto path = std::filesystem::temp_directory_path() / "apery_test_report.jsonl";
    auto r = run({"verify", "--claims", "T4.2-V6", "--primes", "5..13", "--output", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(lines(content) == 4);
    std::filesystem::remove(path);
}

TEST_CASE("config files") {
    auto cfg = temp_file("a.cfg",
                         "# sweep settings\n"
                         "claims = T4.2-V6\n"
                         "primes = 5..13\n"
                         "format = \"text\"\n"
                         "workers = 1 ; trailing comment\n"
                         "strict_conjectures = false\n");
    auto r = run({"verify", "--config", cfg.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("T4.2-V6") != std::string::npos);
    CHECK(r.out.find("total:") != std::string::npos);

    auto over = run({"verify", "--config=" + cfg.string(), "--format", "csv"});
    CHECK(over.code == 0);
    CHECK(over.out.rfind("claim_id,prime", 0) == 0);

    auto sec = temp_file("b.cfg", "[verify]\nclaims = C4.8\nprimes = 11..11\nstrict-conjectures = yes\n");
    CHECK(run({"verify", "--config", sec.string()}).code == 1);

    auto bad = temp_file("c.cfg", "bogus = 1\n");
    CHECK(run({"verify", "--config", bad.string()}).code == 2);
    auto noeq = temp_file("d.cfg", "claims\n");
    CHECK(run({"verify", "--config", noeq.string()}).code == 2);
    auto flag = temp_file("e.cfg", "timings = maybe\n");
    CHECK(run({"verify", "--config", flag.string()}).code == 2);
    CHECK(run({"verify", "--config", "/nonexistent/apery.cfg"}).code == 2);
    for (const auto& p : {cfg, sec, bad, noeq, flag}) std::filesystem::remove(p);
}

TEST_CASE("list-claims") {
    auto r = run({"list-claims", "--claims", "T4.2"});
    CHECK(r.code == 0);
    CHECK(lines(r.out) == 5);
    auto j = run({"list-claims", "--claims", "T4.2-V6", "--format", "jsonl"});
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["claim_id"] == "T4.2-V6");
    CHECK(parsed["modulus"] == "p^3");
    CHECK(run({"list-claims", "--claims", "NOPE"}).code == 2);
}

TEST_CASE("identities") {
    auto r = run({"identities", "--n-max", "8"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL\t") == std::string::npos);
    CHECK(run({"identities", "--ids", "I3.10,IREC", "--n-max", "6"}).out.find("I3.10\tPASS") == 0);
    CHECK(run({"identities", "--ids", "NOPE"}).code == 2);
}
