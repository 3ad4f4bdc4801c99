#include "cli.hpp"

#include "apery/claims.hpp"
#include "apery/identities.hpp"
#include "apery/sequences.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <regex>
#include <thread>

namespace apery::cli {

namespace {

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s) {
    static const std::regex re(R"(\s*(\d+)\s*(?:\.\.\s*(\d+))?\s*)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw Usage("bad prime range '" + s + "', expected A..B");
    std::uint64_t lo = std::stoull(m[1]), hi = m[2].matched ? std::stoull(m[2]) : lo;
    if (lo < 3 || hi < lo) throw Usage("prime range endpoints must satisfy 3 <= A <= B");
    return {lo, hi};
}

BigRational parse_param(const std::string& name, const std::string& s) {
    try {
        return parse_rational(s);
    } catch (const std::exception&) {
        throw Usage("bad rational for --" + name + ": " + s);
    }
}

struct VerifyArgs {
    std::vector<std::string> claims{"all-theorems"};
    std::string primes = "5..97";
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::string format = "jsonl";
    std::uint64_t seed = RunOptions{}.seed;
    std::string output;
    bool strict = false;
    unsigned index_cap = RunOptions{}.index_cap;
    unsigned oracle_primes = RunOptions{}.oracle_primes;
    bool timings = false;
    bool alt = false;
    std::string x, m;
};

int do_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    auto [lo, hi] = parse_range(a.primes);
    auto fmt = parse_format(a.format);
    if (!fmt) throw Usage("unknown format " + a.format);
    if (a.workers < 1) throw Usage("--workers must be >= 1");
    RunOptions opts;
    opts.seed = a.seed;
    opts.index_cap = a.index_cap;
    opts.oracle_primes = a.oracle_primes;
    opts.timings = a.timings;
    opts.alt_readings = a.alt;
    if (!a.x.empty()) opts.x = parse_param("x", a.x);
    if (!a.m.empty()) opts.m = parse_param("m", a.m);
    try {
        select_claims(a.claims);
    } catch (const UnknownClaim& e) {
        throw Usage(e.what());
    }
    Report r = sweep(a.claims, lo, hi, a.workers, opts);
    if (a.output.empty()) {
        write_report(r, *fmt, out, a.timings);
    } else {
        std::ofstream f(a.output, std::ios::binary);
        if (!f) {
            err << "cannot open " << a.output << "\n";
            return 2;
        }
        write_report(r, *fmt, f, a.timings);
    }
    bool bad = r.theorem_failure || (a.strict && r.conjecture_failure);
    if (r.conjecture_failure) err << "conjecture FAILS present (counterexample-or-bug)\n";
    if (r.theorem_failure) err << "theorem-class FAILS/ERROR present\n";
    return bad ? 1 : 0;
}

int do_list(const std::vector<std::string>& selectors, const std::string& format, std::ostream& out) {
    std::vector<const ClaimSpec*> specs;
    try {
        specs = select_claims(selectors);
    } catch (const UnknownClaim& e) {
        throw Usage(e.what());
    }
    for (const auto* s : specs) {
        if (format == "jsonl") {
            nlohmann::ordered_json j;
            j["claim_id"] = s->id;
            j["class"] = class_name(s->cls);
            j["family"] = s->family;
            j["modulus"] = "p^" + std::to_string(s->exponent);
            j["statement"] = s->statement;
            if (!s->flag.empty()) j["note"] = s->flag;
            out << j.dump() << "\n";
        } else {
            out << s->id << "\t" << class_name(s->cls) << "\tp^" << s->exponent << "\t" << s->statement;
            if (!s->flag.empty()) out << "  [" << s->flag << "]";
            out << "\n";
        }
    }
    return 0;
}

int do_seq(const std::string& id, unsigned n, std::ostream& out) {
    static const std::regex fn(R"(\s*([gGvV])\s*\(\s*([^)]+)\)\s*)");
    std::smatch m;
    if (std::regex_match(id, m, fn)) {
        BigRational x = parse_param("x", m[2]);
        bool v = m[1] == "v" || m[1] == "V";
        for (unsigned i = 0; i < n; ++i) out << to_string(v ? v_of_x(x, i) : g_of_x(x, i)) << "\n";
        return 0;
    }
    auto s = parse_named(id);
    if (!s) throw Usage("unknown sequence " + id + " (expected a named id, g(x) or v(x))");
    for (unsigned i = 0; i < n; ++i) out << named_term(*s, i).get_str() << "\n";
    return 0;
}

int do_identities(unsigned n_max, const std::vector<std::string>& ids, std::uint64_t seed, bool strict,
                  std::ostream& out) {
    auto xs = identity_x_samples(seed);
    std::vector<std::string> list = ids.empty() ? identity_ids() : ids;
    bool bad = false;
    for (const auto& id : list) {
        IdentityCase c;
        try {
            c = check_identity(id, n_max, xs, seed);
        } catch (const UnknownIdentity& e) {
            throw Usage(e.what());
        }
        out << c.id << "\t" << (c.pass ? "PASS" : "FAIL") << "\t" << c.instances << " instances";
        if (!c.pass) {
            out << "\t" << c.counterexample;
            if (c.conjecture) out << " (counterexample-or-bug)";
            if (!c.conjecture || strict) bad = true;
        }
        out << "\n";
    }
    return bad ? 1 : 0;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

const std::vector<std::string> kConfigFlags{"strict-conjectures", "timings", "alt-readings"};
const std::vector<std::string> kConfigOptions{"claims", "primes",     "workers", "format", "seed",
                                              "output", "index-cap", "exact-oracle-primes", "x", "m"};

// Expands `verify --config FILE` into the equivalent options. Options given
// on the command line win over the file.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
    auto verb = std::find(args.begin(), args.end(), "verify");
    if (verb == args.end()) return args;
    std::vector<std::string> rest(verb + 1, args.end()), kept;
    std::string path;
    for (std::size_t i = 0; i < rest.size(); ++i) {
        if (rest[i] == "--config") {
            if (i + 1 >= rest.size()) throw Usage("--config needs a file");
            path = rest[++i];
        } else if (rest[i].rfind("--config=", 0) == 0) {
            path = rest[i].substr(9);
        } else {
            kept.push_back(rest[i]);
        }
    }
    if (path.empty()) return args;
    std::ifstream in(path);
    if (!in) throw Usage("cannot read config " + path);
    auto given = [&](const std::string& key) {
        for (const auto& a : kept)
            if (a == "--" + key || a.rfind("--" + key + "=", 0) == 0) return true;
        return false;
    };
    std::vector<std::string> out(args.begin(), verb + 1);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line.substr(0, line.find_first_of("#;")));
        if (line.empty() || line.front() == '[') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw Usage(path + ":" + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        std::replace(key.begin(), key.end(), '_', '-');
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
        if (given(key)) continue;
        if (std::find(kConfigFlags.begin(), kConfigFlags.end(), key) != kConfigFlags.end()) {
            if (value == "true" || value == "1" || value == "yes") out.push_back("--" + key);
            else if (value != "false" && value != "0" && value != "no")
                throw Usage(path + ":" + std::to_string(lineno) + ": " + key + " expects true or false");
        } else if (std::find(kConfigOptions.begin(), kConfigOptions.end(), key) != kConfigOptions.end()) {
            out.push_back("--" + key);
            out.push_back(value);
        } else {
            throw Usage(path + ":" + std::to_string(lineno) + ": unknown key " + key);
        }
    }
    out.insert(out.end(), kept.begin(), kept.end());
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Apery-like sequence congruence verifier"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list-claims", "print the claim registry");
    std::vector<std::string> list_sel{"all"};
    std::string list_fmt = "text";
    list->add_option("--claims", list_sel, "ids, families or all / all-theorems / all-conjectures")->delimiter(',');
    list->add_option("--format", list_fmt, "text or jsonl")->check(CLI::IsMember({"text", "jsonl"}));

    auto* verify = app.add_subcommand("verify", "sweep claims over a prime range");
    VerifyArgs va;
    std::string config_path;
    verify->add_option("--config", config_path, "key = value file supplying any of these options");
    verify->add_option("--claims", va.claims, "ids, families or all / all-theorems / all-conjectures")
        ->delimiter(',');
    verify->add_option("--primes", va.primes, "inclusive range A..B");
    verify->add_option("--workers", va.workers, "worker threads")->envname("APERY_WORKERS");
    verify->add_option("--format", va.format, "jsonl, csv or text");
    verify->add_option("--seed", va.seed, "seed for sampled parameters");
    verify->add_option("--output", va.output, "report path (default stdout)");
    verify->add_flag("--strict-conjectures", va.strict, "conjecture FAILS also fail the exit code");
    verify->add_option("--index-cap", va.index_cap, "largest exact sequence index");
    verify->add_option("--exact-oracle-primes", va.oracle_primes, "primes per claim rechecked definitionally");
    verify->add_flag("--timings", va.timings, "emit elapsed_ms");
    verify->add_flag("--alt-readings", va.alt, "also evaluate second readings of ambiguous formulas");
    verify->add_option("--x", va.x, "pin the rational parameter x");
    verify->add_option("--m", va.m, "pin the sum parameter m");

    auto* seq = app.add_subcommand("seq", "print exact terms");
    std::string seq_id;
    unsigned seq_n = 10;
    seq->add_option("id", seq_id, "named id (A, G6, ...), g(x) or v(x)")->required();
    seq->add_option("--n", seq_n, "number of terms");

    auto* ident = app.add_subcommand("identities", "run the exact identity suite");
    unsigned n_max = 30;
    std::vector<std::string> ids;
    std::uint64_t iseed = RunOptions{}.seed;
    bool istrict = false;
    ident->add_option("--n-max", n_max, "largest n");
    ident->add_option("--ids", ids, "subset of identity ids")->delimiter(',');
    ident->add_option("--seed", iseed, "seed for sampled x and u");
    ident->add_flag("--strict-conjectures", istrict, "ILC counterexamples fail the exit code");

    std::vector<std::string> rev;
    try {
        auto full = expand_config(args);
        rev.assign(full.rbegin(), full.rend());
    } catch (const Usage& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*list) return do_list(list_sel, list_fmt, out);
        if (*verify) return do_verify(va, out, err);
        if (*seq) return do_seq(seq_id, seq_n, out);
        if (*ident) return do_identities(n_max, ids, iseed, istrict, out);
    } catch (const Usage& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace apery::cli
