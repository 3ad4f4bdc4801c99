#pragma once

#include "apery/exact.hpp"
#include "apery/quadforms.hpp"
#include "apery/sequences.hpp"
#include "apery/special.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace apery {

enum class ClaimClass { Theorem, Lemma, Equation, Remark, Conjecture };
enum class Status { Holds, Fails, NotApplicable, Error };

std::string_view class_name(ClaimClass c);
std::string_view status_name(Status s);

struct UnknownClaim : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct IndexCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OracleMismatch : std::logic_error {
    using std::logic_error::logic_error;
};

struct ClaimOutcome {
    std::string claim_id;
    std::uint64_t prime = 0;
    std::string params;
    Status status = Status::NotApplicable;
    std::string modulus;  // "p^e", empty when nothing was compared
    std::string lhs, rhs;
    std::string note;
    double elapsed_ms = 0;
};

struct RunOptions {
    std::uint64_t seed = 20240611;
    unsigned index_cap = 1500;
    unsigned oracle_primes = 3;
    bool oracle = false;  // set per cell by the sweep
    bool timings = false;
    std::optional<BigRational> x;  // pin the free rational parameter
    std::optional<BigRational> m;  // pin the free sum parameter
    bool alt_readings = false;  // evaluate members implementing a second reading of an ambiguous formula
};

// Immutable per-prime data shared by every claim evaluated at p.
struct PrimeContext {
    explicit PrimeContext(std::uint64_t p);

    std::uint64_t p;
    SpecialTables tables;
    std::vector<BigRational> H1, H2;  // exact H_n, H_n^(2) for n < p

    std::optional<QuadRepresentation> rep(long d, long alpha = 1) const;
    std::optional<std::pair<long, long>> rep_3_5;  // p = 3x^2 + 5y^2

    BigRational B(unsigned n) const;
    BigRational E(unsigned n) const;
    BigRational U(unsigned n) const;

private:
    std::map<std::pair<long, long>, std::optional<QuadRepresentation>> reps_;
};

class Cell;

struct ClaimSpec {
    std::string id;
    ClaimClass cls;
    std::string family;
    std::string statement;
    int exponent;
    std::function<bool(std::uint64_t)> applies;
    std::function<void(Cell&)> eval;
    std::string flag;  // reading notes carried into every outcome
};

// Evaluation state for one (claim, prime); owns its memo tables.
class Cell {
public:
    Cell(const ClaimSpec& spec, const PrimeContext& ctx, const RunOptions& opts);

    const std::uint64_t p;
    const PrimeContext& ctx;
    const RunOptions& opts;

    PrimePowerModulus mod(int e) const { return PrimePowerModulus(p, e); }
    Residue R(const BigRational& q, int e) const;
    Residue R(long q, int e) const;
    BigRational pk(int k) const;  // p^k

    // Fixed {-1/2,-1/3,-1/4,-1/6} then three seeded random x; excluded fixed
    // values are recorded as NOT_APPLICABLE.
    void each_x(const std::function<bool(const BigRational&)>& admissible,
                const std::function<void(const BigRational&, const std::string&)>& body);
    // Listed m values, or three seeded random admissible ones when the list is empty.
    void each_m(const std::vector<BigRational>& listed, const std::function<bool(const BigRational&)>& admissible,
                const std::function<void(const BigRational&, const std::string&)>& body);
    BigRational random_rational(long num_bound, long den_bound);
    long random_int(long lo, long hi);

    // Cached prefixes u_0..u_{count-1} mod p^e, count <= p.
    const std::vector<Residue>& named_prefix(Named s, int e);
    const std::vector<Residue>& g_prefix(const BigRational& x, int e);
    const std::vector<Residue>& v_prefix(const BigRational& x, int e);
    // Exact definitional values for any index, bounded by the index cap.
    const BigInt& named_exact(Named s, unsigned n);
    BigRational g_exact(const BigRational& x, unsigned n);
    BigRational v_exact(const BigRational& x, unsigned n);
    // C(2n,n) mod p^e for n < p.
    const std::vector<Residue>& central(int e);

    void check(const std::string& params, const Residue& lhs, const Residue& rhs, const std::string& note = "");
    void check(const std::string& params, const Residue& lhs, const BigRational& rhs, const std::string& note = "");
    void not_applicable(const std::string& params, const std::string& note);
    void error(const std::string& params, const std::string& msg);
    // Runs body; arithmetic surprises become ERROR, the index cap NOT_APPLICABLE.
    void guard(const std::string& params, const std::function<void()>& body);

    std::vector<ClaimOutcome> take() { return std::move(out_); }

private:
    void cap(unsigned n) const;
    void push(const std::string& params, Status s, const std::string& modulus, const std::string& lhs,
              const std::string& rhs, const std::string& note);

    const ClaimSpec& spec_;
    std::uint64_t rng_state_;
    std::vector<ClaimOutcome> out_;
    std::map<std::pair<int, int>, std::vector<Residue>> named_cache_;
    std::map<std::pair<std::string, int>, std::vector<Residue>> gv_cache_;
    std::map<std::pair<int, unsigned>, BigInt> exact_cache_;
    std::map<int, std::vector<Residue>> central_cache_;
};

// sum_{n<count} w(n) u_n z^n
Residue series(const std::vector<Residue>& u, const Residue& z, unsigned count,
               const std::function<Residue(unsigned)>& weight = nullptr);

const std::vector<ClaimSpec>& registry();
const ClaimSpec& find_claim(const std::string& id);
// Accepts exact ids, family prefixes ("T4.2" selects "T4.2-V3"...), and the
// group words all, all-theorems, all-conjectures. Registry order is kept.
std::vector<const ClaimSpec*> select_claims(const std::vector<std::string>& selectors);

// id may also be a family; every member is evaluated in registry order.
std::vector<ClaimOutcome> evaluate(const std::string& id, std::uint64_t p, const RunOptions& opts = {});
std::vector<ClaimOutcome> evaluate(const ClaimSpec& spec, const PrimeContext& ctx, const RunOptions& opts);

struct Report {
    std::vector<ClaimOutcome> outcomes;
    std::map<Status, std::size_t> counts;
    bool theorem_failure = false;     // FAILS/ERROR on a non-conjecture claim
    bool conjecture_failure = false;  // FAILS on a conjecture
};

Report sweep(const std::vector<std::string>& selectors, std::uint64_t lo, std::uint64_t hi, unsigned workers,
             const RunOptions& opts = {});

enum class Format { Jsonl, Csv, Text };
std::optional<Format> parse_format(std::string_view s);
void write_report(const Report& r, Format f, std::ostream& os, bool timings = false);

namespace detail {
void register_lemmas(std::vector<ClaimSpec>& out);
void register_section3(std::vector<ClaimSpec>& out);
void register_section4(std::vector<ClaimSpec>& out);
void register_section5(std::vector<ClaimSpec>& out);
void register_conjectures3(std::vector<ClaimSpec>& out);
void register_conjectures4(std::vector<ClaimSpec>& out);
void register_conjectures5(std::vector<ClaimSpec>& out);
}  // namespace detail

}  // namespace apery
