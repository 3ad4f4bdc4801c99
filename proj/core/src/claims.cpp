#include "apery/claims.hpp"

#include <algorithm>
#include <chrono>

namespace apery {

std::string_view class_name(ClaimClass c) {
    switch (c) {
        case ClaimClass::Theorem: return "theorem";
        case ClaimClass::Lemma: return "lemma";
        case ClaimClass::Equation: return "equation";
        case ClaimClass::Remark: return "remark";
        case ClaimClass::Conjecture: return "conjecture";
    }
    return "?";
}

std::string_view status_name(Status s) {
    switch (s) {
        case Status::Holds: return "HOLDS";
        case Status::Fails: return "FAILS";
        case Status::NotApplicable: return "NOT_APPLICABLE";
        case Status::Error: return "ERROR";
    }
    return "?";
}

PrimeContext::PrimeContext(std::uint64_t p_) : p(p_), tables(special_tables(p_)) {
    H1.assign(p, BigRational(0));
    H2.assign(p, BigRational(0));
    for (unsigned n = 1; n < p; ++n) {
        H1[n] = H1[n - 1] + make_rational(1, static_cast<long>(n));
        H2[n] = H2[n - 1] + make_rational(BigInt(1), BigInt(static_cast<unsigned long>(n)) * static_cast<unsigned long>(n));
    }
    for (long d : {1, 2, 3, 4, 5, 7, 9, 15}) reps_[{d, 1}] = represent(p, d, 1);
    reps_[{5, 2}] = represent(p, 5, 2);
    reps_[{9, 2}] = represent(p, 9, 2);
    reps_[{27, 4}] = represent(p, 27, 4);
    rep_3_5 = represent_form(p, 3, 5);
}

std::optional<QuadRepresentation> PrimeContext::rep(long d, long alpha) const {
    auto it = reps_.find({d, alpha});
    if (it == reps_.end()) throw std::invalid_argument("form not precomputed");
    return it->second;
}

BigRational PrimeContext::B(unsigned n) const {
    if (n >= tables.B.size()) throw std::out_of_range("Bernoulli index");
    return tables.B[n];
}
BigRational PrimeContext::E(unsigned n) const {
    if (n >= tables.E.size()) throw std::out_of_range("Euler index");
    return BigRational(tables.E[n]);
}
BigRational PrimeContext::U(unsigned n) const {
    if (n >= tables.U.size()) throw std::out_of_range("U index");
    return BigRational(tables.U[n]);
}

namespace {

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::uint64_t splitmix(std::uint64_t& s) {
    std::uint64_t z = (s += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::string gv_key(char tag, const BigRational& x) { return std::string(1, tag) + to_string(x); }

}  // namespace

Cell::Cell(const ClaimSpec& spec, const PrimeContext& c, const RunOptions& o)
    : p(c.p), ctx(c), opts(o), spec_(spec), rng_state_(o.seed ^ fnv1a(spec.id) ^ (c.p * 0x2545F4914F6CDD1DULL)) {}

Residue Cell::R(const BigRational& q, int e) const { return reduce_mod(q, mod(e)); }
Residue Cell::R(long q, int e) const { return Residue::from_int(q, mod(e)); }

BigRational Cell::pk(int k) const {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    return BigRational(r);
}

long Cell::random_int(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(splitmix(rng_state_) % span);
}

BigRational Cell::random_rational(long num_bound, long den_bound) {
    for (;;) {
        long d = random_int(1, den_bound);
        if (d % static_cast<long>(p) == 0) continue;
        return make_rational(random_int(-num_bound, num_bound), d);
    }
}

void Cell::each_x(const std::function<bool(const BigRational&)>& admissible,
                  const std::function<void(const BigRational&, const std::string&)>& body) {
    auto run = [&](const BigRational& x) {
        std::string tag = "x=" + to_string(x);
        if (!is_p_integral(x, p) || !admissible(x)) {
            not_applicable(tag, "x excluded at this prime");
            return;
        }
        guard(tag, [&] { body(x, tag); });
    };
    if (opts.x) {
        run(*opts.x);
        return;
    }
    std::vector<BigRational> seen;
    for (long m : {2, 3, 4, 6}) {
        seen.push_back(make_rational(-1, m));
        run(seen.back());
    }
    int found = 0;
    for (int attempt = 0; found < 3 && attempt < 2000; ++attempt) {
        BigRational x = random_rational(60, 24);
        if (!admissible(x) || std::find(seen.begin(), seen.end(), x) != seen.end()) continue;
        seen.push_back(x);
        ++found;
        run(x);
    }
}

void Cell::each_m(const std::vector<BigRational>& listed, const std::function<bool(const BigRational&)>& admissible,
                  const std::function<void(const BigRational&, const std::string&)>& body) {
    auto run = [&](const BigRational& m) {
        std::string tag = "m=" + to_string(m);
        if (!is_p_integral(m, p) || !admissible(m)) {
            not_applicable(tag, "m excluded at this prime");
            return;
        }
        guard(tag, [&] { body(m, tag); });
    };
    if (opts.m) {
        run(*opts.m);
        return;
    }
    if (!listed.empty()) {
        for (const auto& m : listed) run(m);
        return;
    }
    std::vector<BigRational> seen;
    int found = 0;
    for (int attempt = 0; found < 3 && attempt < 2000; ++attempt) {
        BigRational m = random_rational(60, 12);
        if (!admissible(m) || std::find(seen.begin(), seen.end(), m) != seen.end()) continue;
        seen.push_back(m);
        ++found;
        run(m);
    }
}

void Cell::cap(unsigned n) const {
    if (n > opts.index_cap)
        throw IndexCapExceeded("index " + std::to_string(n) + " exceeds cap " + std::to_string(opts.index_cap));
}

const std::vector<Residue>& Cell::named_prefix(Named s, int e) {
    auto key = std::make_pair(static_cast<int>(s), e);
    auto it = named_cache_.find(key);
    if (it != named_cache_.end()) return it->second;
    auto v = prefix_mod_named(s, mod(e), static_cast<unsigned>(p));
    if (opts.oracle) {
        for (unsigned n = 0; n < v.size(); ++n)
            if (!(reduce_mod(named_exact(s, n), mod(e)) == v[n]))
                throw OracleMismatch(std::string(named_id(s)) + " prefix disagrees at n=" + std::to_string(n));
    }
    return named_cache_.emplace(key, std::move(v)).first->second;
}

const std::vector<Residue>& Cell::g_prefix(const BigRational& x, int e) {
    auto key = std::make_pair(gv_key('g', x), e);
    auto it = gv_cache_.find(key);
    if (it != gv_cache_.end()) return it->second;
    auto v = prefix_mod_g(x, mod(e), static_cast<unsigned>(p));
    if (opts.oracle) {
        for (unsigned n = 0; n < v.size(); ++n)
            if (!(reduce_mod(g_of_x(x, n), mod(e)) == v[n]))
                throw OracleMismatch("G_n(x) prefix disagrees at n=" + std::to_string(n));
    }
    return gv_cache_.emplace(key, std::move(v)).first->second;
}

const std::vector<Residue>& Cell::v_prefix(const BigRational& x, int e) {
    auto key = std::make_pair(gv_key('v', x), e);
    auto it = gv_cache_.find(key);
    if (it != gv_cache_.end()) return it->second;
    auto v = prefix_mod_v(x, mod(e), static_cast<unsigned>(p));
    if (opts.oracle) {
        for (unsigned n = 0; n < v.size(); ++n)
            if (!(reduce_mod(v_of_x(x, n), mod(e)) == v[n]))
                throw OracleMismatch("V_n(x) prefix disagrees at n=" + std::to_string(n));
    }
    return gv_cache_.emplace(key, std::move(v)).first->second;
}

const BigInt& Cell::named_exact(Named s, unsigned n) {
    cap(n);
    auto key = std::make_pair(static_cast<int>(s), n);
    auto it = exact_cache_.find(key);
    if (it != exact_cache_.end()) return it->second;
    return exact_cache_.emplace(key, named_term(s, n)).first->second;
}

BigRational Cell::g_exact(const BigRational& x, unsigned n) {
    cap(n);
    return g_of_x(x, n);
}

BigRational Cell::v_exact(const BigRational& x, unsigned n) {
    cap(n);
    return v_of_x(x, n);
}

const std::vector<Residue>& Cell::central(int e) {
    auto it = central_cache_.find(e);
    if (it != central_cache_.end()) return it->second;
    PrimePowerModulus M = mod(e);
    std::vector<Residue> c;
    c.reserve(p);
    c.emplace_back(1, M);
    for (std::uint64_t n = 1; n < p; ++n) {
        Residue r = c.back() * Residue(2 * (2 * n - 1), M) * Residue(n, M).inv();
        c.push_back(r);
    }
    return central_cache_.emplace(e, std::move(c)).first->second;
}

void Cell::push(const std::string& params, Status s, const std::string& modulus, const std::string& lhs,
                const std::string& rhs, const std::string& note) {
    ClaimOutcome o;
    o.claim_id = spec_.id;
    o.prime = p;
    o.params = params;
    o.status = s;
    o.modulus = modulus;
    o.lhs = lhs;
    o.rhs = rhs;
    std::string n = note;
    if (!spec_.flag.empty()) n = n.empty() ? spec_.flag : n + "; " + spec_.flag;
    if (s == Status::Fails && spec_.cls == ClaimClass::Conjecture)
        n = n.empty() ? "counterexample-or-bug" : "counterexample-or-bug; " + n;
    o.note = n;
    out_.push_back(std::move(o));
}

void Cell::check(const std::string& params, const Residue& lhs, const Residue& rhs, const std::string& note) {
    if (!(lhs.modulus() == rhs.modulus())) throw ModulusMismatch("check with different moduli");
    push(params, lhs == rhs ? Status::Holds : Status::Fails, lhs.modulus().label(), std::to_string(lhs.value()),
         std::to_string(rhs.value()), note);
}

void Cell::check(const std::string& params, const Residue& lhs, const BigRational& rhs, const std::string& note) {
    check(params, lhs, reduce_mod(rhs, lhs.modulus()), note);
}

void Cell::not_applicable(const std::string& params, const std::string& note) {
    push(params, Status::NotApplicable, "", "", "", note);
}

void Cell::error(const std::string& params, const std::string& msg) { push(params, Status::Error, "", "", "", msg); }

void Cell::guard(const std::string& params, const std::function<void()>& body) {
    try {
        body();
    } catch (const IndexCapExceeded& e) {
        not_applicable(params, e.what());
    } catch (const NotInvertible& e) {
        error(params, std::string("not invertible: ") + e.what());
    } catch (const NotPIntegral& e) {
        error(params, std::string("not p-integral: ") + e.what());
    } catch (const DivisibleBase& e) {
        error(params, std::string("divisible base: ") + e.what());
    } catch (const NormalizationImpossible& e) {
        error(params, std::string("normalization: ") + e.what());
    } catch (const OracleMismatch& e) {
        error(params, std::string("oracle mismatch: ") + e.what());
    }
}

Residue series(const std::vector<Residue>& u, const Residue& z, unsigned count,
               const std::function<Residue(unsigned)>& weight) {
    if (count > u.size()) throw std::out_of_range("series longer than prefix");
    const PrimePowerModulus& M = z.modulus();
    Residue s(0, M), zp(1, M);
    for (unsigned n = 0; n < count; ++n) {
        Residue t = u[n] * zp;
        if (weight) t *= weight(n);
        s += t;
        zp *= z;
    }
    return s;
}

std::vector<ClaimOutcome> evaluate(const ClaimSpec& spec, const PrimeContext& ctx, const RunOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<ClaimOutcome> out;
    if (!spec.applies(ctx.p)) {
        ClaimOutcome o;
        o.claim_id = spec.id;
        o.prime = ctx.p;
        o.status = Status::NotApplicable;
        o.note = "prime excluded";
        out.push_back(std::move(o));
    } else {
        Cell cell(spec, ctx, opts);
        try {
            cell.guard("", [&] { spec.eval(cell); });
        } catch (const std::exception& e) {
            cell.error("", std::string("internal: ") + e.what());
        }
        out = cell.take();
    }
    if (opts.timings) {
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        for (auto& o : out) o.elapsed_ms = ms;
    }
    return out;
}

std::vector<ClaimOutcome> evaluate(const std::string& id, std::uint64_t p, const RunOptions& opts) {
    auto specs = select_claims({id});
    if (p < 3 || !is_prime(p)) throw InvalidModulus("evaluate needs an odd prime");
    PrimeContext ctx(p);
    std::vector<ClaimOutcome> out;
    for (const auto* s : specs) {
        auto o = evaluate(*s, ctx, opts);
        out.insert(out.end(), std::make_move_iterator(o.begin()), std::make_move_iterator(o.end()));
    }
    return out;
}

}  // namespace apery
