#include "apery/claims.hpp"

#include <atomic>
#include <thread>

namespace apery {

Report sweep(const std::vector<std::string>& selectors, std::uint64_t lo, std::uint64_t hi, unsigned workers,
             const RunOptions& opts) {
    Report report;
    auto claims = select_claims(selectors);
    if (lo < 3) lo = 3;
    if (workers == 0) workers = 1;

    std::vector<std::uint64_t> primes;
    for (std::uint64_t q = lo; q <= hi; ++q)
        if (is_prime(q)) primes.push_back(q);

    // the first few applicable primes of each claim get the definitional oracle
    std::vector<std::vector<bool>> oracle(claims.size(), std::vector<bool>(primes.size(), false));
    for (std::size_t c = 0; c < claims.size(); ++c) {
        unsigned seen = 0;
        for (std::size_t i = 0; i < primes.size() && seen < opts.oracle_primes; ++i)
            if (claims[c]->applies(primes[i])) {
                oracle[c][i] = true;
                ++seen;
            }
    }

    std::vector<std::vector<ClaimOutcome>> slots(claims.size() * primes.size());
    for (std::size_t i = 0; i < primes.size() && !claims.empty(); ++i) {
        const PrimeContext ctx(primes[i]);
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (;;) {
                std::size_t c = next.fetch_add(1);
                if (c >= claims.size()) return;
                RunOptions o = opts;
                o.oracle = oracle[c][i];
                slots[c * primes.size() + i] = evaluate(*claims[c], ctx, o);
            }
        };
        unsigned n = std::min<std::size_t>(workers, claims.size());
        if (n <= 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
            for (auto& t : pool) t.join();
        }
    }

    // registry order, then prime, then parameter order within the cell
    for (std::size_t c = 0; c < claims.size(); ++c) {
        bool conj = claims[c]->cls == ClaimClass::Conjecture;
        for (std::size_t i = 0; i < primes.size(); ++i)
            for (auto& o : slots[c * primes.size() + i]) {
                ++report.counts[o.status];
                if (o.status == Status::Fails || o.status == Status::Error) {
                    if (!conj) report.theorem_failure = true;
                    else if (o.status == Status::Fails) report.conjecture_failure = true;
                }
                report.outcomes.push_back(std::move(o));
            }
    }
    return report;
}

}  // namespace apery
