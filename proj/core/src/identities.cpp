#include "apery/identities.hpp"

#include "apery/sequences.hpp"
#include "apery/special.hpp"

#include <functional>
#include <map>
#include <random>

namespace apery {

namespace {

using Q = BigRational;

Q binom(long n, long k) { return Q(int_binomial(n, k)); }
Q cc(long n, long k) { return binom(n, k) * binom(n + k, k); }
int sgn(long k) { return k % 2 == 0 ? 1 : -1; }

Q alt_inv_sq(long n) {
    Q s = 0;
    for (long k = 1; k <= n; ++k) s += Q(sgn(k)) / (k * k);
    return s;
}

Q pow_q(const Q& b, long k) {
    Q r = 1;
    for (long i = 0; i < k; ++i) r *= b;
    return r;
}

class Checker {
public:
    explicit Checker(IdentityCase& c) : c_(c) {}
    void eq(const Q& l, const Q& r, const std::string& where) {
        ++c_.instances;
        if (c_.pass && l != r) {
            c_.pass = false;
            c_.counterexample = where + ": lhs=" + to_string(l) + " rhs=" + to_string(r);
        }
    }
    void holds(bool ok, const std::string& where) {
        ++c_.instances;
        if (c_.pass && !ok) {
            c_.pass = false;
            c_.counterexample = where;
        }
    }

private:
    IdentityCase& c_;
};

struct Ctx {
    unsigned n_max;
    const std::vector<Q>& xs;
    std::uint64_t seed;
};

using Body = std::function<void(Checker&, const Ctx&)>;

struct Entry {
    std::string statement;
    bool conjecture;
    Body body;
};

std::string at(long n) { return "n=" + std::to_string(n); }
std::string at(long n, const Q& x) { return "n=" + std::to_string(n) + " x=" + to_string(x); }

// n-th harmonic numbers H_0..H_N
std::vector<Q> harmonics(unsigned N, unsigned r) {
    std::vector<Q> h(N + 1, Q(0));
    for (unsigned k = 1; k <= N; ++k) h[k] = h[k - 1] + Q(1) / pow_q(Q(k), r);
    return h;
}

// integer parameter instances P >= lo for the polynomial identities
std::vector<long> instances(long lo, bool odd_only) {
    std::vector<long> r;
    for (long P = lo; r.size() < 20; ++P)
        if (!odd_only || P % 2) r.push_back(P);
    return r;
}

// A real x in (lo, hi), drawn deterministically
std::vector<Q> region(std::mt19937_64& g, long lo, long hi, unsigned count) {
    std::vector<Q> r;
    while (r.size() < count) {
        long den = 2 + static_cast<long>(g() % 23);
        long span = (hi - lo) * den;
        long num = lo * den + 1 + static_cast<long>(g() % static_cast<std::uint64_t>(span - 1));
        Q x = make_rational(num, den);
        if (x > lo && x < hi) r.push_back(x);
    }
    return r;
}

void log_behavior(Checker& ck, const Ctx& c, const std::function<Q(const Q&, unsigned)>& term) {
    std::mt19937_64 g(c.seed ^ 0x9e3779b97f4a7c15ULL);
    auto inside = region(g, -1, 0, 8);
    auto left = region(g, -6, -1, 4);
    auto right = region(g, 0, 5, 4);
    auto run = [&](const Q& x, bool concave) {
        std::vector<Q> u;
        for (unsigned n = 0; n <= c.n_max + 1; ++n) u.push_back(term(x, n));
        for (unsigned n = 1; n <= c.n_max; ++n) {
            Q l = u[n] * u[n], r = u[n + 1] * u[n - 1];
            ck.holds(concave ? l < r : l > r, at(n, x) + (concave ? " expected u_n^2 < u_{n+1}u_{n-1}"
                                                                 : " expected u_n^2 > u_{n+1}u_{n-1}"));
        }
    };
    for (const auto& x : inside) run(x, true);
    for (const auto& x : left) run(x, false);
    for (const auto& x : right) run(x, false);
}

const std::map<std::string, Entry>& catalog() {
    static const std::map<std::string, Entry> cat = [] {
        std::map<std::string, Entry> m;
        m["I2.1"] = {"sum_{k<=m} C(x,k)(-1)^k = sum_{k<=m} C(-x-1+k,k) = C(m-x,m)", false,
                     [](Checker& ck, const Ctx& c) {
                         for (const auto& x : c.xs)
                             for (long n = 0; n <= static_cast<long>(c.n_max); ++n) {
                                 Q a = 0, b = 0;
                                 for (long k = 0; k <= n; ++k) {
                                     a += rat_binomial(x, k) * sgn(k);
                                     b += rat_binomial(-x - 1 + k, k);
                                 }
                                 Q r = rat_binomial(n - x, n);
                                 ck.eq(a, r, at(n, x));
                                 ck.eq(b, r, at(n, x) + " middle");
                             }
                     }};
        m["I2.2"] = {"sum_{n=k}^m C(n,k) = C(m+1,k+1)", false, [](Checker& ck, const Ctx& c) {
                         for (long mm = 0; mm <= static_cast<long>(c.n_max); ++mm)
                             for (long k = 0; k <= mm; ++k) {
                                 Q s = 0;
                                 for (long n = k; n <= mm; ++n) s += binom(n, k);
                                 ck.eq(s, binom(mm + 1, k + 1), "m=" + std::to_string(mm) + " k=" + std::to_string(k));
                             }
                     }};
        m["I2.3"] = {"sum_{n=k}^{P-1} n C(n,k) = ((P^2+P)/(k+2) - P/(k+1)) C(P-1,k), integer P > k", false,
                     [](Checker& ck, const Ctx& c) {
                         for (long k = 0; k <= static_cast<long>(c.n_max); ++k)
                             for (long P : instances(k + 1, false)) {
                                 Q s = 0;
                                 for (long n = k; n < P; ++n) s += n * binom(n, k);
                                 Q r = (Q(P * P + P) / (k + 2) - Q(P) / (k + 1)) * binom(P - 1, k);
                                 ck.eq(s, r, "k=" + std::to_string(k) + " P=" + std::to_string(P));
                             }
                     }};
        m["I2.4"] = {"sum_{n=k}^{P-1} (2n+1) C(n+k,2k) = P(P-k)/(k+1) C(P+k,2k), integer P > k", false,
                     [](Checker& ck, const Ctx& c) {
                         for (long k = 0; k <= static_cast<long>(c.n_max); ++k)
                             for (long P : instances(k + 1, false)) {
                                 Q s = 0;
                                 for (long n = k; n < P; ++n) s += (2 * n + 1) * binom(n + k, 2 * k);
                                 ck.eq(s, Q(P * (P - k)) / (k + 1) * binom(P + k, 2 * k),
                                       "k=" + std::to_string(k) + " P=" + std::to_string(P));
                             }
                     }};
        m["I2.5"] = {"sum_{n=k}^{P-1} (2n+1)(-1)^n C(n+k,2k) = (P-k) C(P+k,2k), odd integer P > k", false,
                     [](Checker& ck, const Ctx& c) {
                         for (long k = 0; k <= static_cast<long>(c.n_max); ++k)
                             for (long P : instances(k + 1, true)) {
                                 Q s = 0;
                                 for (long n = k; n < P; ++n) s += (2 * n + 1) * sgn(n) * binom(n + k, 2 * k);
                                 ck.eq(s, (P - k) * binom(P + k, 2 * k),
                                       "k=" + std::to_string(k) + " P=" + std::to_string(P));
                             }
                     }};
        m["I2.6"] = {"sum_{k<=n} C(n,k)C(n+k,k)(u_k - (-1)^{n-k} sum_{r<=k} C(k,r) u_r) = 0", false,
                     [](Checker& ck, const Ctx& c) {
                         std::mt19937_64 g(c.seed);
                         for (int trial = 0; trial < 5; ++trial) {
                             std::vector<Q> u(c.n_max + 1);
                             for (auto& v : u) v = Q(static_cast<long>(g() % 201) - 100);
                             for (long n = 0; n <= static_cast<long>(c.n_max); ++n) {
                                 Q s = 0;
                                 for (long k = 0; k <= n; ++k) {
                                     Q t = 0;
                                     for (long r = 0; r <= k; ++r) t += binom(k, r) * u[r];
                                     s += cc(n, k) * (u[k] - sgn(n - k) * t);
                                 }
                                 ck.eq(s, 0, at(n) + " trial=" + std::to_string(trial));
                             }
                         }
                     }};
        m["I3.3"] = {"sum_{k<=n} C(n,k)C(n+k,k)(-1)^k H_k/(k+1) = ((-1)^n - 1)/(n(n+1)), n >= 1", false,
                     [](Checker& ck, const Ctx& c) {
                         auto H = harmonics(c.n_max, 1);
                         for (long n = 1; n <= static_cast<long>(c.n_max); ++n) {
                             Q s = 0;
                             for (long k = 0; k <= n; ++k) s += cc(n, k) * sgn(k) * H[k] / (k + 1);
                             ck.eq(s, Q(sgn(n) - 1) / (n * (n + 1)), at(n));
                         }
                     }};
        m["I3.5"] = {"sum_{k=1}^n C(n,k)C(n+k,k)(-1)^k H_k/(k+2) = 1/((n-1)(n+2)) (n even), -1/(n(n+1)) (n odd), "
                     "n >= 2",
                     false, [](Checker& ck, const Ctx& c) {
                         auto H = harmonics(c.n_max, 1);
                         for (long n = 2; n <= static_cast<long>(c.n_max); ++n) {
                             Q s = 0;
                             for (long k = 1; k <= n; ++k) s += cc(n, k) * sgn(k) * H[k] / (k + 2);
                             ck.eq(s, n % 2 ? Q(-1) / (n * (n + 1)) : Q(1) / ((n - 1) * (n + 2)), at(n));
                         }
                     }};
        m["I3.6"] = {"sum_{k=1}^n C(n,k)C(n+k,k)(-1)^k H^(2)_k = -2(-1)^n sum_{k=1}^n (-1)^k/k^2", false,
                     [](Checker& ck, const Ctx& c) {
                         auto H2 = harmonics(c.n_max, 2);
                         for (long n = 0; n <= static_cast<long>(c.n_max); ++n) {
                             Q s = 0;
                             for (long k = 1; k <= n; ++k) s += cc(n, k) * sgn(k) * H2[k];
                             ck.eq(s, -2 * sgn(n) * alt_inv_sq(n), at(n));
                         }
                     }};
        m["I3.7"] = {"sum_{k=1}^n C(n,k)C(n+k,k)(-1)^k H_k^2 = 4(-1)^n H_n^2 + 2(-1)^n sum_{k=1}^n (-1)^k/k^2",
                     false, [](Checker& ck, const Ctx& c) {
                         auto H = harmonics(c.n_max, 1);
                         for (long n = 0; n <= static_cast<long>(c.n_max); ++n) {
                             Q s = 0;
                             for (long k = 1; k <= n; ++k) s += cc(n, k) * sgn(k) * H[k] * H[k];
                             ck.eq(s, 4 * sgn(n) * H[n] * H[n] + 2 * sgn(n) * alt_inv_sq(n), at(n));
                         }
                     }};
        m["I3.8"] = {"sum_{k=1}^n C(n,k)C(n+k,k)(-1)^k H_k/k = 2 sum_{k=1}^n (-1)^k/k^2", false,
                     [](Checker& ck, const Ctx& c) {
                         auto H = harmonics(c.n_max, 1);
                         for (long n = 0; n <= static_cast<long>(c.n_max); ++n) {
                             Q s = 0;
                             for (long k = 1; k <= n; ++k) s += cc(n, k) * sgn(k) * H[k] / k;
                             ck.eq(s, 2 * alt_inv_sq(n), at(n));
                         }
                     }};
        m["I3.9"] = {"sum_{k<=n} C(2k,k)/(-4)^k C(n,k)C(n+k,k)(H_{2k} - (2-(-1)^n)/2 H_k) = 0", false,
                     [](Checker& ck, const Ctx& c) {
                         auto H = harmonics(2 * c.n_max, 1);
                         for (long n = 0; n <= static_cast<long>(c.n_max); ++n) {
                             Q s = 0, w = Q(2 - sgn(n)) / 2;
                             for (long k = 0; k <= n; ++k)
                                 s += binom(2 * k, k) / pow_q(Q(-4), k) * cc(n, k) * (H[2 * k] - w * H[k]);
                             ck.eq(s, 0, at(n));
                         }
                     }};
        m["I3.10"] = {"sum_{k<=n} C(n,k)C(n+k,k)C(2k,k)/(-4)^k = C(n,n/2)^2/4^n (n even), 0 (n odd)", false,
                      [](Checker& ck, const Ctx& c) {
                          for (long n = 0; n <= static_cast<long>(c.n_max); ++n) {
                              Q s = 0;
                              for (long k = 0; k <= n; ++k) s += cc(n, k) * binom(2 * k, k) / pow_q(Q(-4), k);
                              Q r = n % 2 ? Q(0) : binom(n, n / 2) * binom(n, n / 2) / pow_q(Q(4), n);
                              ck.eq(s, r, at(n));
                          }
                      }};
        m["I4.2"] = {"sum_{k<=n} C(n,k)C(n+k,k)(-1)^k H^(2)_k/(2k+1) = -2 H^(2)_n/(2n+1)", false,
                     [](Checker& ck, const Ctx& c) {
                         auto H2 = harmonics(c.n_max, 2);
                         for (long n = 0; n <= static_cast<long>(c.n_max); ++n) {
                             Q s = 0;
                             for (long k = 0; k <= n; ++k) s += cc(n, k) * sgn(k) * H2[k] / (2 * k + 1);
                             ck.eq(s, -2 * H2[n] / (2 * n + 1), at(n));
                         }
                     }};
        m["I4.3"] = {"sum_{k<=n} C(n,k)C(n+k,k)(-1)^k H^(2)_k/(k+1) = -2H_n/(n(n+1)), n >= 1", false,
                     [](Checker& ck, const Ctx& c) {
                         auto H = harmonics(c.n_max, 1), H2 = harmonics(c.n_max, 2);
                         for (long n = 1; n <= static_cast<long>(c.n_max); ++n) {
                             Q s = 0;
                             for (long k = 0; k <= n; ++k) s += cc(n, k) * sgn(k) * H2[k] / (k + 1);
                             ck.eq(s, -2 * H[n] / (n * (n + 1)), at(n));
                         }
                     }};
        m["I4.4"] = {"sum_{k=1}^n C(n,k)C(n+k,k)(-1)^k H^(2)_k = 2(-1)^{n+1} sum_{k=1}^n (-1)^k/k^2 "
                     "(summation index read as k)",
                     false, [](Checker& ck, const Ctx& c) {
                         auto H2 = harmonics(c.n_max, 2);
                         for (long n = 0; n <= static_cast<long>(c.n_max); ++n) {
                             Q s = 0;
                             for (long k = 1; k <= n; ++k) s += cc(n, k) * sgn(k) * H2[k];
                             ck.eq(s, 2 * sgn(n + 1) * alt_inv_sq(n), at(n));
                         }
                     }};
        m["IT3.1"] = {"G_n(x) = sum_k C(x,k)^2 (-1)^{n-k} C(-1-x,n-k)", false, [](Checker& ck, const Ctx& c) {
                          for (const auto& x : c.xs)
                              for (unsigned n = 0; n <= c.n_max; ++n) ck.eq(g_of_x(x, n), g_of_x_alt(x, n), at(n, x));
                      }};
        m["IT4.1"] = {"V_n(x) = sum_k C(x,k)^2 C(-1-x,n-k)^2 = sum_k C(n,k)C(n+k,k)(-1)^{n-k} G_k(x)", false,
                      [](Checker& ck, const Ctx& c) {
                          for (const auto& x : c.xs)
                              for (unsigned n = 0; n <= c.n_max; ++n) {
                                  Q v = v_of_x(x, n);
                                  ck.eq(v, v_of_x_alt1(x, n), at(n, x) + " squares");
                                  ck.eq(v, v_of_x_alt2(x, n), at(n, x) + " G-transform");
                              }
                      }};
        m["IINV"] = {"v_n = sum_k C(n,k) u_k iff u_n = sum_k C(n,k)(-1)^{n-k} v_k", false,
                     [](Checker& ck, const Ctx& c) {
                         std::mt19937_64 g(c.seed + 1);
                         for (int trial = 0; trial < 5; ++trial) {
                             std::vector<Q> u(c.n_max + 1);
                             for (auto& v : u) v = make_rational(static_cast<long>(g() % 201) - 100, 1 + g() % 12);
                             std::vector<Q> v(u.size());
                             for (std::size_t n = 0; n < u.size(); ++n)
                                 for (std::size_t k = 0; k <= n; ++k) v[n] += binom(n, k) * u[k];
                             for (std::size_t n = 0; n < u.size(); ++n) {
                                 Q back = 0;
                                 for (std::size_t k = 0; k <= n; ++k) back += binom(n, k) * sgn(n - k) * v[k];
                                 ck.eq(back, u[n], at(n) + " trial=" + std::to_string(trial));
                             }
                             auto tw = binomial_transform(binomial_transform(u));
                             for (std::size_t n = 0; n < u.size(); ++n)
                                 ck.eq(tw[n], u[n], at(n) + " involution trial=" + std::to_string(trial));
                         }
                     }};
        m["I5.1"] = {"f_n = sum C(n,k)(-1)^{n-k} a_k = sum C(n,k) 8^{n-k} Q_k; Q_n = sum C(n,k)(-9)^{n-k} a_k; "
                     "a_n = sum C(n,k) f_k = sum C(n,k) 9^{n-k} Q_k",
                     false, [](Checker& ck, const Ctx& c) {
                         std::vector<Q> f, a, q;
                         for (unsigned n = 0; n <= c.n_max; ++n) {
                             f.push_back(Q(named_term(Named::f, n)));
                             a.push_back(Q(named_term(Named::a, n)));
                             q.push_back(Q(named_term(Named::Q, n)));
                         }
                         auto tr = [&](const std::vector<Q>& u, long base, bool alt, long n) {
                             Q s = 0;
                             for (long k = 0; k <= n; ++k)
                                 s += binom(n, k) * pow_q(Q(base), n - k) * (alt ? sgn(n - k) : 1) * u[k];
                             return s;
                         };
                         for (long n = 0; n <= static_cast<long>(c.n_max); ++n) {
                             ck.eq(f[n], tr(a, 1, true, n), at(n) + " f from a");
                             ck.eq(f[n], tr(q, 8, false, n), at(n) + " f from Q");
                             ck.eq(q[n], tr(a, -9, false, n), at(n) + " Q from a");
                             ck.eq(a[n], tr(f, 1, false, n), at(n) + " a from f");
                             ck.eq(a[n], tr(q, 9, false, n), at(n) + " a from Q");
                         }
                     }};
        m["IREC"] = {"recurrence parameters (a,b,c) reproduce every named sequence", false,
                     [](Checker& ck, const Ctx& c) {
                         for (Named s : kAllNamed) {
                             auto rec = apery_terms(named_params(s), c.n_max + 1);
                             for (unsigned n = 0; n <= c.n_max; ++n)
                                 ck.eq(Q(named_term(s, n)), rec[n], std::string(named_id(s)) + " " + at(n));
                         }
                     }};
        m["ILC3.11"] = {"G_n(x)^2 < G_{n+1}(x)G_{n-1}(x) for -1 < x < 0; > for x outside [-1,0]", true,
                        [](Checker& ck, const Ctx& c) { log_behavior(ck, c, g_of_x); }};
        m["ILC4.12"] = {"V_n(x)^2 < V_{n+1}(x)V_{n-1}(x) for -1 < x < 0; > for x outside [-1,0]", true,
                        [](Checker& ck, const Ctx& c) { log_behavior(ck, c, v_of_x); }};
        return m;
    }();
    return cat;
}

const std::vector<std::string> kOrder = {"I2.1", "I2.2",  "I2.3",  "I2.4", "I2.5", "I2.6", "I3.3",  "I3.5",
                                         "I3.6", "I3.7",  "I3.8",  "I3.9", "I3.10", "I4.2", "I4.3",  "I4.4",
                                         "IT3.1", "IT4.1", "IINV", "I5.1", "IREC", "ILC3.11", "ILC4.12"};

const Entry& entry(const std::string& id) {
    auto it = catalog().find(id);
    if (it == catalog().end()) throw UnknownIdentity("unknown identity id: " + id);
    return it->second;
}

}  // namespace

std::vector<std::string> identity_ids() { return kOrder; }

std::string identity_statement(const std::string& id) { return entry(id).statement; }

std::vector<BigRational> identity_x_samples(std::uint64_t seed, unsigned count) {
    std::mt19937_64 g(seed);
    std::vector<BigRational> xs;
    while (xs.size() < count) {
        long num = static_cast<long>(g() % 121) - 60;
        long den = 1 + static_cast<long>(g() % 24);
        BigRational x = make_rational(num, den);
        bool dup = false;
        for (const auto& y : xs) dup = dup || y == x;
        if (!dup) xs.push_back(x);
    }
    return xs;
}

IdentityCase check_identity(const std::string& id, unsigned n_max, const std::vector<BigRational>& x_samples,
                            std::uint64_t seed) {
    const Entry& e = entry(id);
    IdentityCase c;
    c.id = id;
    c.statement = e.statement;
    c.conjecture = e.conjecture;
    Checker ck(c);
    e.body(ck, Ctx{n_max, x_samples, seed});
    return c;
}

std::vector<IdentityCase> check_all_identities(unsigned n_max, std::uint64_t seed) {
    auto xs = identity_x_samples(seed);
    std::vector<IdentityCase> out;
    for (const auto& id : kOrder) out.push_back(check_identity(id, n_max, xs, seed));
    return out;
}

}  // namespace apery
