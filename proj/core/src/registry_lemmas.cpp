#include "claim_util.hpp"

namespace apery::detail {

namespace {

using Rows = std::vector<std::vector<Residue>>;

// C(n,k) mod p^e for n < rows
Rows pascal(unsigned rows, const PrimePowerModulus& M) {
    Rows r(rows);
    for (unsigned n = 0; n < rows; ++n) {
        r[n].assign(n + 1, Residue(1, M));
        for (unsigned k = 1; k < n; ++k) r[n][k] = r[n - 1][k - 1] + r[n - 1][k];
    }
    return r;
}

// v_n = sum_k C(n,k) u_k for n < u.size()
std::vector<Residue> transform(const Rows& C, const std::vector<Residue>& u) {
    std::vector<Residue> v;
    for (unsigned n = 0; n < u.size(); ++n) {
        Residue s(0, u[0].modulus());
        for (unsigned k = 0; k <= n; ++k) s += C[n][k] * u[k];
        v.push_back(s);
    }
    return v;
}

std::vector<Residue> as_residues(const std::vector<long>& u, const PrimePowerModulus& M) {
    std::vector<Residue> r;
    for (long v : u) r.push_back(Residue::from_int(v, M));
    return r;
}

// w_n = sum_k C(n,k) C(n+k,k) c_k for n < p
std::vector<Residue> double_transform(const Rows& C, const std::vector<Residue>& c, std::uint64_t p) {
    std::vector<Residue> w;
    for (unsigned n = 0; n < p; ++n) {
        Residue s(0, c[0].modulus());
        for (unsigned k = 0; k <= n; ++k) s += C[n][k] * C[n + k][k] * c[k];
        w.push_back(s);
    }
    return w;
}

BigRational euler_at(const Cell& c, unsigned n, const BigRational& x) { return euler_poly(c.ctx.tables, n, x); }

void add_beta(std::vector<ClaimSpec>& out, const std::string& id, long m, std::function<bool(std::uint64_t)> app,
              std::function<BigRational(std::uint64_t)> rhs, const std::string& text) {
    out.push_back(claim(id, ClaimClass::Equation, text, 2, std::move(app), [m, rhs](Cell& c) {
        c.guard("x=" + to_string(Q(-1, m)), [&] {
            c.check("x=" + to_string(Q(-1, m)), c.R(beta(Q(-1, m), c.p), 2), rhs(c.p));
        });
    }));
}

}  // namespace

void register_lemmas(std::vector<ClaimSpec>& out) {
    const auto Eq = ClaimClass::Equation;
    const auto Lm = ClaimClass::Lemma;

    out.push_back(claim(
        "E2.7", Eq, "sum_{k<p} C(x,k)C(-1-x,k)((-1)^<x> u_k - sum_r C(k,r)(-1)^r u_r) = 0 mod p^2", 2, odd_prime(),
        [](Cell& c) {
            auto M = c.mod(2);
            auto C = pascal(static_cast<unsigned>(c.p), M);
            c.each_x([](const BigRational&) { return true; }, [&](const BigRational& x, const std::string& tag) {
                auto u = as_residues(random_sequence(c, static_cast<unsigned>(c.p)), M);
                int s = sgn(static_cast<long long>(fractional_info(x, c.p).bracket));
                std::vector<Residue> w;
                for (unsigned k = 0; k < c.p; ++k) {
                    Residue t(0, M);
                    for (unsigned r = 0; r <= k; ++r) t += (r % 2 ? -C[k][r] : C[k][r]) * u[r];
                    w.push_back(Residue::from_int(s, M) * u[k] - t);
                }
                c.check(tag, cc_sum(c, x, 2, [&](unsigned k) { return w[k]; }), Residue(0, M));
            });
        }));

    out.push_back(claim("E2.8", Eq, "C(p-1,k)(-1)^k = 1 - p H_k + p^2/2 (H_k^2 - H^(2)_k) mod p^3, 1 <= k < p", 3,
                        odd_prime(), [](Cell& c) {
                            for (unsigned k = 1; k < c.p; ++k) {
                                Residue l = c.R(binq(static_cast<long>(c.p) - 1, k) * sgn(k), 3);
                                BigRational h = c.ctx.H1[k], h2 = c.ctx.H2[k];
                                Residue r = c.R(1 - c.pk(1) * h + c.pk(2) / 2 * (h * h - h2), 3);
                                if (!(l == r) || k + 1 == c.p) {
                                    c.check(k + 1 == c.p && l == r ? "k=1..p-1" : "k=" + std::to_string(k), l, r);
                                    if (!(l == r)) return;
                                }
                            }
                        }));

    out.push_back(claim("E2.9", Eq, "C(mp,np) = C(m,n) mod p^3 for p > 3", 3, above(3), [](Cell& c) {
        const std::pair<long, long> mn[] = {{2, 1}, {3, 1}, {3, 2}, {4, 2}, {5, 2}};
        long p = static_cast<long>(c.p);
        for (auto [m, n] : mn)
            c.check("m=" + std::to_string(m) + " n=" + std::to_string(n), c.R(binq(m * p, n * p), 3), binq(m, n));
    }));

    out.push_back(claim("E2.11", Eq, "H^(2)_<x> = B_{p-2}(-x)/2 mod p", 1, above(3), [](Cell& c) {
        c.each_x([](const BigRational&) { return true; }, [&](const BigRational& x, const std::string& tag) {
            unsigned a = static_cast<unsigned>(fractional_info(x, c.p).bracket);
            c.check(tag, c.R(c.ctx.H2[a], 1), bernoulli_poly(c.ctx.tables, static_cast<unsigned>(c.p) - 2, -x) / 2);
        });
    }));

    out.push_back(claim("E2.12", Eq, "sum_{k=1}^{<x>} (-1)^k/k^2 = (-1)^<x> E_{p-3}(-x)/2 mod p", 1, above(3),
                        [](Cell& c) {
                            c.each_x([](const BigRational&) { return true; },
                                     [&](const BigRational& x, const std::string& tag) {
                                         unsigned a = static_cast<unsigned>(fractional_info(x, c.p).bracket);
                                         BigRational s = 0;
                                         for (unsigned k = 1; k <= a; ++k)
                                             s += make_rational(BigInt(sgn(k)), BigInt(k) * k);
                                         c.check(tag, c.R(s, 1),
                                                 sgn(a) * euler_at(c, static_cast<unsigned>(c.p) - 3, -x) / 2);
                                     });
                        }));

    out.push_back(claim("E2.13", Eq, "sum_{k<p} C(x,k)C(-1-x,k) = (-1)^<x> + p^2 x'(x'+1) E_{p-3}(-x) mod p^3", 3,
                        odd_prime(), [](Cell& c) {
                            c.each_x([](const BigRational&) { return true; },
                                     [&](const BigRational& x, const std::string& tag) {
                                         auto fi = fractional_info(x, c.p);
                                         BigRational rhs = sgn(static_cast<long long>(fi.bracket)) +
                                                           c.pk(2) * fi.xprime * (fi.xprime + 1) *
                                                               euler_at(c, static_cast<unsigned>(c.p) - 3, -x);
                                         c.check(tag, cc_sum(c, x, 3, nullptr), rhs);
                                     });
                        }));

    out.push_back(claim("E2.14-half", Eq, "E_{p-3}(1/2) = E_{p-3}/2^{p-3} = 4 E_{p-3} mod p", 1, above(3),
                        [](Cell& c) {
                            unsigned n = static_cast<unsigned>(c.p) - 3;
                            BigRational v = euler_at(c, n, Q(1, 2));
                            if (v != c.ctx.E(n) / BigRational(pow_z(2, n)))
                                c.error("", "E_{p-3}(1/2) differs from E_{p-3}/2^{p-3}");
                            c.check("", c.R(v, 1), 4 * c.ctx.E(n));
                        }));
    out.push_back(claim("E2.14-sixth", Eq, "E_{p-3}(1/6) = 20 E_{p-3} mod p", 1, above(3), [](Cell& c) {
        unsigned n = static_cast<unsigned>(c.p) - 3;
        c.check("", c.R(euler_at(c, n, Q(1, 6)), 1), 20 * c.ctx.E(n));
    }));
    out.push_back(claim("E2.15-third", Eq, "E_{p-3}(1/3) = 9 U_{p-3} mod p", 1, above(3), [](Cell& c) {
        unsigned n = static_cast<unsigned>(c.p) - 3;
        c.check("", c.R(euler_at(c, n, Q(1, 3)), 1), 9 * c.ctx.U(n));
    }));
    out.push_back(claim("E2.15-quarter", Eq, "E_{p-3}(1/4) = 16 s_{p-3} mod p", 1, above(3), [](Cell& c) {
        unsigned n = static_cast<unsigned>(c.p) - 3;
        c.check("", c.R(euler_at(c, n, Q(1, 4)), 1), 16 * BigRational(c.ctx.tables.s[n]));
    }));

    out.push_back(claim("E2.17", Eq, "sum_{k=1}^{p-1} C(x,k)C(-1-x,k)/k = -2 H_<x> + 2p x' H^(2)_<x> mod p^2", 2,
                        above(3), [](Cell& c) {
                            c.each_x([](const BigRational&) { return true; },
                                     [&](const BigRational& x, const std::string& tag) {
                                         auto M = c.mod(2);
                                         Residue l = cc_sum(c, x, 2, [&](unsigned k) {
                                             return k == 0 ? Residue(0, M) : Residue(k, M).inv();
                                         });
                                         c.check(tag, l, -2 * beta(x, c.p));
                                     });
                        }));

    out.push_back(claim("E2.18", Eq, "sum C(x,k)C(-1-x,k)/k^2 = -(sum C(x,k)C(-1-x,k)/k)^2 / 2 mod p", 1,
                        odd_prime(), [](Cell& c) {
                            c.each_x([](const BigRational&) { return true; },
                                     [&](const BigRational& x, const std::string& tag) {
                                         auto M = c.mod(1);
                                         Residue s1 = cc_sum(c, x, 1, [&](unsigned k) {
                                             return k == 0 ? Residue(0, M) : Residue(k, M).inv();
                                         });
                                         Residue s2 = cc_sum(c, x, 1, [&](unsigned k) {
                                             return k == 0 ? Residue(0, M) : Residue(k, M).pow(-2LL);
                                         });
                                         c.check(tag, s2, -(s1 * s1) * Residue(2, M).inv());
                                     });
                        }));

    add_beta(out, "E2.19", 2, above(3), [](std::uint64_t p) -> BigRational {
        BigRational q = qp(2, p);
        return -2 * q + BigRational(BigInt(p)) * q * q;
    }, "beta_p(-1/2) = -2 q_p(2) + p q_p(2)^2 mod p^2");
    add_beta(out, "E2.20", 3, above(3), [](std::uint64_t p) -> BigRational {
        BigRational q = qp(3, p);
        return Q(-3, 2) * q + Q(3, 4) * BigRational(BigInt(p)) * q * q;
    }, "beta_p(-1/3) = -3/2 q_p(3) + 3/4 p q_p(3)^2 mod p^2");
    add_beta(out, "E2.21", 4, above(3), [](std::uint64_t p) -> BigRational {
        BigRational q = qp(2, p);
        return -3 * q + Q(3, 2) * BigRational(BigInt(p)) * q * q;
    }, "beta_p(-1/4) = -3 q_p(2) + 3/2 p q_p(2)^2 mod p^2");
    add_beta(out, "E2.22", 6, above(3), [](std::uint64_t p) -> BigRational {
        BigRational q2 = qp(2, p), q3 = qp(3, p);
        return -2 * q2 - Q(3, 2) * q3 + BigRational(BigInt(p)) * (q2 * q2 + Q(3, 4) * q3 * q3);
    }, "beta_p(-1/6) = -2 q_p(2) - 3/2 q_p(3) + p (q_p(2)^2 + 3/4 q_p(3)^2) mod p^2");

    auto not_0_m1 = [](std::uint64_t p) {
        return [p](const BigRational& x) {
            PrimePowerModulus M(p, 1);
            return !reduce_mod(x, M).is_zero() && !reduce_mod(x + 1, M).is_zero();
        };
    };
    out.push_back(claim(
        "E3.2", Eq, "sum_{k<p} C(x,k)C(-1-x,k) p/(k+1) = p^2 x'(x'+1)/(x(x+1)) mod p^3, x != 0,-1 mod p", 3,
        odd_prime(), [not_0_m1](Cell& c) {
            c.each_x(not_0_m1(c.p), [&](const BigRational& x, const std::string& tag) {
                auto M = c.mod(3);
                Residue pr(c.p, M);
                Residue l = cc_sum(c, x, 3, [&](unsigned k) {
                    return k + 1 == c.p ? Residue(1, M) : pr * Residue(k + 1, M).inv();
                });
                auto fi = fractional_info(x, c.p);
                c.check(tag, l, c.pk(2) * fi.xprime * (fi.xprime + 1) / (x * (x + 1)));
            });
        }));
    out.push_back(claim("E3.2-binom", Eq, "C(x-1,p-1)C(-x-1,p-1) = p^2 x'(x'+1)/x^2 mod p^3, x != 0,-1 mod p", 3,
                        odd_prime(), [not_0_m1](Cell& c) {
                            c.each_x(not_0_m1(c.p), [&](const BigRational& x, const std::string& tag) {
                                long n = static_cast<long>(c.p) - 1;
                                auto fi = fractional_info(x, c.p);
                                c.check(tag, c.R(rat_binomial(x - 1, n) * rat_binomial(-x - 1, n), 3),
                                        c.pk(2) * fi.xprime * (fi.xprime + 1) / (x * x));
                            });
                        }));

    auto e34_ok = [](std::uint64_t p) {
        return [p](const BigRational& x) {
            PrimePowerModulus M(p, 1);
            return !reduce_mod((x - 1) * x * (x + 1) * (x + 2), M).is_zero();
        };
    };
    out.push_back(claim(
        "E3.4", Eq, "sum_{k<p} C(x,k)C(-1-x,k)/(k+2) = -p x'(x'+1)/((x-1)x(x+1)(x+2)) mod p^2", 2, odd_prime(),
        [e34_ok](Cell& c) {
            c.each_x(e34_ok(c.p), [&](const BigRational& x, const std::string& tag) {
                auto M = c.mod(2);
                long k0 = static_cast<long>(c.p) - 2;
                Residue l = cc_sum(c, x, 2, [&](unsigned k) {
                    return static_cast<long>(k) == k0 ? Residue(0, M) : Residue(k + 2, M).inv();
                });
                // the k = p-2 term divides by p; take it exactly
                l += c.R(rat_binomial(x, k0) * rat_binomial(-1 - x, k0) / c.pk(1), 2);
                auto fi = fractional_info(x, c.p);
                BigRational w = fi.xprime * (fi.xprime + 1);
                c.check(tag, l, -c.pk(1) * w / ((x - 1) * x * (x + 1) * (x + 2)));
                long a = static_cast<long>(fi.bracket), p = static_cast<long>(c.p);
                c.check(tag + " form=bracket", l, -c.pk(1) * w / (4 * binq(a, 2) * binq(p - 1 - a, 2)));
            });
        }));

    // Lemmas, five seeded trials per prime
    out.push_back(claim("L2.1-a", Lm, "v_n = sum C(n,k) u_k: sum_{k<p} v_k/m^k = sum_{k<p} u_k/(m-1)^k mod p", 1,
                        odd_prime(), [](Cell& c) {
                            auto M = c.mod(1);
                            auto C = pascal(static_cast<unsigned>(c.p), M);
                            for (int t = 0; t < 5; ++t) {
                                BigRational m;
                                do m = c.random_rational(60, 12);
                                while (c.R(m * (m - 1), 1).is_zero());
                                std::string tag = "trial=" + std::to_string(t) + " m=" + to_string(m);
                                c.guard(tag, [&] {
                                    auto u = as_residues(random_sequence(c, static_cast<unsigned>(c.p)), M);
                                    auto v = transform(C, u);
                                    unsigned n = static_cast<unsigned>(c.p);
                                    c.check(tag, series(v, c.R(1 / m, 1), n), series(u, c.R(1 / (m - 1), 1), n));
                                });
                            }
                        }));
    out.push_back(claim(
        "L2.1-b", Lm,
        "sum_{k<p} v_k = sum_{k<p} (-1)^k p/(k+1) u_k - p^2 sum_{k<=p-2} (-1)^k H_k/(k+1) u_k mod p^3", 3,
        odd_prime(), [](Cell& c) {
            auto M = c.mod(3);
            auto C = pascal(static_cast<unsigned>(c.p), M);
            for (int t = 0; t < 5; ++t) {
                std::string tag = "trial=" + std::to_string(t);
                c.guard(tag, [&] {
                    auto u = as_residues(random_sequence(c, static_cast<unsigned>(c.p)), M);
                    auto v = transform(C, u);
                    Residue l(0, M), r(0, M), pr(c.p, M);
                    for (unsigned k = 0; k < c.p; ++k) {
                        l += v[k];
                        Residue sg = Residue::from_int(sgn(k), M);
                        r += sg * (k + 1 == c.p ? Residue(1, M) : pr * Residue(k + 1, M).inv()) * u[k];
                        if (k + 2 <= c.p)
                            r -= pr * pr * sg * c.R(c.ctx.H1[k], 3) * Residue(k + 1, M).inv() * u[k];
                    }
                    c.check(tag, l, r);
                });
            }
        }));
    out.push_back(claim("L2.2-a", Lm,
                        "sum_{k<=(p-1)/2} C(2k,k) v_k/(m+2)^k = ((m+2)(m-2)/p) sum C(2k,k) u_k/(m-2)^k mod p", 1,
                        odd_prime(), [](Cell& c) {
                            auto M = c.mod(1);
                            unsigned h = static_cast<unsigned>(c.p - 1) / 2;
                            auto C = pascal(h + 1, M);
                            const auto& cb = c.central(1);
                            auto w = [&](unsigned k) { return cb[k]; };
                            for (int t = 0; t < 5; ++t) {
                                BigRational m;
                                do m = c.random_rational(60, 12);
                                while (c.R((m + 2) * (m - 2), 1).is_zero());
                                std::string tag = "trial=" + std::to_string(t) + " m=" + to_string(m);
                                c.guard(tag, [&] {
                                    auto u = as_residues(random_sequence(c, h + 1), M);
                                    auto v = transform(C, u);
                                    Residue l = series(v, c.R(1 / (m + 2), 1), h + 1, w);
                                    Residue r = series(u, c.R(1 / (m - 2), 1), h + 1, w) *
                                                c.R(legendre((m + 2) * (m - 2), c.p), 1);
                                    c.check(tag, l, r);
                                });
                            }
                        }));
    out.push_back(claim("L2.2-b", Lm,
                        "sum_{k<=(p-1)/2} C(2k,k) v_k/4^k = (-1)^{(p-1)/2}(2^{p-1} u_{(p-1)/2} + p sum_{s<(p-1)/2} "
                        "C(2s,s) u_s/((-4)^s (2s+1))) mod p^2",
                        2, odd_prime(),
                        [](Cell& c) {
                            auto M = c.mod(2);
                            unsigned h = static_cast<unsigned>(c.p - 1) / 2;
                            auto C = pascal(h + 1, M);
                            const auto& cb = c.central(2);
                            for (int t = 0; t < 5; ++t) {
                                std::string tag = "trial=" + std::to_string(t);
                                c.guard(tag, [&] {
                                    auto u = as_residues(random_sequence(c, h + 1), M);
                                    auto v = transform(C, u);
                                    Residue l = series(v, c.R(Q(1, 4), 2), h + 1, [&](unsigned k) { return cb[k]; });
                                    Residue tail = series(u, c.R(Q(-1, 4), 2), h, [&](unsigned s) {
                                        return cb[s] * Residue(2 * s + 1, M).inv();
                                    });
                                    Residue r = (Residue(2, M).pow(static_cast<long long>(c.p - 1)) * u[h] +
                                                 Residue(c.p, M) * tail) *
                                                Residue::from_int(sgn(h), M);
                                    c.check(tag, l, r);
                                });
                            }
                        },
                        "tail coefficient p (p/2 as printed does not hold)"));
    out.push_back(claim(
        "L2.3", Lm, "sum_{k<p} C(2k,k) (u/(1-u)^2)^k c_k = sum_{n<p} u^n sum_k C(n,k)C(n+k,k) c_k mod p, u != 1", 1,
        odd_prime(), [](Cell& c) {
            auto M = c.mod(1);
            auto C = pascal(2 * static_cast<unsigned>(c.p), M);
            const auto& cb = c.central(1);
            for (int t = 0; t < 5; ++t) {
                BigRational u;
                do u = c.random_rational(60, 12);
                while (c.R(u - 1, 1).is_zero());
                std::string tag = "trial=" + std::to_string(t) + " u=" + to_string(u);
                c.guard(tag, [&] {
                    auto cs = as_residues(random_sequence(c, static_cast<unsigned>(c.p)), M);
                    unsigned n = static_cast<unsigned>(c.p);
                    Residue l = series(cs, c.R(u / ((1 - u) * (1 - u)), 1), n, [&](unsigned k) { return cb[k]; });
                    Residue r = series(double_transform(C, cs, c.p), c.R(u, 1), n);
                    c.check(tag, l, r);
                });
            }
        }));
    out.push_back(claim("L2.4", Lm,
                        "sum_{n<p} sum_k C(n,k)C(n+k,k) c_k = sum_{k<p} p/(2k+1) (-1)^k c_k mod p^3 for p > 3", 3,
                        above(3), [](Cell& c) {
                            auto M = c.mod(3);
                            auto C = pascal(2 * static_cast<unsigned>(c.p), M);
                            for (int t = 0; t < 5; ++t) {
                                std::string tag = "trial=" + std::to_string(t);
                                c.guard(tag, [&] {
                                    auto cs = as_residues(random_sequence(c, static_cast<unsigned>(c.p)), M);
                                    auto w = double_transform(C, cs, c.p);
                                    Residue l(0, M), r(0, M);
                                    for (unsigned k = 0; k < c.p; ++k) {
                                        l += w[k];
                                        Residue f = 2 * k + 1 == c.p ? Residue(1, M)
                                                                      : Residue(c.p, M) * Residue(2 * k + 1, M).inv();
                                        r += f * Residue::from_int(sgn(k), M) * cs[k];
                                    }
                                    c.check(tag, l, r);
                                });
                            }
                        }));
}

}  // namespace apery::detail
