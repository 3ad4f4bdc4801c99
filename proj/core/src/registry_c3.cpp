#include "claim_util.hpp"

namespace apery::detail {

namespace {

BigRational rhs7(Cell& c) {
    long p = lp(c.p), q = p / 7;
    switch (p % 7) {
    case 3: return Q(-5 * p) * inv_binq(3 * q, q);
    case 5: return Q(15 * p, 4) * inv_binq(3 * q, q);
    case 6: return Q(-25 * p, 22) * inv_binq(3 * q, q);
    default: return two_x_form(need_x(c, 7, 1, SignRule::Legendre7IsOne), c.p);
    }
}

BigRational rhs4(Cell& c) {
    long p = lp(c.p);
    if (p % 4 == 1) return two_x_form(need_x(c, 4, 1, SignRule::Mod4IsOne), c.p);
    return Q(5 * p, 2) * inv_binq((p - 3) / 2, (p - 3) / 4);
}

Rhs rhs3(long num, long den) {
    return [=](Cell& c) -> BigRational {
        long p = lp(c.p);
        if (p % 3 == 1) return two_x_form(need_x(c, 3, 1, SignRule::Mod3IsOne), c.p);
        return Q(num * p, den) * inv_binq((p - 1) / 2, (p - 5) / 6);
    };
}

}  // namespace

void register_conjectures3(std::vector<ClaimSpec>& out) {
    simple(out, "C3.1-a",
           "sum G3_n/(-27)^n = 2x - p/(2x) (p = x^2+3y^2, 3 | x-1), -3/2 p C((p-1)/2,(p-5)/6)^{-1} (p = 2 mod 3) "
           "mod p^2",
           2, above(3), [](Cell& c) { return sum_over(c, Named::G3, Q(-27), 2); },
           [](Cell& c) -> BigRational {
               long p = lp(c.p);
               if (p % 3 == 1) return two_x_form(need_x(c, 3, 1, SignRule::Mod3IsOne), c.p);
               return Q(-3 * p, 2) * inv_binq((p - 1) / 2, (p - 5) / 6);
           });
    simple(out, "C3.1-b",
           "sum G3_n/3^n = -L + p/L (4p = L^2+27M^2, 3 | L-1), -4/3 p (((p-2)/3)!)^3 (p = 2 mod 3) mod p^2", 2,
           above(3), [](Cell& c) { return sum_over(c, Named::G3, Q(3), 2); },
           minus_L([](Cell& c) -> BigRational {
               BigRational f = factorial((c.p - 2) / 3);
               return Q(-4 * lp(c.p), 3) * f * f * f;
           }),
           "factorial read as ((p-2)/3)!; C3.1-b-alt holds the other grouping");
    out.push_back(claim(
        "C3.1-b-alt", Cj, "sum G3_n/3^n = -4/3 p ((p-2)/6)^3 mod p^2 for p = 2 mod 3 (second reading of the factorial)",
        2, if_mod(3, 3, {2}),
        [](Cell& c) {
            if (!c.opts.alt_readings) {
                c.not_applicable("", "alternative reading; enable with --alt-readings");
                return;
            }
            BigRational t = Q(lp(c.p) - 2, 6);
            c.check("", sum_over(c, Named::G3, Q(3), 2), Q(-4 * lp(c.p), 3) * t * t * t);
        },
        "reads (p-2)/3! as (p-2)/6"));
    simple(out, "C3.1-c", "sum G3_n/243^n = -L + p/L (4p = L^2+27M^2, 3 | L-1), 0 (p = 2 mod 3) mod p^2", 2,
           above(3), [](Cell& c) { return sum_over(c, Named::G3, Q(243), 2); },
           minus_L([](Cell&) { return Q(0); }));

    auto not7 = [](std::uint64_t p) { return p > 3 && p % 7 != 0; };
    const char* t7 =
        "= 2x - p/(2x) (p = x^2+7y^2, (x/7) = 1), -5p/C(3[p/7],[p/7]) (3 mod 7), 15p/(4C) (5 mod 7), -25p/(22C) "
        "(6 mod 7) mod p^2";
    simple(out, "C3.2-a", (std::string("(p/3) sum G4_n ") + t7).c_str(), 2, not7,
           [](Cell& c) { return c.R(legendre(Q(lp(c.p)), 3), 2) * sum_over(c, Named::G4, Q(1), 2); }, rhs7);
    simple(out, "C3.2-b", (std::string("(21(p/7)-19)/2 (6/p) sum G4_n/4096^n ") + t7).c_str(), 2, not7,
           [](Cell& c) {
               BigRational k = Q(21 * legendre(Q(lp(c.p)), 7) - 19, 2) * leg(6, c.p);
               return c.R(k, 2) * sum_over(c, Named::G4, Q(4096), 2);
           },
           rhs7);
    const char* t4 = "= 2x - p/(2x) (p = x^2+4y^2, 4 | x-1), 5p/2 C((p-3)/2,(p-3)/4)^{-1} (p = 3 mod 4) mod p^2";
    simple(out, "C3.2-c", (std::string("(6/p) sum G4_n/(-8)^n ") + t4).c_str(), 2, above(3),
           [](Cell& c) { return c.R(leg(6, c.p), 2) * sum_over(c, Named::G4, Q(-8), 2); }, rhs4);
    simple(out, "C3.2-d", (std::string("(3-2(-1)^{(p-1)/2}) (3/p) sum G4_n/(-512)^n ") + t4).c_str(), 2, above(3),
           [](Cell& c) {
               BigRational k = Q(3 - 2 * sgn(lp(c.p - 1) / 2)) * leg(3, c.p);
               return c.R(k, 2) * sum_over(c, Named::G4, Q(-512), 2);
           },
           rhs4);
    const char* t3 = "= 2x - p/(2x) (p = x^2+3y^2, 3 | x-1), -7/2 p C((p-1)/2,(p-5)/6)^{-1} (p = 2 mod 3) mod p^2";
    simple(out, "C3.2-e", (std::string("sum G4_n/16^n ") + t3).c_str(), 2, above(3),
           [](Cell& c) { return sum_over(c, Named::G4, Q(16), 2); }, rhs3(-7, 2));
    simple(out, "C3.2-f", (std::string("(4-3(-3/p)) (-2/p) sum G4_n/256^n ") + t3).c_str(), 2, above(3),
           [](Cell& c) {
               BigRational k = (4 - 3 * leg(-3, c.p)) * leg(-2, c.p);
               return c.R(k, 2) * sum_over(c, Named::G4, Q(256), 2);
           },
           rhs3(-7, 2));
    simple(out, "C3.2-g",
           "sum G4_n/(-64)^n = (-1)^{[p/8]+(p-1)/2} (2x - p/(2x)) (p = x^2+2y^2, 4 | x-1), "
           "-4/(2-(-1)^{(p-1)/2}) p C((p-1)/2,[p/8])^{-1} (p = 5,7 mod 8) mod p^2",
           2, above(3), [](Cell& c) { return sum_over(c, Named::G4, Q(-64), 2); },
           [](Cell& c) -> BigRational {
               long p = lp(c.p);
               if (p % 8 == 1 || p % 8 == 3)
                   return sgn(p / 8 + (p - 1) / 2) * two_x_form(need_x(c, 2, 1, SignRule::Mod4IsOne), c.p);
               return Q(-4, 2 - sgn((p - 1) / 2)) * Q(p) * inv_binq((p - 1) / 2, p / 8);
           });

    simple(out, "C3.3", "sum_{n=1}^{p-1} n G3_n/243^n = 0 mod p^2 for p = 1 mod 3", 2, if_mod(2, 3, {1}),
           [](Cell& c) {
               auto M = c.mod(2);
               return sum_over(c, Named::G3, Q(243), 2, [M](unsigned n) { return Residue(n, M); });
           },
           [](Cell&) { return Q(0); });

    const struct {
        const char* id;
        Named s;
        long K;
        std::vector<long> ms;
        std::initializer_list<std::pair<int, int>> f;
        const char* text;
    } trans[] = {
        {"C3.4", Named::G3, 108, {-3267, -1350, -108, 44, 100, 135, 300, 1836, 8748, 110700, 27000108},
         {{2, 1}, {2, 1}, {3, 1}},
         "sum C(2k,k) G3_k/m^k = (m(m-108)/p) sum C(2k,k)^2 C(3k,k)/(108-m)^k mod p^2, listed m"},
        {"C3.5", Named::G4, 256,
         {-24591257600L, -2508800, -614400, -20480, -2048, -392, 175, 400, 1280, 4225, 12544, 83200, 6635776,
          199148800},
         {{2, 1}, {2, 1}, {4, 2}},
         "sum C(2k,k) G4_k/m^k = (m(m-256)/p) sum C(2k,k)^2 C(4k,2k)/(256-m)^k mod p^2, listed m"},
        {"C3.6", Named::G6, 1728,
         {-16579647, -285768, -52272, -6272, 5103, 34496, 886464, 12289728, 884737728, 147197953728L,
          262537412640769728L},
         {{2, 1}, {3, 1}, {6, 3}},
         "sum C(2k,k) G6_k/m^k = (m(m-1728)/p) sum C(2k,k) C(3k,k) C(6k,3k)/(1728-m)^k mod p^2, listed m"},
    };
    for (const auto& t : trans) {
        Named s = t.s;
        long K = t.K;
        std::vector<BigRational> ms;
        for (long m : t.ms) ms.push_back(Q(m));
        std::vector<std::pair<int, int>> f(t.f);
        out.push_back(claim(t.id, Cj, t.text, 2, above(3), [=](Cell& c) {
            std::vector<Residue> prod;
            auto M = c.mod(2);
            for (long k = 0; k < lp(c.p); ++k) {
                BigInt v = 1;
                for (auto [a, b] : f) v *= int_binomial(a * k, b * k);
                prod.push_back(reduce_mod(v, M));
            }
            c.each_m(ms, [&](const BigRational& m) { return !zero_mod(c, m * (K - m)); },
                     [&](const BigRational& m, const std::string& tag) {
                         Residue l = sum_central(c, s, m, 2);
                         Residue r = series(prod, c.R(1 / (K - m), 2), static_cast<unsigned>(c.p));
                         r *= c.R(legendre(m * (m - K), c.p), 2);
                         c.check(tag, l, r);
                     });
        }));
    }

    const struct {
        const char* suffix;
        Named s;
    } gs[] = {{"G3", Named::G3}, {"G4", Named::G4}, {"G6", Named::G6}};
    for (const auto& g : gs) {
        Named s = g.s;
        out.push_back(claim(std::string("C3.7-") + g.suffix, Cj,
                            std::string(g.suffix) + "_{mp^r} = " + g.suffix + "_{mp^{r-1}} mod p^{2r}, m <= 3, r <= 2",
                            4, odd_prime(), [s](Cell& c) {
                                for (int r = 1; r <= 2; ++r)
                                    for (long m = 1; m <= 3; ++m) {
                                        std::string tag = mr(m, r);
                                        c.guard(tag, [&] {
                                            auto hi = exact(c, s, m * ipow(c.p, r));
                                            auto lo = exact(c, s, m * ipow(c.p, r - 1));
                                            c.check(tag, c.R(hi, 2 * r), lo);
                                        });
                                    }
                            }));
    }

    const struct {
        const char* suffix;
        Named s;
        std::function<bool(std::uint64_t)> c38, c39;
        long d;
        SignRule rule;
        bool sign;
    } hs[] = {
        {"G3", Named::G3, if_mod(2, 3, {2}), if_mod(2, 3, {1}), 3, SignRule::None, true},
        {"G4", Named::G4, if_mod(2, 8, {5, 7}), if_mod(2, 8, {1, 3}), 2, SignRule::None, false},
        {"G6", Named::G6, if_mod(2, 4, {3}), if_mod(2, 4, {1}), 4, SignRule::None, false},
    };
    for (const auto& h : hs) {
        Named s = h.s;
        std::string n = h.suffix;
        out.push_back(claim("C3.8-" + n, Cj,
                            n + "_{(mp^r-1)/2} = p^2 " + n + "_{(mp^{r-2}-1)/2} mod p^{2r-1}, odd m <= 3, r = 2", 3,
                            h.c38, [s](Cell& c) {
                                for (long m : {1L, 3L}) {
                                    std::string tag = mr(m, 2);
                                    c.guard(tag, [&] {
                                        auto hi = exact(c, s, (m * ipow(c.p, 2) - 1) / 2);
                                        auto lo = exact(c, s, (m - 1) / 2);
                                        c.check(tag, c.R(hi, 3), c.pk(2) * lo);
                                    });
                                }
                            }));
        long d = h.d;
        SignRule rule = h.rule;
        bool sign = h.sign;
        out.push_back(claim("C3.9-" + n, Cj,
                            n + "_{(mp^r-1)/2} = " + (sign ? "(-1)^{(p-1)/2} " : "") + "(4x^2-2p) " + n +
                                "_{(mp^{r-1}-1)/2} - p^2 " + n + "_{(mp^{r-2}-1)/2} mod p^r, p = x^2+" +
                                std::to_string(d) + "y^2, odd m <= 3, r = 2",
                            2, h.c39, [=](Cell& c) {
                                long x = need_x(c, d, 1, rule);
                                BigRational k = Q(4 * x * x - 2 * lp(c.p));
                                if (sign) k *= sgn(lp(c.p - 1) / 2);
                                for (long m : {1L, 3L}) {
                                    std::string tag = mr(m, 2);
                                    c.guard(tag, [&] {
                                        auto hi = exact(c, s, (m * ipow(c.p, 2) - 1) / 2);
                                        auto mid = exact(c, s, (m * lp(c.p) - 1) / 2);
                                        auto lo = exact(c, s, (m - 1) / 2);
                                        c.check(tag, c.R(hi, 2), k * mid - c.pk(2) * lo);
                                    });
                                }
                            }));
    }

    struct C310 {
        const char* id;
        Named s;
        long mult, shift;  // index mult*p + shift
        long base;         // 0: plain u_{index0}, else base^{4(p-1)} u_1
        bool u_table;      // U_{p-3} instead of E_{p-3}
        bool sign3;        // (-1)^{[p/3]} instead of (-1)^{(p-1)/2}
        BigRational coeff;
        const char* text;
    };
    const C310 c310[] = {
        {"C3.10-a", Named::G, 2, 0, 0, false, false, Q(3072),
         "G_{2p} = G_2 + 3072 (-1)^{(p-1)/2} p^2 E_{p-3} mod p^3"},
        {"C3.10-b", Named::G, 3, 0, 0, false, false, Q(94464),
         "G_{3p} = G_3 + 94464 (-1)^{(p-1)/2} p^2 E_{p-3} mod p^3"},
        {"C3.10-c", Named::G3, 2, 0, 0, true, true, Q(20412),
         "G3_{2p} = G3_2 + 20412 (-1)^{[p/3]} p^2 U_{p-3} mod p^3"},
        {"C3.10-d", Named::G, 2, -1, 16, false, false, Q(164),
         "G_{2p-1} = (-1)^{(p-1)/2} 16^{4(p-1)} G_1 + 164 p^2 E_{p-3} mod p^3"},
        {"C3.10-e", Named::G3, 2, -1, 27, true, true, Q(660),
         "G3_{2p-1} = (-1)^{[p/3]} 27^{4(p-1)} G3_1 + 660 p^2 U_{p-3} mod p^3"},
        {"C3.10-f", Named::G6, 2, -1, 432, false, false, Q(82580, 3),
         "G6_{2p-1} = (-1)^{(p-1)/2} 432^{4(p-1)} G6_1 + 82580/3 p^2 E_{p-3} mod p^3"},
    };
    for (const auto& t : c310) {
        C310 v = t;
        out.push_back(claim(t.id, Cj, t.text, 3, above(3), [v](Cell& c) {
            long p = lp(c.p);
            int sg = v.sign3 ? sgn(p / 3) : sgn((p - 1) / 2);
            auto hi = exact(c, v.s, static_cast<unsigned long>(v.mult * p + v.shift));
            BigRational tab = v.u_table ? c.ctx.U(static_cast<unsigned>(p - 3)) : c.ctx.E(static_cast<unsigned>(p - 3));
            BigRational rhs;
            if (v.base == 0) {
                rhs = exact(c, v.s, static_cast<unsigned long>(v.mult)) + sg * v.coeff * c.pk(2) * tab;
            } else {
                rhs = BigRational(sg * pow_z(v.base, 4 * static_cast<unsigned long>(p - 1))) * exact(c, v.s, 1) +
                      v.coeff * c.pk(2) * tab;
            }
            c.check("", c.R(hi, 3), rhs);
        }));
    }
}

}  // namespace apery::detail
