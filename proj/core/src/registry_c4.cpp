#include "claim_util.hpp"

namespace apery::detail {

namespace {

BigRational p3B(Cell& c) { return c.pk(3) * c.ctx.B(static_cast<unsigned>(c.p - 3)); }

// p^2 C(n,k)^{-2}
BigRational p2_over_c2(Cell& c, long n, long k) {
    BigRational b = inv_binq(n, k);
    return c.pk(2) * b * b;
}

// 4x^2 - 2p - p^2/(4x^2) for p = x^2 + d y^2
BigRational quad(Cell& c, long d) { return four_x2_form(need_x(c, d, 1, SignRule::None), c.p); }

Rhs mod3_rhs(BigRational k) {
    return [k](Cell& c) -> BigRational {
        long p = lp(c.p);
        if (p % 3 == 1) return quad(c, 3);
        return k * p2_over_c2(c, (p - 1) / 2, (p - 5) / 6);
    };
}

Rhs mod4_rhs(BigRational k) {
    return [k](Cell& c) -> BigRational {
        long p = lp(c.p);
        if (p % 4 == 1) return quad(c, 4);
        return k * p2_over_c2(c, (p - 3) / 2, (p - 3) / 4);
    };
}

Rhs L_rhs(BigRational k) {
    return [k](Cell& c) -> BigRational {
        long p = lp(c.p);
        if (p % 3 == 1) {
            BigRational L2 = Q(L_of(c));
            L2 *= L2;
            return L2 - Q(2 * p) - Q(p) * Q(p) / L2;
        }
        return k * p2_over_c2(c, 2 * p / 3, p / 3);
    };
}

Rhs mod7_rhs(BigRational k3, BigRational k5, BigRational k6) {
    return [=](Cell& c) -> BigRational {
        long p = lp(c.p), q = p / 7;
        switch (p % 7) {
        case 3: return k3 * p2_over_c2(c, 3 * q, q);
        case 5: return k5 * p2_over_c2(c, 3 * q, q);
        case 6: return k6 * p2_over_c2(c, 3 * q, q);
        default: return quad(c, 7);
        }
    };
}

Lhs vsum(Named s, long d, int sign_kind = 0) {
    return [=](Cell& c) {
        Residue r = sum_over(c, s, Q(d), 3);
        long p = lp(c.p);
        if (sign_kind == 1) r *= c.R(sgn((p - 1) / 2), 3);
        if (sign_kind == 2) r *= c.R(sgn(p / 3), 3);
        return r;
    };
}

}  // namespace

void register_conjectures4(std::vector<ClaimSpec>& out) {
    const struct {
        const char* id;
        Named s;
        long mult, constant;  // constant = 0: compare with u_mult
        BigRational k;
        const char* text;
    } c41[] = {
        {"C4.1-V", Named::V, 1, 8, Q(40), "V_p = 8 + 40 p^3 B_{p-3} mod p^4"},
        {"C4.1-V3", Named::V3, 1, 15, Q(132), "V3_p = 15 + 132 p^3 B_{p-3} mod p^4"},
        {"C4.1-V4", Named::V4, 1, 40, Q(704), "V4_p = 40 + 704 p^3 B_{p-3} mod p^4"},
        {"C4.1-V6", Named::V6, 1, 312, Q(16120), "V6_p = 312 + 16120 p^3 B_{p-3} mod p^4"},
        {"C4.1-V2p", Named::V, 2, 0, Q(2624), "V_{2p} = V_2 + 2624 p^3 B_{p-3} mod p^4"},
        {"C4.1-V32p", Named::V3, 2, 0, Q(16416), "V3_{2p} = V3_2 + 16416 p^3 B_{p-3} mod p^4"},
        {"C4.1-V42p", Named::V4, 2, 0, Q(233984), "V4_{2p} = V4_2 + 233984 p^3 B_{p-3} mod p^4"},
    };
    for (const auto& t : c41) {
        Named s = t.s;
        long mult = t.mult, k0 = t.constant;
        BigRational k = t.k;
        at_index(out, t.id, t.text, 4, above(3), s, [mult](long p) { return mult * p; },
                 [=](Cell& c) -> BigRational {
                     BigRational base = k0 ? Q(k0) : exact(c, s, mult);
                     return base + k * p3B(c);
                 });
    }

    const struct {
        const char* id;
        Named s;
        long base;
        bool twice;  // index 2p-1 with base^{4(p-1)} u_1, else index p-1 with base^{p-1}
        BigRational k;
        const char* text;
    } c42[] = {
        {"C4.2-V3", Named::V3, 729, false, Q(-92, 27), "V3_{p-1} = 729^{p-1} - 92/27 p^3 B_{p-3} mod p^4"},
        {"C4.2-V4", Named::V4, 4096, false, Q(-17, 2), "V4_{p-1} = 4096^{p-1} - 17/2 p^3 B_{p-3} mod p^4"},
        {"C4.2-V6", Named::V6, 186624, false, Q(-1705, 54),
         "V6_{p-1} = 186624^{p-1} - 1705/54 p^3 B_{p-3} mod p^4"},
        {"C4.2-V3b", Named::V3, 27, true, Q(-1504, 3),
         "V3_{2p-1} = 27^{4(p-1)} V3_1 - 1504/3 p^3 B_{p-3} mod p^4"},
        {"C4.2-V4b", Named::V4, 64, true, Q(-3196), "V4_{2p-1} = 64^{4(p-1)} V4_1 - 3196 p^3 B_{p-3} mod p^4"},
        {"C4.2-V6b", Named::V6, 432, true, Q(-264940, 3),
         "V6_{2p-1} = 432^{4(p-1)} V6_1 - 264940/3 p^3 B_{p-3} mod p^4"},
    };
    for (const auto& t : c42) {
        Named s = t.s;
        long b = t.base;
        bool twice = t.twice;
        BigRational k = t.k;
        at_index(out, t.id, t.text, 4, above(3), s, [twice](long p) { return twice ? 2 * p - 1 : p - 1; },
                 [=](Cell& c) -> BigRational {
                     unsigned long p1 = c.p - 1;
                     BigRational lead = twice ? BigRational(pow_z(b, 4 * p1)) * exact(c, s, 1)
                                              : BigRational(pow_z(b, p1));
                     return lead + k * p3B(c);
                 });
    }

    simple(out, "C4.3",
           "sum V3_n/(-27)^n = 4x^2-2p-p^2/(4x^2) (p = x^2+3y^2), 7/4 p^2 C((p-1)/2,(p-5)/6)^{-2} (p = 2 mod 3) "
           "mod p^3",
           3, above(3), vsum(Named::V3, -27), mod3_rhs(Q(7, 4)));
    const char* c44 = "binomial read as C([2p/3],[p/3])";
    simple(out, "C4.4-a",
           "sum V3_n/3^n = L^2-2p-p^2/L^2 (4p = L^2+27M^2), 15/2 p^2 C([2p/3],[p/3])^{-2} (p = 2 mod 3) mod p^3", 3,
           above(3), vsum(Named::V3, 3), L_rhs(Q(15, 2)), c44);
    simple(out, "C4.4-b",
           "sum V3_n/243^n = L^2-2p-p^2/L^2 (4p = L^2+27M^2), -1/2 p^2 C([2p/3],[p/3])^{-2} (p = 2 mod 3) mod p^3",
           3, above(3), vsum(Named::V3, 243), L_rhs(Q(-1, 2)), c44);

    auto not7 = [](std::uint64_t p) { return p > 3 && p != 7; };
    simple(out, "C4.5-a",
           "sum V4_n = 4x^2-2p-p^2/(4x^2) (p = x^2+7y^2), 149/12, 447/64, 3725/5808 p^2 C(3[p/7],[p/7])^{-2} "
           "(p = 3, 5, 6 mod 7) mod p^3",
           3, not7, vsum(Named::V4, 1), mod7_rhs(Q(149, 12), Q(447, 64), Q(3725, 5808)));
    simple(out, "C4.5-b",
           "sum V4_n/4096^n = 4x^2-2p-p^2/(4x^2) (p = x^2+7y^2), -5/96, -15/512, -125/46464 p^2 "
           "C(3[p/7],[p/7])^{-2} (p = 3, 5, 6 mod 7) mod p^3",
           3, not7, vsum(Named::V4, 4096), mod7_rhs(Q(-5, 96), Q(-15, 512), Q(-125, 46464)));

    simple(out, "C4.6-a",
           "sum V4_n/16^n = 4x^2-2p-p^2/(4x^2) (p = x^2+3y^2), 5p^2 C((p-1)/2,(p-5)/6)^{-2} (p = 2 mod 3) mod p^3", 3,
           above(3), vsum(Named::V4, 16), mod3_rhs(Q(5)));
    simple(out, "C4.6-b",
           "sum V4_n/256^n = 4x^2-2p-p^2/(4x^2) (p = x^2+3y^2), -p^2 C((p-1)/2,(p-5)/6)^{-2} (p = 2 mod 3) mod p^3",
           3, above(3), vsum(Named::V4, 256), mod3_rhs(Q(-1)));

    simple(out, "C4.7-a",
           "sum V4_n/(-8)^n = 4x^2-2p-p^2/(4x^2) (p = x^2+4y^2), 41/12 p^2 C((p-3)/2,(p-3)/4)^{-2} (p = 3 mod 4) "
           "mod p^3",
           3, above(3), vsum(Named::V4, -8), mod4_rhs(Q(41, 12)));
    simple(out, "C4.7-b",
           "sum V4_n/(-512)^n = 4x^2-2p-p^2/(4x^2) (p = x^2+4y^2), 5/12 p^2 C((p-3)/2,(p-3)/4)^{-2} (p = 3 mod 4) "
           "mod p^3",
           3, above(3), vsum(Named::V4, -512), mod4_rhs(Q(5, 12)));

    simple(out, "C4.8",
           "(-1)^{(p-1)/2} sum V4_n/(-64)^n = 4x^2-2p-p^2/(4x^2) (p = x^2+2y^2), -13/9, -13/2 p^2 "
           "C([p/4],[p/8])^{-2} (p = 5, 7 mod 8) mod p^3",
           3, above(3), vsum(Named::V4, -64, 1), [](Cell& c) -> BigRational {
               long p = lp(c.p);
               if (p % 8 == 1 || p % 8 == 3) return quad(c, 2);
               return (p % 8 == 5 ? Q(-13, 9) : Q(-13, 2)) * p2_over_c2(c, p / 4, p / 8);
           });
    simple(out, "C4.9",
           "(-1)^{[p/3]} sum V6_n/(-432)^n = 4x^2-2p-p^2/(4x^2) (p = x^2+4y^2), -31/12 p^2 C((p-3)/2,(p-3)/4)^{-2} "
           "(p = 3 mod 4) mod p^3",
           3, above(3), vsum(Named::V6, -432, 2), mod4_rhs(Q(-31, 12)));

    const struct {
        const char* suffix;
        Named s;
        long base;
    } vs[] = {{"V3", Named::V3, 729}, {"V4", Named::V4, 4096}, {"V6", Named::V6, 186624}};
    for (const auto& v : vs) {
        Named s = v.s;
        long base = v.base;
        std::string n = v.suffix;
        // u at index m p^r + shift, and the factor base^{m p^{r-1}(p-1)} on the lower term when `pw`
        auto terms = [=](Cell& c, long m, int r, bool pw) -> std::pair<BigRational, BigRational> {
            long sh = pw ? -1 : 0;
            auto hi = exact(c, s, m * ipow(c.p, r) + sh);
            auto lo = exact(c, s, m * ipow(c.p, r - 1) + sh);
            if (pw) lo *= BigRational(pow_z(base, m * ipow(c.p, r - 1) * (c.p - 1)));
            return {hi, lo};
        };
        auto delta = [=](Cell& c, long m, int r, bool pw) -> BigRational {
            auto [hi, lo] = terms(c, m, r, pw);
            return hi - lo;
        };
        auto main = [=](Cell& c, bool pw) {
            for (int r = 1; r <= 2; ++r)
                for (long m = 1; m <= 3; ++m) {
                    std::string tag = mr(m, r);
                    c.guard(tag, [&] {
                        auto [hi, lo] = terms(c, m, r, pw);
                        c.check(tag, c.R(hi, 3 * r), lo);
                    });
                }
        };
        out.push_back(claim("C4.10-" + n, Cj,
                            n + "_{mp^r} = " + n + "_{mp^{r-1}} mod p^{3r}, m <= 3, r <= 2", 6, above(3),
                            [=](Cell& c) { main(c, false); }));
        out.push_back(claim("C4.10-" + n + "q", Cj,
                            "(" + n + "_{mp^r} - " + n + "_{mp^{r-1}})/p^{3r} = (" + n + "_{mp} - " + n +
                                "_m)/p^3 mod p, m <= 3, r = 2",
                            1, above(3), [=](Cell& c) {
                                for (long m = 1; m <= 3; ++m) {
                                    std::string tag = mr(m, 2);
                                    c.guard(tag, [&] {
                                        c.check(tag, c.R(delta(c, m, 2, false) / c.pk(6), 1),
                                                delta(c, m, 1, false) / c.pk(3));
                                    });
                                }
                            }));
        std::string b = std::to_string(base);
        out.push_back(claim("C4.11-" + n, Cj,
                            n + "_{mp^r-1} = " + b + "^{mp^{r-1}(p-1)} " + n +
                                "_{mp^{r-1}-1} mod p^{3r}, m <= 3, r <= 2",
                            6, above(3), [=](Cell& c) { main(c, true); }));
        out.push_back(claim("C4.11-" + n + "q", Cj,
                            "(" + n + "_{mp^r-1} - " + b + "^{mp^{r-1}(p-1)} " + n + "_{mp^{r-1}-1})/p^{3r} = (" + n +
                                "_{mp-1} - " + b + "^{m(p-1)} " + n + "_{m-1})/p^3 mod p, m <= 3, r = 2",
                            1, above(3), [=](Cell& c) {
                                for (long m = 1; m <= 3; ++m) {
                                    std::string tag = mr(m, 2);
                                    c.guard(tag, [&] {
                                        c.check(tag, c.R(delta(c, m, 2, true) / c.pk(6), 1),
                                                delta(c, m, 1, true) / c.pk(3));
                                    });
                                }
                            }));
    }
}

}  // namespace apery::detail
