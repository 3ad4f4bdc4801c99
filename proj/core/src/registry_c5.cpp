#include "claim_util.hpp"

namespace apery::detail {

namespace {

BigRational p3B(Cell& c) { return c.pk(3) * c.ctx.B(static_cast<unsigned>(c.p - 3)); }
BigRational p2U(Cell& c) { return c.pk(2) * c.ctx.U(static_cast<unsigned>(c.p - 3)); }

BigRational x2(Cell& c, long d, long alpha = 1) {
    BigRational x = Q(need_x(c, d, alpha, SignRule::None));
    return x * x;
}

BigRational inv_c2(long n, long k) {
    BigRational b = inv_binq(n, k);
    return b * b;
}

}  // namespace

void register_conjectures5(std::vector<ClaimSpec>& out) {
    const struct {
        const char* name;
        Named s;
        BigRational k[3];
    } c51[] = {
        {"A", Named::A, {Q(-14, 3), Q(-1648, 3), Q(-36738)}},
        {"Ap", Named::Ap, {Q(-5, 3), Q(-280, 3), Q(-2475)}},
        {"b", Named::b, {Q(-6), Q(144), Q(-1566)}},
        {"T", Named::T, {Q(-1), Q(-136), Q(-6696)}},
        {"D", Named::D, {Q(16, 3), Q(448, 3), Q(3168)}},
        {"f", Named::f, {Q(1, 2), Q(-8), Q(-189)}},
    };
    for (const auto& t : c51)
        for (long j = 1; j <= 3; ++j) {
            Named s = t.s;
            BigRational k = t.k[j - 1];
            std::string id = "C5.1-" + std::string(t.name) + std::to_string(j);
            std::string n = t.name, js = std::to_string(j);
            std::string text = n + "_{" + (j == 1 ? "" : js) + "p} = " + n + "_" + js + " + " + to_string(k) +
                               " p^3 B_{p-3} mod p^4";
            at_index(out, id.c_str(), text.c_str(), 4, above(3), s, [j](long p) { return j * p; },
                     [=](Cell& c) -> BigRational { return exact(c, s, j) + k * p3B(c); });
        }

    const struct {
        const char* id;
        Named s;
        long base;  // 0: no power factor
        BigRational k;
        const char* text;
    } c52[] = {
        {"C5.2-A", Named::A, 0, Q(16, 3), "A_{2p-1} = A_1 + 16/3 p^3 B_{p-3} mod p^4"},
        {"C5.2-Ap", Named::Ap, 0, Q(200, 3), "Ap_{2p-1} = Ap_1 + 200/3 p^3 B_{p-3} mod p^4"},
        {"C5.2-f", Named::f, 8, Q(17), "f_{2p-1} = 8^{2(p-1)} f_1 + 17 p^3 B_{p-3} mod p^4"},
        {"C5.2-T", Named::T, 16, Q(-6), "T_{2p-1} = 16^{2(p-1)} T_1 - 6 p^3 B_{p-3} mod p^4"},
        {"C5.2-D", Named::D, 64, Q(-44, 3), "D_{2p-1} = 64^{2(p-1)} D_1 - 44/3 p^3 B_{p-3} mod p^4"},
        {"C5.2-b", Named::b, 81, Q(16, 9), "b_{2p-1} = 81^{2(p-1)} b_1 + 16/9 p^3 B_{p-3} mod p^4"},
    };
    for (const auto& t : c52) {
        Named s = t.s;
        long b = t.base;
        BigRational k = t.k;
        at_index(out, t.id, t.text, 4, above(3), s, [](long p) { return 2 * p - 1; }, [=](Cell& c) -> BigRational {
            BigRational lead = exact(c, s, 1);
            if (b) lead *= BigRational(pow_z(b, 2 * (c.p - 1)));
            return lead + k * p3B(c);
        });
    }

    const struct {
        const char* name;
        Named s;
        BigRational k[3];
    } c53[] = {
        {"a", Named::a, {Q(3), Q(36), Q(405)}},
        {"W", Named::W, {Q(-9), Q(108), Q(-729)}},
        {"Q", Named::Q, {Q(-30), Q(720), Q(-11340)}},
    };
    for (const auto& t : c53)
        for (long j = 1; j <= 3; ++j) {
            Named s = t.s;
            BigRational k = t.k[j - 1];
            std::string id = "C5.3-" + std::string(t.name) + std::to_string(j);
            std::string n = t.name, js = std::to_string(j);
            std::string text = n + "_{" + (j == 1 ? "" : js) + "p} = " + n + "_" + js + " + " + to_string(k) +
                               " p^2 (p/3) U_{p-3} mod p^3";
            at_index(out, id.c_str(), text.c_str(), 3, above(3), s, [j](long p) { return j * p; },
                     [=](Cell& c) -> BigRational {
                         return exact(c, s, j) + k * leg_q(Q(lp(c.p)), 3) * p2U(c);
                     });
        }

    const struct {
        const char* id;
        Named s;
        long base;
        BigRational k;
        const char* text;
    } c54[] = {
        {"C5.4-a", Named::a, 9, Q(20), "a_{2p-1} = (-1)^[p/3] 9^{2(p-1)} a_1 + 20 p^2 U_{p-3} mod p^3"},
        {"C5.4-W", Named::W, 27, Q(-12), "W_{2p-1} = (-1)^[p/3] 27^{2(p-1)} W_1 - 12 p^2 U_{p-3} mod p^3"},
        {"C5.4-Q", Named::Q, 72, Q(-70), "Q_{2p-1} = (-1)^[p/3] 72^{2(p-1)} Q_1 - 70 p^2 U_{p-3} mod p^3"},
    };
    for (const auto& t : c54) {
        Named s = t.s;
        long b = t.base;
        BigRational k = t.k;
        at_index(out, t.id, t.text, 3, above(3), s, [](long p) { return 2 * p - 1; }, [=](Cell& c) -> BigRational {
            BigRational lead = BigRational(sgn(lp(c.p) / 3) * pow_z(b, 2 * (c.p - 1))) * exact(c, s, 1);
            return lead + k * p2U(c);
        });
    }

    auto weighted = [](long shift, long d) {
        return [=](Cell& c) {
            auto M = c.mod(3);
            return sum_over(c, Named::Q, Q(d), 3,
                            [=](unsigned n) { return Residue::from_int(static_cast<long long>(n) + shift, M); });
        };
    };
    auto by3 = [](long k1, long k2) {
        return [=](Cell& c) -> BigRational { return Q(c.p % 3 == 1 ? k1 : k2) * c.pk(2); };
    };
    simple(out, "C5.5-a", "sum (n+3) Q_n/(-8)^n = 3p^2 (p = 1 mod 3), -15p^2 (p = 2 mod 3) mod p^3", 3, above(3),
           weighted(3, -8), by3(3, -15));
    simple(out, "C5.5-b", "sum (n-2) Q_n/(-9)^n = -2p^2 (p = 1 mod 3), 14p^2 (p = 2 mod 3) mod p^3", 3, above(3),
           weighted(-2, -9), by3(-2, 14));

    auto c56 = [](BigRational k) {
        return [k](Cell& c) -> BigRational {
            long p = lp(c.p);
            if (p % 3 == 1) return two_x_form(need_x(c, 3, 1, SignRule::Mod3IsOne), c.p);
            return k * Q(p) * inv_binq((p - 1) / 2, (p - 5) / 6);
        };
    };
    simple(out, "C5.6-a",
           "sum Q_n/(-6)^n = 2x - p/(2x) (p = x^2+3y^2, 3 | x-1), -p/C((p-1)/2,(p-5)/6) (p = 2 mod 3) mod p^2", 2,
           above(3), [](Cell& c) { return sum_over(c, Named::Q, Q(-6), 2); }, c56(Q(-1)));
    simple(out, "C5.6-b",
           "sum Q_n/(-12)^n = 2x - p/(2x) (p = x^2+3y^2, 3 | x-1), p/(2C((p-1)/2,(p-5)/6)) (p = 2 mod 3) mod p^2", 2,
           above(3), [](Cell& c) { return sum_over(c, Named::Q, Q(-12), 2); }, c56(Q(1, 2)));

    auto c57 = [](BigRational k) {
        return [k](Cell& c) -> BigRational {
            long p = lp(c.p);
            if (p % 3 == 1) return four_x2_form(need_x(c, 3, 1, SignRule::None), c.p);
            return k * c.pk(2) * inv_c2((p - 1) / 2, (p - 5) / 6);
        };
    };
    simple(out, "C5.7-a",
           "sum C(2n,n) Q_n/18^n = 4x^2-2p-p^2/(4x^2) (p = x^2+3y^2), p^2/C((p-1)/2,(p-5)/6)^2 (p = 2 mod 3) mod p^3",
           3, above(3), [](Cell& c) { return sum_central(c, Named::Q, Q(18), 3); }, c57(Q(1)));
    simple(out, "C5.7-b",
           "sum C(2n,n) Q_n/(-36)^n = 4x^2-2p-p^2/(4x^2) (p = x^2+3y^2), -p^2/(2C((p-1)/2,(p-5)/6)^2) (p = 2 mod 3) "
           "mod p^3",
           3, above(3), [](Cell& c) { return sum_central(c, Named::Q, Q(-36), 3); }, c57(Q(-1, 2)));

    auto a9 = [](Cell& c, int e) { return sum_central(c, Named::a, Q(9), e); };
    const struct {
        const char* id;
        Named s;
        long d;
        const char* text;
    } c58a[] = {
        {"C5.8-a1", Named::Q, -27, "sum C(2n,n) Q_n/(-27)^n = sum C(2n,n) a_n/9^n mod p^2"},
        {"C5.8-a2", Named::Q, -81, "sum C(2n,n) Q_n/(-81)^n = sum C(2n,n) a_n/9^n mod p^2"},
        {"C5.8-a3", Named::a, -45, "sum C(2n,n) a_n/(-45)^n = sum C(2n,n) a_n/9^n mod p^2"},
    };
    for (const auto& t : c58a) {
        Named s = t.s;
        long d = t.d;
        out.push_back(claim(t.id, Cj, t.text, 2, above(5),
                            [=](Cell& c) { c.check("", sum_central(c, s, Q(d), 2), a9(c, 2)); }));
    }
    simple(out, "C5.8-b",
           "(-3/p) sum C(2n,n) a_n/9^n = 4x^2-2p-p^2/(4x^2) (p = 1,19 mod 30, p = x^2+15y^2), "
           "2p-12x^2+p^2/(12x^2) (p = 17,23 mod 30, p = 3x^2+5y^2) mod p^3; = 31/16, 31/4, 31/256, 31/64 p^2 "
           "5^[p/3] C([p/3],[p/15])^{-2} (p = 7, 11, 13, 29 mod 30) mod p^3",
           3, above(5), [=](Cell& c) { return c.R(leg(-3, c.p), 3) * a9(c, 3); },
           [](Cell& c) -> BigRational {
               long p = lp(c.p);
               switch (p % 30) {
               case 1:
               case 19: return four_x2_form(need_x(c, 15, 1, SignRule::None), c.p);
               case 17:
               case 23: {
                   if (!c.ctx.rep_3_5) throw std::logic_error("p = 3x^2 + 5y^2 has no solution");
                   BigRational x = Q(c.ctx.rep_3_5->first);
                   BigRational t = 12 * x * x;
                   return Q(2 * p) - t + Q(p) * Q(p) / t;
               }
               default: {
                   BigRational k = p % 30 == 7 ? Q(31, 16) : p % 30 == 11 ? Q(31, 4) : p % 30 == 13 ? Q(31, 256)
                                                                                                  : Q(31, 64);
                   return k * c.pk(2) * BigRational(pow_z(5, p / 3)) * inv_c2(p / 3, p / 15);
               }
               }
           },
           "second display transcribed literally");

    simple(out, "C5.9",
           "(-1)^{(p-1)/2} sum C(2n,n) a_n/54^n = 4x^2-2p (p = x^2+3y^2), 0 (p = 2 mod 3) mod p^2", 2, above(3),
           [](Cell& c) { return c.R(sgn(lp(c.p - 1) / 2), 2) * sum_central(c, Named::a, Q(54), 2); },
           [](Cell& c) -> BigRational {
               if (c.p % 3 != 1) return Q(0);
               return 4 * x2(c, 3) - Q(2 * lp(c.p));
           });

    auto c510 = [](Cell& c) -> BigRational {
        if (c.p % 8 != 1 && c.p % 8 != 3) return Q(0);
        return 4 * x2(c, 2) - Q(2 * lp(c.p));
    };
    simple(out, "C5.10-a", "sum C(2n,n) Q_n/(-32)^n = 4x^2-2p (p = x^2+2y^2), 0 (p = 5,7 mod 8) mod p^2", 2,
           odd_prime(), [](Cell& c) { return sum_central(c, Named::Q, Q(-32), 2); }, c510);
    simple(out, "C5.10-b", "sum C(2n,n) Q_n/64^n = 4x^2-2p (p = x^2+2y^2), 0 (p = 5,7 mod 8) mod p^2", 2,
           odd_prime(), [](Cell& c) { return sum_central(c, Named::Q, Q(64), 2); }, c510);

    auto c511 = [](Cell& c) -> BigRational {
        long p = lp(c.p);
        switch (p % 20) {
        case 1:
        case 9: return 4 * x2(c, 5) - Q(2 * p);
        case 3:
        case 7: return 2 * x2(c, 5, 2) - Q(2 * p);
        default: return Q(0);
        }
    };
    const char* t511 = "= 4x^2-2p (p = x^2+5y^2), 2x^2-2p (2p = x^2+5y^2), 0 (p = 11,13,17,19 mod 20) mod p^2";
    simple(out, "C5.11-a", (std::string("(-1)^{(p-1)/2} sum C(2n,n) a_n/20^n ") + t511).c_str(), 2, above(5),
           [](Cell& c) { return c.R(sgn(lp(c.p - 1) / 2), 2) * sum_central(c, Named::a, Q(20), 2); }, c511,
           "2p = x^2+5y^2 needs no sign choice");
    simple(out, "C5.11-b", (std::string("(-1)^{(p-1)/2} sum C(2n,n) Q_n/(-16)^n ") + t511).c_str(), 2, above(5),
           [](Cell& c) { return c.R(sgn(lp(c.p - 1) / 2), 2) * sum_central(c, Named::Q, Q(-16), 2); }, c511,
           "2p = x^2+5y^2 needs no sign choice");

    simple(out, "C5.12",
           "sum C(2n,n) Q_n/(-48)^n = 4x^2-2p (p = x^2+9y^2, 12 | p-1), 2p-2x^2 (2p = x^2+9y^2, 12 | p-5), "
           "0 (p = 3 mod 4) mod p^2",
           2, above(3), [](Cell& c) { return sum_central(c, Named::Q, Q(-48), 2); },
           [](Cell& c) -> BigRational {
               long p = lp(c.p);
               if (p % 12 == 1) return 4 * x2(c, 9) - Q(2 * p);
               if (p % 12 == 5) return Q(2 * p) - 2 * x2(c, 9, 2);
               return Q(0);
           },
           "2p = x^2+9y^2 needs no sign choice");

    const struct {
        const char* id;
        Named s;
        std::vector<long> ms;
        long lhs_mul, lhs_add, k;  // lhs denominator lhs_mul (m + lhs_add); f side (m(m+k)/p), f_n/(16m)^n or f_n/m^n
        long f_mul;
        const char* text;
    } tr[] = {
        {"C5.13", Named::Q, {-7, -25, -169, -1519, -70225, 20, 56, 650, 2450}, 16, -2, -2, 16,
         "sum C(2n,n) Q_n/(16(m-2))^n = (m(m-2)/p) sum C(2n,n) f_n/(16m)^n mod p^2, listed m"},
        {"C5.14", Named::a, {-112, -400, -2704, -24304, -1123600}, 1, 4, 4, 1,
         "sum C(2n,n) a_n/(m+4)^n = (m(m+4)/p) sum C(2n,n) f_n/m^n mod p^2, listed m"},
    };
    for (const auto& t : tr) {
        Named s = t.s;
        long lm = t.lhs_mul, la = t.lhs_add, k = t.k, fm = t.f_mul;
        std::vector<BigRational> ms;
        for (long m : t.ms) ms.push_back(Q(m));
        out.push_back(claim(t.id, Cj, t.text, 2, above(3), [=](Cell& c) {
            c.each_m(ms, [&](const BigRational& m) { return !zero_mod(c, m * (m + k)); },
                     [&](const BigRational& m, const std::string& tag) {
                         Residue l = sum_central(c, s, lm * (m + la), 2);
                         Residue r = sum_central(c, Named::f, fm * m, 2) * c.R(legendre(m * (m + k), c.p), 2);
                         c.check(tag, l, r);
                     });
        }));
    }
}

}  // namespace apery::detail
