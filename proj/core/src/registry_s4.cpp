#include "claim_util.hpp"

namespace apery::detail {

namespace {

const auto Th = ClaimClass::Theorem;

bool not_zero(const Cell& c, const BigRational& q) { return !zero_mod(c, q); }

Residue named_sum(Cell& c, Named s, const BigRational& d, int e, const std::function<Residue(unsigned)>& w = nullptr) {
    return series(c.named_prefix(s, e), c.R(1 / d, e), static_cast<unsigned>(c.p), w);
}

std::function<Residue(unsigned)> odd_weight(Cell& c, int e) {
    auto M = c.mod(e);
    return [M](unsigned n) { return Residue(2 * n + 1, M); };
}

struct Fam {
    const char* tag;
    Named s;
    long base;
};
const Fam kV[] = {{"V", Named::V, 16}, {"V3", Named::V3, 27}, {"V4", Named::V4, 64}, {"V6", Named::V6, 432}};

}  // namespace

void register_section4(std::vector<ClaimSpec>& out) {
    // V_p(x)
    out.push_back(claim("T4.2-x", Th,
                        "V_p(x) = 1 - 2C(x,p)C(-1-x,p) + 2p beta + 2p^2 beta^2 mod p^3, beta = beta_p(x)", 3, above(3),
                        [](Cell& c) {
                            c.each_x([](const BigRational&) { return true; },
                                     [&](const BigRational& x, const std::string& tag) {
                                         long p = static_cast<long>(c.p);
                                         BigRational b = beta(x, c.p), P = c.pk(1);
                                         BigRational rhs = 1 - 2 * rat_binomial(x, p) * rat_binomial(-1 - x, p) +
                                                           2 * P * b + 2 * P * P * b * b;
                                         c.check(tag, c.R(c.v_exact(x, static_cast<unsigned>(p)), 3), rhs);
                                     });
                        }));
    const long t42[] = {8, 15, 40, 312};
    for (int i = 0; i < 4; ++i) {
        Named s = kV[i].s;
        long v = t42[i];
        out.push_back(claim(std::string("T4.2-") + kV[i].tag, Th,
                            std::string(kV[i].tag) + "_p = " + std::to_string(v) + " mod p^3", 3, above(3),
                            [=](Cell& c) {
                                c.check("", c.R(BigRational(c.named_exact(s, static_cast<unsigned>(c.p))), 3), Q(v));
                            }));
    }

    // V_{p-1}(x)
    out.push_back(claim("T4.3-x", Th, "V_{p-1}(x) = 1 - 2p beta + 2p^2 beta^2 mod p^3, beta = beta_p(x)", 3,
                        above(3), [](Cell& c) {
                            c.each_x([](const BigRational&) { return true; },
                                     [&](const BigRational& x, const std::string& tag) {
                                         BigRational b = beta(x, c.p), P = c.pk(1);
                                         c.check(tag, c.v_prefix(x, 3)[c.p - 1], 1 - 2 * P * b + 2 * P * P * b * b);
                                     });
                        }));
    const long t43[] = {729, 4096, 186624};
    for (int i = 1; i < 4; ++i) {
        Named s = kV[i].s;
        long b = t43[i - 1];
        out.push_back(claim(std::string("T4.3-") + kV[i].tag, Th,
                            std::string(kV[i].tag) + "_{p-1} = " + std::to_string(b) + "^{p-1} mod p^3", 3, above(3),
                            [=](Cell& c) {
                                c.check("", c.named_prefix(s, 3)[c.p - 1], BigRational(pow_z(b, c.p - 1)));
                            }));
    }
    out.push_back(claim("R4.1", ClaimClass::Remark, "V_{p-1} = 256^{p-1} mod p^3", 3, above(3), [](Cell& c) {
        c.check("", c.named_prefix(Named::V, 3)[c.p - 1], BigRational(pow_z(256, c.p - 1)));
    }));

    // sum V_n(x)
    out.push_back(claim(
        "T4.4-x", Th,
        "sum_{n<p} V_n(x) = (1+2x')/(1+2x) p + (x'(x'+1)+1)/(1+2x) p^3 B_{p-2}(-x) mod p^4, 2x+1 != 0 mod p", 4,
        above(3), [](Cell& c) {
            c.each_x([&](const BigRational& x) { return not_zero(c, 2 * x + 1); },
                     [&](const BigRational& x, const std::string& tag) {
                         auto fi = fractional_info(x, c.p);
                         Residue l = series(c.v_prefix(x, 4), Residue(1, c.mod(4)), static_cast<unsigned>(c.p));
                         BigRational P = c.pk(1), w = fi.xprime * (fi.xprime + 1);
                         BigRational rhs = (1 + 2 * fi.xprime) / (1 + 2 * x) * P +
                                           (w + 1) / (1 + 2 * x) * c.pk(3) *
                                               bernoulli_poly(c.ctx.tables, static_cast<unsigned>(c.p) - 2, -x);
                         c.check(tag, l, rhs);
                     });
        }));
    out.push_back(claim("T4.4-V3", Th, "sum V3_n/27^n = (-1)^[p/3] p + 14p^3 U_{p-3} mod p^4", 4, above(3),
                        [](Cell& c) {
                            c.check("", named_sum(c, Named::V3, Q(27), 4),
                                    sgn(static_cast<long long>(c.p / 3)) * c.pk(1) + 14 * c.pk(3) * c.ctx.U(c.p - 3));
                        }));
    out.push_back(claim("T4.4-V4", Th, "sum V4_n/64^n = (-1)^{(p-1)/2} p + 13p^3 E_{p-3} mod p^4", 4, above(3),
                        [](Cell& c) {
                            c.check("", named_sum(c, Named::V4, Q(64), 4),
                                    sgn(static_cast<long long>((c.p - 1) / 2)) * c.pk(1) +
                                        13 * c.pk(3) * c.ctx.E(c.p - 3));
                        }));
    out.push_back(claim("T4.4-V6", Th, "sum V6_n/432^n = (-1)^[p/3] p + 155/4 p^3 U_{p-3} mod p^4", 4, above(3),
                        [](Cell& c) {
                            c.check("", named_sum(c, Named::V6, Q(432), 4),
                                    sgn(static_cast<long long>(c.p / 3)) * c.pk(1) +
                                        Q(155, 4) * c.pk(3) * c.ctx.U(c.p - 3));
                        }));
    out.push_back(claim("R4.2", ClaimClass::Remark, "sum V_n/16^n = 1 + 7/2 p^3 B_{p-3} mod p^4", 4, odd_prime(),
                        [](Cell& c) {
                            c.check("", named_sum(c, Named::V, Q(16), 4), 1 + Q(7, 2) * c.pk(3) * c.ctx.B(c.p - 3));
                        }));

    // sum (2n+1) V_n(x)
    out.push_back(claim("T4.5-x", Th,
                        "sum_{n<p} (2n+1) V_n(x) = p^3 x'(x'+1)/(x(x+1)) + 2p^4 (x'(x'+1)+1)/(x(x+1)) H_<x> mod p^5, "
                        "x != 0,-1 mod p",
                        5, above(3), [](Cell& c) {
                            c.each_x([&](const BigRational& x) { return not_zero(c, x * (x + 1)); },
                                     [&](const BigRational& x, const std::string& tag) {
                                         auto fi = fractional_info(x, c.p);
                                         Residue l = series(c.v_prefix(x, 5), Residue(1, c.mod(5)),
                                                            static_cast<unsigned>(c.p), odd_weight(c, 5));
                                         BigRational w = fi.xprime * (fi.xprime + 1), D = x * (x + 1);
                                         BigRational rhs = c.pk(3) * w / D +
                                                           2 * c.pk(4) * (w + 1) / D * c.ctx.H1[fi.bracket];
                                         c.check(tag, l, rhs);
                                     });
                        }));
    const struct {
        int i;
        std::function<BigRational(Cell&)> tail;
        std::function<bool(std::uint64_t)> app;
        const char* text;
    } t45[] = {
        {0, [](Cell& c) -> BigRational { return 12 * qp(2, c.p); }, above(3), "sum (2n+1) V_n/16^n = p^3 + 12p^4 q_p(2) mod p^5"},
        {1, [](Cell& c) -> BigRational { return Q(21, 2) * qp(3, c.p); }, above(3),
         "sum (2n+1) V3_n/27^n = p^3 + 21/2 p^4 q_p(3) mod p^5"},
        {2, [](Cell& c) -> BigRational { return 26 * qp(2, c.p); }, above(3), "sum (2n+1) V4_n/64^n = p^3 + 26p^4 q_p(2) mod p^5"},
        {3, [](Cell& c) -> BigRational { return Q(31, 5) * (4 * qp(2, c.p) + 3 * qp(3, c.p)); }, above(5),
         "sum (2n+1) V6_n/432^n = p^3 + 31/5 p^4 (4q_p(2) + 3q_p(3)) mod p^5, p > 5"},
    };
    for (const auto& t : t45) {
        Named s = kV[t.i].s;
        long base = kV[t.i].base;
        auto tail = t.tail;
        out.push_back(claim(std::string("T4.5-") + kV[t.i].tag, Th, t.text, 5, t.app, [=](Cell& c) {
            c.check("", named_sum(c, s, Q(base), 5, odd_weight(c, 5)), c.pk(3) + c.pk(4) * tail(c));
        }));
    }

    // sum (2n+1)(-1)^n V_n(x)
    out.push_back(claim("T4.6-x", Th,
                        "sum_{n<p} (2n+1)(-1)^n V_n(x) = (-1)^<x> p + p^3 (x'(x'+1)+1) E_{p-3}(-x) mod p^4", 4,
                        above(3), [](Cell& c) {
                            c.each_x([](const BigRational&) { return true; },
                                     [&](const BigRational& x, const std::string& tag) {
                                         auto fi = fractional_info(x, c.p);
                                         Residue l = series(c.v_prefix(x, 4), c.R(-1L, 4),
                                                            static_cast<unsigned>(c.p), odd_weight(c, 4));
                                         BigRational rhs =
                                             sgn(static_cast<long long>(fi.bracket)) * c.pk(1) +
                                             c.pk(3) * (fi.xprime * (fi.xprime + 1) + 1) *
                                                 euler_poly(c.ctx.tables, static_cast<unsigned>(c.p) - 3, -x);
                                         c.check(tag, l, rhs);
                                     });
                        }));
    out.push_back(claim("T4.6-V3", Th, "sum (2n+1) V3_n/(-27)^n = (-1)^[p/3] p + 7p^3 U_{p-3} mod p^4", 4, above(3),
                        [](Cell& c) {
                            c.check("", named_sum(c, Named::V3, Q(-27), 4, odd_weight(c, 4)),
                                    sgn(static_cast<long long>(c.p / 3)) * c.pk(1) + 7 * c.pk(3) * c.ctx.U(c.p - 3));
                        }));
    out.push_back(claim("T4.6-V4", Th, "sum (2n+1) V4_n/(-64)^n = (-1)^[p/4] p + 13p^3 s_{p-3} mod p^4", 4, above(3),
                        [](Cell& c) {
                            c.check("", named_sum(c, Named::V4, Q(-64), 4, odd_weight(c, 4)),
                                    sgn(static_cast<long long>(c.p / 4)) * c.pk(1) +
                                        13 * c.pk(3) * BigRational(c.ctx.tables.s[c.p - 3]));
                        }));
    out.push_back(claim("T4.6-V6", Th, "sum (2n+1) V6_n/(-432)^n = (-1)^{(p-1)/2} p + 155/9 p^3 E_{p-3} mod p^4", 4,
                        above(3), [](Cell& c) {
                            c.check("", named_sum(c, Named::V6, Q(-432), 4, odd_weight(c, 4)),
                                    sgn(static_cast<long long>((c.p - 1) / 2)) * c.pk(1) +
                                        Q(155, 9) * c.pk(3) * c.ctx.E(c.p - 3));
                        }));
    out.push_back(claim("R4.3-a", ClaimClass::Remark, "sum (n+1) V_n/8^n = (-1)^{(p-1)/2} p + 5p^3 E_{p-3} mod p^4", 4,
                        above(3), [](Cell& c) {
                            auto M = c.mod(4);
                            c.check("", named_sum(c, Named::V, Q(8), 4, [M](unsigned n) { return Residue(n + 1, M); }),
                                    sgn(static_cast<long long>((c.p - 1) / 2)) * c.pk(1) +
                                        5 * c.pk(3) * c.ctx.E(c.p - 3));
                        }));
    out.push_back(claim("R4.3-b", ClaimClass::Remark,
                        "sum (2n+1) V_n/(-16)^n = (-1)^{(p-1)/2} p + 3p^3 E_{p-3} mod p^4", 4, above(3), [](Cell& c) {
                            c.check("", named_sum(c, Named::V, Q(-16), 4, odd_weight(c, 4)),
                                    sgn(static_cast<long long>((c.p - 1) / 2)) * c.pk(1) +
                                        3 * c.pk(3) * c.ctx.E(c.p - 3));
                        }));

    // sum (-1)^n V_n(x)
    out.push_back(claim("T4.7-x", Th,
                        "sum_{n<p} (-1)^n V_n(x) = sum_{k<=(p-1)/2} C(2k,k)C(x,k)C(-1-x,k)/4^k mod p^2 (<x> even), "
                        "0 mod p (<x> odd), x != 0 mod p",
                        2, odd_prime(), [](Cell& c) {
                            c.each_x([&](const BigRational& x) { return not_zero(c, x); },
                                     [&](const BigRational& x, const std::string& tag) {
                                         long a = static_cast<long>(fractional_info(x, c.p).bracket);
                                         unsigned h = static_cast<unsigned>(c.p - 1) / 2;
                                         if (a % 2) {
                                             Residue l = series(c.v_prefix(x, 1), c.R(-1L, 1),
                                                                static_cast<unsigned>(c.p));
                                             c.check(tag, l, Q(0), "odd");
                                             return;
                                         }
                                         auto M = c.mod(2);
                                         Residue l = series(c.v_prefix(x, 2), c.R(-1L, 2), static_cast<unsigned>(c.p));
                                         const auto& cb = c.central(2);
                                         Residue q4 = Residue(4, M).inv();
                                         Residue r = cc_sum(c, x, 2, [&](unsigned k) {
                                             return k <= h ? cb[k] * q4.pow(static_cast<long long>(k)) : Residue(0, M);
                                         });
                                         c.check(tag, l, r, "even");
                                     });
                        }));
    const struct {
        const char* id;
        Named s;
        long base, d;
        bool sign3;
        const char* text;
    } t47[] = {
        {"T4.7-V3", Named::V3, -27, 3, false,
         "sum V3_n/(-27)^n = 4x^2 - 2p mod p^2 for p = x^2+3y^2, 0 mod p for p = 2 mod 3"},
        {"T4.7-V4", Named::V4, -64, 2, false,
         "sum V4_n/(-64)^n = 4x^2 - 2p mod p^2 for p = x^2+2y^2, 0 mod p for p = 5,7 mod 8"},
        {"T4.7-V6", Named::V6, -432, 4, true,
         "sum V6_n/(-432)^n = (-1)^[p/3](4x^2 - 2p) mod p^2 for p = x^2+4y^2, 0 mod p for p = 3 mod 4"},
    };
    for (const auto& t : t47) {
        Named s = t.s;
        long base = t.base, d = t.d;
        bool sign3 = t.sign3;
        out.push_back(claim(t.id, Th, t.text, 2, above(3), [=](Cell& c) {
            if (auto x = form_x(c, d, 1, SignRule::None)) {
                BigRational X = *x;
                BigRational r = 4 * X * X - 2 * c.pk(1);
                if (sign3) r *= sgn(static_cast<long long>(c.p / 3));
                c.check("", named_sum(c, s, Q(base), 2), r);
            } else {
                c.check("", named_sum(c, s, Q(base), 1), Q(0));
            }
        }));
    }

    // generating functions mod p
    out.push_back(claim("T4.8-x", Th,
                        "sum_{n<p} V_n(x)/m^n = (sum_{k<p} G_k(x)/m^k)^2 mod p, m != 0; = sum_{k<p} "
                        "C(2k,k)C(x,k)C(-1-x,k)/(2-m-1/m)^k mod p for m != +-1",
                        1, above(3), [](Cell& c) {
                            c.each_x([](const BigRational&) { return true; },
                                     [&](const BigRational& x, const std::string& tag) {
                                         BigRational m = draw(c, [&](const BigRational& q) {
                                             return not_zero(c, q * (q - 1) * (q + 1));
                                         });
                                         unsigned n = static_cast<unsigned>(c.p);
                                         Residue z = c.R(1 / m, 1);
                                         Residue l = series(c.v_prefix(x, 1), z, n);
                                         Residue g = series(c.g_prefix(x, 1), z, n);
                                         std::string pm = tag + " m=" + to_string(m);
                                         c.check(pm + " form=square", l, g * g);
                                         const auto& cb = c.central(1);
                                         Residue w = c.R(1 / (2 - m - 1 / m), 1);
                                         Residue r = cc_sum(c, x, 1, [&](unsigned k) {
                                             return cb[k] * w.pow(static_cast<long long>(k));
                                         });
                                         c.check(pm + " form=binomial", l, r);
                                     });
                        }));
    const struct {
        int i;
        Named g;
        long b;
        std::vector<std::pair<int, int>> f;
        const char* text;
    } t48[] = {
        {1, Named::G3, 27, {{2, 1}, {2, 1}, {3, 1}},
         "sum V3_n/m^n = (sum G3_k/m^k)^2 = sum C(2k,k)^2 C(3k,k)/(54-m-729/m)^k mod p, m != 0,+-27"},
        {2, Named::G4, 64, {{2, 1}, {2, 1}, {4, 2}},
         "sum V4_n/m^n = (sum G4_k/m^k)^2 = sum C(2k,k)^2 C(4k,2k)/(128-m-4096/m)^k mod p, m != 0,+-64"},
        {3, Named::G6, 432, {{2, 1}, {3, 1}, {6, 3}},
         "sum V6_n/m^n = (sum G6_k/m^k)^2 = sum C(2k,k)C(3k,k)C(6k,3k)/(864-m-186624/m)^k mod p, m != 0,+-432"},
    };
    for (const auto& t : t48) {
        Named s = kV[t.i].s, g = t.g;
        long b = t.b;
        auto f = t.f;
        out.push_back(claim(std::string("T4.8-") + kV[t.i].tag, Th, t.text, 1, above(3), [=](Cell& c) {
            auto M = c.mod(1);
            std::vector<Residue> prod;
            for (long k = 0; k < static_cast<long>(c.p); ++k) {
                BigInt v = 1;
                for (auto [a, bb] : f) v *= int_binomial(a * k, bb * k);
                prod.push_back(reduce_mod(v, M));
            }
            c.each_m({}, [&](const BigRational& m) { return not_zero(c, m * (m - b) * (m + b)); },
                     [&](const BigRational& m, const std::string& tag) {
                         Residue l = named_sum(c, s, m, 1);
                         Residue gs = named_sum(c, g, m, 1);
                         c.check(tag + " form=square", l, gs * gs);
                         Residue r = series(prod, c.R(1 / (2 * b - m - Q(b * b) / m), 1), static_cast<unsigned>(c.p));
                         c.check(tag + " form=binomial", l, r);
                     });
        }));
    }
}

}  // namespace apery::detail
