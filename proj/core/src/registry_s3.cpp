#include "claim_util.hpp"

namespace apery::detail {

namespace {

const auto Th = ClaimClass::Theorem;

bool not_zero(const Cell& c, const BigRational& q) { return !zero_mod(c, q); }

long floor_pm(std::uint64_t p, long m) { return static_cast<long>(p) / m; }

// sum_{n<p} w(n) u_n / d^n for a named sequence
Residue named_sum(Cell& c, Named s, const BigRational& d, int e, const std::function<Residue(unsigned)>& w = nullptr) {
    return series(c.named_prefix(s, e), c.R(1 / d, e), static_cast<unsigned>(c.p), w);
}

Residue weight_n(Cell& c, unsigned n, int e) { return Residue(n, c.mod(e)); }

// sum_{k<=a} C(a,k) C(a+k,k) C(2k,k)/(-4)^k * f(k) for integer a
BigRational bell_sum(long a, long from, const std::function<BigRational(long)>& f) {
    BigRational s = 0;
    for (long k = from; k <= a; ++k)
        s += BigRational(int_binomial(a, k) * int_binomial(a + k, k) * int_binomial(2 * k, k)) / pow_q(Q(-4), k) *
             (f ? f(k) : BigRational(1));
    return s;
}

struct Special {
    const char* id;
    Named seq;
    long m;
};

}  // namespace

void register_section3(std::vector<ClaimSpec>& out) {
    // sum G_n(x)
    out.push_back(claim("T3.2-x", Th,
                        "sum_{n<p} G_n(x) = p^2 (x'(x'+1) + 1 - (-1)^<x>)/(x(x+1)) mod p^3, x != 0,-1 mod p", 3,
                        odd_prime(), [](Cell& c) {
                            c.each_x([&](const BigRational& x) { return not_zero(c, x * (x + 1)); },
                                     [&](const BigRational& x, const std::string& tag) {
                                         auto fi = fractional_info(x, c.p);
                                         auto& g = c.g_prefix(x, 3);
                                         Residue l = series(g, Residue(1, c.mod(3)), static_cast<unsigned>(c.p));
                                         BigRational w = fi.xprime * (fi.xprime + 1);
                                         c.check(tag, l,
                                                 c.pk(2) * (w + 1 - sgn(static_cast<long long>(fi.bracket))) /
                                                     (x * (x + 1)));
                                     });
                        }));
    const struct {
        const char* id;
        Named s;
        long m;
        std::function<BigRational(std::uint64_t)> coeff;
        const char* text;
    } t32[] = {
        {"T3.2-G3", Named::G3, 27, [](std::uint64_t p) { return p % 3 == 1 ? Q(1) : Q(-8); },
         "sum G3_n/27^n = p^2 (p = 1 mod 3), -8p^2 (p = 2 mod 3) mod p^3"},
        {"T3.2-G4", Named::G4, 64,
         [](std::uint64_t p) { return (p % 8 == 1 || p % 8 == 3) ? Q(1) : Q(-29, 3); },
         "sum G4_n/64^n = p^2 (p = 1,3 mod 8), -29/3 p^2 (p = 5,7 mod 8) mod p^3"},
        {"T3.2-G6", Named::G6, 432, [](std::uint64_t p) { return p % 4 == 1 ? Q(1) : Q(-67, 5); },
         "sum G6_n/432^n = p^2 (p = 1 mod 4), -67/5 p^2 (p = 3 mod 4) mod p^3"},
        {"R3.1", Named::G, 16, [](std::uint64_t p) { return Q(4 * sgn((p - 1) / 2) - 3); },
         "sum G_n/16^n = (4(-1)^{(p-1)/2} - 3) p^2 mod p^3"},
    };
    for (const auto& t : t32) {
        auto coeff = t.coeff;
        Named s = t.s;
        long m = t.m;
        bool remark = std::string(t.id) == "R3.1";
        out.push_back(claim(t.id, remark ? ClaimClass::Remark : Th, t.text, 3, remark ? odd_prime() : above(3),
                            [=](Cell& c) { c.check("", named_sum(c, s, Q(m), 3), coeff(c.p) * c.pk(2)); }));
    }

    // sum n G_n(x)
    out.push_back(claim("T3.3-x", Th,
                        "sum_{n<p} n G_n(x) = p^2 (x'(x'+1)(1-x(x+1)) - x(x+1))/((x-1)x(x+1)(x+2)) for <x> even, "
                        "p^2 (x'(x'+1)(1-x(x+1)) - (x-1)(x+2))/((x-1)x(x+1)(x+2)) for <x> odd, mod p^3",
                        3, odd_prime(), [](Cell& c) {
                            c.each_x([&](const BigRational& x) { return not_zero(c, (x - 1) * x * (x + 1) * (x + 2)); },
                                     [&](const BigRational& x, const std::string& tag) {
                                         auto fi = fractional_info(x, c.p);
                                         auto& g = c.g_prefix(x, 3);
                                         Residue l = series(g, Residue(1, c.mod(3)), static_cast<unsigned>(c.p),
                                                            [&](unsigned n) { return weight_n(c, n, 3); });
                                         BigRational w = fi.xprime * (fi.xprime + 1);
                                         BigRational D = (x - 1) * x * (x + 1) * (x + 2);
                                         BigRational tail = fi.bracket % 2 == 0 ? BigRational(x * (x + 1)) : BigRational((x - 1) * (x + 2));
                                         c.check(tag, l, c.pk(2) * (w * (1 - x * (x + 1)) - tail) / D,
                                                 fi.bracket % 2 == 0 ? "even" : "odd");
                                     });
                        }));
    const struct {
        const char* id;
        Named s;
        long m;
        std::function<bool(std::uint64_t)> first;  // which branch
        BigRational c1, c2;
        std::function<bool(std::uint64_t)> app;
        const char* text;
    } t33[] = {
        {"T3.3-G", Named::G, 16, [](std::uint64_t p) { return p % 4 == 1; }, Q(-1, 9), Q(31, 9), above(3),
         "sum n G_n/16^n = -1/9 p^2 (p = 1 mod 4), 31/9 p^2 (p = 3 mod 4) mod p^3"},
        {"T3.3-G3", Named::G3, 27, [](std::uint64_t p) { return p % 3 == 1; }, Q(-1, 10), Q(79, 20),
         [](std::uint64_t p) { return p > 3 && p != 5; },
         "sum n G3_n/27^n = -1/10 p^2 (p = 1 mod 3), 79/20 p^2 (p = 2 mod 3, p != 5) mod p^3"},
        {"T3.3-G4", Named::G4, 64, [](std::uint64_t p) { return p % 8 == 1 || p % 8 == 3; }, Q(-3, 35), Q(503, 105),
         [](std::uint64_t p) { return p > 3 && p != 5 && p != 7; },
         "sum n G4_n/64^n = -3/35 p^2 (p = 1,3 mod 8), 503/105 p^2 (p = 5,7 mod 8, p != 5,7) mod p^3"},
        {"T3.3-G6", Named::G6, 432, [](std::uint64_t p) { return p % 4 == 1; }, Q(-5, 77), Q(2567, 385),
         [](std::uint64_t p) { return p > 3 && p != 7 && p != 11; },
         "sum n G6_n/432^n = -5/77 p^2 (p = 1 mod 4), 2567/385 p^2 (p = 3 mod 4, p != 7,11) mod p^3"},
    };
    for (const auto& t : t33) {
        auto first = t.first;
        auto c1 = t.c1, c2 = t.c2;
        Named s = t.s;
        long m = t.m;
        out.push_back(claim(t.id, Th, t.text, 3, t.app, [=](Cell& c) {
            Residue l = named_sum(c, s, Q(m), 3, [&](unsigned n) { return weight_n(c, n, 3); });
            c.check("", l, (first(c.p) ? c1 : c2) * c.pk(2));
        }));
    }

    // G_{p-1}(x)
    out.push_back(claim("T3.4-x", Th,
                        "G_{p-1}(x) = (-1)^<x>(1 - 2p beta + 2p^2 beta^2) + p^2 (x'(x'+1)+1) E_{p-3}(-x) mod p^3, "
                        "beta = beta_p(x)",
                        3, above(3), [](Cell& c) {
                            c.each_x([](const BigRational&) { return true; },
                                     [&](const BigRational& x, const std::string& tag) {
                                         auto fi = fractional_info(x, c.p);
                                         BigRational b = beta(x, c.p), P = c.pk(1);
                                         BigRational rhs =
                                             sgn(static_cast<long long>(fi.bracket)) * (1 - 2 * P * b + 2 * P * P * b * b) +
                                             P * P * (fi.xprime * (fi.xprime + 1) + 1) *
                                                 euler_poly(c.ctx.tables, static_cast<unsigned>(c.p) - 3, -x);
                                         c.check(tag, c.g_prefix(x, 3)[c.p - 1], rhs);
                                     });
                        }));
    auto t34 = [&](const char* id, ClaimClass cls, Named s, std::function<BigRational(Cell&)> rhs, const char* text) {
        out.push_back(claim(id, cls, text, 3, above(3),
                            [=](Cell& c) { c.check("", c.named_prefix(s, 3)[c.p - 1], rhs(c)); }));
    };
    t34("T3.4-G3", Th, Named::G3,
        [](Cell& c) -> BigRational {
            return sgn(floor_pm(c.p, 3)) * BigRational(pow_z(729, c.p - 1)) + 7 * c.pk(2) * c.ctx.U(c.p - 3);
        },
        "G3_{p-1} = (-1)^[p/3] 729^{p-1} + 7p^2 U_{p-3} mod p^3");
    t34("T3.4-G6", Th, Named::G6,
        [](Cell& c) -> BigRational {
            return sgn((c.p - 1) / 2) * BigRational(pow_z(186624, c.p - 1)) + Q(155, 9) * c.pk(2) * c.ctx.E(c.p - 3);
        },
        "G6_{p-1} = (-1)^{(p-1)/2} 186624^{p-1} + 155/9 p^2 E_{p-3} mod p^3");
    t34("T3.4-G4", Th, Named::G4,
        [](Cell& c) -> BigRational {
            return sgn(floor_pm(c.p, 4)) * BigRational(pow_z(4096, c.p - 1)) +
                   13 * c.pk(2) * BigRational(c.ctx.tables.s[c.p - 3]);
        },
        "G4_{p-1} = (-1)^[p/4] 4096^{p-1} + 13p^2 s_{p-3} mod p^3");
    t34("R3.2", ClaimClass::Remark, Named::G,
        [](Cell& c) -> BigRational {
            return sgn((c.p - 1) / 2) * BigRational(pow_z(256, c.p - 1)) + 3 * c.pk(2) * c.ctx.E(c.p - 3);
        },
        "G_{p-1} = (-1)^{(p-1)/2} 256^{p-1} + 3p^2 E_{p-3} mod p^3");

    // G_p(x)
    out.push_back(claim("T3.5-x", Th,
                        "G_p(x) = 1 - C(x,p)C(-1-x,p) + 2p beta + 2p^2 beta^2 + p^2 (-1)^<x> E_{p-3}(-x) mod p^3, "
                        "x != 0 mod p",
                        3, above(3), [](Cell& c) {
                            c.each_x([&](const BigRational& x) { return not_zero(c, x); },
                                     [&](const BigRational& x, const std::string& tag) {
                                         auto fi = fractional_info(x, c.p);
                                         BigRational b = beta(x, c.p), P = c.pk(1);
                                         long p = static_cast<long>(c.p);
                                         BigRational rhs = 1 - rat_binomial(x, p) * rat_binomial(-1 - x, p) +
                                                           2 * P * b + 2 * P * P * b * b +
                                                           P * P * sgn(static_cast<long long>(fi.bracket)) *
                                                               euler_poly(c.ctx.tables, static_cast<unsigned>(p) - 3, -x);
                                         c.check(tag, c.R(c.g_exact(x, static_cast<unsigned>(p)), 3), rhs);
                                     });
                        }));
    auto t35 = [&](const char* id, Named s, std::function<BigRational(Cell&)> rhs, const char* text) {
        out.push_back(claim(id, Th, text, 3, above(3), [=](Cell& c) {
            c.check("", c.R(BigRational(c.named_exact(s, static_cast<unsigned>(c.p))), 3), rhs(c));
        }));
    };
    t35("T3.5-G", Named::G, [](Cell& c) -> BigRational { return 12 + 64 * sgn((c.p - 1) / 2) * c.pk(2) * c.ctx.E(c.p - 3); },
        "G_p = 12 + 64 (-1)^{(p-1)/2} p^2 E_{p-3} mod p^3");
    t35("T3.5-G3", Named::G3, [](Cell& c) -> BigRational { return 21 + 243 * sgn(floor_pm(c.p, 3)) * c.pk(2) * c.ctx.U(c.p - 3); },
        "G3_p = 21 + 243 (-1)^[p/3] p^2 U_{p-3} mod p^3");
    t35("T3.5-G4", Named::G4,
        [](Cell& c) -> BigRational {
            return 52 + 1024 * sgn(floor_pm(c.p, 4)) * c.pk(2) * BigRational(c.ctx.tables.s[c.p - 3]);
        },
        "G4_p = 52 + 1024 (-1)^[p/4] p^2 s_{p-3} mod p^3");
    t35("T3.5-G6", Named::G6, [](Cell& c) -> BigRational { return 372 + 8640 * sgn((c.p - 1) / 2) * c.pk(2) * c.ctx.E(c.p - 3); },
        "G6_p = 372 + 8640 (-1)^{(p-1)/2} p^2 E_{p-3} mod p^3");

    // G_{(p-1)/2}(x)
    out.push_back(claim("T3.6-x", Th,
                        "G_{(p-1)/2}(x) = C(<x>,<x>/2)^2/4^<x> (<x> even), 0 (<x> odd) mod p, x != 0 mod p", 1,
                        odd_prime(), [](Cell& c) {
                            c.each_x([&](const BigRational& x) { return not_zero(c, x); },
                                     [&](const BigRational& x, const std::string& tag) {
                                         long a = static_cast<long>(fractional_info(x, c.p).bracket);
                                         Residue l = c.g_prefix(x, 1)[(c.p - 1) / 2];
                                         BigRational rhs = a % 2 ? Q(0) : binq(a, a / 2) * binq(a, a / 2) / pow_q(Q(4), a);
                                         c.check(tag, l, rhs, a % 2 ? "odd" : "even");
                                     });
                        }));
    out.push_back(claim(
        "T3.6-x2", Th,
        "G_{(p-1)/2}(x) mod p^2: sum_{k<=(p-1)/2} C(x,k)C(-1-x,k)C(2k,k)/4^k (<x> even); "
        "-sum_{k=(p+1)/2}^{<x>} C(<x>,k)C(<x>+k,k)C(2k,k)/(-4)^k - p sum_{k<=<x>} C(<x>,k)C(<x>+k,k)C(2k,k)/(-4)^k H_k "
        "(<x> odd)",
        2, odd_prime(), [](Cell& c) {
            c.each_x([&](const BigRational& x) { return not_zero(c, x); },
                     [&](const BigRational& x, const std::string& tag) {
                         long a = static_cast<long>(fractional_info(x, c.p).bracket);
                         unsigned h = static_cast<unsigned>(c.p - 1) / 2;
                         Residue l = c.g_prefix(x, 2)[h];
                         if (a % 2 == 0) {
                             auto M = c.mod(2);
                             const auto& cb = c.central(2);
                             Residue q4 = Residue(4, M).inv();
                             Residue r = cc_sum(c, x, 2, [&](unsigned k) {
                                 return k <= h ? cb[k] * q4.pow(static_cast<long long>(k)) : Residue(0, M);
                             });
                             c.check(tag, l, r, "even");
                         } else {
                             BigRational r = -bell_sum(a, static_cast<long>(h) + 1, nullptr) -
                                             c.pk(1) * bell_sum(a, 0, [&](long k) { return c.ctx.H1[k]; });
                             c.check(tag, l, r, "odd");
                         }
                     });
        }));
    out.push_back(claim("T3.6-G3", Th,
                        "G3_{(p-1)/2} = 27^{(p-1)/2}(4x^2 - 2p) mod p^2 for p = x^2+3y^2, 0 mod p for p = 2 mod 3", 2,
                        above(3), [](Cell& c) {
                            unsigned h = static_cast<unsigned>(c.p - 1) / 2;
                            if (auto x = form_x(c, 3, 1, SignRule::None)) {
                                BigRational X = *x;
                                c.check("", c.named_prefix(Named::G3, 2)[h],
                                        BigRational(pow_z(27, h)) * (4 * X * X - 2 * c.pk(1)));
                            } else {
                                c.check("", c.named_prefix(Named::G3, 1)[h], Q(0));
                            }
                        }));
    out.push_back(claim("T3.6-G4", Th,
                        "G4_{(p-1)/2} = 8^{p-1} 4x^2 - 2p mod p^2 for p = x^2+2y^2, 0 mod p for p = 5,7 mod 8", 2,
                        above(3), [](Cell& c) {
                            unsigned h = static_cast<unsigned>(c.p - 1) / 2;
                            if (auto x = form_x(c, 2, 1, SignRule::None)) {
                                BigRational X = *x;
                                c.check("", c.named_prefix(Named::G4, 2)[h],
                                        BigRational(pow_z(8, c.p - 1)) * 4 * X * X - 2 * c.pk(1));
                            } else {
                                c.check("", c.named_prefix(Named::G4, 1)[h], Q(0));
                            }
                        }));
    out.push_back(claim("T3.6-G6", Th,
                        "G6_{(p-1)/2} = 432^{(p-1)/2} (p/3) 4x^2 - 2p mod p^2 for p = x^2+4y^2, 0 mod p for p = 3 mod 4",
                        2, above(3), [](Cell& c) {
                            unsigned h = static_cast<unsigned>(c.p - 1) / 2;
                            if (auto x = form_x(c, 4, 1, SignRule::None)) {
                                BigRational X = *x;
                                long lp = legendre(Q(static_cast<long>(c.p)), 3);
                                c.check("", c.named_prefix(Named::G6, 2)[h],
                                        BigRational(pow_z(432, h)) * lp * 4 * X * X - 2 * c.pk(1));
                            } else {
                                c.check("", c.named_prefix(Named::G6, 1)[h], Q(0));
                            }
                        }));
    out.push_back(claim("R3.3", ClaimClass::Remark,
                        "G_{(p-1)/2} = 4^p x^2 - 2p mod p^2 for p = x^2+4y^2, 0 mod p^2 for p = 3 mod 4", 2, above(3),
                        [](Cell& c) {
                            unsigned h = static_cast<unsigned>(c.p - 1) / 2;
                            Residue l = c.named_prefix(Named::G, 2)[h];
                            if (auto x = form_x(c, 4, 1, SignRule::None)) {
                                BigRational X = *x;
                                c.check("", l, BigRational(pow_z(4, c.p)) * X * X - 2 * c.pk(1));
                            } else {
                                c.check("", l, Q(0));
                            }
                        }));

    // transfers mod p
    out.push_back(claim("T3.7-x", Th,
                        "sum_{k<p} G_k(x)/m^k = sum_{k<p} C(x,k)C(-1-x,k)/(1-m)^k mod p, m != 0,1 mod p", 1,
                        odd_prime(), [](Cell& c) {
                            c.each_x([](const BigRational&) { return true; },
                                     [&](const BigRational& x, const std::string& tag) {
                                         BigRational m = draw(c, [&](const BigRational& q) {
                                             return not_zero(c, q * (q - 1));
                                         });
                                         Residue l = series(c.g_prefix(x, 1), c.R(1 / m, 1), static_cast<unsigned>(c.p));
                                         Residue z = c.R(1 / (1 - m), 1);
                                         Residue r = cc_sum(c, x, 1, [&](unsigned k) {
                                             return z.pow(static_cast<long long>(k));
                                         });
                                         c.check(tag + " m=" + to_string(m), l, r);
                                     });
                        }));
    out.push_back(claim("T3.7-x2", Th,
                        "sum_{k<p} C(2k,k) G_k(x)/(m+2)^k = ((m+2)(m-2)/p) sum_{k<p} C(2k,k) C(x,k)C(-1-x,k)/(2-m)^k "
                        "mod p, m != +-2 mod p",
                        1, odd_prime(), [](Cell& c) {
                            c.each_x([](const BigRational&) { return true; },
                                     [&](const BigRational& x, const std::string& tag) {
                                         BigRational m = draw(c, [&](const BigRational& q) {
                                             return not_zero(c, (q + 2) * (q - 2));
                                         });
                                         const auto& cb = c.central(1);
                                         auto w = [&](unsigned k) { return cb[k]; };
                                         Residue l = series(c.g_prefix(x, 1), c.R(1 / (m + 2), 1),
                                                            static_cast<unsigned>(c.p), w);
                                         Residue z = c.R(1 / (2 - m), 1);
                                         Residue r = cc_sum(c, x, 1, [&](unsigned k) {
                                             return cb[k] * z.pow(static_cast<long long>(k));
                                         });
                                         r *= c.R(legendre((m + 2) * (m - 2), c.p), 1);
                                         c.check(tag + " m=" + to_string(m), l, r);
                                     });
                        }));
    const struct {
        const char* id;
        Named s;
        long base;
        bool weighted;
        std::initializer_list<std::pair<int, int>> f;
        const char* text;
    } t37[] = {
        {"T3.7-G3", Named::G3, 27, false, {{2, 1}, {3, 1}},
         "sum G3_k/m^k = sum C(2k,k)C(3k,k)/(27-m)^k mod p, m != 0,27"},
        {"T3.7-G4", Named::G4, 64, false, {{2, 1}, {4, 2}},
         "sum G4_k/m^k = sum C(2k,k)C(4k,2k)/(64-m)^k mod p, m != 0,64"},
        {"T3.7-G6", Named::G6, 432, false, {{3, 1}, {6, 3}},
         "sum G6_k/m^k = sum C(3k,k)C(6k,3k)/(432-m)^k mod p, m != 0,432"},
        {"T3.7-G3c", Named::G3, 108, true, {{2, 1}, {2, 1}, {3, 1}},
         "sum C(2k,k) G3_k/m^k = (m(m-108)/p) sum C(2k,k)^2 C(3k,k)/(108-m)^k mod p, m != 0,108"},
        {"T3.7-G4c", Named::G4, 256, true, {{2, 1}, {2, 1}, {4, 2}},
         "sum C(2k,k) G4_k/m^k = (m(m-256)/p) sum C(2k,k)^2 C(4k,2k)/(256-m)^k mod p, m != 0,256"},
        {"T3.7-G6c", Named::G6, 1728, true, {{2, 1}, {3, 1}, {6, 3}},
         "sum C(2k,k) G6_k/m^k = (m(m-1728)/p) sum C(2k,k)C(3k,k)C(6k,3k)/(1728-m)^k mod p, m != 0,1728"},
    };
    for (const auto& t : t37) {
        Named s = t.s;
        long base = t.base;
        bool weighted = t.weighted;
        std::vector<std::pair<int, int>> f(t.f);
        out.push_back(claim(t.id, Th, t.text, 1, above(3), [=](Cell& c) {
            std::vector<Residue> prod;
            {
                auto M = c.mod(1);
                prod.clear();
                for (long k = 0; k < static_cast<long>(c.p); ++k) {
                    BigInt v = 1;
                    for (auto [a, b] : f) v *= int_binomial(a * k, b * k);
                    prod.push_back(reduce_mod(v, M));
                }
            }
            std::vector<Residue> ones(c.p, Residue(1, c.mod(1)));
            c.each_m({}, [&](const BigRational& m) { return not_zero(c, m * (m - base)); },
                     [&](const BigRational& m, const std::string& tag) {
                         const auto& cb = c.central(1);
                         Residue l = weighted ? named_sum(c, s, m, 1, [&](unsigned k) { return cb[k]; })
                                              : named_sum(c, s, m, 1);
                         Residue r = series(prod, c.R(1 / (base - m), 1), static_cast<unsigned>(c.p));
                         if (weighted) r *= c.R(legendre(m * (m - base), c.p), 1);
                         c.check(tag, l, r);
                     });
        }));
    }

    // quadratic forms mod p
    auto qf = [&](const char* id, const char* text, std::function<bool(std::uint64_t)> app,
                  std::function<Residue(Cell&)> lhs, std::function<BigRational(Cell&)> rhs) {
        out.push_back(claim(id, Th, text, 1, std::move(app), [=](Cell& c) { c.check("", lhs(c), rhs(c)); }));
    };
    auto two_x = [](long d, SignRule rule) {
        return [=](Cell& c) -> BigRational {
            auto x = form_x(c, d, 1, rule);
            return x ? Q(2 * *x) : Q(0);
        };
    };
    auto minus_L = [](Cell& c) -> BigRational {
        if (c.p % 3 != 1) return Q(0);
        auto rep = c.ctx.rep(27, 4);
        if (!rep) throw std::logic_error("4p = L^2 + 27M^2 has no solution");
        return Q(-normalize(*rep, SignRule::Mod3IsOne));
    };
    qf("T3.8-a", "sum G3_n/(-27)^n = 2x mod p for p = x^2+3y^2, 3 | x-1; 0 mod p for p = 2 mod 3", above(3),
       [](Cell& c) { return named_sum(c, Named::G3, Q(-27), 1); }, two_x(3, SignRule::Mod3IsOne));
    qf("T3.8-b", "sum G3_n/3^n = -L mod p for 4p = L^2+27M^2, 3 | L-1; 0 mod p for p = 2 mod 3", above(3),
       [](Cell& c) { return named_sum(c, Named::G3, Q(3), 1); }, minus_L);
    qf("T3.8-c", "sum G3_n/243^n = -L mod p for 4p = L^2+27M^2, 3 | L-1; 0 mod p for p = 2 mod 3", above(3),
       [](Cell& c) { return named_sum(c, Named::G3, Q(243), 1); }, minus_L);

    auto leg = [](long a) { return [a](Cell& c) { return c.R(legendre(Q(a), c.p), 1); }; };
    auto not7 = [](std::uint64_t p) { return p > 3 && p != 7; };
    qf("T3.9-a", "(-3/p) sum G4_n = 2x mod p for p = x^2+7y^2, (x/7) = 1; 0 mod p for p = 3,5,6 mod 7", not7,
       [=](Cell& c) { return leg(-3)(c) * named_sum(c, Named::G4, Q(1), 1); }, two_x(7, SignRule::Legendre7IsOne));
    qf("T3.9-b", "(6/p) sum G4_n/4096^n = 2x mod p for p = x^2+7y^2, (x/7) = 1; 0 mod p for p = 3,5,6 mod 7", not7,
       [=](Cell& c) { return leg(6)(c) * named_sum(c, Named::G4, Q(4096), 1); },
       two_x(7, SignRule::Legendre7IsOne));
    qf("T3.9-c", "(6/p) sum G4_n/(-8)^n = 2x mod p for p = x^2+4y^2, 4 | x-1; 0 mod p for p = 3 mod 4", above(3),
       [=](Cell& c) { return leg(6)(c) * named_sum(c, Named::G4, Q(-8), 1); }, two_x(4, SignRule::Mod4IsOne));
    qf("T3.9-d", "(3/p) sum G4_n/(-512)^n = 2x mod p for p = x^2+4y^2, 4 | x-1; 0 mod p for p = 3 mod 4", above(3),
       [=](Cell& c) { return leg(3)(c) * named_sum(c, Named::G4, Q(-512), 1); }, two_x(4, SignRule::Mod4IsOne));
    qf("T3.9-e", "sum G4_n/16^n = 2x mod p for p = x^2+3y^2, 3 | x-1; 0 mod p for p = 2 mod 3", above(3),
       [](Cell& c) { return named_sum(c, Named::G4, Q(16), 1); }, two_x(3, SignRule::Mod3IsOne));
    qf("T3.9-f", "(-2/p) sum G4_n/256^n = 2x mod p for p = x^2+3y^2, 3 | x-1; 0 mod p for p = 2 mod 3", above(3),
       [=](Cell& c) { return leg(-2)(c) * named_sum(c, Named::G4, Q(256), 1); }, two_x(3, SignRule::Mod3IsOne));
    qf("T3.9-g",
       "sum G4_n/(-64)^n = (-1)^{[p/8]+(p-1)/2} 2x mod p for p = x^2+2y^2, 4 | x-1; 0 mod p for p = 5,7 mod 8",
       above(3), [](Cell& c) { return named_sum(c, Named::G4, Q(-64), 1); },
       [](Cell& c) -> BigRational {
           auto x = form_x(c, 2, 1, SignRule::Mod4IsOne);
           if (!x) return Q(0);
           return Q(sgn(static_cast<long long>(c.p / 8 + (c.p - 1) / 2)) * 2 * *x);
       });
}

}  // namespace apery::detail
