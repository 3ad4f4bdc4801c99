#include "claim_util.hpp"

namespace apery::detail {

namespace {

const auto Th = ClaimClass::Theorem;

bool not_zero(const Cell& c, const BigRational& q) { return !zero_mod(c, q); }

Residue named_sum(Cell& c, Named s, const BigRational& d, int e, bool central = false) {
    if (!central) return series(c.named_prefix(s, e), c.R(1 / d, e), static_cast<unsigned>(c.p));
    const auto& cb = c.central(e);
    return series(c.named_prefix(s, e), c.R(1 / d, e), static_cast<unsigned>(c.p), [&](unsigned k) { return cb[k]; });
}

// sum_{k<p} C(2k,k)C(3k,k)/d^k mod p
Residue bin23(Cell& c, const BigRational& d) {
    auto M = c.mod(1);
    std::vector<Residue> prod;
    for (long k = 0; k < static_cast<long>(c.p); ++k)
        prod.push_back(reduce_mod(BigInt(int_binomial(2 * k, k) * int_binomial(3 * k, k)), M));
    return series(prod, c.R(1 / d, 1), static_cast<unsigned>(c.p));
}

std::function<BigRational(Cell&)> four_x2(long d, long alpha = 1) {
    return [=](Cell& c) -> BigRational {
        auto x = form_x(c, d, alpha, SignRule::None);
        return x ? Q(4 * *x * *x) : Q(0);
    };
}

}  // namespace

void register_section5(std::vector<ClaimSpec>& out) {
    const struct {
        const char* id;
        Named s;
        long scale;  // sum u_k/(scale m)^k
        std::function<bool(const Cell&, const BigRational&)> ok;
        std::function<BigRational(const BigRational&)> den;
        const char* text;
    } t51[] = {
        {"T5.1-a1", Named::a, 1, [](const Cell& c, const BigRational& m) { return not_zero(c, m - 3); },
         [](const BigRational& m) -> BigRational { return pow_q(m - 3, 3) / (m - 1); },
         "sum a_k/m^k = sum C(2k,k)C(3k,k)/((m-3)^3/(m-1))^k mod p, m != 0,1,3"},
        {"T5.1-a2", Named::a, 1, [](const Cell& c, const BigRational& m) { return not_zero(c, m + 3); },
         [](const BigRational& m) -> BigRational { return pow_q(m + 3, 3) / ((m - 1) * (m - 1)); },
         "sum a_k/m^k = sum C(2k,k)C(3k,k)/((m+3)^3/(m-1)^2)^k mod p, m != 0,1,-3"},
        {"T5.1-Q1", Named::Q, -8, [](const Cell& c, const BigRational& m) { return not_zero(c, 4 * m - 3); },
         [](const BigRational& m) -> BigRational { return pow_q(4 * m - 3, 3) / (m - 1); },
         "sum Q_k/(-8m)^k = sum C(2k,k)C(3k,k)/((4m-3)^3/(m-1))^k mod p, m != 0,1,3/4"},
        {"T5.1-Q2", Named::Q, -8, [](const Cell& c, const BigRational& m) { return not_zero(c, 2 * m - 3); },
         [](const BigRational& m) -> BigRational { return -pow_q(2 * m - 3, 3) / ((m - 1) * (m - 1)); },
         "sum Q_k/(-8m)^k = sum C(2k,k)C(3k,k)/(-(2m-3)^3/(m-1)^2)^k mod p, m != 0,1,3/2"},
    };
    for (const auto& t : t51) {
        Named s = t.s;
        long scale = t.scale;
        auto ok = t.ok;
        auto den = t.den;
        out.push_back(claim(t.id, Th, t.text, 1, odd_prime(), [=](Cell& c) {
            c.each_m({}, [&](const BigRational& m) { return not_zero(c, m * (m - 1)) && ok(c, m); },
                     [&](const BigRational& m, const std::string& tag) {
                         c.check(tag, named_sum(c, s, scale * m, 1), bin23(c, den(m)));
                     });
        }));
    }

    auto two_x3 = [](Cell& c) -> BigRational {
        auto x = form_x(c, 3, 1, SignRule::Mod3IsOne);
        return x ? Q(2 * *x) : Q(0);
    };
    out.push_back(claim("T5.2-a", Th, "sum Q_n/(-6)^n = 2x mod p for p = x^2+3y^2, 3 | x-1; 0 mod p for p = 2 mod 3",
                        1, above(3), [=](Cell& c) { c.check("", named_sum(c, Named::Q, Q(-6), 1), two_x3(c)); }));
    out.push_back(claim("T5.2-b", Th,
                        "sum Q_n/(-12)^n = 2x mod p for p = x^2+3y^2, 3 | x-1; 0 mod p for p = 2 mod 3", 1, above(3),
                        [=](Cell& c) { c.check("", named_sum(c, Named::Q, Q(-12), 1), two_x3(c)); }));

    const struct {
        const char* id;
        Named l;
        long ls;  // lhs denominator ls (m+2)
        Named r;
        long rs;  // rhs denominator rs (m-2), or (-9m+14) when rs == 0
        std::function<bool(std::uint64_t)> app;
        const char* text;
    } t53[] = {
        {"T5.3-1", Named::a, 1, Named::f, 1, odd_prime(),
         "sum C(2k,k) a_k/(m+2)^k = ((m+2)(m-2)/p) sum C(2k,k) f_k/(m-2)^k mod p"},
        {"T5.3-2", Named::Q, -8, Named::f, -8, odd_prime(),
         "sum C(2k,k) Q_k/(-8(m+2))^k = ((m+2)(m-2)/p) sum C(2k,k) f_k/(-8(m-2))^k mod p"},
        {"T5.3-3", Named::Q, -9, Named::a, -9, above(3),
         "sum C(2k,k) Q_k/(-9(m+2))^k = ((m+2)(m-2)/p) sum C(2k,k) a_k/(-9(m-2))^k mod p"},
        {"T5.3-4", Named::Q, -9, Named::f, 0, above(3),
         "sum C(2k,k) Q_k/(-9(m+2))^k = ((m+2)(9m-14)/p) sum C(2k,k) f_k/(-9m+14)^k mod p, 9m-14 != 0"},
    };
    for (const auto& t : t53) {
        Named l = t.l, r = t.r;
        long ls = t.ls, rs = t.rs;
        out.push_back(claim(t.id, Th, t.text, 1, t.app, [=](Cell& c) {
            c.each_m({},
                     [&](const BigRational& m) {
                         return not_zero(c, (m + 2) * (m - 2)) && (rs != 0 || not_zero(c, 9 * m - 14));
                     },
                     [&](const BigRational& m, const std::string& tag) {
                         Residue lhs = named_sum(c, l, ls * (m + 2), 1, true);
                         BigRational d = rs ? BigRational(rs * (m - 2)) : BigRational(14 - 9 * m);
                         BigRational sym = rs ? BigRational((m + 2) * (m - 2)) : BigRational((m + 2) * (9 * m - 14));
                         Residue rhs = c.R(legendre(sym, c.p), 1) * named_sum(c, r, d, 1, true);
                         c.check(tag, lhs, rhs);
                     });
        }));
    }

    const struct {
        const char* id;
        Named s;
        long d;
        bool sign;
        std::function<bool(std::uint64_t)> app;
        std::function<BigRational(Cell&)> rhs;
        const char* text;
    } tq[] = {
        {"T5.4-a", Named::a, 54, true, above(5), four_x2(3),
         "(-1)^{(p-1)/2} sum C(2n,n) a_n/54^n = 4x^2 mod p for p = x^2+3y^2, 0 mod p for p = 2 mod 3"},
        {"T5.4-b", Named::Q, 18, false, above(5), four_x2(3),
         "sum C(2n,n) Q_n/18^n = 4x^2 mod p for p = x^2+3y^2, 0 mod p for p = 2 mod 3"},
        {"T5.4-c", Named::Q, -36, false, above(5), four_x2(3),
         "sum C(2n,n) Q_n/(-36)^n = 4x^2 mod p for p = x^2+3y^2, 0 mod p for p = 2 mod 3"},
        {"T5.5-a", Named::a, 9, false, if_mod(5, 30, {1, 19}), four_x2(15),
         "sum C(2n,n) a_n/9^n = 4x^2 mod p for p = x^2+15y^2, p = 1,19 mod 30"},
        {"T5.5-b", Named::a, -45, false, if_mod(5, 30, {1, 19}), four_x2(15),
         "sum C(2n,n) a_n/(-45)^n = 4x^2 mod p for p = x^2+15y^2, p = 1,19 mod 30"},
        {"T5.5-c", Named::Q, -27, false, if_mod(5, 30, {1, 19}), four_x2(15),
         "sum C(2n,n) Q_n/(-27)^n = 4x^2 mod p for p = x^2+15y^2, p = 1,19 mod 30"},
        {"T5.5-d", Named::Q, -81, false, if_mod(5, 30, {1, 19}), four_x2(15),
         "sum C(2n,n) Q_n/(-81)^n = 4x^2 mod p for p = x^2+15y^2, p = 1,19 mod 30"},
        {"T5.6-a", Named::Q, -32, false, above(3), four_x2(2),
         "sum C(2n,n) Q_n/(-32)^n = 4x^2 mod p for p = x^2+2y^2, 0 mod p for p = 5,7 mod 8"},
        {"T5.6-b", Named::Q, 64, false, above(3), four_x2(2),
         "sum C(2n,n) Q_n/64^n = 4x^2 mod p for p = x^2+2y^2, 0 mod p for p = 5,7 mod 8"},
        {"T5.6-c", Named::a, 20, false, if_mod(3, 20, {1, 9}), four_x2(5),
         "sum C(2n,n) a_n/20^n = 4x^2 mod p for p = x^2+5y^2, p = 1,9 mod 20"},
        {"T5.6-d", Named::Q, -16, false, if_mod(3, 20, {1, 9}), four_x2(5),
         "sum C(2n,n) Q_n/(-16)^n = 4x^2 mod p for p = x^2+5y^2, p = 1,9 mod 20"},
        {"T5.6-e", Named::Q, -48, false, if_mod(3, 12, {1, 11}), four_x2(9),
         "sum C(2n,n) Q_n/(-48)^n = 4x^2 mod p for p = x^2+9y^2 = 1 mod 12, 0 mod p for p = 11 mod 12"},
    };
    for (const auto& t : tq) {
        Named s = t.s;
        long d = t.d;
        bool sign = t.sign;
        auto rhs = t.rhs;
        out.push_back(claim(t.id, Th, t.text, 1, t.app, [=](Cell& c) {
            Residue l = named_sum(c, s, Q(d), 1, true);
            if (sign) l *= c.R(static_cast<long>(sgn(static_cast<long long>((c.p - 1) / 2))), 1);
            c.check("", l, rhs(c));
        }));
    }
}

}  // namespace apery::detail
