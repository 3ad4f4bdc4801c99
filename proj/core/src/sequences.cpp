#include "apery/sequences.hpp"

#include <functional>

namespace apery {

AperyParams::AperyParams(BigRational a_, BigRational b_, BigRational c_, Kind kind_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), kind(kind_) {
    if (c == 0) throw std::invalid_argument("Apery-like parameters need c != 0");
}

std::vector<BigRational> apery_terms(const AperyParams& P, unsigned count) {
    std::vector<BigRational> u;
    u.reserve(count);
    if (count == 0) return u;
    u.emplace_back(1);
    if (count == 1) return u;
    u.push_back(P.b);
    for (unsigned n = 1; n + 1 < count; ++n) {
        BigRational nn(n), n1(n + 1);
        BigRational mid = P.a * nn * n1 + P.b;
        BigRational next;
        if (P.kind == Kind::First) {
            next = (BigRational(2 * n + 1) * mid * u[n] - P.c * nn * nn * nn * u[n - 1]) / (n1 * n1 * n1);
        } else {
            next = (mid * u[n] - P.c * nn * nn * u[n - 1]) / (n1 * n1);
        }
        u.push_back(std::move(next));
    }
    return u;
}

BigRational apery_term(const AperyParams& P, unsigned n, const BigRational& scale) {
    BigRational u = apery_terms(P, n + 1).back();
    BigRational s = 1;
    for (unsigned i = 0; i < n; ++i) s *= scale;
    return u * s;
}

std::vector<Residue> prefix_mod(const AperyParams& P, const PrimePowerModulus& M, unsigned count) {
    if (count > M.p()) throw std::invalid_argument("prefix_mod needs count <= p");
    std::vector<Residue> u;
    u.reserve(count);
    if (count == 0) return u;
    u.emplace_back(1, M);
    if (count == 1) return u;
    Residue a = reduce_mod(P.a, M), b = reduce_mod(P.b, M), c = reduce_mod(P.c, M);
    u.push_back(b);
    for (unsigned n = 1; n + 1 < count; ++n) {
        Residue nn(n, M), n1(n + 1, M);
        Residue mid = a * nn * n1 + b;
        Residue next(0, M);
        if (P.kind == Kind::First) {
            next = (Residue(2 * n + 1, M) * mid * u[n] - c * nn * nn * nn * u[n - 1]) * (n1 * n1 * n1).inv();
        } else {
            next = (mid * u[n] - c * nn * nn * u[n - 1]) * (n1 * n1).inv();
        }
        u.push_back(next);
    }
    return u;
}

AperyParams g_params(const BigRational& x, const BigRational& m) {
    return AperyParams(2 * m, m * (x * x + x + 1), m * m, Kind::Second);
}

AperyParams v_params(const BigRational& x, const BigRational& m) {
    return AperyParams(m, m * (2 * x * x + 2 * x + 1), m * m, Kind::First);
}

namespace {

// C(x,k)C(-1-x,k) for k = 0..n
std::vector<BigRational> pair_products(const BigRational& x, unsigned n) {
    std::vector<BigRational> P(n + 1);
    P[0] = 1;
    BigRational y = -1 - x;
    for (unsigned k = 0; k < n; ++k) {
        P[k + 1] = P[k] * (x - k) * (y - k) / (BigRational(k + 1) * (k + 1));
    }
    return P;
}

std::vector<BigRational> rat_binomial_row(const BigRational& x, unsigned n) {
    std::vector<BigRational> r(n + 1);
    r[0] = 1;
    for (unsigned k = 0; k < n; ++k) r[k + 1] = r[k] * (x - k) / (k + 1);
    return r;
}

std::vector<BigInt> binom_row(unsigned n) {
    std::vector<BigInt> r(n + 1);
    r[0] = 1;
    for (unsigned k = 0; k < n; ++k) {
        r[k + 1] = r[k] * (n - k);
        mpz_divexact_ui(r[k + 1].get_mpz_t(), r[k + 1].get_mpz_t(), k + 1);
    }
    return r;
}

// C(n+k, k) for k = 0..n
std::vector<BigInt> shifted_row(unsigned n) {
    std::vector<BigInt> r(n + 1);
    r[0] = 1;
    for (unsigned k = 0; k < n; ++k) {
        r[k + 1] = r[k] * (n + k + 1);
        mpz_divexact_ui(r[k + 1].get_mpz_t(), r[k + 1].get_mpz_t(), k + 1);
    }
    return r;
}

std::vector<BigInt> powers(long base, unsigned n) {
    std::vector<BigInt> r(n + 1);
    r[0] = 1;
    for (unsigned j = 0; j < n; ++j) r[j + 1] = r[j] * base;
    return r;
}

void step(BigInt& v, std::initializer_list<unsigned long> up, std::initializer_list<unsigned long> down) {
    for (auto u : up) v *= u;
    BigInt d = 1;
    for (auto w : down) d *= w;
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
}

// C(2k,k), C(3k,k), C(4k,2k), C(6k,3k) for k = 0..n
struct Centrals {
    std::vector<BigInt> c2, c3, c42, c63;
    explicit Centrals(unsigned n) : c2(n + 1), c3(n + 1), c42(n + 1), c63(n + 1) {
        c2[0] = c3[0] = c42[0] = c63[0] = 1;
        for (unsigned long k = 0; k < n; ++k) {
            c2[k + 1] = c2[k];
            step(c2[k + 1], {2 * (2 * k + 1)}, {k + 1});
            c3[k + 1] = c3[k];
            step(c3[k + 1], {3 * k + 1, 3 * k + 2, 3 * k + 3}, {k + 1, 2 * k + 1, 2 * k + 2});
            c42[k + 1] = c42[k];
            step(c42[k + 1], {4 * k + 1, 4 * k + 2, 4 * k + 3, 4 * k + 4}, {2 * k + 1, 2 * k + 2, 2 * k + 1, 2 * k + 2});
            c63[k + 1] = c63[k];
            step(c63[k + 1], {6 * k + 1, 6 * k + 2, 6 * k + 3, 6 * k + 4, 6 * k + 5, 6 * k + 6},
                 {3 * k + 1, 3 * k + 2, 3 * k + 3, 3 * k + 1, 3 * k + 2, 3 * k + 3});
        }
    }
};

BigInt franel(unsigned n) {
    auto r = binom_row(n);
    BigInt s = 0;
    for (unsigned k = 0; k <= n; ++k) s += r[k] * r[k] * r[k];
    return s;
}

// sum_k C(n,k) (-1)^k w_k base^{n-k}, optionally times C(n+k,k)
BigInt scaled_alternating(unsigned n, long base, const std::vector<BigInt>& w, bool with_shift) {
    auto r = binom_row(n);
    auto pw = powers(base, n);
    std::vector<BigInt> sh;
    if (with_shift) sh = shifted_row(n);
    BigInt s = 0;
    for (unsigned k = 0; k <= n; ++k) {
        BigInt t = r[k] * w[k] * pw[n - k];
        if (with_shift) t *= sh[k];
        if (k & 1) s -= t;
        else s += t;
    }
    return s;
}

}  // namespace

BigRational g_of_x(const BigRational& x, unsigned n) {
    auto P = pair_products(x, n);
    auto r = binom_row(n);
    BigRational s = 0;
    for (unsigned k = 0; k <= n; ++k) {
        BigRational t = BigRational(r[k]) * P[k];
        if (k & 1) s -= t;
        else s += t;
    }
    return s;
}

BigRational g_of_x_alt(const BigRational& x, unsigned n) {
    auto cx = rat_binomial_row(x, n);
    auto cy = rat_binomial_row(-1 - x, n);
    BigRational s = 0;
    for (unsigned k = 0; k <= n; ++k) {
        BigRational t = cx[k] * cx[k] * cy[n - k];
        if ((n - k) & 1) s -= t;
        else s += t;
    }
    return s;
}

BigRational v_of_x(const BigRational& x, unsigned n) {
    auto P = pair_products(x, n);
    auto r = binom_row(n);
    auto sh = shifted_row(n);
    BigRational s = 0;
    for (unsigned k = 0; k <= n; ++k) {
        BigRational t = BigRational(r[k] * sh[k]) * P[k];
        if (k & 1) s -= t;
        else s += t;
    }
    return s;
}

BigRational v_of_x_alt1(const BigRational& x, unsigned n) {
    auto cx = rat_binomial_row(x, n);
    auto cy = rat_binomial_row(-1 - x, n);
    BigRational s = 0;
    for (unsigned k = 0; k <= n; ++k) s += cx[k] * cx[k] * cy[n - k] * cy[n - k];
    return s;
}

BigRational v_of_x_alt2(const BigRational& x, unsigned n) {
    auto r = binom_row(n);
    auto sh = shifted_row(n);
    BigRational s = 0;
    for (unsigned k = 0; k <= n; ++k) {
        BigRational t = BigRational(r[k] * sh[k]) * g_of_x(x, k);
        if ((n - k) & 1) s -= t;
        else s += t;
    }
    return s;
}

std::vector<Residue> prefix_mod_g(const BigRational& x, const PrimePowerModulus& m, unsigned count) {
    return prefix_mod(g_params(x), m, count);
}

std::vector<Residue> prefix_mod_v(const BigRational& x, const PrimePowerModulus& m, unsigned count) {
    return prefix_mod(v_params(x), m, count);
}

std::string_view named_id(Named s) {
    switch (s) {
        case Named::A: return "A";
        case Named::Ap: return "A'";
        case Named::D: return "D";
        case Named::T: return "T";
        case Named::b: return "b";
        case Named::V: return "V";
        case Named::V3: return "V3";
        case Named::V4: return "V4";
        case Named::V6: return "V6";
        case Named::f: return "f";
        case Named::S: return "S";
        case Named::a: return "a";
        case Named::Q: return "Q";
        case Named::W: return "W";
        case Named::G: return "G";
        case Named::G3: return "G3";
        case Named::G4: return "G4";
        case Named::G6: return "G6";
    }
    return "?";
}

std::optional<Named> parse_named(std::string_view id) {
    if (id == "Ap" || id == "A\xe2\x80\xb2") return Named::Ap;
    for (Named s : kAllNamed)
        if (named_id(s) == id) return s;
    return std::nullopt;
}

AperyParams named_params(Named s) {
    auto P = [](long a, long b, long c, Kind k) { return AperyParams(a, b, c, k); };
    switch (s) {
        case Named::A: return P(17, 5, 1, Kind::First);
        case Named::D: return P(10, 4, 64, Kind::First);
        case Named::b: return P(-7, -3, 81, Kind::First);
        case Named::T: return P(12, 4, 16, Kind::First);
        case Named::V: return P(16, 8, 256, Kind::First);
        case Named::V3: return P(27, 15, 729, Kind::First);
        case Named::V4: return P(64, 40, 4096, Kind::First);
        case Named::V6: return P(432, 312, 186624, Kind::First);
        case Named::Ap: return P(11, 3, -1, Kind::Second);
        case Named::f: return P(7, 2, -8, Kind::Second);
        case Named::S: return P(12, 4, 32, Kind::Second);
        case Named::a: return P(10, 3, 9, Kind::Second);
        case Named::Q: return P(-17, -6, 72, Kind::Second);
        case Named::W: return P(-9, -3, 27, Kind::Second);
        case Named::G: return P(32, 12, 256, Kind::Second);
        case Named::G3: return P(54, 21, 729, Kind::Second);
        case Named::G4: return P(128, 52, 4096, Kind::Second);
        case Named::G6: return P(864, 372, 186624, Kind::Second);
    }
    throw std::logic_error("unknown sequence");
}

std::optional<Scaling> named_scaling(Named s) {
    switch (s) {
        case Named::G: return Scaling{false, 16, make_rational(-1, 2)};
        case Named::G3: return Scaling{false, 27, make_rational(-1, 3)};
        case Named::G4: return Scaling{false, 64, make_rational(-1, 4)};
        case Named::G6: return Scaling{false, 432, make_rational(-1, 6)};
        case Named::V: return Scaling{true, 16, make_rational(-1, 2)};
        case Named::V3: return Scaling{true, 27, make_rational(-1, 3)};
        case Named::V4: return Scaling{true, 64, make_rational(-1, 4)};
        case Named::V6: return Scaling{true, 432, make_rational(-1, 6)};
        default: return std::nullopt;
    }
}

BigInt named_term(Named s, unsigned n) {
    BigInt sum = 0;
    switch (s) {
        case Named::A: {
            auto r = binom_row(n);
            auto sh = shifted_row(n);
            for (unsigned k = 0; k <= n; ++k) {
                BigInt t = r[k] * sh[k];
                sum += t * t;
            }
            break;
        }
        case Named::Ap: {
            auto r = binom_row(n);
            auto sh = shifted_row(n);
            for (unsigned k = 0; k <= n; ++k) sum += r[k] * r[k] * sh[k];
            break;
        }
        case Named::D: {
            auto r = binom_row(n);
            Centrals c(n);
            for (unsigned k = 0; k <= n; ++k) sum += r[k] * r[k] * c.c2[k] * c.c2[n - k];
            break;
        }
        case Named::T: {
            auto r = binom_row(n);
            for (unsigned k = (n + 1) / 2; k <= n; ++k) {
                BigInt t = r[k] * int_binomial(2 * k, n);
                sum += t * t;
            }
            break;
        }
        case Named::b:
        case Named::W: {
            Centrals c(n / 3);
            auto pw = powers(-3, n);
            auto sh = shifted_row(n);
            for (unsigned k = 0; 3 * k <= n; ++k) {
                BigInt t = c.c2[k] * c.c3[k] * int_binomial(n, 3 * k) * pw[n - 3 * k];
                if (s == Named::b) t *= sh[k];
                sum += t;
            }
            break;
        }
        case Named::V: {
            Centrals c(n);
            for (unsigned k = 0; k <= n; ++k) {
                BigInt t = c.c2[k] * c.c2[n - k];
                sum += t * t;
            }
            break;
        }
        case Named::f: sum = franel(n); break;
        case Named::S: {
            Centrals c(n / 2);
            auto pw = powers(4, n);
            for (unsigned k = 0; 2 * k <= n; ++k) sum += c.c2[k] * c.c2[k] * int_binomial(n, 2 * k) * pw[n - 2 * k];
            break;
        }
        case Named::a: {
            auto r = binom_row(n);
            Centrals c(n);
            for (unsigned k = 0; k <= n; ++k) sum += r[k] * r[k] * c.c2[k];
            break;
        }
        case Named::Q: {
            auto r = binom_row(n);
            auto pw = powers(-8, n);
            for (unsigned k = 0; k <= n; ++k) sum += r[k] * pw[n - k] * franel(k);
            break;
        }
        case Named::G: {
            Centrals c(n);
            auto pw = powers(4, n);
            for (unsigned k = 0; k <= n; ++k) sum += c.c2[k] * c.c2[k] * c.c2[n - k] * pw[n - k];
            break;
        }
        case Named::G3:
        case Named::G4:
        case Named::G6:
        case Named::V3:
        case Named::V4:
        case Named::V6: {
            Centrals c(n);
            std::vector<BigInt> w(n + 1);
            long base = 0;
            for (unsigned k = 0; k <= n; ++k) {
                if (s == Named::G3 || s == Named::V3) w[k] = c.c2[k] * c.c3[k];
                else if (s == Named::G4 || s == Named::V4) w[k] = c.c2[k] * c.c42[k];
                else w[k] = c.c3[k] * c.c63[k];
            }
            if (s == Named::G3 || s == Named::V3) base = 27;
            else if (s == Named::G4 || s == Named::V4) base = 64;
            else base = 432;
            bool shift = s == Named::V3 || s == Named::V4 || s == Named::V6;
            sum = scaled_alternating(n, base, w, shift);
            break;
        }
    }
    return sum;
}

std::optional<BigInt> named_term_alt(Named s, unsigned n) {
    switch (s) {
        case Named::V:
        case Named::G: {
            Centrals c(n);
            std::vector<BigInt> w(n + 1);
            for (unsigned k = 0; k <= n; ++k) w[k] = c.c2[k] * c.c2[k];
            return scaled_alternating(n, 16, w, s == Named::V);
        }
        case Named::S: {
            auto r = binom_row(n);
            Centrals c(n);
            BigInt sum = 0;
            for (unsigned k = 0; k <= n; ++k) sum += r[k] * c.c2[k] * c.c2[n - k];
            return sum;
        }
        case Named::f: {
            auto r = binom_row(n);
            BigInt sum = 0;
            for (unsigned k = 0; k <= n; ++k) sum += r[k] * r[k] * int_binomial(2 * k, n);
            return sum;
        }
        case Named::V4: {
            Centrals c(n);
            auto pw = powers(16, n);
            BigInt sum = 0;
            for (unsigned k = 0; k <= n; ++k) sum += c.c2[k] * c.c2[k] * c.c2[k] * c.c2[n - k] * pw[n - k];
            return sum;
        }
        case Named::G3:
        case Named::G4:
        case Named::G6:
        case Named::V3:
        case Named::V6: {
            auto sc = *named_scaling(s);
            BigRational v = sc.is_v ? v_of_x(sc.x, n) : g_of_x(sc.x, n);
            BigInt mn;
            mpz_ui_pow_ui(mn.get_mpz_t(), static_cast<unsigned long>(sc.m), n);
            v *= BigRational(mn);
            if (v.get_den() != 1) throw IntegralityViolation("scaled form of " + std::string(named_id(s)) + " is not integral");
            return BigInt(v.get_num());
        }
        default: return std::nullopt;
    }
}

std::vector<Residue> prefix_mod_named(Named s, const PrimePowerModulus& m, unsigned count) {
    return prefix_mod(named_params(s), m, count);
}

std::vector<BigRational> binomial_transform(const std::vector<BigRational>& u) {
    std::vector<BigRational> v(u.size());
    for (unsigned n = 0; n < u.size(); ++n) {
        auto r = binom_row(n);
        BigRational s = 0;
        for (unsigned k = 0; k <= n; ++k) {
            BigRational t = BigRational(r[k]) * u[k];
            if (k & 1) s -= t;
            else s += t;
        }
        v[n] = s;
    }
    return v;
}

}  // namespace apery
