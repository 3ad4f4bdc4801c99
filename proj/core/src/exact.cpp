#include "apery/exact.hpp"

#include <cctype>

namespace apery {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % n);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t k, std::uint64_t n) {
    std::uint64_t r = 1 % n;
    a %= n;
    while (k) {
        if (k & 1) r = mulmod(r, a, n);
        a = mulmod(a, a, n);
        k >>= 1;
    }
    return r;
}

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

BigInt parse_int(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer");
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("bad integer: " + s);
    for (size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw std::invalid_argument("bad integer: " + s);
    return BigInt(s[0] == '+' ? s.substr(1) : s, 10);
}

}  // namespace

BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

BigRational make_rational(long num, long den) {
    return make_rational(BigInt(num), BigInt(den));
}

BigRational parse_rational(std::string_view text) {
    std::string t = trim(text);
    auto slash = t.find('/');
    if (slash == std::string::npos) return BigRational(parse_int(t));
    return make_rational(parse_int(trim(t.substr(0, slash))), parse_int(trim(t.substr(slash + 1))));
}

std::string to_string(const BigRational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const BigInt& n) { return n.get_str(); }

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // these bases are a proven witness set for n < 3.3e24
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

BigRational rat_binomial(const BigRational& x, long k) {
    if (k < 0) return 0;
    BigRational r = 1;
    for (long i = 0; i < k; ++i) {
        r *= x - i;
        r /= i + 1;
    }
    return r;
}

BigInt int_binomial(long n, long k) {
    if (k < 0) return 0;
    if (n >= 0) {
        if (k > n) return 0;
        BigInt r;
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return r;
    }
    BigInt r;
    BigInt nn(n);
    mpz_bin_ui(r.get_mpz_t(), nn.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

long Valuation::value() const {
    if (!finite_) throw std::logic_error("valuation of zero is infinite");
    return value_;
}

Valuation vp(const BigInt& n, std::uint64_t p) {
    if (n == 0) return Valuation::infinite();
    BigInt pp(static_cast<unsigned long>(p));
    BigInt rest;
    long v = static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t()));
    return Valuation(v);
}

Valuation vp(const BigRational& r, std::uint64_t p) {
    if (r == 0) return Valuation::infinite();
    return Valuation(vp(BigInt(r.get_num()), p).value() - vp(BigInt(r.get_den()), p).value());
}

bool is_p_integral(const BigRational& r, std::uint64_t p) {
    return mpz_divisible_ui_p(r.get_den_mpz_t(), static_cast<unsigned long>(p)) == 0;
}

PrimePowerModulus::PrimePowerModulus(std::uint64_t p, int e) : p_(p), e_(e), n_(1) {
    if (p < 3 || !is_prime(p)) throw InvalidModulus("modulus base must be an odd prime, got " + std::to_string(p));
    if (e < 1 || e > 6) throw InvalidModulus("modulus exponent must be in 1..6, got " + std::to_string(e));
    for (int i = 0; i < e; ++i) {
        if (n_ > (std::uint64_t(1) << 62) / p) throw InvalidModulus("p^e does not fit the residue word");
        n_ *= p;
    }
}

Residue::Residue(std::uint64_t value, const PrimePowerModulus& m) : v_(value % m.N()), m_(m) {}

Residue Residue::from_int(long long v, const PrimePowerModulus& m) {
    long long n = static_cast<long long>(m.N());
    long long r = v % n;
    if (r < 0) r += n;
    return Residue(static_cast<std::uint64_t>(r), m);
}

Residue Residue::from_big(const BigInt& v, const PrimePowerModulus& m) {
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(m.N()));
    return Residue(r.get_ui(), m);
}

static void same_modulus(const PrimePowerModulus& a, const PrimePowerModulus& b) {
    if (!(a == b)) throw ModulusMismatch("residues mod " + a.label() + " and " + b.label());
}

Residue Residue::operator+(const Residue& o) const {
    same_modulus(m_, o.m_);
    std::uint64_t s = v_ + o.v_;
    if (s >= m_.N()) s -= m_.N();
    return Residue(s, m_);
}

Residue Residue::operator-(const Residue& o) const {
    same_modulus(m_, o.m_);
    return Residue(v_ >= o.v_ ? v_ - o.v_ : v_ + m_.N() - o.v_, m_);
}

Residue Residue::operator*(const Residue& o) const {
    same_modulus(m_, o.m_);
    return Residue(mulmod(v_, o.v_, m_.N()), m_);
}

Residue Residue::operator-() const { return Residue(v_ == 0 ? 0 : m_.N() - v_, m_); }

Residue Residue::inv() const {
    if (!is_unit()) throw NotInvertible(std::to_string(v_) + " mod " + m_.label());
    // extended Euclid on signed 128-bit to stay clear of overflow
    __int128 a = v_, b = m_.N(), x0 = 1, x1 = 0;
    while (b) {
        __int128 q = a / b;
        __int128 t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    __int128 n = m_.N();
    x0 %= n;
    if (x0 < 0) x0 += n;
    return Residue(static_cast<std::uint64_t>(x0), m_);
}

Residue Residue::pow(long long exponent) const {
    if (exponent < 0) return inv().pow(-exponent);
    return Residue(powmod(v_, static_cast<std::uint64_t>(exponent), m_.N()), m_);
}

Residue Residue::pow(const BigInt& exponent) const {
    if (exponent < 0) return inv().pow(BigInt(-exponent));
    if (exponent.fits_slong_p()) return pow(static_cast<long long>(exponent.get_si()));
    BigInt base(static_cast<unsigned long>(v_)), mod(static_cast<unsigned long>(m_.N())), r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), mod.get_mpz_t());
    return Residue(r.get_ui(), m_);
}

Residue reduce_mod(const BigInt& r, const PrimePowerModulus& m) { return Residue::from_big(r, m); }

Residue reduce_mod(const BigRational& r, const PrimePowerModulus& m) {
    if (r == 0) return Residue(0, m);
    BigInt num = r.get_num(), den = r.get_den();
    long vn = vp(num, m.p()).value(), vd = vp(den, m.p()).value();
    if (vn < vd) throw NotPIntegral(to_string(r) + " is not " + std::to_string(m.p()) + "-integral");
    BigInt pk;
    long cancel = std::min(vn, vd);
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(m.p()), static_cast<unsigned long>(cancel));
    num /= pk;
    den /= pk;
    return Residue::from_big(num, m) * Residue::from_big(den, m).inv();
}

bool congruent(const BigRational& a, const BigRational& b, const PrimePowerModulus& m) {
    if (!is_p_integral(a, m.p())) throw NotPIntegral(to_string(a) + " is not p-integral");
    if (!is_p_integral(b, m.p())) throw NotPIntegral(to_string(b) + " is not p-integral");
    return vp(BigRational(a - b), m.p()) >= m.e();
}

Residue residue_binomial(const Residue& x, unsigned k) {
    const auto& m = x.modulus();
    if (k >= m.p()) throw NotInvertible("residue_binomial needs k < p");
    Residue num(1, m), den(1, m);
    for (unsigned i = 0; i < k; ++i) {
        num *= x - Residue(i, m);
        den *= Residue(i + 1, m);
    }
    return num * den.inv();
}

}  // namespace apery
