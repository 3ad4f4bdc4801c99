#include "claim_util.hpp"

#include <set>

namespace apery {

namespace detail {

Residue cc_sum(Cell& c, const BigRational& x, int e, const std::function<Residue(unsigned)>& w) {
    PrimePowerModulus M = c.mod(e);
    Residue xr = reduce_mod(x, M);
    Residue t(1, M), s(0, M);
    for (std::uint64_t k = 0; k < c.p; ++k) {
        if (k > 0) {
            Residue kr(k, M);
            t *= (xr - Residue(k - 1, M)) * (-xr - kr) * (kr * kr).inv();
        }
        s += w ? t * w(static_cast<unsigned>(k)) : t;
    }
    return s;
}

std::vector<long> random_sequence(Cell& c, unsigned n) {
    std::vector<long> u(n);
    for (auto& v : u) v = c.random_int(-100, 100);
    return u;
}

std::vector<Residue> reduce_all(const std::vector<BigInt>& u, const PrimePowerModulus& M) {
    std::vector<Residue> r;
    r.reserve(u.size());
    for (const auto& v : u) r.push_back(reduce_mod(v, M));
    return r;
}

}  // namespace detail

const std::vector<ClaimSpec>& registry() {
    static const std::vector<ClaimSpec> all = [] {
        std::vector<ClaimSpec> r;
        detail::register_lemmas(r);
        detail::register_section3(r);
        detail::register_section4(r);
        detail::register_section5(r);
        detail::register_conjectures3(r);
        detail::register_conjectures4(r);
        detail::register_conjectures5(r);
        std::set<std::string> ids;
        for (const auto& c : r)
            if (!ids.insert(c.id).second) throw std::logic_error("duplicate claim id " + c.id);
        return r;
    }();
    return all;
}

const ClaimSpec& find_claim(const std::string& id) {
    for (const auto& c : registry())
        if (c.id == id) return c;
    throw UnknownClaim("unknown claim id: " + id);
}

std::vector<const ClaimSpec*> select_claims(const std::vector<std::string>& selectors) {
    const auto& reg = registry();
    std::vector<bool> chosen(reg.size(), false);
    for (const auto& s : selectors) {
        bool hit = false;
        for (std::size_t i = 0; i < reg.size(); ++i) {
            const auto& c = reg[i];
            bool m = s == "all" || (s == "all-theorems" && c.cls != ClaimClass::Conjecture) ||
                     (s == "all-conjectures" && c.cls == ClaimClass::Conjecture) || c.id == s || c.family == s;
            if (m) chosen[i] = hit = true;
        }
        if (!hit) throw UnknownClaim("unknown claim id: " + s);
    }
    std::vector<const ClaimSpec*> out;
    for (std::size_t i = 0; i < reg.size(); ++i)
        if (chosen[i]) out.push_back(&reg[i]);
    return out;
}

}  // namespace apery

namespace apery::detail {

BigRational draw(Cell& c, const std::function<bool(const BigRational&)>& pred, long num, long den) {
    for (int i = 0; i < 5000; ++i) {
        BigRational q = c.random_rational(num, den);
        if (pred(q)) return q;
    }
    throw std::runtime_error("no admissible parameter found");
}

std::vector<Residue> binom_products(Cell& c, int e, std::initializer_list<std::pair<int, int>> factors) {
    auto M = c.mod(e);
    std::vector<Residue> r;
    r.reserve(c.p);
    for (long k = 0; k < static_cast<long>(c.p); ++k) {
        BigInt v = 1;
        for (auto [a, b] : factors) v *= int_binomial(a * k, b * k);
        r.push_back(reduce_mod(v, M));
    }
    return r;
}

std::optional<long> form_x(const Cell& c, long d, long alpha, SignRule rule) {
    auto rep = c.ctx.rep(d, alpha);
    if (!rep) return std::nullopt;
    return normalize(*rep, rule);
}

bool zero_mod(const Cell& c, const BigRational& q) { return c.R(q, 1).is_zero(); }

}  // namespace apery::detail
