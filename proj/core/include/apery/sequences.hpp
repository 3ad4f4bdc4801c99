#pragma once

#include "apery/exact.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace apery {

enum class Kind { First, Second };

struct IntegralityViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// First kind:  (n+1)^3 u_{n+1} = (2n+1)(a n(n+1) + b) u_n - c n^3 u_{n-1}
// Second kind: (n+1)^2 u_{n+1} = (a n(n+1) + b) u_n - c n^2 u_{n-1}
// with u_0 = 1, u_1 = b. Coefficients are rational so that m^n G_n(x)
// and m^n V_n(x) fit the same shape.
struct AperyParams {
    AperyParams(BigRational a_, BigRational b_, BigRational c_, Kind kind_);
    BigRational a, b, c;
    Kind kind;
};

BigRational apery_term(const AperyParams& params, unsigned n, const BigRational& scale = 1);
std::vector<BigRational> apery_terms(const AperyParams& params, unsigned count);

// u_0..u_{count-1} mod p^e through the recurrence; count <= p.
std::vector<Residue> prefix_mod(const AperyParams& params, const PrimePowerModulus& m, unsigned count);

// m^n G_n(x) and m^n V_n(x) as recurrences.
AperyParams g_params(const BigRational& x, const BigRational& m = 1);
AperyParams v_params(const BigRational& x, const BigRational& m = 1);

BigRational g_of_x(const BigRational& x, unsigned n);
BigRational g_of_x_alt(const BigRational& x, unsigned n);
BigRational v_of_x(const BigRational& x, unsigned n);
BigRational v_of_x_alt1(const BigRational& x, unsigned n);
BigRational v_of_x_alt2(const BigRational& x, unsigned n);

std::vector<Residue> prefix_mod_g(const BigRational& x, const PrimePowerModulus& m, unsigned count);
std::vector<Residue> prefix_mod_v(const BigRational& x, const PrimePowerModulus& m, unsigned count);

enum class Named { A, Ap, D, T, b, V, V3, V4, V6, f, S, a, Q, W, G, G3, G4, G6 };

inline constexpr std::array<Named, 18> kAllNamed = {
    Named::A, Named::Ap, Named::D, Named::T, Named::b,  Named::V,  Named::V3, Named::V4, Named::V6,
    Named::f, Named::S,  Named::a, Named::Q, Named::W, Named::G,  Named::G3, Named::G4, Named::G6};

std::string_view named_id(Named s);
std::optional<Named> parse_named(std::string_view id);
AperyParams named_params(Named s);

// Some members are rescaled G_n(x) or V_n(x): term_n = m^n G_n(x).
struct Scaling {
    bool is_v;
    long m;
    BigRational x;
};
std::optional<Scaling> named_scaling(Named s);

// Definitional binomial sum; throws IntegralityViolation if it is not an integer.
BigInt named_term(Named s, unsigned n);
// Second closed form where one exists.
std::optional<BigInt> named_term_alt(Named s, unsigned n);
std::vector<Residue> prefix_mod_named(Named s, const PrimePowerModulus& m, unsigned count);

// v_n = sum_k C(n,k) (-1)^k u_k; an involution.
std::vector<BigRational> binomial_transform(const std::vector<BigRational>& u);

}  // namespace apery
