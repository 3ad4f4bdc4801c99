#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace apery {

struct NormalizationImpossible : std::domain_error {
    using std::domain_error::domain_error;
};

struct QuadRepresentation {
    long alpha;  // alpha * p = x^2 + d y^2
    long d;
    long x;
    long y;
};

enum class SignRule { Mod3IsOne, Mod4IsOne, Legendre7IsOne, None };

bool supported_form(long d, long alpha);

// Smallest positive x with alpha*p = x^2 + d*y^2, y > 0.
std::optional<QuadRepresentation> represent(std::uint64_t p, long d, long alpha = 1);

// p = a x^2 + b y^2 with x, y > 0 (used for p = 3x^2 + 5y^2).
std::optional<std::pair<long, long>> represent_form(std::uint64_t p, long a, long b);

long normalize(const QuadRepresentation& rep, SignRule rule);

// Residue-class description of which primes admit a representation.
bool representable_by_class(std::uint64_t p, long d, long alpha);

}  // namespace apery
