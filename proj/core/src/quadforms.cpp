#include "apery/quadforms.hpp"

#include <cmath>
#include <string>

namespace apery {

namespace {

long isqrt(long n) {
    if (n < 0) return -1;
    long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

long mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

bool supported_form(long d, long alpha) {
    if (alpha == 1) return d == 1 || d == 2 || d == 3 || d == 4 || d == 5 || d == 7 || d == 9 || d == 15;
    if (alpha == 2) return d == 5 || d == 9;
    if (alpha == 4) return d == 27;
    return false;
}

std::optional<std::pair<long, long>> represent_form(std::uint64_t p, long a, long b) {
    long n = static_cast<long>(p);
    std::optional<std::pair<long, long>> found;
    for (long y = 1; b * y * y < n; ++y) {
        long rest = n - b * y * y;
        if (rest % a) continue;
        long x = isqrt(rest / a);
        if (x > 0 && x * x == rest / a) {
            if (found && !(a == b && found->first == y && found->second == x))
                throw std::logic_error("ambiguous representation of " + std::to_string(p));
            if (!found || x < found->first) found = std::make_pair(x, y);
        }
    }
    return found;
}

std::optional<QuadRepresentation> represent(std::uint64_t p, long d, long alpha) {
    if (!supported_form(d, alpha)) throw std::invalid_argument("unsupported quadratic form");
    long n = alpha * static_cast<long>(p);
    std::optional<QuadRepresentation> best;
    int count = 0;
    for (long y = 1; d * y * y < n; ++y) {
        long rest = n - d * y * y;
        long x = isqrt(rest);
        if (x > 0 && x * x == rest) {
            ++count;
            if (!best || x < best->x) best = QuadRepresentation{alpha, d, x, y};
        }
    }
    // x^2 + y^2 finds (x,y) and (y,x); all other forms have a single solution
    if (count > (d == 1 ? 2 : 1)) throw std::logic_error("ambiguous representation of " + std::to_string(p));
    return best;
}

long normalize(const QuadRepresentation& rep, SignRule rule) {
    long x = rep.x;
    switch (rule) {
        case SignRule::None: return x;
        case SignRule::Mod3IsOne:
            if (mod(x, 3) == 0) throw NormalizationImpossible("3 divides x");
            return mod(x, 3) == 1 ? x : -x;
        case SignRule::Mod4IsOne:
            if (mod(x, 2) == 0) throw NormalizationImpossible("x is even");
            return mod(x, 4) == 1 ? x : -x;
        case SignRule::Legendre7IsOne: {
            long r = mod(x, 7);
            if (r == 0) throw NormalizationImpossible("7 divides x");
            bool square = r == 1 || r == 2 || r == 4;
            return square ? x : -x;
        }
    }
    throw std::logic_error("unknown sign rule");
}

bool representable_by_class(std::uint64_t p, long d, long alpha) {
    long q = static_cast<long>(p);
    if (alpha == 1) {
        switch (d) {
            case 1:
            case 4: return q % 4 == 1;
            case 2: return q % 8 == 1 || q % 8 == 3;
            case 3: return q % 3 == 1;
            case 5: return q % 20 == 1 || q % 20 == 9;
            case 7: return q % 7 == 1 || q % 7 == 2 || q % 7 == 4;
            case 9: return q % 12 == 1;
            case 15: return q % 30 == 1 || q % 30 == 19;
        }
    }
    if (alpha == 2 && d == 5) return q % 20 == 3 || q % 20 == 7;
    if (alpha == 2 && d == 9) return q % 12 == 5;
    if (alpha == 4 && d == 27) return q % 3 == 1;
    throw std::invalid_argument("unsupported quadratic form");
}

}  // namespace apery
