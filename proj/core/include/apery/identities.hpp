#pragma once

#include "apery/exact.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace apery {

struct UnknownIdentity : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IdentityCase {
    std::string id;
    std::string statement;
    bool conjecture = false;  // the ILC log-behavior cases
    bool pass = true;
    std::size_t instances = 0;
    std::string counterexample;  // first failing instance
};

std::vector<std::string> identity_ids();
std::string identity_statement(const std::string& id);

// Ten seeded p-free rationals for the identities with a real parameter x.
std::vector<BigRational> identity_x_samples(std::uint64_t seed = 20240611, unsigned count = 10);

// n runs over 0..n_max (or the identity's own lower bound). The ILC cases
// draw 8 x per region from seed and ignore x_samples.
IdentityCase check_identity(const std::string& id, unsigned n_max, const std::vector<BigRational>& x_samples,
                            std::uint64_t seed = 20240611);

std::vector<IdentityCase> check_all_identities(unsigned n_max, std::uint64_t seed = 20240611);

}  // namespace apery
