#pragma once

#include <stdexcept>
#include <string>

namespace hcg {

// bad arguments, shape mismatches, violated preconditions
struct contract_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// user-facing configuration problems (CFL, step size, bad grids)
struct config_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct singular_error : numerical_error {
    using numerical_error::numerical_error;
};

} // namespace hcg
