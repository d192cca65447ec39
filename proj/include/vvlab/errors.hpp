#pragma once
#include <stdexcept>

namespace vvlab {

// Invalid configuration, bad key, violated hypothesis at parse/validate time.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Runtime numerical failure (NaN/Inf in a step, scheme blow-up, singular power).
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace vvlab
