#pragma once

#include <stdexcept>
#include <string>

namespace gbent {

// Malformed textual/JSON input (truth tables, headers).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A requested computation exceeds the desk-scale feasibility guard.
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gbent
