#pragma once

#include <stdexcept>
#include <string>

namespace polyplan {

/// Raised for malformed input: bad files, out-of-range vertices, arity
/// mismatches. The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
   public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace polyplan
