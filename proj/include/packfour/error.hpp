#pragma once

#include <stdexcept>
#include <string>

namespace packfour {

/// Root of every exception thrown by the library. Each module derives its
/// own error types from this so callers can catch them all in one place.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace packfour
