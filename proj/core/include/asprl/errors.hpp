#ifndef ASPRL_ERRORS_HPP
#define ASPRL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace asprl {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace asprl

#endif
