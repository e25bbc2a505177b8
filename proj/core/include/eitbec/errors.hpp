#ifndef EITBEC_ERRORS_HPP
#define EITBEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eitbec {

// Bad input: precondition or config-file violation. CLI exit code 2.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Config-file error carrying a file:line anchor.
class ConfigError : public ValidationError {
public:
    ConfigError(const std::string& file, int line, const std::string& msg)
        : ValidationError(line > 0 ? file + ":" + std::to_string(line) + ": " + msg
                                   : file + ": " + msg) {}
};

// NaN/Inf or a blown-up solve. CLI exit code 3.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace eitbec

#endif
