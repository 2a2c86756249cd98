#ifndef RECURV_ERRORS_HPP
#define RECURV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace recurv {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " at position " + std::to_string(position)),
          pos(position) {}
    std::size_t pos;
};

struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZeroError : std::runtime_error {
    explicit DivisionByZeroError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DegenerateMetricError : std::runtime_error {
    explicit DegenerateMetricError(const std::string& msg) : std::runtime_error(msg) {}
};

struct TensorShapeError : std::runtime_error {
    explicit TensorShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ManifestError : std::runtime_error {
    ManifestError(const std::string& file, int line, const std::string& msg)
        : std::runtime_error(file + ":" + std::to_string(line) + ": " + msg) {}
    explicit ManifestError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace recurv

#endif
