#ifndef ALFORGE_ERRORS_HPP
#define ALFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace alforge {

// All failures carry a short machine-parsable category; the CLI prints
// "error: <category>: <message>" and maps categories to exit codes.
class Error : public std::runtime_error {
public:
    Error(std::string category, const std::string& message)
        : std::runtime_error(message), category_(std::move(category)) {}
    const std::string& category() const noexcept { return category_; }

private:
    std::string category_;
};

struct GeometryError : Error {
    explicit GeometryError(const std::string& m) : Error("geometry", m) {}
};

struct DataError : Error {
    explicit DataError(const std::string& m) : Error("data", m) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& m) : Error("config", m) {}
};

struct StateError : Error {
    explicit StateError(const std::string& m) : Error("state", m) {}
};

struct IoError : Error {
    explicit IoError(const std::string& m) : Error("io", m) {}
};

struct NumericsError : Error {
    explicit NumericsError(const std::string& m) : Error("numerics", m) {}
};

struct PlacementError : Error {
    explicit PlacementError(const std::string& m) : Error("placement", m) {}
};

// Raised by the oracle when two atoms sit closer than the physical floor.
struct ContactError : Error {
    explicit ContactError(const std::string& m) : Error("contact", m) {}
};

} // namespace alforge

#endif
