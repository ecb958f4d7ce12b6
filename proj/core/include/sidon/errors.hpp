#pragma once

#include <stdexcept>
#include <string>

namespace sidon {

/// Thrown when a requested computation exceeds a configured size ceiling
/// (field size, enumeration budget, oracle range).
class CeilingExceeded : public std::runtime_error {
public:
    explicit CeilingExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sidon
