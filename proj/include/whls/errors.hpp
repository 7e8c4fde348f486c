#pragma once

#include <stdexcept>
#include <string>

namespace whls {

// Parameter/hypothesis violations (maps to CLI exit code 2).
using domain_error = std::domain_error;

// A requested integral does not converge for the given head/tail
// exponents (maps to CLI exit code 4).
class divergence_error : public std::runtime_error {
public:
    explicit divergence_error(const std::string& what) : std::runtime_error(what) {}
};

// File/stream failures (maps to CLI exit code 3).
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace whls
