#pragma once

#include <stdexcept>
#include <string>

namespace qweyl {

/// Bad caller input: malformed parameters, specs, files or out-of-range indices.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// An exact identity that must hold did not. Signals a bug or a corrupted representation.
class VerificationError : public std::logic_error {
public:
    explicit VerificationError(const std::string& what) : std::logic_error(what) {}
};

/// A file could not be read or written.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero in cyclotomic field") {}
};

} // namespace qweyl
