#ifndef MOG_ERRORS_HPP
#define MOG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mog {

/// Malformed arguments: dimension mismatches, out-of-range indices, empty inputs.
class input_error : public std::invalid_argument {
public:
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

/// File-level problems: missing entries, negative components, parse failures.
class load_error : public std::runtime_error {
public:
    explicit load_error(const std::string& what) : std::runtime_error(what) {}
};

/// A quantity that must be strictly positive is zero (ratio denominators).
class positivity_error : public std::domain_error {
public:
    explicit positivity_error(const std::string& what) : std::domain_error(what) {}
};

/// A configured work budget would be exceeded.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/// An approximation input fails the cover conditions.
class cover_error : public std::runtime_error {
public:
    explicit cover_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace mog

#endif // MOG_ERRORS_HPP
