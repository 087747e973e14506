#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncdeform {

/// Violation of an algebraic precondition: mismatched generator tables,
/// illegal exponents, band limits, invalid parameters.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Expression syntax error; `offset` is the byte position in the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace ncdeform
