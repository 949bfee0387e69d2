#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hurwitz {

// A brute-force search would exceed its configured cap; message names the cap.
class BudgetExceededError : public std::runtime_error {
public:
    BudgetExceededError(const std::string& what, std::uint64_t cap)
        : std::runtime_error(what), cap_(cap) {}
    std::uint64_t cap() const { return cap_; }

private:
    std::uint64_t cap_;
};

// Bad magic, wrong version, or malformed entry in a memo table file.
class TableFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An exact identity that must hold did not; indicates a bug, never bad input.
class InternalConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace hurwitz
