#pragma once

#include <stdexcept>
#include <string>

namespace mstd {

// Thrown when a set literal or set file cannot be parsed.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Thrown when a computation contradicts an invariant that should be
// unconditionally true (a bug, or a falsified theorem).
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Thrown when a run exceeds a configured resource cap. Carries enough
// state to resume.
class resource_limit_error : public std::runtime_error {
public:
    resource_limit_error(const std::string& what, std::uint64_t progress)
        : std::runtime_error(what), progress_(progress) {}

    std::uint64_t progress() const noexcept { return progress_; }

private:
    std::uint64_t progress_;
};

}  // namespace mstd
