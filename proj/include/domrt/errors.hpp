#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace domrt {

/// An exact computation would exceed its configured support cap.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Censored runs reached a sample collector that admits none.
class CensoredRunsError : public std::runtime_error {
public:
    explicit CensoredRunsError(std::int64_t count)
        : std::runtime_error("censored runs present: " + std::to_string(count)),
          count_(count) {}

    std::int64_t count() const noexcept { return count_; }

private:
    std::int64_t count_;
};

/// A requested quantile lies beyond the truncated support of a distribution.
class TruncatedTailError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A runtime model contains a level that can never be left (zero success
/// probability), so its expectation is infinite.
class InfiniteRuntimeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace domrt
