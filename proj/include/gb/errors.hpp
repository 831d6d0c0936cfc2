#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace gb {

// Requested parameters outside the supported range (e.g. an unsupported
// field order or field tower).
class capability_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An enumeration or index would exceed the configured cell limit.
class limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed certificate / solution text.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, int line = 0)
        : std::runtime_error(line > 0 ? msg + " (line " + std::to_string(line) + ")" : msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_ = 0;
};

// A deterministic search that backs a construction found nothing.
class construction_unavailable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Branch-and-bound node cap exceeded; distinct from infeasibility.
class incomplete_search : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Internal invariant violated; must not occur on any input.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Cell limit for enumerations and incidence indices, overridable through
// the GB_LIMIT_CELLS environment variable.
inline long long cell_limit(long long default_limit) {
    if (const char* env = std::getenv("GB_LIMIT_CELLS")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end != env && v > 0) return v;
    }
    return default_limit;
}

}  // namespace gb
