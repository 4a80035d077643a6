#pragma once

#include <stdexcept>
#include <string>

namespace tknot {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: braid word text, template files, bad argument values.
struct parse_error : error {
    explicit parse_error(const std::string& msg, int line = 0)
        : error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_number(line) {}
    int line_number = 0;
};

// An operation that needs a knot (or at least a connected closed diagram)
// was handed a closure with the wrong component structure.
struct not_a_knot_error : error {
    not_a_knot_error(const std::string& msg, int comps)
        : error(msg), components(comps) {}
    int components = 0;
};

// A violated internal invariant. Reaching this is a bug, never user error.
struct internal_error : error {
    using error::error;
};

namespace detail {
[[noreturn]] void check_failed(const char* expr, const char* file, int line);
}

// Always-on invariant check (active in release builds too).
#define TKNOT_CHECK(expr)                                                \
    do {                                                                 \
        if (!(expr)) ::tknot::detail::check_failed(#expr, __FILE__, __LINE__); \
    } while (0)

}  // namespace tknot
