#ifndef RAAG_ERRORS_HPP
#define RAAG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace raag {

// Bad arguments from a caller (unknown vertex, malformed support, ...).
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A computed fact contradicts an invariant the library guarantees.
// Reaching one of these is a bug, not a user mistake.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline void check_input(bool ok, const std::string& msg) {
    if (!ok) throw input_error(msg);
}

inline void check_internal(bool ok, const std::string& msg) {
    if (!ok) throw internal_error(msg);
}

} // namespace raag

#endif
