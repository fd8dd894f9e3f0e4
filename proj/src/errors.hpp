#ifndef HH_ERRORS_HPP
#define HH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hh {

// Failure categories surfaced through the C API as status codes.
enum class errc {
    invalid_argument,
    invalid_spec,
    parse_error,
    io_error,
    offset_too_large,
    point_not_interior,
    point_not_exterior,
    curve_mismatch,
    polygon_not_supported,
    input_not_hardy,
    path_leaves_domain,
    data_not_real,
    not_a_disc,
    pole_on_curve,
    cap_too_short,
    solver_failure,
    non_convergent,
    internal
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

} // namespace hh

#endif
