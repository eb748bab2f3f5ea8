#ifndef GALOIS_ERRORS_HPP
#define GALOIS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace galois {

// All library errors derive from Error; `kind()` is a stable machine-readable
// tag, what() carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

inline Error invalid_input(const std::string& msg) { return Error("invalid-input", msg); }
inline Error degenerate_span(const std::string& msg) { return Error("degenerate-span", msg); }
inline Error singular_curve(const std::string& msg) { return Error("singular-curve", msg); }
inline Error not_weierstrass_normal(const std::string& msg) { return Error("not-weierstrass-normal", msg); }
inline Error not_on_curve(const std::string& msg) { return Error("not-on-curve", msg); }
inline Error unsupported_group(const std::string& msg) { return Error("unsupported-group", msg); }
inline Error degenerate_function(const std::string& msg) { return Error("degenerate-function", msg); }
inline Error pole_error(const std::string& msg) { return Error("pole", msg); }
inline Error certificate_failure(const std::string& msg) { return Error("certificate-failure", msg); }
inline Error construction_error(const std::string& msg) { return Error("construction", msg); }
inline Error invalid_center(const std::string& msg) { return Error("invalid-center", msg); }
inline Error degenerate_pencil(const std::string& msg) { return Error("degenerate-pencil", msg); }
inline Error invalid_conjugation(const std::string& msg) { return Error("invalid-conjugation", msg); }
inline Error usage_error(const std::string& msg) { return Error("usage", msg); }

} // namespace galois

#endif
