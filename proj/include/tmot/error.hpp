#pragma once

#include <stdexcept>
#include <string>

namespace tmot {

// Exit-code classes used by the CLI.
enum class Errc {
    internal = 1,
    not_abelian = 2,
    not_effective = 3,
    bad_input = 4,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }
[[noreturn]] inline void fail_internal(const std::string& msg) { throw Error(Errc::internal, msg); }
[[noreturn]] inline void fail_input(const std::string& msg) { throw Error(Errc::bad_input, msg); }

}  // namespace tmot
