#pragma once

#include <stdexcept>
#include <string>

namespace ybgeo {

// All recoverable failures (bad input, contract violations, unsupported
// instances) are reported through this type; the C API maps it to status codes.
struct Error : std::runtime_error {
	explicit Error(std::string msg) : std::runtime_error(std::move(msg)) {}
};

[[noreturn]] inline void fail(std::string msg) { throw Error(std::move(msg)); }

inline void require(bool cond, const char *msg)
{
	if (!cond)
		fail(msg);
}

} // namespace ybgeo
