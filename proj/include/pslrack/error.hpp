#pragma once

#include <stdexcept>
#include <string>

namespace pslrack {

/// Library-wide exception type. Preconditions and resource bounds throw this.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw Error(msg);
}

} // namespace pslrack
