#pragma once

// Deformation context: the truncation order N of the formal parameter t and
// the half-odd-integer p selecting the twist pair h = N_0, e = Y_p.

#include <cstdint>
#include <string>

#include "esvq/errors.hpp"
#include "esvq/generators.hpp"

namespace esvq {

struct TwistContext {
    std::int64_t p2;     // doubled index of e = Y_p; must be odd
    int          order;  // series truncated after t^order

    TwistContext(std::int64_t p2_, int order_) : p2(p2_), order(order_) {
        if (p2 % 2 == 0)
            throw ConfigError("twist parameter p must be half-odd (index2 " +
                              std::to_string(p2) + " is even)");
        if (order < 0)
            throw ConfigError("truncation order must be >= 0, got " +
                              std::to_string(order));
    }

    Gen h() const { return Gen{Family::N, 0}; }
    Gen e() const { return Gen{Family::Y, p2}; }
};

} // namespace esvq
