#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nodal {

using i64 = std::int64_t;

// Checked 64-bit arithmetic. All quantities in this library are exact
// integers; any overflow is a hard error, never a wrapped value.
inline i64 checked_add(i64 a, i64 b) {
    i64 r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r = 0;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

// binomial(x, 2); zero for x < 2.
inline i64 binom2(i64 x) {
    if (x < 2) return 0;
    i64 p = checked_mul(x, x - 1);
    return p / 2;
}

// ceil(a / b) for b > 0, a >= 0.
inline i64 ceil_div(i64 a, i64 b) {
    return (a + b - 1) / b;
}

inline void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument(what);
}

} // namespace nodal
