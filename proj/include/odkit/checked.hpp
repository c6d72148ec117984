#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace odkit {

// Thrown when exact integer arithmetic would leave the representable range.
// All matrix entry arithmetic in this library goes through these helpers:
// results are exact or the operation aborts, never wrapped.
class arithmetic_error : public std::runtime_error {
public:
    explicit arithmetic_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised on malformed inputs (dimension mismatches, bad parameters).
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

using i64 = std::int64_t;
using i128 = __int128;

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw arithmetic_error("integer overflow in add");
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw arithmetic_error("integer overflow in sub");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw arithmetic_error("integer overflow in mul");
    return r;
}

inline i64 checked_neg(i64 a) { return checked_sub(0, a); }

inline i128 checked_add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw arithmetic_error("integer overflow in add (128)");
    return r;
}

inline i128 checked_sub(i128 a, i128 b) {
    i128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw arithmetic_error("integer overflow in sub (128)");
    return r;
}

inline i128 checked_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw arithmetic_error("integer overflow in mul (128)");
    return r;
}

inline i64 narrow_to_i64(i128 v) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
        throw arithmetic_error("value does not fit in 64 bits");
    return static_cast<i64>(v);
}

std::string to_string_i128(i128 v);

}  // namespace odkit
