#ifndef GREENREC_SCALAR_HPP
#define GREENREC_SCALAR_HPP

#include <charconv>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include "greenrec/errors.hpp"
#include "greenrec/rational.hpp"

namespace greenrec {

/// Per-scalar-mode glue. The library is templated on its scalar type; the
/// two supported modes are exact rationals (the default everywhere) and
/// 64-bit binary floats. A computation picks one mode and stays in it.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<rational> {
    static constexpr bool exact = true;

    static rational from_int(std::int64_t v) { return rational(static_cast<long long>(v)); }
    static rational from_rational(const rational& r) { return r; }
    static rational parse(std::string_view text) { return rational::parse(text); }
    static std::string render(const rational& v) { return v.str(); }
    static bool is_zero(const rational& v) { return v.is_zero(); }
    static rational abs(const rational& v) { return v.abs(); }
    // Any nonzero entry is a valid exact pivot.
    static bool better_pivot(const rational& current, const rational& candidate) {
        return current.is_zero() && !candidate.is_zero();
    }
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;

    static double from_int(std::int64_t v) { return static_cast<double>(v); }
    static double from_rational(const rational& r) { return r.to_double(); }
    static double parse(std::string_view text) { return rational::parse(text).to_double(); }

    static std::string render(double v) {
        char buf[64];
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
        (void)ec;
        return std::string(buf, ptr);
    }

    static bool is_zero(double v) { return v == 0.0; }
    static double abs(double v) { return std::fabs(v); }
    static bool better_pivot(double current, double candidate) {
        return std::fabs(candidate) > std::fabs(current);
    }
};

template <class S>
concept scalar_type = requires(const S& a, std::int64_t v) {
    { scalar_traits<S>::exact } -> std::convertible_to<bool>;
    { scalar_traits<S>::from_int(v) } -> std::convertible_to<S>;
    { scalar_traits<S>::is_zero(a) } -> std::convertible_to<bool>;
    { a + a } -> std::convertible_to<S>;
    { a - a } -> std::convertible_to<S>;
    { a* a } -> std::convertible_to<S>;
    { a / a } -> std::convertible_to<S>;
};

/// Integer power by binary exponentiation. Negative exponents invert the
/// result; 0 raised to a negative power is a domain error.
template <scalar_type S>
S pow_integer(const S& base, std::int64_t exponent) {
    if (exponent < 0) {
        if (scalar_traits<S>::is_zero(base))
            throw domain_error("zero raised to a negative power");
        return scalar_traits<S>::from_int(1) / pow_integer(base, -exponent);
    }
    S result = scalar_traits<S>::from_int(1);
    S square = base;
    std::uint64_t e = static_cast<std::uint64_t>(exponent);
    while (e != 0) {
        if (e & 1u) result = result * square;
        e >>= 1u;
        if (e != 0) square = square * square;
    }
    return result;
}

/// Exact integer power of a rational scalar.
inline rational scalar_pow(const rational& base, std::int64_t exponent) {
    return pow_integer(base, exponent);
}

} // namespace greenrec

#endif // GREENREC_SCALAR_HPP
