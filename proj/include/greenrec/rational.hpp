#ifndef GREENREC_RATIONAL_HPP
#define GREENREC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "greenrec/errors.hpp"

namespace greenrec {

/// Exact rational number over arbitrary-precision integers.
///
/// Canonical form is maintained at all times: the denominator is positive,
/// numerator and denominator are coprime, and zero is stored as 0/1. All
/// arithmetic is exact; there is no rounding anywhere.
class rational final {
public:
    using int_type = boost::multiprecision::cpp_int;

    rational() : num_(0), den_(1) {}

    template <std::integral I>
    rational(I v) : num_(v), den_(1) {}

    rational(int_type v) : num_(std::move(v)), den_(1) {}

    rational(int_type numerator, int_type denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_.is_zero())
            throw domain_error("rational with zero denominator");
        normalize();
    }

    /// Parses `-?digits` or `-?digits/digits`. The literal denominator must
    /// be nonzero; the result is reduced to canonical form.
    static rational parse(std::string_view text) {
        std::size_t pos = 0;
        auto digits = [&](const char* what) {
            std::size_t start = pos;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
            if (pos == start)
                throw parse_error(std::string("expected ") + what, start);
            return int_type(std::string(text.substr(start, pos - start)));
        };

        bool negative = false;
        if (pos < text.size() && text[pos] == '-') {
            negative = true;
            ++pos;
        }
        int_type num = digits("digits");
        int_type den = 1;
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            den = digits("denominator digits");
            if (den.is_zero())
                throw domain_error("rational literal with zero denominator: '" +
                                   std::string(text) + "'");
        }
        if (pos != text.size())
            throw parse_error("trailing characters in rational literal", pos);
        if (negative) num = -num;
        return rational(std::move(num), std::move(den));
    }

    const int_type& numerator() const noexcept { return num_; }
    const int_type& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return num_.sign(); }

    /// Renders as `p` for integers and `p/q` otherwise; parse() round-trips.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    rational operator-() const {
        rational r(*this);
        r.num_ = -r.num_;
        return r;
    }

    rational& operator+=(const rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }

    rational& operator-=(const rational& o) {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }

    rational& operator*=(const rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }

    rational& operator/=(const rational& o) {
        if (o.is_zero())
            throw domain_error("division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend rational operator+(rational a, const rational& b) { return a += b; }
    friend rational operator-(rational a, const rational& b) { return a -= b; }
    friend rational operator*(rational a, const rational& b) { return a *= b; }
    friend rational operator/(rational a, const rational& b) { return a /= b; }

    // Canonical form makes structural equality the same as value equality.
    friend bool operator==(const rational& a, const rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend std::strong_ordering operator<=>(const rational& a, const rational& b) {
        int_type lhs = a.num_ * b.den_;
        int_type rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const rational& r) {
        return os << r.str();
    }

    rational abs() const { return num_ < 0 ? -*this : *this; }

    double to_double() const {
        return num_.convert_to<double>() / den_.convert_to<double>();
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        int_type g = boost::multiprecision::gcd(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    int_type num_;
    int_type den_;
};

} // namespace greenrec

#endif // GREENREC_RATIONAL_HPP
