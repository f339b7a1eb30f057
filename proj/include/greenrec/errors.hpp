#ifndef GREENREC_ERRORS_HPP
#define GREENREC_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace greenrec {

/// Base class for every error thrown by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text handed to a parser. Carries the character offset of the
/// first offending position.
class parse_error final : public error {
public:
    parse_error(std::string message, std::size_t offset)
        : error(std::move(message) + " (at offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Arithmetic outside the domain: zero denominator, division by zero,
/// zero raised to a negative power.
class domain_error final : public error {
public:
    using error::error;
};

/// An expression failed to evaluate at a specific index n.
class eval_error final : public error {
public:
    eval_error(const std::string& message, std::int64_t n)
        : error(message + " at n=" + std::to_string(n)), n_(n) {}

    std::int64_t n() const noexcept { return n_; }

private:
    std::int64_t n_;
};

/// A leading or trailing recurrence coefficient vanished at the index where
/// the recursion had to divide by it.
class singular_coefficient_error final : public error {
public:
    singular_coefficient_error(int coefficient_index, std::int64_t n)
        : error("coefficient c_" + std::to_string(coefficient_index) +
                " vanishes at n=" + std::to_string(n)),
          coefficient_index_(coefficient_index), n_(n) {}

    int coefficient_index() const noexcept { return coefficient_index_; }
    std::int64_t n() const noexcept { return n_; }

private:
    int coefficient_index_;
    std::int64_t n_;
};

/// Indexed a sequence window outside its stored range.
class window_range_error final : public error {
public:
    window_range_error(std::int64_t n, std::int64_t lo, std::int64_t hi)
        : error("index n=" + std::to_string(n) + " outside window [" +
                std::to_string(lo) + "," + std::to_string(hi) + "]"),
          n_(n) {}

    std::int64_t n() const noexcept { return n_; }

private:
    std::int64_t n_;
};

/// The denominator Casoratian vanished at the source index m, so the
/// supplied solution set cannot serve as a basis there.
class degenerate_basis_error final : public error {
public:
    explicit degenerate_basis_error(std::int64_t m)
        : error("Casoratian vanishes at m=" + std::to_string(m) +
                "; the supplied solution set is not fundamental there"),
          m_(m) {}

    std::int64_t m() const noexcept { return m_; }

private:
    std::int64_t m_;
};

/// The initial rows handed to a fundamental-set constructor are linearly
/// dependent.
class dependence_error final : public error {
public:
    using error::error;
};

/// A constant-coefficient operation was invoked with a_0 = 0, which would
/// drop the order of the recurrence.
class order_degeneracy_error final : public error {
public:
    order_degeneracy_error() : error("leading constant coefficient a_0 is zero") {}
};

/// Problem input failed validation (bad field, coefficient vanishing in
/// range, inconsistent lengths, ...).
class validation_error final : public error {
public:
    using error::error;
};

/// An operation was called outside its stated precondition.
class precondition_error final : public error {
public:
    using error::error;
};

} // namespace greenrec

#endif // GREENREC_ERRORS_HPP
