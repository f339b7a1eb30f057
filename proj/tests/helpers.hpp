#ifndef GREENREC_TESTS_HELPERS_HPP
#define GREENREC_TESTS_HELPERS_HPP

#include <string>
#include <vector>

#include "greenrec/expr.hpp"
#include "greenrec/recurrence.hpp"

namespace testutil {

using greenrec::rational;

template <class S>
greenrec::recurrence_spec<S> spec_from_strings(const std::vector<std::string>& coefficients) {
    std::vector<greenrec::expr> exprs;
    exprs.reserve(coefficients.size());
    for (const auto& text : coefficients) exprs.push_back(greenrec::expr::parse(text));
    return greenrec::recurrence_spec<S>::from_expressions(exprs);
}

template <class S>
greenrec::forcing_fn<S> forcing_from_string(const std::string& text) {
    greenrec::expr e = greenrec::expr::parse(text);
    return [e](std::int64_t n) { return e.template eval<S>(n); };
}

// f(n) = 2 f(n-1) - f(n-2) + n
template <class S = rational>
greenrec::recurrence_spec<S> example1_spec() {
    return spec_from_strings<S>({"1", "-2", "1"});
}

// Same homogeneous part driven by 2^n.
template <class S = rational>
greenrec::recurrence_spec<S> example2_spec() {
    return example1_spec<S>();
}

// (2n-1) f(n) - 4n f(n-1) + (2n+1) f(n-2) = 3
template <class S = rational>
greenrec::recurrence_spec<S> example3_spec() {
    return spec_from_strings<S>({"2*n - 1", "-4*n", "2*n + 1"});
}

// Driven solutions with zero initial values, from the closed forms.
inline rational particular1(std::int64_t n) {
    return rational(n) * rational(n - 1) * rational(n + 4) / rational(6);
}

inline rational particular2(std::int64_t n) {
    return greenrec::scalar_pow(rational(2), n + 2) - rational(4) - rational(4) * rational(n);
}

inline rational particular3(std::int64_t n) {
    return rational(n) * rational(n - 1) / rational(2);
}

// Defining-equation residuals vanish at every index the window can support.
template <class S>
bool residuals_vanish(const greenrec::recurrence_spec<S>& spec,
                      const greenrec::sequence_window<S>& w,
                      const greenrec::forcing_fn<S>& rhs) {
    const int d = spec.order();
    for (std::int64_t n = w.lo() + d; n <= w.hi(); ++n) {
        S acc = greenrec::scalar_traits<S>::from_int(0) - rhs(n);
        for (int i = 0; i <= d; ++i) acc = acc + spec.coeff(i, n) * w.at(n - i);
        if (!greenrec::scalar_traits<S>::is_zero(acc)) return false;
    }
    return true;
}

} // namespace testutil

#endif // GREENREC_TESTS_HELPERS_HPP
