#ifndef GREENREC_DETAIL_DETERMINANT_HPP
#define GREENREC_DETAIL_DETERMINANT_HPP

#include <cstddef>
#include <vector>

#include "greenrec/scalar.hpp"

namespace greenrec::detail {

/// Determinant of a dense row-major dim x dim matrix by Gaussian
/// elimination. Exact scalars pick the first nonzero pivot; floats pick the
/// largest-magnitude one. The matrix is consumed.
template <scalar_type S>
S determinant(std::vector<S> m, std::size_t dim) {
    using traits = scalar_traits<S>;
    auto cell = [&](std::size_t r, std::size_t c) -> S& { return m[r * dim + c]; };

    S result = traits::from_int(1);
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < dim; ++r)
            if (traits::better_pivot(cell(pivot, col), cell(r, col))) pivot = r;
        if (traits::is_zero(cell(pivot, col))) return traits::from_int(0);
        if (pivot != col) {
            for (std::size_t c = col; c < dim; ++c) std::swap(cell(pivot, c), cell(col, c));
            result = traits::from_int(0) - result;
        }
        result = result * cell(col, col);
        for (std::size_t r = col + 1; r < dim; ++r) {
            if (traits::is_zero(cell(r, col))) continue;
            S factor = cell(r, col) / cell(col, col);
            for (std::size_t c = col; c < dim; ++c)
                cell(r, c) = cell(r, c) - factor * cell(col, c);
        }
    }
    return result;
}

} // namespace greenrec::detail

#endif // GREENREC_DETAIL_DETERMINANT_HPP
