#ifndef GREENREC_WINDOW_HPP
#define GREENREC_WINDOW_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "greenrec/errors.hpp"
#include "greenrec/scalar.hpp"

namespace greenrec {

/// Contiguous block of sequence values indexed by integers. The value at
/// index n lives at values[n - offset]. Indexing outside the stored range
/// is a hard error, never a silent zero.
template <scalar_type S>
class sequence_window final {
public:
    sequence_window(std::int64_t offset, std::vector<S> values)
        : offset_(offset), values_(std::move(values)) {
        if (values_.empty())
            throw precondition_error("sequence window must not be empty");
    }

    std::int64_t lo() const noexcept { return offset_; }
    std::int64_t hi() const noexcept {
        return offset_ + static_cast<std::int64_t>(values_.size()) - 1;
    }
    std::size_t size() const noexcept { return values_.size(); }

    bool contains(std::int64_t n) const noexcept { return n >= lo() && n <= hi(); }

    const S& at(std::int64_t n) const {
        if (!contains(n)) throw window_range_error(n, lo(), hi());
        return values_[static_cast<std::size_t>(n - offset_)];
    }

    const S& operator()(std::int64_t n) const { return at(n); }

    const std::vector<S>& values() const noexcept { return values_; }

    sequence_window slice(std::int64_t new_lo, std::int64_t new_hi) const {
        if (new_lo > new_hi || !contains(new_lo) || !contains(new_hi))
            throw window_range_error(new_lo, lo(), hi());
        std::vector<S> out(values_.begin() + (new_lo - offset_),
                           values_.begin() + (new_hi - offset_) + 1);
        return sequence_window(new_lo, std::move(out));
    }

    friend bool operator==(const sequence_window& a, const sequence_window& b) {
        return a.offset_ == b.offset_ && a.values_ == b.values_;
    }

private:
    std::int64_t offset_;
    std::vector<S> values_;
};

/// First index at which two windows disagree over their shared range, if
/// any. Windows with disjoint ranges compare as having no mismatch.
template <scalar_type S>
std::optional<std::int64_t> first_mismatch(const sequence_window<S>& a,
                                           const sequence_window<S>& b) {
    const std::int64_t lo = std::max(a.lo(), b.lo());
    const std::int64_t hi = std::min(a.hi(), b.hi());
    for (std::int64_t n = lo; n <= hi; ++n)
        if (!(a.at(n) == b.at(n))) return n;
    return std::nullopt;
}

} // namespace greenrec

#endif // GREENREC_WINDOW_HPP
