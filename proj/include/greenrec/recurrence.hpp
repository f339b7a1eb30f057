#ifndef GREENREC_RECURRENCE_HPP
#define GREENREC_RECURRENCE_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "greenrec/detail/determinant.hpp"
#include "greenrec/errors.hpp"
#include "greenrec/expr.hpp"
#include "greenrec/scalar.hpp"
#include "greenrec/window.hpp"

namespace greenrec {

template <scalar_type S>
using coeff_fn = std::function<S(std::int64_t)>;

template <scalar_type S>
using forcing_fn = std::function<S(std::int64_t)>;

/// A linear difference equation of order d >= 2,
///
///     c_0(n) f(n) + c_1(n) f(n-1) + ... + c_d(n) f(n-d) = r(n),
///
/// represented by its d+1 coefficient providers. Providers are evaluated
/// lazily and memoized per n; copies of a spec share the memo. A spec is
/// immutable after construction and safe to share across threads.
template <scalar_type S>
class recurrence_spec final {
public:
    explicit recurrence_spec(std::vector<coeff_fn<S>> coefficients)
        : coeffs_(std::move(coefficients)), memo_(std::make_shared<memo_table>()) {
        if (coeffs_.size() < 3)
            throw precondition_error("a recurrence needs at least order 2 (3 coefficients)");
        memo_->per_index.resize(coeffs_.size());
    }

    static recurrence_spec from_expressions(const std::vector<expr>& coefficient_exprs) {
        std::vector<coeff_fn<S>> fns;
        fns.reserve(coefficient_exprs.size());
        for (const expr& e : coefficient_exprs)
            fns.push_back([e](std::int64_t n) { return e.template eval<S>(n); });
        return recurrence_spec(std::move(fns));
    }

    /// Normalized constant-coefficient form
    ///
    ///     f(n) - a_{d-1} f(n-1) - ... - a_0 f(n-d) = r(n),
    ///
    /// i.e. c_0 = 1 and c_l = -a_{d-l}. Requires a_0 != 0, otherwise the
    /// equation would not be of order d.
    static recurrence_spec constant_coefficient(std::vector<S> a) {
        if (a.size() < 2)
            throw precondition_error("constant-coefficient form needs at least order 2");
        if (scalar_traits<S>::is_zero(a[0])) throw order_degeneracy_error();
        const int d = static_cast<int>(a.size());
        std::vector<coeff_fn<S>> fns;
        fns.reserve(a.size() + 1);
        fns.push_back([](std::int64_t) { return scalar_traits<S>::from_int(1); });
        for (int l = 1; l <= d; ++l) {
            S value = scalar_traits<S>::from_int(0) - a[static_cast<std::size_t>(d - l)];
            fns.push_back([value](std::int64_t) { return value; });
        }
        recurrence_spec spec(std::move(fns));
        spec.constant_a_ = std::move(a);
        return spec;
    }

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    /// Memoized coefficient value c_i(n).
    S coeff(int i, std::int64_t n) const {
        auto& slot = memo_->per_index[static_cast<std::size_t>(i)];
        {
            std::lock_guard lock(memo_->mu);
            auto it = slot.find(n);
            if (it != slot.end()) return it->second;
        }
        S value = coeffs_[static_cast<std::size_t>(i)](n);
        {
            std::lock_guard lock(memo_->mu);
            slot.emplace(n, value);
        }
        return value;
    }

    bool has_constant_coefficients() const noexcept { return constant_a_.has_value(); }

    /// The a_0..a_{d-1} of the normalized constant-coefficient form.
    const std::vector<S>& constant_coefficients() const {
        if (!constant_a_)
            throw precondition_error("spec was not declared constant-coefficient");
        return *constant_a_;
    }

private:
    struct memo_table {
        std::mutex mu;
        std::vector<std::unordered_map<std::int64_t, S>> per_index;
    };

    std::vector<coeff_fn<S>> coeffs_;
    std::optional<std::vector<S>> constant_a_;
    std::shared_ptr<memo_table> memo_;
};

struct validation_issue {
    std::int64_t n;
    int coefficient_index;
    std::string message;
};

struct validation_report {
    std::vector<validation_issue> issues;
    bool ok() const noexcept { return issues.empty(); }
};

/// Scans [lo, hi] and reports every n where c_0 or c_d vanishes or where any
/// coefficient fails to evaluate. An empty report means the spec is usable
/// on that range.
template <scalar_type S>
validation_report validate_spec(const recurrence_spec<S>& spec, std::int64_t lo,
                                std::int64_t hi) {
    if (lo > hi) throw precondition_error("validation range is empty");
    validation_report report;
    const int d = spec.order();
    for (std::int64_t n = lo; n <= hi; ++n) {
        for (int i = 0; i <= d; ++i) {
            try {
                S value = spec.coeff(i, n);
                if ((i == 0 || i == d) && scalar_traits<S>::is_zero(value))
                    report.issues.push_back({n, i, "coefficient vanishes"});
            } catch (const error& e) {
                report.issues.push_back({n, i, e.what()});
            }
        }
    }
    return report;
}

/// Solves the defining equation at index n for f(n) given the d previous
/// values. history holds f(n-d) .. f(n-1) in index order.
template <scalar_type S>
S step_forward(const recurrence_spec<S>& spec, std::span<const S> history, const S& rhs,
               std::int64_t n) {
    const int d = spec.order();
    if (static_cast<int>(history.size()) != d)
        throw precondition_error("step_forward needs exactly d history values");
    S leading = spec.coeff(0, n);
    if (scalar_traits<S>::is_zero(leading)) throw singular_coefficient_error(0, n);
    S acc = rhs;
    for (int i = 1; i <= d; ++i)
        acc = acc - spec.coeff(i, n) * history[static_cast<std::size_t>(d - i)];
    return acc / leading;
}

/// Solves the defining equation at index n for f(n-d) given the d following
/// values. future holds f(n-d+1) .. f(n) in index order.
template <scalar_type S>
S step_backward(const recurrence_spec<S>& spec, std::span<const S> future, const S& rhs,
                std::int64_t n) {
    const int d = spec.order();
    if (static_cast<int>(future.size()) != d)
        throw precondition_error("step_backward needs exactly d future values");
    S trailing = spec.coeff(d, n);
    if (scalar_traits<S>::is_zero(trailing)) throw singular_coefficient_error(d, n);
    S acc = rhs;
    for (int i = 0; i <= d - 1; ++i)
        acc = acc - spec.coeff(i, n) * future[static_cast<std::size_t>(d - 1 - i)];
    return acc / trailing;
}

/// Extends d seed values stored at [seed_lo, seed_lo+d-1] across [lo, hi] by
/// running the recursion forward above the seeds and backward below them.
/// rhs(n) supplies the right-hand side of the equation applied at index n.
template <scalar_type S>
sequence_window<S> propagate_window(const recurrence_spec<S>& spec, std::int64_t seed_lo,
                                    std::vector<S> seeds, const forcing_fn<S>& rhs,
                                    std::int64_t lo, std::int64_t hi) {
    const int d = spec.order();
    if (static_cast<int>(seeds.size()) != d)
        throw precondition_error("propagation needs exactly d seed values");
    const std::int64_t seed_hi = seed_lo + d - 1;
    if (lo > seed_lo || hi < seed_hi)
        throw precondition_error("propagation range must contain the seed block");

    std::vector<S> values(static_cast<std::size_t>(hi - lo + 1),
                          scalar_traits<S>::from_int(0));
    for (int j = 0; j < d; ++j)
        values[static_cast<std::size_t>(seed_lo - lo + j)] = std::move(seeds[static_cast<std::size_t>(j)]);

    for (std::int64_t n = seed_hi + 1; n <= hi; ++n) {
        std::span<const S> history(&values[static_cast<std::size_t>(n - d - lo)],
                                   static_cast<std::size_t>(d));
        values[static_cast<std::size_t>(n - lo)] = step_forward(spec, history, rhs(n), n);
    }
    for (std::int64_t t = seed_lo - 1; t >= lo; --t) {
        const std::int64_t n = t + d;
        std::span<const S> future(&values[static_cast<std::size_t>(t + 1 - lo)],
                                  static_cast<std::size_t>(d));
        values[static_cast<std::size_t>(t - lo)] = step_backward(spec, future, rhs(n), n);
    }
    return sequence_window<S>(lo, std::move(values));
}

template <scalar_type S>
forcing_fn<S> zero_forcing() {
    return [](std::int64_t) { return scalar_traits<S>::from_int(0); };
}

/// Canonical basis solution B_i: the homogeneous solution pinned by
/// B_i(n) = delta_{i,n} on n = 0..d-1, extended across [lo, hi].
template <scalar_type S>
sequence_window<S> canonical_basis(const recurrence_spec<S>& spec, int i, std::int64_t lo,
                                   std::int64_t hi) {
    const int d = spec.order();
    if (i < 0 || i >= d) throw precondition_error("basis index out of [0, d-1]");
    if (lo > 0 || hi < d - 1)
        throw precondition_error("basis range must contain [0, d-1]");
    std::vector<S> seeds(static_cast<std::size_t>(d), scalar_traits<S>::from_int(0));
    seeds[static_cast<std::size_t>(i)] = scalar_traits<S>::from_int(1);
    return propagate_window(spec, 0, std::move(seeds), zero_forcing<S>(), lo, hi);
}

/// d homogeneous solutions over a common range, certified linearly
/// independent by a nonzero Casoratian at the start of the range.
template <scalar_type S>
class fundamental_set final {
public:
    explicit fundamental_set(std::vector<sequence_window<S>> members, bool canonical = false)
        : members_(std::move(members)), canonical_(canonical) {
        const std::size_t d = members_.size();
        if (d < 2) throw precondition_error("a fundamental set needs at least 2 members");
        for (const auto& w : members_)
            if (w.lo() != members_[0].lo() || w.hi() != members_[0].hi())
                throw precondition_error("fundamental-set members must share one range");
        if (members_[0].size() < d)
            throw precondition_error("fundamental-set windows are narrower than the order");
        std::vector<S> matrix;
        matrix.reserve(d * d);
        for (std::size_t row = 0; row < d; ++row)
            for (std::size_t i = 0; i < d; ++i)
                matrix.push_back(members_[i].at(lo() + static_cast<std::int64_t>(row)));
        if (scalar_traits<S>::is_zero(detail::determinant(std::move(matrix), d)))
            throw dependence_error("fundamental-set members are linearly dependent");
    }

    /// Builds the set from a d x d matrix of initial values, rows[i] giving
    /// F_i(0..d-1), each extended homogeneously across [lo, hi].
    static fundamental_set from_rows(const recurrence_spec<S>& spec,
                                     const std::vector<std::vector<S>>& rows,
                                     std::int64_t lo, std::int64_t hi) {
        const int d = spec.order();
        if (static_cast<int>(rows.size()) != d)
            throw precondition_error("initial matrix must have d rows");
        std::vector<S> matrix;
        matrix.reserve(static_cast<std::size_t>(d) * d);
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != d)
                throw precondition_error("initial matrix must have d columns");
            matrix.insert(matrix.end(), row.begin(), row.end());
        }
        if (scalar_traits<S>::is_zero(
                detail::determinant(std::move(matrix), static_cast<std::size_t>(d))))
            throw dependence_error("initial rows are linearly dependent");

        bool canonical = true;
        for (int i = 0; i < d && canonical; ++i)
            for (int j = 0; j < d && canonical; ++j) {
                const S expected = scalar_traits<S>::from_int(i == j ? 1 : 0);
                if (!(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                      expected))
                    canonical = false;
            }

        std::vector<sequence_window<S>> members;
        members.reserve(static_cast<std::size_t>(d));
        for (const auto& row : rows)
            members.push_back(propagate_window(spec, 0, row, zero_forcing<S>(), lo, hi));
        return fundamental_set(std::move(members), canonical);
    }

    int order() const noexcept { return static_cast<int>(members_.size()); }
    const sequence_window<S>& member(int i) const {
        return members_.at(static_cast<std::size_t>(i));
    }
    std::int64_t lo() const noexcept { return members_[0].lo(); }
    std::int64_t hi() const noexcept { return members_[0].hi(); }
    bool canonical() const noexcept { return canonical_; }

private:
    std::vector<sequence_window<S>> members_;
    bool canonical_;
};

/// The canonical basis B_0..B_{d-1} as a fundamental set over [lo, hi].
template <scalar_type S>
fundamental_set<S> canonical_fundamental_set(const recurrence_spec<S>& spec, std::int64_t lo,
                                             std::int64_t hi) {
    std::vector<sequence_window<S>> members;
    members.reserve(static_cast<std::size_t>(spec.order()));
    for (int i = 0; i < spec.order(); ++i)
        members.push_back(canonical_basis(spec, i, lo, hi));
    return fundamental_set<S>(std::move(members), /*canonical=*/true);
}

} // namespace greenrec

#endif // GREENREC_RECURRENCE_HPP
