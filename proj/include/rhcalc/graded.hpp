#pragma once

// Graded vector spaces over Q, recorded by dimension only.

#include <rhcalc/errors.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>

namespace rhcalc {

/// A dimension that is either a finite natural number or UNBOUNDED. An
/// UNBOUNDED value remembers the largest lower bound known for it.
class ExtDim {
public:
    constexpr ExtDim() = default;
    constexpr ExtDim(std::uint64_t n) : count_(n) {}  // NOLINT: implicit from naturals

    static constexpr ExtDim unbounded(std::uint64_t lower_bound) {
        ExtDim d(lower_bound);
        d.bounded_ = false;
        return d;
    }

    constexpr bool is_finite() const noexcept { return bounded_; }
    constexpr bool is_zero() const noexcept { return bounded_ && count_ == 0; }

    /// The finite value; throws if UNBOUNDED.
    std::uint64_t value() const {
        if (!bounded_) throw InputError("dimension is UNBOUNDED (at least " + std::to_string(count_) + ")");
        return count_;
    }

    /// Exact value when finite, lower bound otherwise.
    constexpr std::uint64_t lower_bound() const noexcept { return count_; }

    // Lower-bound arithmetic: a sum or positive multiple involving an
    // UNBOUNDED term is UNBOUNDED with the combined lower bound.
    friend constexpr ExtDim operator+(ExtDim a, ExtDim b) {
        ExtDim r(a.count_ + b.count_);
        r.bounded_ = a.bounded_ && b.bounded_;
        return r;
    }
    ExtDim& operator+=(ExtDim other) { return *this = *this + other; }

    friend constexpr ExtDim scale(ExtDim a, std::uint64_t k) {
        if (k == 0) return ExtDim(0);
        ExtDim r(a.count_ * k);
        r.bounded_ = a.bounded_;
        return r;
    }

    friend constexpr bool operator==(const ExtDim&, const ExtDim&) = default;

    /// "3", or "≥3" for an UNBOUNDED value with lower bound 3.
    std::string str() const { return bounded_ ? std::to_string(count_) : "≥" + std::to_string(count_); }

private:
    std::uint64_t count_ = 0;
    bool bounded_ = true;
};

/// Finitely supported map from integer degree to dimension. Finite zeros are
/// never stored, so equality is equality of graded spaces.
class GradedDims {
public:
    using Map = std::map<int, ExtDim>;

    GradedDims() = default;
    GradedDims(std::initializer_list<std::pair<const int, ExtDim>> init) {
        for (const auto& [d, v] : init) set(d, v);
    }

    ExtDim operator[](int degree) const {
        auto it = dims_.find(degree);
        return it == dims_.end() ? ExtDim(0) : it->second;
    }

    void set(int degree, ExtDim dim) {
        if (dim.is_zero()) dims_.erase(degree);
        else dims_[degree] = dim;
    }

    void add(int degree, ExtDim dim) { set(degree, (*this)[degree] + dim); }

    const Map& entries() const noexcept { return dims_; }
    bool empty() const noexcept { return dims_.empty(); }
    std::optional<int> min_degree() const {
        return dims_.empty() ? std::nullopt : std::optional<int>(dims_.begin()->first);
    }
    std::optional<int> max_degree() const {
        return dims_.empty() ? std::nullopt : std::optional<int>(dims_.rbegin()->first);
    }

    bool is_finite() const {
        return std::all_of(dims_.begin(), dims_.end(), [](const auto& e) { return e.second.is_finite(); });
    }

    /// Sum of all dimensions (lower-bound sum if anything is UNBOUNDED).
    ExtDim total() const {
        ExtDim t;
        for (const auto& [d, v] : dims_) t += v;
        return t;
    }

    friend bool operator==(const GradedDims&, const GradedDims&) = default;

private:
    Map dims_;
};

/// Cohomology in degree n moves to degree -n.
inline GradedDims regrade_nonpositive(const GradedDims& betti) {
    GradedDims out;
    for (const auto& [d, v] : betti.entries()) {
        if (d < 0) throw InputError("regrade_nonpositive: input has support in negative degree " + std::to_string(d));
        out.set(-d, v);
    }
    return out;
}

/// Degreewise Cauchy convolution of dimension vectors.
inline GradedDims tensor(const GradedDims& v, const GradedDims& w) {
    if (!v.is_finite() || !w.is_finite())
        throw InputError("tensor: UNBOUNDED dimension; resolve the colimit before tensoring");
    GradedDims out;
    for (const auto& [a, x] : v.entries())
        for (const auto& [b, y] : w.entries()) out.add(a + b, ExtDim(x.value() * y.value()));
    return out;
}

/// Keeps degrees >= min_degree.
inline GradedDims truncate_min(const GradedDims& v, int min_degree) {
    GradedDims out;
    for (const auto& [d, x] : v.entries())
        if (d >= min_degree) out.set(d, x);
    return out;
}

/// Sparse polynomial in t, ascending degree, e.g. "2·t^1 + t^3"; "0" for the
/// zero space. UNBOUNDED coefficients print as "∞".
inline std::string poincare_series(const GradedDims& v) {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, x] : v.entries()) {
        if (!first) os << " + ";
        first = false;
        const std::string coeff = x.is_finite() ? std::to_string(x.value()) : "∞";
        if (d == 0) {
            os << coeff;
        } else {
            if (coeff != "1") os << coeff << "·";
            os << "t^" << d;
        }
    }
    return os.str();
}

}  // namespace rhcalc
