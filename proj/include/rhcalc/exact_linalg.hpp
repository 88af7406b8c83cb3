#pragma once

// Exact linear algebra over the rationals. Matrices are dense and row-major;
// 0-row and 0-column matrices are valid and stand for maps to/from the zero
// space.

#include <rhcalc/errors.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rhcalc {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Vector = std::vector<Rational>;

/// num/den in lowest terms. Boost's two-argument rational constructor is
/// unreliable across versions, so build it by division.
inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num);
    r /= den;
    return r;
}

/// Parses "a", "-a" or "a/b". Throws InputError on anything else or b == 0.
inline Rational parse_rational(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    auto to_int = [](std::string_view s) {
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        return Integer(std::string(s));
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(text)) throw InputError("malformed rational \"" + std::string(text) + "\"");
        return Rational(to_int(text));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) throw InputError("malformed rational \"" + std::string(text) + "\"");
    const Integer d = to_int(den);
    if (d == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
    return make_rational(to_int(num), d);
}

/// Canonical text: "a" for integers, "a/b" otherwise (lowest terms, b > 0).
inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    /// Builds from nested rows; all rows must have equal length.
    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
        return from_rows(rows, rows.empty() ? 0 : rows.front().size());
    }

    /// As above with an explicit column count, which matters when there are no rows.
    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t c) {
        const std::size_t r = rows.size();
        RationalMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw InputError("ragged matrix rows");
            std::copy(rows[i].begin(), rows[i].end(), m.entries_.begin() + static_cast<std::ptrdiff_t>(i * c));
        }
        return m;
    }

    static RationalMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
        std::vector<std::vector<Rational>> tmp;
        for (const auto& row : rows) tmp.emplace_back(row.begin(), row.end());
        return from_rows(tmp);
    }

    /// Columns all of length `rows`; `rows` is needed when there are no columns.
    static RationalMatrix from_columns(std::size_t rows, const std::vector<Vector>& columns) {
        RationalMatrix m(rows, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].size() != rows) throw InputError("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
        }
        return m;
    }

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::span<const Rational> row(std::size_t i) const {
        return {entries_.data() + i * cols_, cols_};
    }

    Vector column(std::size_t j) const {
        Vector v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    RationalMatrix transpose() const {
        RationalMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// [this | other]; row counts must agree.
    RationalMatrix hstack(const RationalMatrix& other) const {
        if (other.rows_ != rows_) throw InputError("hstack: row count mismatch");
        RationalMatrix m(rows_, cols_ + other.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
            for (std::size_t j = 0; j < other.cols_; ++j) m(i, cols_ + j) = other(i, j);
        }
        return m;
    }

    /// True when every entry is -1, 0 or 1 (coboundary-shaped).
    bool is_unit_entry() const {
        return std::all_of(entries_.begin(), entries_.end(),
                           [](const Rational& q) { return q == 0 || q == 1 || q == -1; });
    }

    std::size_t nonzero_count() const {
        return static_cast<std::size_t>(
            std::count_if(entries_.begin(), entries_.end(), [](const Rational& q) { return q != 0; }));
    }

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
        if (a.cols_ != b.rows_) throw InputError("matrix product: inner dimension mismatch");
        RationalMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (b(k, j) != 0) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Vector operator*(const RationalMatrix& a, const Vector& v) {
        if (a.cols_ != v.size()) throw InputError("matrix-vector product: dimension mismatch");
        Vector out(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                if (a(i, k) != 0 && v[k] != 0) out[i] += a(i, k) * v[k];
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

struct RrefResult {
    RationalMatrix matrix;
    std::vector<std::size_t> pivots;
};

namespace detail {

// Integer echelon form from fraction-free (Bareiss) elimination. Rows are
// first scaled by the lcm of their denominators. Pivot search takes the first
// nonzero row in column order, so the result is deterministic.
struct IntegerEchelon {
    std::vector<std::vector<Integer>> rows;  // only the first pivots.size() rows are nonzero
    std::vector<std::size_t> pivots;
};

inline IntegerEchelon bareiss_echelon(const RationalMatrix& m) {
    const std::size_t nr = m.rows();
    const std::size_t nc = m.cols();
    IntegerEchelon e;
    e.rows.assign(nr, std::vector<Integer>(nc));
    for (std::size_t i = 0; i < nr; ++i) {
        Integer lcm = 1;
        for (const auto& q : m.row(i))
            if (q != 0) lcm = boost::multiprecision::lcm(lcm, denominator(q));
        for (std::size_t j = 0; j < nc; ++j) {
            const Rational& q = m(i, j);
            if (q != 0) e.rows[i][j] = numerator(q) * (lcm / denominator(q));
        }
    }

    auto& a = e.rows;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t p = r;
        while (p < nr && a[p][c] == 0) ++p;
        if (p == nr) continue;
        std::swap(a[p], a[r]);
        const Integer& piv = a[r][c];
        for (std::size_t i = r + 1; i < nr; ++i) {
            const Integer lead = a[i][c];
            for (std::size_t j = c + 1; j < nc; ++j) {
                Integer num = piv * a[i][j] - lead * a[r][j];
                Integer quo, rem;
                boost::multiprecision::divide_qr(num, prev, quo, rem);
                if (rem != 0) throw InvariantViolation("Bareiss step produced an inexact division");
                a[i][j] = std::move(quo);
            }
            a[i][c] = 0;
        }
        prev = piv;
        e.pivots.push_back(c);
        ++r;
    }
    return e;
}

inline std::size_t bareiss_rank(const RationalMatrix& m) { return bareiss_echelon(m).pivots.size(); }

// Sparse-row elimination for matrices with few nonzeros (coboundaries of
// simplicial complexes). Only rows touching the pivot column are updated.
inline std::size_t sparse_rank(const RationalMatrix& m) {
    using SparseRow = std::map<std::size_t, Rational>;
    std::vector<SparseRow> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        SparseRow row;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) row.emplace(j, m(i, j));
        if (!row.empty()) rows.push_back(std::move(row));
    }

    std::vector<bool> used(rows.size(), false);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        std::size_t p = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (!used[i] && rows[i].count(c) != 0) { p = i; break; }
        if (p == rows.size()) continue;
        used[p] = true;
        ++rank;
        const SparseRow& pivot_row = rows[p];
        const Rational piv = pivot_row.at(c);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (used[i]) continue;
            auto it = rows[i].find(c);
            if (it == rows[i].end()) continue;
            const Rational factor = it->second / piv;
            for (const auto& [j, v] : pivot_row) {
                Rational& target = rows[i][j];
                target -= factor * v;
                if (target == 0) rows[i].erase(j);
            }
        }
    }
    return rank;
}

}  // namespace detail

/// Reduced row echelon form with pivot columns in increasing order. The
/// output has the same shape as the input; zero rows sit at the bottom.
inline RrefResult rref(const RationalMatrix& m) {
    auto e = detail::bareiss_echelon(m);
    const std::size_t r = e.pivots.size();
    RrefResult out{RationalMatrix(m.rows(), m.cols()), e.pivots};
    RationalMatrix& R = out.matrix;
    for (std::size_t i = 0; i < r; ++i) {
        const Integer& piv = e.rows[i][e.pivots[i]];
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (e.rows[i][j] != 0) R(i, j) = make_rational(e.rows[i][j], piv);
    }
    // Back-substitution, bottom pivot first.
    for (std::size_t k = r; k-- > 0;) {
        const std::size_t pc = e.pivots[k];
        for (std::size_t i = 0; i < k; ++i) {
            const Rational f = R(i, pc);
            if (f == 0) continue;
            for (std::size_t j = pc; j < m.cols(); ++j)
                if (R(k, j) != 0) R(i, j) -= f * R(k, j);
        }
    }
    return out;
}

inline std::size_t rank(const RationalMatrix& m) {
    if (m.empty()) return 0;
    if (m.is_unit_entry()) return detail::sparse_rank(m);
    return detail::bareiss_rank(m);
}

/// Columns form a basis of the null space, one per free column of rref(m).
inline RationalMatrix kernel_basis(const RationalMatrix& m) {
    const auto [R, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vector> columns;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -R(i, f);
        columns.push_back(std::move(v));
    }
    return RationalMatrix::from_columns(m.cols(), columns);
}

/// If v lies in the column span of m, returns coefficients c with m·c = v
/// (nonzero only on pivot columns); otherwise std::nullopt.
inline std::optional<Vector> image_membership(const RationalMatrix& m, const Vector& v) {
    if (v.size() != m.rows())
        throw InputError("image_membership: vector length " + std::to_string(v.size()) +
                         " does not match row count " + std::to_string(m.rows()));
    const auto augmented = m.hstack(RationalMatrix::from_columns(m.rows(), {v}));
    const auto [R, pivots] = rref(augmented);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vector c(m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) c[pivots[i]] = R(i, m.cols());
    if (m * c != v) throw InvariantViolation("image_membership witness does not reproduce the vector");
    return c;
}

}  // namespace rhcalc
