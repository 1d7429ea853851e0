#pragma once

/// Transforms between mass space and cumulative space.
///
/// A mass vector p maps to its running totals alpha[i] = sum of p[0..i]; a
/// mass table F maps to its 2-D running totals Fbar[i][j] = sum of the
/// upper-left (i+1) x (j+1) block.  Both transforms are invertible by first
/// (resp. mixed second) differences against an implicit zero border at
/// index -1.  Cumulative arrays of nonnegative tables are exactly the arrays
/// satisfying the Monge (supermodularity) inequality with that zero border,
/// which is what is_monge checks.

#include <cstddef>
#include <vector>

#include "maxplus/dense.hpp"
#include "maxplus/linalg.hpp"
#include "maxplus/tropical.hpp"

namespace maxplus {

template <class T>
T total_mass(const std::vector<T>& masses) {
    T sigma{};
    for (const T& m : masses) sigma = sigma + m;
    return sigma;
}

/// Running totals of a mass vector.
template <class T>
std::vector<T> cumulative_vector(const std::vector<T>& masses) {
    std::vector<T> out(masses.size());
    T run{};
    for (std::size_t i = 0; i < masses.size(); ++i) {
        run = run + masses[i];
        out[i] = run;
    }
    return out;
}

/// First differences; inverse of cumulative_vector.  Throws on a decreasing
/// input, which would correspond to a negative mass.
template <class T>
std::vector<T> mass_vector(const std::vector<T>& cumulative,
                           const Compare<T>& cmp = {}) {
    std::vector<T> out(cumulative.size());
    T prev{};
    for (std::size_t i = 0; i < cumulative.size(); ++i) {
        T d = cumulative[i] - prev;
        if (!cmp.le(T{}, d))
            throw NegativeCellError("cumulative vector decreases at index " +
                                    std::to_string(i));
        out[i] = d < T{} ? T{} : d;
        prev = cumulative[i];
    }
    return out;
}

/// 2-D running totals of a mass table.
template <class T>
Dense<T> cumulative_table(const Dense<T>& table) {
    Dense<T> out(table.rows(), table.cols());
    for (std::size_t i = 0; i < table.rows(); ++i) {
        T row_run{};
        for (std::size_t j = 0; j < table.cols(); ++j) {
            row_run = row_run + table.at(i, j);
            out.at(i, j) = i == 0 ? row_run : out.at(i - 1, j) + row_run;
        }
    }
    return out;
}

/// Mixed second differences against the implicit zero border.  Accepts any
/// array; cells may come out negative when the input is not a cumulative
/// array of nonnegative masses.
template <class T>
Dense<T> mixed_differences(const Dense<T>& c) {
    Dense<T> out(c.rows(), c.cols());
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) {
            T v = c.at(i, j);
            if (i > 0) v = v - c.at(i - 1, j);
            if (j > 0) v = v - c.at(i, j - 1);
            if (i > 0 && j > 0) v = v + c.at(i - 1, j - 1);
            out.at(i, j) = v;
        }
    return out;
}

/// Strict inverse of cumulative_table: mixed differences, validated
/// nonnegative.  A negative cell means the input was not in the image of
/// cumulative_table (equivalently, not Monge with nonnegative border).
template <class T>
Dense<T> mass_table(const Dense<T>& c, const Compare<T>& cmp = {}) {
    Dense<T> out = mixed_differences(c);
    for (std::size_t i = 0; i < out.rows(); ++i)
        for (std::size_t j = 0; j < out.cols(); ++j) {
            T& v = out.at(i, j);
            if (!cmp.le(T{}, v))
                throw NegativeCellError("negative cell at (" +
                                        std::to_string(i) + "," +
                                        std::to_string(j) + ")");
            if (v < T{}) v = T{};
        }
    return out;
}

/// Monge (supermodularity) check with the implicit zero border:
/// c[i][j] + c[i+1][j+1] >= c[i][j+1] + c[i+1][j] for i, j >= -1, where
/// index -1 reads as 0.  Equivalent to every mixed second difference being
/// nonnegative.
template <class T>
bool is_monge(const Dense<T>& c, const Compare<T>& cmp = {}) {
    auto cell = [&](std::size_t i, std::size_t j, bool i0, bool j0) -> T {
        if (i0 || j0) return T{};
        return c.at(i - 1, j - 1);
    };
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) {
            // Block with corners at border indices (i-1, j-1) and (i, j).
            T lhs = cell(i, j, i == 0, j == 0) + c.at(i, j);
            T rhs = cell(i, j + 1, i == 0, false) + cell(i + 1, j, false, j == 0);
            if (!cmp.le(rhs, lhs)) return false;
        }
    return true;
}

/// Whether c could be a table of running totals at all: nonnegative against
/// the zero border and nondecreasing along every row and column.
template <class T>
bool cumulative_monotone(const Dense<T>& c, const Compare<T>& cmp = {}) {
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) {
            const T& here = c.at(i, j);
            if (!cmp.le(i == 0 ? T{} : c.at(i - 1, j), here)) return false;
            if (!cmp.le(j == 0 ? T{} : c.at(i, j - 1), here)) return false;
        }
    return true;
}

/// The order under which the Fréchet bounds are extremal: A precedes B when
/// every upper-left block of A carries no more mass than the same block of B.
template <class T>
bool cumulative_le(const Dense<T>& a, const Dense<T>& b,
                   const Compare<T>& cmp = {}) {
    require_same_shape(a.rows(), a.cols(), b.rows(), b.cols(), "cumulative_le");
    Dense<T> ca = cumulative_table(a);
    Dense<T> cb = cumulative_table(b);
    for (std::size_t k = 0; k < ca.cells().size(); ++k)
        if (!cmp.le(ca.cells()[k], cb.cells()[k])) return false;
    return true;
}

/// Lower-triangular 0/1 matrix whose ordinary product with a column vector
/// takes prefix sums.  Only test oracles multiply by it; the transforms above
/// use running sums directly.
template <class T>
Dense<T> prefix_sum_matrix(std::size_t n) {
    Dense<T> out(n, n, T{});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) out.at(i, j) = T(1);
    return out;
}

/// For a nonnegative array U, the ordinary row-sum vector equals the
/// max-plus product of the row-wise running-total matrix with the all-unit
/// vector.  Returns whether that identity holds for the given array (it can
/// fail when U has negative entries).
template <class T>
bool tropical_rowsum_identity(const Dense<T>& u, const Compare<T>& cmp = {}) {
    std::vector<T> row_sums(u.rows(), T{});
    for (std::size_t i = 0; i < u.rows(); ++i)
        for (std::size_t j = 0; j < u.cols(); ++j)
            row_sums[i] = row_sums[i] + u.at(i, j);

    Dense<T> running(u.rows(), u.cols());
    for (std::size_t i = 0; i < u.rows(); ++i) {
        T run{};
        for (std::size_t j = 0; j < u.cols(); ++j) {
            run = run + u.at(i, j);
            running.at(i, j) = run;
        }
    }
    TropMatrix<T> reduced =
        odot(to_tropical(running), trop_ones<T>(u.cols(), 1));
    for (std::size_t i = 0; i < u.rows(); ++i) {
        if (!reduced.at(i, 0).is_finite()) return false;
        if (!cmp.eq(reduced.at(i, 0).value(), row_sums[i])) return false;
    }
    return true;
}

}  // namespace maxplus
