#pragma once

/// The Fréchet bounds engine.
///
/// An instance is a pair of nonnegative marginal vectors p (length n) and q
/// (length m) with equal total mass sigma.  The feasible set is every n x m
/// nonnegative table whose row sums are p and column sums are q (a
/// transportation polytope).  Under the cumulative order that set has a
/// maximum and a minimum element, and both have closed forms in terms of
/// alpha = running totals of p and beta = running totals of q:
///
///     upper[i][j] = min(alpha[i], beta[j])
///     lower[i][j] = max(0, alpha[i] + beta[j] - sigma)
///
/// This module computes the upper bound a second way, as the greatest
/// subsolution of a max-plus linear system via residuated division, and the
/// lower bound a second way, by a greedy backward sweep whose loop invariant
/// is the closed form.  The closed forms stay available as independent
/// oracles; equality of the two routes is the core correctness check of the
/// whole library.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "maxplus/cumulative.hpp"
#include "maxplus/dense.hpp"
#include "maxplus/linalg.hpp"
#include "maxplus/random.hpp"
#include "maxplus/tropical.hpp"

namespace maxplus {

/// A marginal pair.  Masses are nonnegative; sigma() is the total of p.
/// Feasibility (total of q equal to total of p) is checked by the bound
/// computations, not at construction, so infeasible pairs can be built and
/// diagnosed.
template <class T>
struct Marginals {
    std::vector<T> p;
    std::vector<T> q;

    std::size_t n() const { return p.size(); }
    std::size_t m() const { return q.size(); }
    T sigma() const { return total_mass(p); }
};

namespace detail {

/// Total-mass agreement.  Exact mode wants literal equality; float mode
/// scales the tolerance by the mass itself so large count data does not
/// get rejected over representation noise.
template <class T>
bool sums_match(const T& sp, const T& sq, const Compare<T>& cmp) {
    return cmp.eq(sp, sq);
}

inline bool sums_match(double sp, double sq, const Compare<double>& cmp) {
    double scale = std::max({sp, sq, 1.0});
    return std::fabs(sp - sq) <= cmp.epsilon * scale;
}

}  // namespace detail

template <class T>
bool feasible(const Marginals<T>& inst, const Compare<T>& cmp = {}) {
    return !inst.p.empty() && !inst.q.empty() &&
           detail::sums_match(total_mass(inst.p), total_mass(inst.q), cmp);
}

template <class T>
void require_feasible(const Marginals<T>& inst, const Compare<T>& cmp = {}) {
    if (inst.p.empty() || inst.q.empty())
        throw ShapeError("marginals must be nonempty");
    T sp = total_mass(inst.p);
    T sq = total_mass(inst.q);
    if (!detail::sums_match(sp, sq, cmp))
        throw InfeasibleError("infeasible marginals: sum(p) = " +
                              value_string(sp) + " but sum(q) = " +
                              value_string(sq));
}

/// Row sums equal p and column sums equal q, checked by ordinary sums.
/// Negative cells disqualify a table outright.
template <class T>
bool matches_marginals(const Dense<T>& table, const Marginals<T>& inst,
                       const Compare<T>& cmp = {}) {
    require_same_shape(table.rows(), table.cols(), inst.n(), inst.m(),
                       "matches_marginals");
    for (const T& cell : table.cells())
        if (!cmp.le(T{}, cell)) return false;
    for (std::size_t i = 0; i < table.rows(); ++i) {
        T sum{};
        for (std::size_t j = 0; j < table.cols(); ++j)
            sum = sum + table.at(i, j);
        if (!cmp.eq(sum, inst.p[i])) return false;
    }
    for (std::size_t j = 0; j < table.cols(); ++j) {
        T sum{};
        for (std::size_t i = 0; i < table.rows(); ++i)
            sum = sum + table.at(i, j);
        if (!cmp.eq(sum, inst.q[j])) return false;
    }
    return true;
}

/// The max-plus characterization of the same membership: with Fbar the
/// cumulative table, Fbar (*) unit-column must equal the running totals of p
/// and unit-row (*) Fbar the running totals of q.  Agrees with
/// matches_marginals on every nonnegative table.
template <class T>
bool matches_marginals_tropical(const Dense<T>& table,
                                const Marginals<T>& inst,
                                const Compare<T>& cmp = {}) {
    require_same_shape(table.rows(), table.cols(), inst.n(), inst.m(),
                       "matches_marginals_tropical");
    for (const T& cell : table.cells())
        if (!cmp.le(T{}, cell)) return false;

    TropMatrix<T> fbar = to_tropical(cumulative_table(table));
    std::vector<T> alpha = cumulative_vector(inst.p);
    std::vector<T> beta = cumulative_vector(inst.q);

    TropMatrix<T> row_reduce = odot(fbar, trop_ones<T>(inst.m(), 1));
    for (std::size_t i = 0; i < inst.n(); ++i)
        if (!cmp.eq(row_reduce.at(i, 0), Tropical<T>(alpha[i]))) return false;

    TropMatrix<T> col_reduce = odot(trop_ones<T>(1, inst.n()), fbar);
    for (std::size_t j = 0; j < inst.m(); ++j)
        if (!cmp.eq(col_reduce.at(0, j), Tropical<T>(beta[j]))) return false;

    return true;
}

/// Closed-form upper bound: min(alpha[i], beta[j]).  Oracle for the
/// residuated route.
template <class T>
Dense<T> upper_cumulative_closed(const Marginals<T>& inst,
                                 const Compare<T>& cmp = {}) {
    require_feasible(inst, cmp);
    std::vector<T> alpha = cumulative_vector(inst.p);
    std::vector<T> beta = cumulative_vector(inst.q);
    Dense<T> out(inst.n(), inst.m());
    for (std::size_t i = 0; i < inst.n(); ++i)
        for (std::size_t j = 0; j < inst.m(); ++j)
            out.at(i, j) = alpha[i] < beta[j] ? alpha[i] : beta[j];
    return out;
}

/// Upper bound as the greatest subsolution of the max-plus system
///     X (*) unit-column = running totals of p
///     unit-row (*) X    = running totals of q,
/// computed with the two residuated divisions and the lattice meet.
template <class T>
Dense<T> upper_cumulative_residuated(const Marginals<T>& inst,
                                     const Compare<T>& cmp = {}) {
    require_feasible(inst, cmp);
    std::size_t n = inst.n();
    std::size_t m = inst.m();

    TropMatrix<T> alpha(n, 1);
    {
        std::vector<T> a = cumulative_vector(inst.p);
        for (std::size_t i = 0; i < n; ++i) alpha.at(i, 0) = Tropical<T>(a[i]);
    }
    TropMatrix<T> beta_row(1, m);
    {
        std::vector<T> b = cumulative_vector(inst.q);
        for (std::size_t j = 0; j < m; ++j)
            beta_row.at(0, j) = Tropical<T>(b[j]);
    }

    // Greatest X with X (*) ones <= alpha, as rdiv; greatest X with
    // ones (*) X <= beta, as ldiv; their meet solves the system.
    TropMatrix<T> from_rows = rdiv(alpha, trop_ones<T>(m, 1));
    TropMatrix<T> from_cols = ldiv(trop_ones<T>(1, n), beta_row);
    return from_tropical(wedge(from_rows, from_cols));
}

/// Closed-form lower bound: max(0, alpha[i] + beta[j] - sigma).  Oracle for
/// the greedy route.
template <class T>
Dense<T> lower_cumulative_closed(const Marginals<T>& inst,
                                 const Compare<T>& cmp = {}) {
    require_feasible(inst, cmp);
    std::vector<T> alpha = cumulative_vector(inst.p);
    std::vector<T> beta = cumulative_vector(inst.q);
    T sigma = inst.sigma();
    Dense<T> out(inst.n(), inst.m());
    for (std::size_t i = 0; i < inst.n(); ++i)
        for (std::size_t j = 0; j < inst.m(); ++j) {
            T v = alpha[i] + beta[j] - sigma;
            out.at(i, j) = v < T{} ? T{} : v;
        }
    return out;
}

/// Traversal order of the greedy sweep.  Any order that finishes row i+1 and
/// column j+1 before cell (i, j) yields the same array; exposing both
/// nestings lets tests assert that.
enum class SweepOrder { columns_outer, rows_outer };

/// Lower bound by greedy backward sweep.  The last column is seeded with the
/// running totals of p and the last row with those of q; every interior cell
/// is then filled from its east, south and south-east neighbors in tropical
/// vocabulary:
///     cell = inverse(south_east) (*) east (*) south (+) unit
/// i.e. max(east + south - south_east, 0) in ordinary arithmetic.
template <class T>
Dense<T> lower_cumulative_greedy(const Marginals<T>& inst,
                                 SweepOrder order = SweepOrder::columns_outer,
                                 const Compare<T>& cmp = {}) {
    require_feasible(inst, cmp);
    std::size_t n = inst.n();
    std::size_t m = inst.m();
    std::vector<T> alpha = cumulative_vector(inst.p);
    std::vector<T> beta = cumulative_vector(inst.q);

    TropMatrix<T> fbar(n, m);
    for (std::size_t i = 0; i < n; ++i)
        fbar.at(i, m - 1) = Tropical<T>(alpha[i]);
    for (std::size_t j = 0; j < m; ++j)
        fbar.at(n - 1, j) = Tropical<T>(beta[j]);

    auto fill = [&](std::size_t i, std::size_t j) {
        Tropical<T> product = odot(inverse(fbar.at(i + 1, j + 1)),
                                   odot(fbar.at(i, j + 1), fbar.at(i + 1, j)));
        fbar.at(i, j) = oplus(product, Tropical<T>::one());
    };

    if (n > 1 && m > 1) {
        if (order == SweepOrder::columns_outer) {
            for (std::size_t j = m - 1; j-- > 0;)
                for (std::size_t i = n - 1; i-- > 0;) fill(i, j);
        } else {
            for (std::size_t i = n - 1; i-- > 0;)
                for (std::size_t j = m - 1; j-- > 0;) fill(i, j);
        }
    }
    return from_tropical(fbar);
}

/// Strict extraction of the mass table realizing a cumulative bound.
template <class T>
Dense<T> extract_table(const Dense<T>& cumulative, const Compare<T>& cmp = {}) {
    return mass_table(cumulative, cmp);
}

template <class T>
struct BoundsResult {
    Dense<T> upper_cumulative;
    Dense<T> lower_cumulative;
    Dense<T> upper_table;
    Dense<T> lower_table;
};

/// Computes both bounds by the max-plus routes (residuation, greedy sweep)
/// and extracts the realizing tables.
template <class T>
BoundsResult<T> compute_bounds(const Marginals<T>& inst,
                               const Compare<T>& cmp = {}) {
    Dense<T> upper = upper_cumulative_residuated(inst, cmp);
    Dense<T> lower =
        lower_cumulative_greedy(inst, SweepOrder::columns_outer, cmp);
    Dense<T> upper_table = extract_table(upper, cmp);
    Dense<T> lower_table = extract_table(lower, cmp);
    return {std::move(upper), std::move(lower), std::move(upper_table),
            std::move(lower_table)};
}

/// Northwest-corner allocation: greedily satisfies marginals from the
/// upper-left, always producing a feasible table.
template <class T>
Dense<T> northwest_table(const Marginals<T>& inst, const Compare<T>& cmp = {}) {
    require_feasible(inst, cmp);
    std::vector<T> row_left = inst.p;
    std::vector<T> col_left = inst.q;
    Dense<T> out(inst.n(), inst.m(), T{});
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < inst.n() && j < inst.m()) {
        T give = row_left[i] < col_left[j] ? row_left[i] : col_left[j];
        out.at(i, j) = give;
        row_left[i] = row_left[i] - give;
        col_left[j] = col_left[j] - give;
        if (row_left[i] == T{} && i + 1 < inst.n())
            ++i;
        else if (col_left[j] == T{} && j + 1 < inst.m())
            ++j;
        else if (row_left[i] == T{} && col_left[j] == T{})
            break;  // bottom-right corner exhausted
        else if (row_left[i] == T{})
            ++i;  // forces exit: last row, remainder must be zero
        else
            ++j;
    }
    return out;
}

/// Feasible-table sampler: northwest-corner allocation on independently
/// shuffled row and column orders, mapped back to original positions.
/// Deterministic per seed.
template <class T>
Dense<T> sample_feasible(const Marginals<T>& inst, std::uint64_t seed,
                         const Compare<T>& cmp = {}) {
    require_feasible(inst, cmp);
    Rng rng(seed);
    std::vector<std::size_t> rperm = rng.permutation(inst.n());
    std::vector<std::size_t> cperm = rng.permutation(inst.m());

    Marginals<T> shuffled;
    shuffled.p.resize(inst.n());
    shuffled.q.resize(inst.m());
    for (std::size_t i = 0; i < inst.n(); ++i) shuffled.p[i] = inst.p[rperm[i]];
    for (std::size_t j = 0; j < inst.m(); ++j) shuffled.q[j] = inst.q[cperm[j]];

    Dense<T> nw = northwest_table(shuffled, cmp);
    Dense<T> out(inst.n(), inst.m(), T{});
    for (std::size_t i = 0; i < inst.n(); ++i)
        for (std::size_t j = 0; j < inst.m(); ++j)
            out.at(rperm[i], cperm[j]) = nw.at(i, j);
    return out;
}

struct SandwichReport {
    bool lower_ok = false;
    bool upper_ok = false;
    std::optional<std::pair<std::size_t, std::size_t>> first_violation;

    bool ok() const { return lower_ok && upper_ok; }
};

/// Verifies that a member table sits between the two bounds in the
/// cumulative order.  Throws DomainError if the table is not a member.
template <class T>
SandwichReport sandwich_check(const Dense<T>& table, const Marginals<T>& inst,
                              const Compare<T>& cmp = {}) {
    if (!matches_marginals(table, inst, cmp))
        throw DomainError("table is not a member of the Fréchet class");

    Dense<T> fc = cumulative_table(table);
    Dense<T> lower =
        lower_cumulative_greedy(inst, SweepOrder::columns_outer, cmp);
    Dense<T> upper = upper_cumulative_residuated(inst, cmp);

    SandwichReport report;
    report.lower_ok = true;
    report.upper_ok = true;
    for (std::size_t i = 0; i < fc.rows(); ++i)
        for (std::size_t j = 0; j < fc.cols(); ++j) {
            bool low = cmp.le(lower.at(i, j), fc.at(i, j));
            bool up = cmp.le(fc.at(i, j), upper.at(i, j));
            if (!low) report.lower_ok = false;
            if (!up) report.upper_ok = false;
            if ((!low || !up) && !report.first_violation)
                report.first_violation = {i, j};
        }
    return report;
}

}  // namespace maxplus
