#pragma once

/// Randomized property suites behind the `verify` command.
///
/// Each suite draws instances from one seeded stream, evaluates an invariant
/// that the rest of the library promises, and reports pass/fail counts.  On
/// failure the offending input is shrunk (adjacent categories merged, matrix
/// rows/columns dropped) while it keeps failing, then echoed as JSON so the
/// bug is reproducible by hand.
///
/// Exact mode draws masses as small fractions, so every promised equality is
/// literal; float mode reuses the comparisons' epsilon.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "maxplus/cumulative.hpp"
#include "maxplus/dense.hpp"
#include "maxplus/errors.hpp"
#include "maxplus/frechet.hpp"
#include "maxplus/io.hpp"
#include "maxplus/linalg.hpp"
#include "maxplus/random.hpp"
#include "maxplus/tropical.hpp"

namespace maxplus::selfcheck {

struct Options {
    std::uint64_t seed = 0;
    std::size_t iterations = 200;
    /// Largest category count (and matrix side) the generators draw.
    std::size_t max_side = 8;
};

struct SuiteResult {
    std::string name;
    std::size_t runs = 0;
    std::size_t failures = 0;
    io::Json counterexample;

    bool ok() const { return failures == 0; }
};

namespace detail {

template <class T>
T fraction(std::int64_t num, std::int64_t den) {
    if constexpr (std::is_same_v<T, double>)
        return double(num) / double(den);
    else
        return T(num, den);
}

template <class T>
Dense<T> drop_row(const Dense<T>& t, std::size_t r) {
    Dense<T> out(t.rows() - 1, t.cols());
    for (std::size_t i = 0, oi = 0; i < t.rows(); ++i) {
        if (i == r) continue;
        for (std::size_t j = 0; j < t.cols(); ++j)
            out.at(oi, j) = t.at(i, j);
        ++oi;
    }
    return out;
}

template <class T>
Dense<T> drop_col(const Dense<T>& t, std::size_t c) {
    Dense<T> out(t.rows(), t.cols() - 1);
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0, oj = 0; j < t.cols(); ++j) {
            if (j == c) continue;
            out.at(i, oj++) = t.at(i, j);
        }
    return out;
}

/// Merge adjacent categories while `fails` keeps holding; feasibility is
/// preserved because merging never changes the totals.
template <class T, class Fails>
Marginals<T> shrink_instance(Marginals<T> inst, const Fails& fails) {
    for (bool progress = true; progress;) {
        progress = false;
        for (std::size_t i = 0; i + 1 < inst.p.size();) {
            Marginals<T> trial = inst;
            trial.p[i] = trial.p[i] + trial.p[i + 1];
            trial.p.erase(trial.p.begin() + std::ptrdiff_t(i) + 1);
            if (fails(trial)) {
                inst = std::move(trial);
                progress = true;
            } else {
                ++i;
            }
        }
        for (std::size_t j = 0; j + 1 < inst.q.size();) {
            Marginals<T> trial = inst;
            trial.q[j] = trial.q[j] + trial.q[j + 1];
            trial.q.erase(trial.q.begin() + std::ptrdiff_t(j) + 1);
            if (fails(trial)) {
                inst = std::move(trial);
                progress = true;
            } else {
                ++j;
            }
        }
    }
    return inst;
}

template <class T, class Fails>
Dense<T> shrink_table(Dense<T> t, const Fails& fails) {
    for (bool progress = true; progress;) {
        progress = false;
        for (std::size_t i = 0; t.rows() > 1 && i < t.rows();) {
            Dense<T> trial = drop_row(t, i);
            if (fails(trial)) {
                t = std::move(trial);
                progress = true;
            } else {
                ++i;
            }
        }
        for (std::size_t j = 0; t.cols() > 1 && j < t.cols();) {
            Dense<T> trial = drop_col(t, j);
            if (fails(trial)) {
                t = std::move(trial);
                progress = true;
            } else {
                ++j;
            }
        }
    }
    return t;
}

}  // namespace detail

template <class T>
class Checker {
public:
    explicit Checker(Options opt, Compare<T> cmp = {})
        : opt_(opt), cmp_(cmp), rng_(opt.seed) {}

    // ---- generators ----

    /// Feasible by construction: q is a cut-point composition of p's total
    /// over the same denominator.
    Marginals<T> random_instance() {
        std::size_t n = 1 + rng_.below(opt_.max_side);
        std::size_t m = 1 + rng_.below(opt_.max_side);
        auto den = std::int64_t(rng_.range(1, 12));
        std::vector<std::int64_t> pn(n);
        std::int64_t total = 0;
        for (auto& v : pn) {
            v = std::int64_t(rng_.below(11));
            total += v;
        }
        std::vector<std::int64_t> cuts(m - 1);
        for (auto& c : cuts) c = std::int64_t(rng_.below(std::uint64_t(total) + 1));
        std::sort(cuts.begin(), cuts.end());
        Marginals<T> out;
        for (auto v : pn) out.p.push_back(detail::fraction<T>(v, den));
        std::int64_t prev = 0;
        for (std::size_t j = 0; j + 1 < m; ++j) {
            out.q.push_back(detail::fraction<T>(cuts[j] - prev, den));
            prev = cuts[j];
        }
        out.q.push_back(detail::fraction<T>(total - prev, den));
        return out;
    }

    Dense<T> random_table(std::size_t rows, std::size_t cols,
                          bool signed_cells = false) {
        auto den = std::int64_t(rng_.range(1, 12));
        Dense<T> out(rows, cols);
        for (auto& cell : out.cells()) {
            auto num = std::int64_t(rng_.below(11));
            if (signed_cells) num -= 5;
            cell = detail::fraction<T>(num, den);
        }
        return out;
    }

    /// Entries hit both infinities with probability ~1/10 each.
    TropMatrix<T> random_trop_matrix(std::size_t rows, std::size_t cols) {
        TropMatrix<T> out(rows, cols);
        for (auto& cell : out.cells()) {
            std::uint64_t kind = rng_.below(10);
            if (kind == 0)
                cell = Tropical<T>::bottom();
            else if (kind == 1)
                cell = Tropical<T>::top();
            else
                cell = Tropical<T>(detail::fraction<T>(
                    std::int64_t(rng_.below(21)) - 10,
                    std::int64_t(rng_.range(1, 6))));
        }
        return out;
    }

    // ---- suite harnesses ----

    SuiteResult instance_suite(
        const std::string& name,
        const std::function<bool(const Marginals<T>&)>& holds) {
        SuiteResult res;
        res.name = name;
        auto fails = [&](const Marginals<T>& inst) {
            try {
                return !holds(inst);
            } catch (const std::exception&) {
                return true;
            }
        };
        for (std::size_t it = 0; it < opt_.iterations; ++it) {
            Marginals<T> inst = random_instance();
            ++res.runs;
            if (!fails(inst)) continue;
            ++res.failures;
            if (res.counterexample.is_null()) {
                Marginals<T> small = detail::shrink_instance(inst, fails);
                res.counterexample =
                    io::Json{{"p", io::vector_to_json(small.p)},
                             {"q", io::vector_to_json(small.q)}};
            }
        }
        return res;
    }

    SuiteResult table_suite(const std::string& name,
                            const std::function<Dense<T>()>& gen,
                            const std::function<bool(const Dense<T>&)>& holds) {
        SuiteResult res;
        res.name = name;
        auto fails = [&](const Dense<T>& t) {
            try {
                return !holds(t);
            } catch (const std::exception&) {
                return true;
            }
        };
        for (std::size_t it = 0; it < opt_.iterations; ++it) {
            Dense<T> t = gen();
            ++res.runs;
            if (!fails(t)) continue;
            ++res.failures;
            if (res.counterexample.is_null()) {
                Dense<T> small = detail::shrink_table(t, fails);
                res.counterexample =
                    io::Json{{"table", io::table_to_json(small)}};
            }
        }
        return res;
    }

    // ---- the suites ----

    /// Residuated route equals the closed form on random instances.
    SuiteResult upper_oracle_suite() {
        return instance_suite("upper_bound_oracle", [&](const Marginals<T>& inst) {
            return entrywise_eq(upper_cumulative_residuated(inst, cmp_),
                                upper_cumulative_closed(inst, cmp_), cmp_);
        });
    }

    /// Greedy sweep equals the closed form, under both sweep nestings.
    SuiteResult lower_oracle_suite() {
        return instance_suite("lower_bound_oracle", [&](const Marginals<T>& inst) {
            Dense<T> closed = lower_cumulative_closed(inst, cmp_);
            return entrywise_eq(lower_cumulative_greedy(
                                    inst, SweepOrder::columns_outer, cmp_),
                                closed, cmp_) &&
                   entrywise_eq(lower_cumulative_greedy(
                                    inst, SweepOrder::rows_outer, cmp_),
                                closed, cmp_);
        });
    }

    /// Division really is residuation: A⊙X ≤ B iff X ≤ A\B, and the mirrored
    /// X⊙C ≤ D iff X ≤ D/C, over matrices that include both infinities.
    SuiteResult galois_suite() {
        SuiteResult res;
        res.name = "residuation_galois";
        for (std::size_t it = 0; it < opt_.iterations; ++it) {
            std::size_t k = 1 + rng_.below(4);
            std::size_t n = 1 + rng_.below(4);
            std::size_t m = 1 + rng_.below(4);
            TropMatrix<T> a = random_trop_matrix(k, n);
            TropMatrix<T> x = random_trop_matrix(n, m);
            TropMatrix<T> b = random_trop_matrix(k, m);
            TropMatrix<T> c = random_trop_matrix(m, k);
            TropMatrix<T> d = random_trop_matrix(n, k);
            ++res.runs;
            bool left_ok = le(odot(a, x), b, cmp_) == le(x, ldiv(a, b), cmp_);
            bool right_ok = le(odot(x, c), d, cmp_) == le(x, rdiv(d, c), cmp_);
            if (left_ok && right_ok) continue;
            ++res.failures;
            if (res.counterexample.is_null())
                res.counterexample = left_ok
                                         ? io::Json{{"side", "right"},
                                                    {"X", io::trop_matrix_to_json(x)},
                                                    {"C", io::trop_matrix_to_json(c)},
                                                    {"D", io::trop_matrix_to_json(d)}}
                                         : io::Json{{"side", "left"},
                                                    {"A", io::trop_matrix_to_json(a)},
                                                    {"X", io::trop_matrix_to_json(x)},
                                                    {"B", io::trop_matrix_to_json(b)}};
        }
        return res;
    }

    /// A signed array is a table of running totals of a nonnegative table
    /// exactly when it is Monge and monotone against the zero border.
    SuiteResult monge_suite() {
        auto gen = [&]() {
            std::size_t rows = 1 + rng_.below(3);
            std::size_t cols = 1 + rng_.below(3);
            // Every third draw is a genuine running-total table so the true
            // branch of the equivalence gets exercised too.
            if (rng_.below(3) == 0)
                return cumulative_table(random_table(rows, cols));
            return random_table(rows, cols, true);
        };
        auto holds = [&](const Dense<T>& cand) {
            bool lhs = is_monge(cand, cmp_) && cumulative_monotone(cand, cmp_);
            bool rhs = true;
            try {
                Dense<T> cells = mass_table(cand, cmp_);
                for (const T& e : cells.cells())
                    if (!cmp_.le(T{}, e)) rhs = false;
            } catch (const NegativeCellError&) {
                rhs = false;
            }
            return lhs == rhs;
        };
        return table_suite("monge_equivalence", gen, holds);
    }

    /// Ordinary row sums of a nonnegative matrix coincide with the tropical
    /// product of its running-total rows against the unit vector.
    SuiteResult rowsum_suite() {
        auto gen = [&]() {
            return random_table(1 + rng_.below(opt_.max_side),
                                1 + rng_.below(opt_.max_side));
        };
        auto holds = [&](const Dense<T>& u) {
            return tropical_rowsum_identity(u, cmp_);
        };
        return table_suite("rowsum_identity", gen, holds);
    }

    /// Sampled members land between the bounds, and the classical and
    /// tropical membership checks agree on them.
    SuiteResult sandwich_suite() {
        SuiteResult res;
        res.name = "sandwich";
        for (std::size_t it = 0; it < opt_.iterations; ++it) {
            Marginals<T> inst = random_instance();
            std::uint64_t seed = rng_.next();
            ++res.runs;
            auto fails = [&](const Marginals<T>& trial) {
                try {
                    Dense<T> table = sample_feasible(trial, seed, cmp_);
                    if (matches_marginals(table, trial, cmp_) !=
                        matches_marginals_tropical(table, trial, cmp_))
                        return true;
                    return !sandwich_check(table, trial, cmp_).ok();
                } catch (const std::exception&) {
                    return true;
                }
            };
            if (!fails(inst)) continue;
            ++res.failures;
            if (res.counterexample.is_null()) {
                Marginals<T> small = detail::shrink_instance(inst, fails);
                res.counterexample =
                    io::Json{{"p", io::vector_to_json(small.p)},
                             {"q", io::vector_to_json(small.q)},
                             {"seed", seed}};
            }
        }
        return res;
    }

    std::vector<SuiteResult> run_all() {
        std::vector<SuiteResult> out;
        out.push_back(upper_oracle_suite());
        out.push_back(lower_oracle_suite());
        out.push_back(galois_suite());
        out.push_back(monge_suite());
        out.push_back(rowsum_suite());
        out.push_back(sandwich_suite());
        return out;
    }

private:
    Options opt_;
    Compare<T> cmp_;
    Rng rng_;
};

inline bool all_ok(const std::vector<SuiteResult>& results) {
    for (const SuiteResult& r : results)
        if (!r.ok()) return false;
    return true;
}

}  // namespace maxplus::selfcheck
