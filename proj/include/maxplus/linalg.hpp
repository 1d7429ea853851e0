#pragma once

/// Dense linear algebra over the completed max-plus semiring: entrywise join
/// and meet, the max-plus product, transpose, entrywise order, and the two
/// residuated divisions.
///
/// ldiv(A, B) is the greatest X with odot(A, X) <= B and rdiv(D, C) the
/// greatest X with odot(X, C) <= D, both entrywise greatest.  Division
/// results may legitimately contain top entries (coordinates the system does
/// not constrain); they are preserved as-is.

#include <cstddef>

#include "maxplus/dense.hpp"
#include "maxplus/tropical.hpp"

namespace maxplus {

template <class T>
using TropMatrix = Dense<Tropical<T>>;

template <class T>
TropMatrix<T> trop_identity(std::size_t n) {
    TropMatrix<T> out(n, n, Tropical<T>::bottom());
    for (std::size_t i = 0; i < n; ++i) out.at(i, i) = Tropical<T>::one();
    return out;
}

/// Matrix of multiplicative units; the vector shape (n x 1 or 1 x n) plays
/// the role of the all-ones vector of classical marginal equations.
template <class T>
TropMatrix<T> trop_ones(std::size_t rows, std::size_t cols) {
    return TropMatrix<T>(rows, cols, Tropical<T>::one());
}

template <class T>
TropMatrix<T> oplus(const TropMatrix<T>& a, const TropMatrix<T>& b) {
    require_same_shape(a.rows(), a.cols(), b.rows(), b.cols(), "oplus");
    TropMatrix<T> out = a;
    for (std::size_t k = 0; k < out.cells().size(); ++k)
        out.cells()[k] = oplus(a.cells()[k], b.cells()[k]);
    return out;
}

template <class T>
TropMatrix<T> wedge(const TropMatrix<T>& a, const TropMatrix<T>& b) {
    require_same_shape(a.rows(), a.cols(), b.rows(), b.cols(), "wedge");
    TropMatrix<T> out = a;
    for (std::size_t k = 0; k < out.cells().size(); ++k)
        out.cells()[k] = wedge(a.cells()[k], b.cells()[k]);
    return out;
}

template <class T>
TropMatrix<T> odot(const TropMatrix<T>& a, const TropMatrix<T>& b) {
    if (a.cols() != b.rows())
        throw ShapeError("odot: inner dimensions disagree (" +
                         std::to_string(a.cols()) + " vs " +
                         std::to_string(b.rows()) + ")");
    TropMatrix<T> out(a.rows(), b.cols(), Tropical<T>::bottom());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Tropical<T>& aik = a.at(i, k);
            if (aik.is_bottom()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.at(i, j) = oplus(out.at(i, j), odot(aik, b.at(k, j)));
        }
    return out;
}

template <class T>
TropMatrix<T> transpose(const TropMatrix<T>& a) {
    TropMatrix<T> out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(j, i) = a.at(i, j);
    return out;
}

/// Entrywise order, tolerance-aware through the comparison context.
template <class T>
bool le(const TropMatrix<T>& a, const TropMatrix<T>& b,
        const Compare<T>& cmp = {}) {
    require_same_shape(a.rows(), a.cols(), b.rows(), b.cols(), "le");
    for (std::size_t k = 0; k < a.cells().size(); ++k)
        if (!cmp.le(a.cells()[k], b.cells()[k])) return false;
    return true;
}

template <class T>
bool eq(const TropMatrix<T>& a, const TropMatrix<T>& b,
        const Compare<T>& cmp = {}) {
    require_same_shape(a.rows(), a.cols(), b.rows(), b.cols(), "eq");
    for (std::size_t k = 0; k < a.cells().size(); ++k)
        if (!cmp.eq(a.cells()[k], b.cells()[k])) return false;
    return true;
}

/// Greatest X with odot(A, X) <= B.  A is k x n, B is k x m, X is n x m:
/// X[i][j] = meet over k of ldiv(A[k][i], B[k][j]).
template <class T>
TropMatrix<T> ldiv(const TropMatrix<T>& a, const TropMatrix<T>& b) {
    if (a.rows() != b.rows())
        throw ShapeError("ldiv: row counts disagree (" +
                         std::to_string(a.rows()) + " vs " +
                         std::to_string(b.rows()) + ")");
    TropMatrix<T> out(a.cols(), b.cols(), Tropical<T>::top());
    for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            for (std::size_t k = 0; k < a.rows(); ++k)
                out.at(i, j) = wedge(out.at(i, j), ldiv(a.at(k, i), b.at(k, j)));
    return out;
}

/// Greatest X with odot(X, C) <= D.  D is n x k, C is m x k, X is n x m:
/// X[i][j] = meet over l of rdiv(D[i][l], C[j][l]).
template <class T>
TropMatrix<T> rdiv(const TropMatrix<T>& d, const TropMatrix<T>& c) {
    if (d.cols() != c.cols())
        throw ShapeError("rdiv: column counts disagree (" +
                         std::to_string(d.cols()) + " vs " +
                         std::to_string(c.cols()) + ")");
    TropMatrix<T> out(d.rows(), c.rows(), Tropical<T>::top());
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < c.rows(); ++j)
            for (std::size_t l = 0; l < d.cols(); ++l)
                out.at(i, j) = wedge(out.at(i, j), rdiv(d.at(i, l), c.at(j, l)));
    return out;
}

/// Lifts a plain array into the semiring (every entry finite).
template <class T>
TropMatrix<T> to_tropical(const Dense<T>& a) {
    TropMatrix<T> out(a.rows(), a.cols());
    for (std::size_t k = 0; k < a.cells().size(); ++k)
        out.cells()[k] = Tropical<T>(a.cells()[k]);
    return out;
}

/// Inverse of to_tropical; throws if any entry is infinite.
template <class T>
Dense<T> from_tropical(const TropMatrix<T>& a) {
    Dense<T> out(a.rows(), a.cols());
    for (std::size_t k = 0; k < a.cells().size(); ++k)
        out.cells()[k] = a.cells()[k].value();
    return out;
}

}  // namespace maxplus
