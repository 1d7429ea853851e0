#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "maxplus/errors.hpp"

namespace maxplus {

/// Dense row-major rectangular array.  Instantiated with plain numbers for
/// mass tables and cumulative arrays, and with Tropical<T> for max-plus
/// matrices.  Shapes are at least 1x1.
template <class E>
class Dense {
public:
    Dense(std::size_t rows, std::size_t cols, const E& fill = E{})
        : rows_(rows), cols_(cols), cells_(rows * cols, fill) {
        if (rows == 0 || cols == 0)
            throw ShapeError("dense array needs positive dimensions");
    }

    static Dense from_rows(std::initializer_list<std::initializer_list<E>> rows) {
        if (rows.size() == 0 || rows.begin()->size() == 0)
            throw ShapeError("dense array needs positive dimensions");
        Dense out(rows.size(), rows.begin()->size());
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != out.cols_)
                throw ShapeError("ragged rows in dense literal");
            std::size_t j = 0;
            for (const E& e : row) out.at(i, j++) = e;
            ++i;
        }
        return out;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    E& at(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }
    const E& at(std::size_t i, std::size_t j) const {
        return cells_[i * cols_ + j];
    }

    const std::vector<E>& cells() const { return cells_; }
    std::vector<E>& cells() { return cells_; }

    bool same_shape(const Dense& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

    friend bool operator==(const Dense& a, const Dense& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<E> cells_;
};

template <class T, class C>
bool entrywise_eq(const Dense<T>& a, const Dense<T>& b, const C& cmp) {
    if (!a.same_shape(b)) return false;
    for (std::size_t i = 0; i < a.cells().size(); ++i)
        if (!cmp.eq(a.cells()[i], b.cells()[i])) return false;
    return true;
}

template <class T, class C>
bool entrywise_le(const Dense<T>& a, const Dense<T>& b, const C& cmp) {
    if (!a.same_shape(b)) return false;
    for (std::size_t i = 0; i < a.cells().size(); ++i)
        if (!cmp.le(a.cells()[i], b.cells()[i])) return false;
    return true;
}

inline void require_same_shape(std::size_t ar, std::size_t ac, std::size_t br,
                               std::size_t bc, const char* op) {
    if (ar != br || ac != bc)
        throw ShapeError(std::string(op) + ": shape mismatch (" +
                         std::to_string(ar) + "x" + std::to_string(ac) +
                         " vs " + std::to_string(br) + "x" +
                         std::to_string(bc) + ")");
}

}  // namespace maxplus
