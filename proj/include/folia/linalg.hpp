#pragma once

// Dense exact linear algebra over Q. Used by the graded truncation oracle,
// which must stay independent of the Groebner machinery.

#include <cstddef>
#include <vector>

#include "folia/polycore.hpp"

namespace folia::linalg {

class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// Appends zero rows.
    void add_rows(std::size_t count);

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

/// Reduced row echelon form in place; returns pivot columns in order.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<Rational>> kernel(Matrix m);

} // namespace folia::linalg
