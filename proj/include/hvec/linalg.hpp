#ifndef HVEC_LINALG_HPP
#define HVEC_LINALG_HPP

#include "hvec/arith.hpp"

#include <cstddef>
#include <vector>

namespace hvec {

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/**
 * Rank over Q by fraction-free row reduction.
 *
 * Column by column, the pivot is the nonzero entry of least magnitude among
 * the remaining rows (ties go to the lowest row index). Every other row with
 * a nonzero in the pivot column is replaced by
 *   (p/g)·row - (a/g)·pivot_row,   g = gcd(p, a),
 * and then divided by its content. All intermediate values stay integral and
 * rows that are already zero in the pivot column are never touched.
 */
std::size_t exact_rank(IntMatrix m);

}  // namespace hvec

#endif
