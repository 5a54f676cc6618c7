#include "hvec/linalg.hpp"

#include <utility>

namespace hvec {

namespace {

void normalize_row(IntMatrix& m, std::size_t r, std::size_t from) {
    Integer g = 0;
    for (std::size_t c = from; c < m.cols(); ++c) {
        if (m(r, c) != 0) g = gcd(g, m(r, c));
        if (g == 1) return;
    }
    if (g > 1)
        for (std::size_t c = from; c < m.cols(); ++c) m(r, c) /= g;
}

}  // namespace

std::size_t exact_rank(IntMatrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t rank = 0;

    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r) {
            if (m(r, c) == 0) continue;
            if (pivot == rows || abs(m(r, c)) < abs(m(pivot, c))) pivot = r;
            if (abs(m(pivot, c)) == 1) break;
        }
        if (pivot == rows) continue;

        if (pivot != rank)
            for (std::size_t k = c; k < cols; ++k) std::swap(m(pivot, k), m(rank, k));

        const Integer p = m(rank, c);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m(r, c) == 0) continue;
            const Integer a = m(r, c);
            const Integer g = gcd(p, a);
            const Integer pf = p / g;
            const Integer af = a / g;
            m(r, c) = 0;
            for (std::size_t k = c + 1; k < cols; ++k) m(r, k) = pf * m(r, k) - af * m(rank, k);
            normalize_row(m, r, c + 1);
        }
        ++rank;
    }
    return rank;
}

}  // namespace hvec
