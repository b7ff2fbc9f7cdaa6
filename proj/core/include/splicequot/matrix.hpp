#ifndef SPLICEQUOT_MATRIX_HPP
#define SPLICEQUOT_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <splicequot/error.hpp>
#include <splicequot/rational.hpp>

namespace splicequot
{

// Row-major dense matrix.
template <typename T>
class Matrix
{
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    std::size_t rows() const
    {
        return rows_;
    }
    std::size_t cols() const
    {
        return cols_;
    }

    T &operator()(std::size_t r, std::size_t c)
    {
        return data_[r * cols_ + c];
    }
    const T &operator()(std::size_t r, std::size_t c) const
    {
        return data_[r * cols_ + c];
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b) {
            return;
        }
        for (std::size_t c = 0; c < cols_; ++c) {
            std::swap((*this)(a, c), (*this)(b, c));
        }
    }

    // Square submatrix on the given row/column index lists.
    Matrix submatrix(const std::vector<std::size_t> &row_idx, const std::vector<std::size_t> &col_idx) const
    {
        Matrix out(row_idx.size(), col_idx.size());
        for (std::size_t i = 0; i < row_idx.size(); ++i) {
            for (std::size_t j = 0; j < col_idx.size(); ++j) {
                out(i, j) = (*this)(row_idx[i], col_idx[j]);
            }
        }
        return out;
    }

    friend bool operator==(const Matrix &, const Matrix &) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

IntMatrix negated(const IntMatrix &m);

// Bareiss elimination with row pivoting. Exact; empty matrix has det 1.
Integer determinant(const IntMatrix &m);

Rational determinant(const RatMatrix &m);

// Leading principal minors d_1..d_n, via pivot-free Bareiss; the pivots of
// that elimination are exactly the minors.
std::vector<Integer> leading_principal_minors(const IntMatrix &m);

// Fraction-free Gauss-Jordan on [A | I]. nullopt when A is singular.
std::optional<RatMatrix> inverse(const IntMatrix &m);

std::size_t rank(RatMatrix m);

} // namespace splicequot

#endif
