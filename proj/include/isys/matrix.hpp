#ifndef ISYS_MATRIX_HPP
#define ISYS_MATRIX_HPP

#include <string>
#include <vector>

#include "isys/rational.hpp"

namespace isys {

/// Dense row-major rational matrix. Zero-sized shapes are allowed and behave
/// as maps between zero spaces.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<Scalar>& data() const { return data_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    std::size_t rank() const;
    Matrix pow(unsigned n) const;

    /// Divides by the first nonzero entry; zero stays zero.
    Matrix scaled_canonical() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix&, const Matrix&) = default;
    friend auto operator<=>(const Matrix& a, const Matrix& b)
    {
        if (auto c = a.rows_ <=> b.rows_; c != 0)
            return c;
        if (auto c = a.cols_ <=> b.cols_; c != 0)
            return c;
        for (std::size_t i = 0; i < a.data_.size(); ++i) {
            if (a.data_[i] < b.data_[i])
                return std::strong_ordering::less;
            if (b.data_[i] < a.data_[i])
                return std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

std::string to_string(const Matrix& m);

}  // namespace isys

#endif
