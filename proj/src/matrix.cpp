#include "isys/matrix.hpp"

#include <stdexcept>

namespace isys {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data)
    : rows_(rows), cols_(cols), data_(std::move(data))
{
    if (data_.size() != rows * cols)
        throw std::invalid_argument("matrix data does not match its shape");
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const
{
    for (const auto& x : data_)
        if (x != 0)
            return false;
    return true;
}

std::size_t Matrix::rank() const
{
    Matrix m = *this;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && m(piv, c) == 0)
            ++piv;
        if (piv == rows_)
            continue;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap(m(r, j), m(piv, j));
        for (std::size_t i = r + 1; i < rows_; ++i) {
            if (m(i, c) == 0)
                continue;
            Scalar factor = m(i, c) / m(r, c);
            for (std::size_t j = c; j < cols_; ++j)
                m(i, j) -= factor * m(r, j);
        }
        ++r;
    }
    return r;
}

Matrix Matrix::pow(unsigned n) const
{
    if (rows_ != cols_)
        throw std::invalid_argument("power of a non-square matrix");
    Matrix result = identity(rows_);
    Matrix base = *this;
    while (n) {
        if (n & 1u)
            result = result * base;
        base = base * base;
        n >>= 1u;
    }
    return result;
}

Matrix Matrix::scaled_canonical() const
{
    Matrix m = *this;
    for (const auto& x : data_) {
        if (x != 0) {
            Scalar s = x;
            for (auto& y : m.data_)
                y /= s;
            break;
        }
    }
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix shapes do not compose");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

std::string to_string(const Matrix& m)
{
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j)
            s += (j ? ", " : "") + to_string(m(i, j));
        s += "]";
    }
    return s + "]";
}

}  // namespace isys
