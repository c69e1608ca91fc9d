#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "mimetic/errors.hpp"

namespace mimetic {

/// Dense row-major matrix of doubles. The single numeric carrier of the
/// library; all weights, embeddings, attention maps and activations use it.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    std::vector<double>& storage() { return data_; }
    const std::vector<double>& storage() const { return data_; }

    double* row(std::size_t i) { return data_.data() + i * cols_; }
    const double* row(std::size_t i) const { return data_.data() + i * cols_; }

    bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

    Matrix transposed() const;
    /// Columns [c0, c1) as a new rows x (c1-c0) matrix.
    Matrix col_slice(std::size_t c0, std::size_t c1) const;
    /// Rows [r0, r1) as a new (r1-r0) x cols matrix.
    Matrix row_slice(std::size_t r0, std::size_t r1) const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(double s);

    bool all_finite() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(Matrix a, double s);
Matrix operator*(double s, Matrix a);

/// C = A * B.
Matrix matmul(const Matrix& a, const Matrix& b);
/// C = A * B^T.
Matrix matmul_nt(const Matrix& a, const Matrix& b);
/// C = A^T * B.
Matrix matmul_tn(const Matrix& a, const Matrix& b);

/// dst += A * B (shapes must already agree).
void matmul_acc(const Matrix& a, const Matrix& b, Matrix& dst);
/// dst += A * B^T.
void matmul_nt_acc(const Matrix& a, const Matrix& b, Matrix& dst);
/// dst += A^T * B.
void matmul_tn_acc(const Matrix& a, const Matrix& b, Matrix& dst);

double frobenius_norm(const Matrix& m);
double frobenius_distance(const Matrix& a, const Matrix& b);

/// In-place alpha*X + Y -> Y.
void axpy(double alpha, const Matrix& x, Matrix& y);

} // namespace mimetic
