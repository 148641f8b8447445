#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace tfbs {

class SingularMatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dense row-major matrix of doubles.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    DenseMatrix transpose() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// PA = LU with partial pivoting; reusable across right-hand sides.
class LUFactorization {
public:
    explicit LUFactorization(const DenseMatrix& m);

    std::vector<double> solve(const std::vector<double>& rhs) const;
    DenseMatrix solve_matrix(const DenseMatrix& rhs) const;

    std::size_t size() const { return lu_.rows(); }
    int permutation_sign() const { return sign_; }

private:
    DenseMatrix lu_;
    std::vector<std::size_t> perm_;
    int sign_ = 1;
};

inline LUFactorization lu_factor(const DenseMatrix& m) { return LUFactorization(m); }

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
std::vector<double> matvec(const DenseMatrix& a, const std::vector<double>& x);

double inf_norm(const DenseMatrix& a);   // max row absolute sum
double one_norm(const DenseMatrix& a);   // max column absolute sum
double inf_norm(const std::vector<double>& v);

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(double s, const DenseMatrix& a);

}  // namespace tfbs
