#pragma once

#include <cstddef>
#include <vector>

namespace rmf {

using vec = std::vector<double>;

// Dense row-major matrix. Small and deliberately plain; every numeric routine
// in this project runs on doubles.
struct matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> a;

    matrix() = default;
    matrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), a(r * c, fill) {}

    double& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    double* row(std::size_t i) { return a.data() + i * cols; }
    const double* row(std::size_t i) const { return a.data() + i * cols; }

    bool empty() const { return rows == 0 || cols == 0; }
};

// C[m x n] = A[m x k] * B[n x k]^T
matrix matmul_nt(const matrix& A, const matrix& B);

// C[m x n] = A[m x k] * B[k x n]
matrix matmul_nn(const matrix& A, const matrix& B);

// C[k x n] = A[m x k]^T * B[m x n]
matrix matmul_tn(const matrix& A, const matrix& B);

// Solve A x = b in place via Gaussian elimination with partial pivoting.
// A must be square. Returns false if (numerically) singular.
bool solve_linear(matrix A, vec b, vec& x);

// Least squares: minimise sum_i w_i (A.row(i) . x - y_i)^2 via the normal
// equations. If the system is singular, retries with a ridge term and sets
// *used_ridge when the caller wants to know. w may be empty (all ones).
vec solve_weighted_least_squares(const matrix& A, const vec& y, const vec& w,
                                 double ridge = 0.0, bool* used_ridge = nullptr);

// Fit a polynomial of the given degree to (x, y): returns coefficients in a
// basis of powers of the affinely rescaled x (x mapped to [-1, 1]), lowest
// power first. Evaluate with polyval_scaled using the same x range.
struct scaled_poly {
    double x_lo = 0.0;
    double x_hi = 1.0;
    vec coeffs;

    double eval(double x) const;
};

scaled_poly polyfit(const vec& x, const vec& y, int degree);

double mean(const vec& v);
double sample_std(const vec& v);  // n-1 denominator; 0 for n < 2
double median(vec v);             // by value: sorts its copy
double mad(const vec& v);         // median absolute deviation about the median

}  // namespace rmf
