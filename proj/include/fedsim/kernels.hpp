#pragma once

#include <span>
#include <vector>

#include "fedsim/matrix.hpp"

// Dense math kernels used by the training, validation and aggregation paths.
// The fedsim::kernels versions are OpenMP-parallel; fedsim::serial holds plain
// single-threaded reference implementations kept for testing and benchmarking.
// Both variants compute every output element with the same per-element
// reduction order, so their results are bitwise identical for any thread
// count.

namespace fedsim::kernels {

// out = a * b^T   (a: n x k, b: m x k, out: n x m)
void matmul_nt(const Matrix& a, const Matrix& b, Matrix& out);

// out = a * b     (a: n x k, b: k x m, out: n x m)
void matmul_nn(const Matrix& a, const Matrix& b, Matrix& out);

// out = a^T * b   (a: n x k, b: n x m, out: k x m)
void matmul_tn(const Matrix& a, const Matrix& b, Matrix& out);

// m[i] += v for every row i
void add_row_vector(Matrix& m, std::span<const double> v);

void relu_inplace(Matrix& m);

// Row-wise softmax with max-subtraction.
void softmax_rows_inplace(Matrix& m);

// out[j] = sum_i m[i][j]
void col_sums(const Matrix& m, std::vector<double>& out);

// Symmetric matrix of squared Euclidean distances; zero diagonal.
void pairwise_sq_dists(const std::vector<std::span<const double>>& vs, Matrix& out);

}  // namespace fedsim::kernels

namespace fedsim::serial {

void matmul_nt(const Matrix& a, const Matrix& b, Matrix& out);
void matmul_nn(const Matrix& a, const Matrix& b, Matrix& out);
void matmul_tn(const Matrix& a, const Matrix& b, Matrix& out);
void add_row_vector(Matrix& m, std::span<const double> v);
void relu_inplace(Matrix& m);
void softmax_rows_inplace(Matrix& m);
void col_sums(const Matrix& m, std::vector<double>& out);
void pairwise_sq_dists(const std::vector<std::span<const double>>& vs, Matrix& out);

}  // namespace fedsim::serial
