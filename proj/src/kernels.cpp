#include "fedsim/kernels.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace fedsim::kernels {

namespace {
// Below this many rows the parallel-for overhead outweighs the work.
constexpr std::int64_t kMinParallelRows = 32;
}  // namespace

void matmul_nt(const Matrix& a, const Matrix& b, Matrix& out) {
    if (a.cols != b.cols) throw std::invalid_argument("matmul_nt: inner dimensions differ");
    out.resize(a.rows, b.rows);
    const auto n = static_cast<std::int64_t>(a.rows);
#pragma omp parallel for schedule(static) if (n >= kMinParallelRows)
    for (std::int64_t i = 0; i < n; ++i) {
        const double* ai = a.row(i);
        double* oi = out.row(i);
        for (std::size_t j = 0; j < b.rows; ++j) {
            const double* bj = b.row(j);
            double acc = 0.0;
            for (std::size_t k = 0; k < a.cols; ++k) acc += ai[k] * bj[k];
            oi[j] = acc;
        }
    }
}

void matmul_nn(const Matrix& a, const Matrix& b, Matrix& out) {
    if (a.cols != b.rows) throw std::invalid_argument("matmul_nn: inner dimensions differ");
    out.resize(a.rows, b.cols);
    const auto n = static_cast<std::int64_t>(a.rows);
#pragma omp parallel for schedule(static) if (n >= kMinParallelRows)
    for (std::int64_t i = 0; i < n; ++i) {
        const double* ai = a.row(i);
        double* oi = out.row(i);
        for (std::size_t k = 0; k < a.cols; ++k) {
            const double aik = ai[k];
            const double* bk = b.row(k);
            for (std::size_t j = 0; j < b.cols; ++j) oi[j] += aik * bk[j];
        }
    }
}

void matmul_tn(const Matrix& a, const Matrix& b, Matrix& out) {
    if (a.rows != b.rows) throw std::invalid_argument("matmul_tn: inner dimensions differ");
    out.resize(a.cols, b.cols);
    const auto k = static_cast<std::int64_t>(a.cols);
    // Each thread owns a full output row, summing over samples in order.
#pragma omp parallel for schedule(static) if (k >= kMinParallelRows)
    for (std::int64_t i = 0; i < k; ++i) {
        double* oi = out.row(i);
        for (std::size_t n = 0; n < a.rows; ++n) {
            const double ani = a.at(n, i);
            const double* bn = b.row(n);
            for (std::size_t j = 0; j < b.cols; ++j) oi[j] += ani * bn[j];
        }
    }
}

void add_row_vector(Matrix& m, std::span<const double> v) {
    if (v.size() != m.cols) throw std::invalid_argument("add_row_vector: width mismatch");
    const auto n = static_cast<std::int64_t>(m.rows);
#pragma omp parallel for schedule(static) if (n >= kMinParallelRows)
    for (std::int64_t i = 0; i < n; ++i) {
        double* mi = m.row(i);
        for (std::size_t j = 0; j < m.cols; ++j) mi[j] += v[j];
    }
}

void relu_inplace(Matrix& m) {
    const auto n = static_cast<std::int64_t>(m.rows);
#pragma omp parallel for schedule(static) if (n >= kMinParallelRows)
    for (std::int64_t i = 0; i < n; ++i) {
        double* mi = m.row(i);
        for (std::size_t j = 0; j < m.cols; ++j) mi[j] = mi[j] > 0.0 ? mi[j] : 0.0;
    }
}

void softmax_rows_inplace(Matrix& m) {
    const auto n = static_cast<std::int64_t>(m.rows);
#pragma omp parallel for schedule(static) if (n >= kMinParallelRows)
    for (std::int64_t i = 0; i < n; ++i) {
        double* mi = m.row(i);
        double mx = mi[0];
        for (std::size_t j = 1; j < m.cols; ++j) mx = mi[j] > mx ? mi[j] : mx;
        double sum = 0.0;
        for (std::size_t j = 0; j < m.cols; ++j) {
            mi[j] = std::exp(mi[j] - mx);
            sum += mi[j];
        }
        for (std::size_t j = 0; j < m.cols; ++j) mi[j] /= sum;
    }
}

void col_sums(const Matrix& m, std::vector<double>& out) {
    out.assign(m.cols, 0.0);
    const auto c = static_cast<std::int64_t>(m.cols);
#pragma omp parallel for schedule(static) if (c >= kMinParallelRows)
    for (std::int64_t j = 0; j < c; ++j) {
        double acc = 0.0;
        for (std::size_t i = 0; i < m.rows; ++i) acc += m.at(i, j);
        out[j] = acc;
    }
}

void pairwise_sq_dists(const std::vector<std::span<const double>>& vs, Matrix& out) {
    const auto n = static_cast<std::int64_t>(vs.size());
    for (const auto& v : vs)
        if (v.size() != vs[0].size())
            throw std::invalid_argument("pairwise_sq_dists: unequal vector lengths");
    out.resize(vs.size(), vs.size());
    const std::int64_t pairs = n * (n - 1) / 2;
#pragma omp parallel for schedule(static) if (pairs >= 8)
    for (std::int64_t p = 0; p < pairs; ++p) {
        // Unrank p into the (i, j) pair with i < j.
        std::int64_t i = 0;
        std::int64_t rem = p;
        while (rem >= n - 1 - i) {
            rem -= n - 1 - i;
            ++i;
        }
        const std::int64_t j = i + 1 + rem;
        double acc = 0.0;
        const auto& a = vs[i];
        const auto& b = vs[j];
        for (std::size_t k = 0; k < a.size(); ++k) {
            const double d = a[k] - b[k];
            acc += d * d;
        }
        out.at(i, j) = acc;
        out.at(j, i) = acc;
    }
}

}  // namespace fedsim::kernels
