#include <cmath>
#include <stdexcept>

#include "fedsim/kernels.hpp"

// Plain single-threaded reference kernels. Kept deliberately simple; the unit
// tests assert bitwise equality against the OpenMP versions and the benchmark
// tool compares their throughput.

namespace fedsim::serial {

void matmul_nt(const Matrix& a, const Matrix& b, Matrix& out) {
    if (a.cols != b.cols) throw std::invalid_argument("matmul_nt: inner dimensions differ");
    out.resize(a.rows, b.rows);
    for (std::size_t i = 0; i < a.rows; ++i) {
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
    for (std::size_t i = 0; i < a.rows; ++i) {
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
    for (std::size_t i = 0; i < a.cols; ++i) {
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
    for (std::size_t i = 0; i < m.rows; ++i) {
        double* mi = m.row(i);
        for (std::size_t j = 0; j < m.cols; ++j) mi[j] += v[j];
    }
}

void relu_inplace(Matrix& m) {
    for (double& x : m.data) x = x > 0.0 ? x : 0.0;
}

void softmax_rows_inplace(Matrix& m) {
    for (std::size_t i = 0; i < m.rows; ++i) {
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
    for (std::size_t j = 0; j < m.cols; ++j) {
        double acc = 0.0;
        for (std::size_t i = 0; i < m.rows; ++i) acc += m.at(i, j);
        out[j] = acc;
    }
}

void pairwise_sq_dists(const std::vector<std::span<const double>>& vs, Matrix& out) {
    for (const auto& v : vs)
        if (v.size() != vs[0].size())
            throw std::invalid_argument("pairwise_sq_dists: unequal vector lengths");
    out.resize(vs.size(), vs.size());
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < vs[i].size(); ++k) {
                const double d = vs[i][k] - vs[j][k];
                acc += d * d;
            }
            out.at(i, j) = acc;
            out.at(j, i) = acc;
        }
    }
}

}  // namespace fedsim::serial
