#include "fedsim/nn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "fedsim/kernels.hpp"
#include "fedsim/rng.hpp"

namespace fedsim {

std::vector<int> MlpArchitecture::layer_dims() const {
    std::vector<int> dims;
    dims.reserve(hidden_dims.size() + 2);
    dims.push_back(input_dim);
    dims.insert(dims.end(), hidden_dims.begin(), hidden_dims.end());
    dims.push_back(output_dim);
    return dims;
}

std::size_t MlpArchitecture::param_count() const {
    const auto dims = layer_dims();
    std::size_t count = 0;
    for (std::size_t l = 0; l + 1 < dims.size(); ++l)
        count += static_cast<std::size_t>(dims[l] + 1) * static_cast<std::size_t>(dims[l + 1]);
    return count;
}

void MlpArchitecture::validate() const {
    if (input_dim < 1) throw std::invalid_argument("architecture: input_dim must be >= 1");
    if (output_dim < 1) throw std::invalid_argument("architecture: output_dim must be >= 1");
    for (int h : hidden_dims)
        if (h < 1) throw std::invalid_argument("architecture: hidden dims must be >= 1");
}

namespace {

struct LayerView {
    const double* w;  // fan_out x fan_in, row-major
    const double* b;  // fan_out
    int fan_in;
    int fan_out;
};

std::vector<LayerView> layer_views(const ParamVector& p) {
    const auto dims = p.arch.layer_dims();
    std::vector<LayerView> views;
    views.reserve(dims.size() - 1);
    const double* cursor = p.values.data();
    for (std::size_t l = 0; l + 1 < dims.size(); ++l) {
        LayerView v{cursor, cursor + static_cast<std::size_t>(dims[l]) * dims[l + 1],
                    dims[l], dims[l + 1]};
        cursor = v.b + dims[l + 1];
        views.push_back(v);
    }
    return views;
}

Matrix weight_matrix(const LayerView& v) {
    Matrix w(static_cast<std::size_t>(v.fan_out), static_cast<std::size_t>(v.fan_in));
    std::copy(v.w, v.w + w.data.size(), w.data.begin());
    return w;
}

void check_batch(const ParamVector& params, const Batch& batch) {
    if (batch.features.rows != batch.labels.size())
        throw std::invalid_argument("batch: feature row count differs from label count");
    if (batch.features.cols != static_cast<std::size_t>(params.arch.input_dim))
        throw std::invalid_argument("batch: feature width does not match architecture input_dim");
    for (int y : batch.labels)
        if (y < 0 || y >= params.arch.output_dim)
            throw std::invalid_argument("batch: label outside [0, output_dim)");
}

// Forward pass keeping pre-activations and activations for backprop.
struct ForwardTrace {
    std::vector<Matrix> acts;  // acts[0] = input, acts[L] = softmax output
    std::vector<Matrix> zs;    // pre-activations per layer
};

ForwardTrace forward_trace(const ParamVector& params, const Batch& batch) {
    const auto views = layer_views(params);
    ForwardTrace t;
    t.acts.reserve(views.size() + 1);
    t.zs.reserve(views.size());
    t.acts.push_back(batch.features);
    for (std::size_t l = 0; l < views.size(); ++l) {
        const Matrix w = weight_matrix(views[l]);
        Matrix z;
        kernels::matmul_nt(t.acts.back(), w, z);
        kernels::add_row_vector(z, {views[l].b, static_cast<std::size_t>(views[l].fan_out)});
        t.zs.push_back(z);
        if (l + 1 < views.size()) {
            kernels::relu_inplace(z);
            t.acts.push_back(std::move(z));
        } else {
            kernels::softmax_rows_inplace(z);
            t.acts.push_back(std::move(z));
        }
    }
    return t;
}

// Mean cross-entropy via log-sum-exp on the output pre-activations.
double mean_cross_entropy(const Matrix& logits, const std::vector<int>& labels) {
    double total = 0.0;
    for (std::size_t i = 0; i < logits.rows; ++i) {
        const double* zi = logits.row(i);
        double mx = zi[0];
        for (std::size_t j = 1; j < logits.cols; ++j) mx = zi[j] > mx ? zi[j] : mx;
        double sum = 0.0;
        for (std::size_t j = 0; j < logits.cols; ++j) sum += std::exp(zi[j] - mx);
        total += mx + std::log(sum) - zi[static_cast<std::size_t>(labels[i])];
    }
    return total / static_cast<double>(logits.rows);
}

}  // namespace

ParamVector init_params(const MlpArchitecture& arch, std::uint64_t seed) {
    arch.validate();
    ParamVector p;
    p.arch = arch;
    p.values.assign(arch.param_count(), 0.0);
    auto gen = rng::engine(seed);
    const auto dims = arch.layer_dims();
    std::size_t offset = 0;
    for (std::size_t l = 0; l + 1 < dims.size(); ++l) {
        const double bound = std::sqrt(6.0 / static_cast<double>(dims[l]));
        std::uniform_real_distribution<double> dist(-bound, bound);
        const std::size_t wcount = static_cast<std::size_t>(dims[l]) * dims[l + 1];
        for (std::size_t i = 0; i < wcount; ++i) p.values[offset + i] = dist(gen);
        offset += wcount + static_cast<std::size_t>(dims[l + 1]);  // biases stay zero
    }
    return p;
}

Matrix forward(const ParamVector& params, const Batch& batch) {
    check_batch(params, batch);
    auto trace = forward_trace(params, batch);
    return std::move(trace.acts.back());
}

BackwardResult backward(const ParamVector& params, const Batch& batch) {
    check_batch(params, batch);
    if (batch.size() == 0) throw std::invalid_argument("backward: empty batch");
    const auto views = layer_views(params);
    const auto trace = forward_trace(params, batch);
    const std::size_t n = batch.size();

    BackwardResult result;
    result.loss = mean_cross_entropy(trace.zs.back(), batch.labels);
    result.grad.arch = params.arch;
    result.grad.values.assign(params.values.size(), 0.0);

    // delta at the output: (probs - onehot) / n
    Matrix delta = trace.acts.back();
    for (std::size_t i = 0; i < n; ++i)
        delta.at(i, static_cast<std::size_t>(batch.labels[i])) -= 1.0;
    for (double& d : delta.data) d /= static_cast<double>(n);

    // Walk layers backwards, writing gradients into the flat vector.
    std::vector<std::size_t> offsets(views.size());
    std::size_t off = 0;
    for (std::size_t l = 0; l < views.size(); ++l) {
        offsets[l] = off;
        off += static_cast<std::size_t>(views[l].fan_in + 1) * views[l].fan_out;
    }
    for (std::size_t li = views.size(); li-- > 0;) {
        const LayerView& v = views[li];
        Matrix gw;
        kernels::matmul_tn(delta, trace.acts[li], gw);  // fan_out x fan_in
        std::vector<double> gb;
        kernels::col_sums(delta, gb);
        double* gdst = result.grad.values.data() + offsets[li];
        std::copy(gw.data.begin(), gw.data.end(), gdst);
        std::copy(gb.begin(), gb.end(), gdst + gw.data.size());
        if (li > 0) {
            const Matrix w = weight_matrix(v);
            Matrix prev;
            kernels::matmul_nn(delta, w, prev);
            // ReLU mask from the previous layer's pre-activations.
            const Matrix& z = trace.zs[li - 1];
            for (std::size_t i = 0; i < prev.data.size(); ++i)
                if (z.data[i] <= 0.0) prev.data[i] = 0.0;
            delta = std::move(prev);
        }
    }
    return result;
}

ParamVector sgd_epochs(const ParamVector& start, const Batch& data, double lr,
                       int epochs, int batch_size, std::uint64_t seed) {
    check_batch(start, data);
    if (data.size() == 0) throw std::invalid_argument("sgd_epochs: empty dataset");
    if (lr < 0.0) throw std::invalid_argument("sgd_epochs: negative learning rate");
    if (epochs < 1) throw std::invalid_argument("sgd_epochs: epochs must be >= 1");
    if (batch_size < 1) throw std::invalid_argument("sgd_epochs: batch_size must be >= 1");

    ParamVector params = start;
    auto gen = rng::engine(seed);
    std::vector<std::size_t> order(data.size());
    std::iota(order.begin(), order.end(), 0);

    const std::size_t d = data.features.cols;
    for (int e = 0; e < epochs; ++e) {
        std::shuffle(order.begin(), order.end(), gen);
        for (std::size_t begin = 0; begin < order.size(); begin += batch_size) {
            const std::size_t end = std::min(order.size(), begin + batch_size);
            Batch mb;
            mb.features.resize(end - begin, d);
            mb.labels.resize(end - begin);
            for (std::size_t i = begin; i < end; ++i) {
                const double* src = data.features.row(order[i]);
                std::copy(src, src + d, mb.features.row(i - begin));
                mb.labels[i - begin] = data.labels[order[i]];
            }
            const auto bw = backward(params, mb);
            for (std::size_t i = 0; i < params.values.size(); ++i)
                params.values[i] -= lr * bw.grad.values[i];
        }
    }
    return params;
}

ParamVector sgd_epochs(const ParamVector& start, const Batch& data,
                       const LocalTrainParams& hp, std::uint64_t seed) {
    return sgd_epochs(start, data, hp.lr, hp.epochs, hp.batch_size, seed);
}

std::vector<int> predict(const ParamVector& params, const Batch& batch) {
    const Matrix probs = forward(params, batch);
    std::vector<int> labels(probs.rows);
    for (std::size_t i = 0; i < probs.rows; ++i) {
        const double* pi = probs.row(i);
        int best = 0;
        for (std::size_t j = 1; j < probs.cols; ++j)
            if (pi[j] > pi[best]) best = static_cast<int>(j);
        labels[i] = best;
    }
    return labels;
}

std::vector<double> softmax_confidence(const ParamVector& params, const Batch& batch) {
    const Matrix probs = forward(params, batch);
    std::vector<double> conf(probs.rows);
    for (std::size_t i = 0; i < probs.rows; ++i) {
        const double* pi = probs.row(i);
        conf[i] = *std::max_element(pi, pi + probs.cols);
    }
    return conf;
}

std::vector<double> input_gradient(const ParamVector& params,
                                   std::span<const double> x, int y) {
    if (x.size() != static_cast<std::size_t>(params.arch.input_dim))
        throw std::invalid_argument("input_gradient: feature width mismatch");
    if (y < 0 || y >= params.arch.output_dim)
        throw std::invalid_argument("input_gradient: label out of range");

    Batch single;
    single.features.resize(1, x.size());
    std::copy(x.begin(), x.end(), single.features.row(0));
    single.labels = {y};

    const auto views = layer_views(params);
    const auto trace = forward_trace(params, single);

    Matrix delta = trace.acts.back();  // single-sample loss, no 1/n scaling
    delta.at(0, static_cast<std::size_t>(y)) -= 1.0;
    for (std::size_t li = views.size(); li-- > 0;) {
        const Matrix w = weight_matrix(views[li]);
        Matrix prev;
        kernels::matmul_nn(delta, w, prev);
        if (li > 0) {
            const Matrix& z = trace.zs[li - 1];
            for (std::size_t i = 0; i < prev.data.size(); ++i)
                if (z.data[i] <= 0.0) prev.data[i] = 0.0;
        }
        delta = std::move(prev);
    }
    return delta.data;
}

}  // namespace fedsim
