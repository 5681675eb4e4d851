#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fedsim/matrix.hpp"

namespace fedsim {

// Fully-connected ReLU network with a softmax output layer.
struct MlpArchitecture {
    int input_dim = 0;
    std::vector<int> hidden_dims{64, 32};
    int output_dim = 0;

    // [input_dim, hidden..., output_dim]
    std::vector<int> layer_dims() const;

    // Sum over layers of (fan_in + 1) * fan_out.
    std::size_t param_count() const;

    void validate() const;

    bool operator==(const MlpArchitecture&) const = default;
};

// Flattened parameters, laid out layer by layer as the row-major weight
// matrix [fan_out x fan_in] followed by the bias vector [fan_out].
struct ParamVector {
    MlpArchitecture arch;
    std::vector<double> values;

    bool operator==(const ParamVector&) const = default;
};

struct Batch {
    Matrix features;
    std::vector<int> labels;

    std::size_t size() const { return labels.size(); }
};

struct LocalTrainParams {
    double lr = 0.01;
    int epochs = 1;
    int batch_size = 32;
};

// He-style scaled-uniform weights (bound sqrt(6/fan_in)), zero biases.
ParamVector init_params(const MlpArchitecture& arch, std::uint64_t seed);

// Class-probability matrix, one row per batch sample, rows sum to 1.
Matrix forward(const ParamVector& params, const Batch& batch);

struct BackwardResult {
    double loss = 0.0;  // mean categorical cross-entropy
    ParamVector grad;
};

BackwardResult backward(const ParamVector& params, const Batch& batch);

// Mini-batch SGD: `epochs` shuffled passes, final partial batch included.
ParamVector sgd_epochs(const ParamVector& start, const Batch& data, double lr,
                       int epochs, int batch_size, std::uint64_t seed);
ParamVector sgd_epochs(const ParamVector& start, const Batch& data,
                       const LocalTrainParams& hp, std::uint64_t seed);

// Argmax of the forward probabilities; ties broken by lowest class index.
std::vector<int> predict(const ParamVector& params, const Batch& batch);

// Per-sample maximum softmax probability.
std::vector<double> softmax_confidence(const ParamVector& params, const Batch& batch);

// Gradient of the single-sample cross-entropy loss with respect to the input
// features. Used by the gradient-based attacks.
std::vector<double> input_gradient(const ParamVector& params,
                                   std::span<const double> x, int y);

}  // namespace fedsim
