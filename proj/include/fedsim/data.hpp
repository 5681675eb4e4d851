#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fedsim/matrix.hpp"
#include "fedsim/nn.hpp"

namespace fedsim {

struct Dataset {
    Matrix features;  // n x d, entries normalized to [0,1]
    std::vector<int> labels;
    int class_count = 0;
    std::string name;

    std::size_t size() const { return labels.size(); }
    std::size_t dim() const { return features.cols; }

    Batch as_batch() const { return Batch{features, labels}; }

    // Rows gathered by index, in the given order.
    Dataset take(const std::vector<std::size_t>& idx, std::string new_name) const;

    std::vector<std::size_t> class_histogram() const;

    void validate() const;

    // FNV-1a over labels and feature bytes; stable content fingerprint.
    std::uint64_t fingerprint() const;
};

// Column roles for CSV ingestion. `label_values`, when non-empty, pins the
// label -> class-id mapping and makes any other label value an error.
struct CsvSchema {
    std::string label_column;
    std::vector<std::string> drop_columns;
    std::vector<std::string> categorical_columns;
    std::vector<std::string> label_values;

    static CsvSchema from_file(const std::string& path);
    static CsvSchema from_string(const std::string& text);
};

// Drops rows with missing values, one-hot expands categorical columns,
// min-max normalizes numeric columns, removes duplicate rows.
Dataset load_csv(const std::string& path, const CsvSchema& schema);

// Gaussian class blobs at random centers inside [0,1]^dim, clipped to the
// unit box. Larger `separation` shrinks the per-class spread.
Dataset synthesize(int class_count, int dim, const std::vector<std::size_t>& per_class_counts,
                   double separation, std::uint64_t seed);

struct SplitResult {
    Dataset train;
    Dataset test;
    std::vector<std::string> warnings;
};

// Stratified split; singleton classes go to train and are recorded.
SplitResult split(const Dataset& dataset, double test_fraction, std::uint64_t seed);

struct PartitionPlan {
    double eta = 0.4;
    int client_count = 20;
    std::uint64_t seed = 0;
    std::vector<std::vector<std::size_t>> assignments;  // per client, sorted

    std::string to_json() const;  // client id -> sorted index list
};

// Per-class Dirichlet(eta) allocation across clients; empty clients repaired
// by moving one sample from the largest client.
PartitionPlan dirichlet_partition(const Dataset& train, double eta, int client_count,
                                  std::uint64_t seed);

struct AuxiliaryDataset {
    Dataset data;
    double confidence_threshold = 0.9;
    double volume_fraction = 1.0;
    std::vector<std::string> warnings;
};

// Keeps pool samples the reference model classifies correctly with confidence
// above the threshold, then per-class subsamples to `volume_fraction`.
AuxiliaryDataset build_auxiliary(const ParamVector& reference, const Dataset& pool,
                                 double threshold, double volume_fraction,
                                 std::uint64_t seed);

}  // namespace fedsim
