#pragma once

#include <vector>

#include "fedsim/matrix.hpp"
#include "fedsim/nn.hpp"

namespace fedsim {

// counts[t][p] = number of samples with true class t predicted as p.
Matrix confusion_matrix(const std::vector<int>& truth, const std::vector<int>& pred,
                        int class_count);

// F1 = TP / (TP + (FP + FN) / 2); zero when the denominator is zero.
double f1_from_counts(double tp, double fp, double fn);

// Macro F1 over the classes that appear in `truth`.
double macro_f1_score(const std::vector<int>& truth, const std::vector<int>& pred,
                      int class_count);

struct MetricsResult {
    double macro_f1 = 0.0;
    std::vector<double> per_class_recall;  // NaN for classes absent from the set
    double tcr = 0.0;                      // mean recall over the target classes
    std::vector<int> absent_classes;       // classes with no true samples
};

MetricsResult compute_metrics(const ParamVector& params, const Batch& test,
                              const std::vector<int>& target_labels, int class_count);

}  // namespace fedsim
