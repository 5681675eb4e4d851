#include "fedsim/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fedsim {

Matrix confusion_matrix(const std::vector<int>& truth, const std::vector<int>& pred,
                        int class_count) {
    if (truth.size() != pred.size())
        throw std::invalid_argument("confusion_matrix: size mismatch");
    Matrix counts(static_cast<std::size_t>(class_count), static_cast<std::size_t>(class_count));
    for (std::size_t i = 0; i < truth.size(); ++i) {
        if (truth[i] < 0 || truth[i] >= class_count || pred[i] < 0 || pred[i] >= class_count)
            throw std::invalid_argument("confusion_matrix: class id out of range");
        counts.at(static_cast<std::size_t>(truth[i]), static_cast<std::size_t>(pred[i])) += 1.0;
    }
    return counts;
}

double f1_from_counts(double tp, double fp, double fn) {
    const double denom = tp + 0.5 * (fp + fn);
    return denom > 0.0 ? tp / denom : 0.0;
}

double macro_f1_score(const std::vector<int>& truth, const std::vector<int>& pred,
                      int class_count) {
    const Matrix m = confusion_matrix(truth, pred, class_count);
    double sum = 0.0;
    int present = 0;
    for (int c = 0; c < class_count; ++c) {
        double tp = m.at(c, c);
        double support = 0.0, predicted = 0.0;
        for (int k = 0; k < class_count; ++k) {
            support += m.at(c, k);
            predicted += m.at(k, c);
        }
        if (support == 0.0) continue;
        sum += f1_from_counts(tp, predicted - tp, support - tp);
        ++present;
    }
    if (present == 0) throw std::invalid_argument("macro_f1_score: no labelled samples");
    return sum / static_cast<double>(present);
}

MetricsResult compute_metrics(const ParamVector& params, const Batch& test,
                              const std::vector<int>& target_labels, int class_count) {
    if (test.size() == 0) throw std::invalid_argument("compute_metrics: empty test set");
    const std::vector<int> pred = predict(params, test);
    const Matrix m = confusion_matrix(test.labels, pred, class_count);

    MetricsResult r;
    r.per_class_recall.assign(static_cast<std::size_t>(class_count),
                              std::numeric_limits<double>::quiet_NaN());
    double f1_sum = 0.0;
    int present = 0;
    for (int c = 0; c < class_count; ++c) {
        double tp = m.at(c, c);
        double support = 0.0, predicted = 0.0;
        for (int k = 0; k < class_count; ++k) {
            support += m.at(c, k);
            predicted += m.at(k, c);
        }
        if (support == 0.0) {
            r.absent_classes.push_back(c);
            continue;
        }
        r.per_class_recall[static_cast<std::size_t>(c)] = tp / support;
        f1_sum += f1_from_counts(tp, predicted - tp, support - tp);
        ++present;
    }
    r.macro_f1 = present > 0 ? f1_sum / static_cast<double>(present) : 0.0;

    double recall_sum = 0.0;
    int counted = 0;
    for (int t : target_labels) {
        if (t < 0 || t >= class_count)
            throw std::invalid_argument("compute_metrics: target label out of range");
        const double rec = r.per_class_recall[static_cast<std::size_t>(t)];
        if (!std::isnan(rec)) {
            recall_sum += rec;
            ++counted;
        }
    }
    r.tcr = counted > 0 ? recall_sum / static_cast<double>(counted)
                        : std::numeric_limits<double>::quiet_NaN();
    return r;
}

}  // namespace fedsim
