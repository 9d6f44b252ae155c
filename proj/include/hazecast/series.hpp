#pragma once

#include <string>
#include <tuple>
#include <vector>

namespace hazecast {

/// One named variable observed over time. Timestamps are optional; when
/// present they must be strictly increasing and aligned with values.
struct Series {
    std::string name;
    std::string unit;
    std::vector<double> values;
    std::vector<std::string> timestamps;

    void validate() const;
};

/// A multivariate table: feature columns plus exactly one target column
/// (the PV power series). All columns share one length.
struct Dataset {
    std::vector<Series> features;
    Series target;
    std::string schema_id;

    size_t n_rows() const { return target.values.size(); }
    /// Model input channels: features followed by the target history.
    size_t n_vars() const { return features.size() + 1; }
    void validate() const;
};

struct ScalerParams {
    double min = 0.0;
    double max = 0.0;
};

/// One training pair: an [input_len x n_vars] block of past observations
/// (row-major, target channel last) and the next `horizon` target values.
struct WindowedSample {
    int input_len = 0;
    int n_vars = 0;
    std::vector<double> inputs;
    std::vector<double> target_future;
    int origin_index = 0;

    double input_at(int t, int v) const { return inputs[static_cast<size_t>(t) * n_vars + v]; }
    /// The target (last) column of the input block.
    std::vector<double> target_channel() const;
};

ScalerParams fit_scaler(const std::vector<double>& values, size_t n_rows);
std::vector<double> apply_scaler(const std::vector<double>& values, const ScalerParams& p);

/// Min-max scaling to [0,1]. A constant series maps to all zeros and the
/// degenerate scaler (min == max) denormalizes back to the stored min.
std::pair<Series, ScalerParams> minmax_normalize(const Series& s);
Series denormalize(const Series& s, const ScalerParams& p);
double denormalize_value(double v, const ScalerParams& p);

std::vector<WindowedSample> make_windows(const Dataset& d, int input_len, int horizon);

struct SplitResult {
    std::vector<WindowedSample> train;
    std::vector<WindowedSample> val;
    std::vector<WindowedSample> test;
};

/// Contiguous chronological partition: floor(n*train_frac) train samples,
/// floor(n*val_frac) validation samples, remainder test. Never shuffles.
SplitResult chronological_split(const std::vector<WindowedSample>& samples, double train_frac,
                                double val_frac);

}  // namespace hazecast
