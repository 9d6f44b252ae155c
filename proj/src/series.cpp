#include "hazecast/series.hpp"

#include <algorithm>
#include <cmath>

#include "hazecast/errors.hpp"

namespace hazecast {

void Series::validate() const {
    if (values.empty()) throw EmptyInput("series '" + name + "' has no values");
    if (!timestamps.empty()) {
        if (timestamps.size() != values.size())
            throw ParseError("series '" + name + "': timestamp count does not match value count");
        for (size_t i = 1; i < timestamps.size(); ++i) {
            if (!(timestamps[i - 1] < timestamps[i]))
                throw ParseError("series '" + name + "': timestamps not strictly increasing at row " +
                                 std::to_string(i));
        }
    }
}

void Dataset::validate() const {
    target.validate();
    for (const auto& f : features) {
        f.validate();
        if (f.values.size() != target.values.size())
            throw ParseError("column '" + f.name + "' length differs from target");
    }
}

std::vector<double> WindowedSample::target_channel() const {
    std::vector<double> out(static_cast<size_t>(input_len));
    for (int t = 0; t < input_len; ++t) out[static_cast<size_t>(t)] = input_at(t, n_vars - 1);
    return out;
}

ScalerParams fit_scaler(const std::vector<double>& values, size_t n_rows) {
    if (values.empty() || n_rows == 0) throw EmptyInput("cannot fit scaler on empty data");
    n_rows = std::min(n_rows, values.size());
    ScalerParams p{values[0], values[0]};
    for (size_t i = 1; i < n_rows; ++i) {
        p.min = std::min(p.min, values[i]);
        p.max = std::max(p.max, values[i]);
    }
    return p;
}

std::vector<double> apply_scaler(const std::vector<double>& values, const ScalerParams& p) {
    std::vector<double> out(values.size());
    const double range = p.max - p.min;
    for (size_t i = 0; i < values.size(); ++i)
        out[i] = range > 0.0 ? (values[i] - p.min) / range : 0.0;
    return out;
}

std::pair<Series, ScalerParams> minmax_normalize(const Series& s) {
    if (s.values.empty()) throw EmptyInput("cannot normalize empty series");
    const ScalerParams p = fit_scaler(s.values, s.values.size());
    Series out = s;
    out.values = apply_scaler(s.values, p);
    return {out, p};
}

double denormalize_value(double v, const ScalerParams& p) {
    const double range = p.max - p.min;
    return range > 0.0 ? v * range + p.min : p.min;
}

Series denormalize(const Series& s, const ScalerParams& p) {
    Series out = s;
    for (auto& v : out.values) v = denormalize_value(v, p);
    return out;
}

std::vector<WindowedSample> make_windows(const Dataset& d, int input_len, int horizon) {
    if (input_len < 1 || horizon < 1) throw ValidationError("input_len and horizon must be >= 1");
    d.validate();
    const int rows = static_cast<int>(d.n_rows());
    const int vars = static_cast<int>(d.n_vars());
    const int count = rows - input_len - horizon + 1;
    if (count < 1)
        throw SeriesTooShort("need at least " + std::to_string(input_len + horizon) +
                             " rows, have " + std::to_string(rows));

    std::vector<WindowedSample> out;
    out.reserve(static_cast<size_t>(count));
    for (int origin = 0; origin < count; ++origin) {
        WindowedSample w;
        w.input_len = input_len;
        w.n_vars = vars;
        w.origin_index = origin;
        w.inputs.resize(static_cast<size_t>(input_len) * vars);
        for (int t = 0; t < input_len; ++t) {
            for (int v = 0; v + 1 < vars; ++v)
                w.inputs[static_cast<size_t>(t) * vars + v] = d.features[v].values[origin + t];
            w.inputs[static_cast<size_t>(t) * vars + vars - 1] = d.target.values[origin + t];
        }
        w.target_future.resize(static_cast<size_t>(horizon));
        for (int j = 0; j < horizon; ++j)
            w.target_future[j] = d.target.values[origin + input_len + j];
        out.push_back(std::move(w));
    }
    return out;
}

SplitResult chronological_split(const std::vector<WindowedSample>& samples, double train_frac,
                                double val_frac) {
    if (samples.empty()) throw EmptyInput("no samples to split");
    if (!(train_frac > 0.0) || val_frac < 0.0 || !(train_frac + val_frac < 1.0))
        throw ValidationError("require 0 < train_frac, 0 <= val_frac, train_frac + val_frac < 1");

    const size_t n = samples.size();
    const size_t n_train = static_cast<size_t>(std::floor(n * train_frac));
    const size_t n_val = static_cast<size_t>(std::floor(n * val_frac));
    SplitResult r;
    r.train.assign(samples.begin(), samples.begin() + n_train);
    r.val.assign(samples.begin() + n_train, samples.begin() + n_train + n_val);
    r.test.assign(samples.begin() + n_train + n_val, samples.end());
    return r;
}

}  // namespace hazecast
