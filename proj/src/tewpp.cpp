#include "hazecast/tewpp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "hazecast/errors.hpp"

namespace hazecast {

void EmbeddingConfig::validate() const {
    if (m < 2) throw ValidationError("embedding dimension m must be >= 2");
    if (tau < 1) throw ValidationError("time lag tau must be >= 1");
    if (beta <= 0.0 || beta == 1.0) throw InvalidBeta("beta must be > 0 and != 1");
}

std::vector<int> ordinal_pattern(const std::vector<double>& values) {
    const int m = static_cast<int>(values.size());
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return values[a] < values[b]; });
    std::vector<int> rank(m);
    for (int r = 0; r < m; ++r) rank[order[r]] = r;
    return rank;
}

std::vector<Segment> embed_segments(const std::vector<double>& x, int m, int tau) {
    if (m < 2) throw ValidationError("embedding dimension m must be >= 2");
    if (tau < 1) throw ValidationError("time lag tau must be >= 1");
    const int T = static_cast<int>(x.size());
    const int span = (m - 1) * tau;
    if (T < span + 1)
        throw SeriesTooShort("need length >= " + std::to_string(span + 1) + ", have " +
                             std::to_string(T));

    std::vector<Segment> out;
    out.reserve(static_cast<size_t>(T - span));
    for (int t = 0; t + span < T; ++t) {
        Segment seg;
        seg.start_index = t;
        seg.values.resize(m);
        double mean = 0.0;
        for (int k = 0; k < m; ++k) {
            seg.values[k] = x[t + k * tau];
            mean += seg.values[k];
        }
        mean /= m;
        double var = 0.0;
        for (int k = 0; k < m; ++k) {
            const double d = seg.values[k] - mean;
            var += d * d;
        }
        seg.weight = var / m;
        out.push_back(std::move(seg));
    }
    return out;
}

PatternDistribution weighted_pattern_probs(const std::vector<double>& x, int m, int tau) {
    const std::vector<Segment> segments = embed_segments(x, m, tau);

    PatternDistribution dist;
    for (const Segment& seg : segments) {
        dist.total_weight += seg.weight;
        if (seg.weight > 0.0) dist.probs[ordinal_pattern(seg.values)] += seg.weight;
    }
    if (!(dist.total_weight > 0.0))
        throw ZeroTotalWeight("all segments are constant; weighted pattern probabilities undefined");
    for (auto& [pattern, mass] : dist.probs) mass /= dist.total_weight;
    return dist;
}

double tsallis_entropy(const PatternDistribution& dist, double beta) {
    if (beta <= 0.0 || beta == 1.0) throw InvalidBeta("beta must be > 0 and != 1");
    double sum = 0.0;
    for (const auto& [pattern, p] : dist.probs) sum += std::pow(p, beta);
    return (1.0 - sum) / (beta - 1.0);
}

double tewpp(const std::vector<double>& x, const EmbeddingConfig& cfg) {
    cfg.validate();
    return tsallis_entropy(weighted_pattern_probs(x, cfg.m, cfg.tau), cfg.beta);
}

UncertaintyPartition uncertainty_partition(const std::vector<std::vector<double>>& segments,
                                           const EmbeddingConfig& cfg) {
    cfg.validate();
    UncertaintyPartition part;
    part.entropies.assign(segments.size(), std::numeric_limits<double>::quiet_NaN());

    std::vector<double> computable;
    for (size_t i = 0; i < segments.size(); ++i) {
        try {
            part.entropies[i] = tewpp(segments[i], cfg);
            computable.push_back(part.entropies[i]);
        } catch (const ZeroTotalWeight&) {
            // stays NaN, routed low below
        }
    }
    if (computable.size() < 2)
        throw TooFewSegments("need >= 2 segments with computable TEWPP, have " +
                             std::to_string(computable.size()));

    std::sort(computable.begin(), computable.end());
    const size_t n = computable.size();
    part.median = n % 2 == 1 ? computable[n / 2]
                             : 0.5 * (computable[n / 2 - 1] + computable[n / 2]);

    for (size_t i = 0; i < segments.size(); ++i) {
        if (std::isnan(part.entropies[i]) || part.entropies[i] <= part.median)
            part.low.push_back(static_cast<int>(i));
        else
            part.high.push_back(static_cast<int>(i));
    }
    return part;
}

}  // namespace hazecast
