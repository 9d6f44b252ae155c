#pragma once

#include <map>
#include <vector>

namespace hazecast {

struct EmbeddingConfig {
    int m = 5;          // embedding dimension
    int tau = 2;        // time lag
    double beta = 0.8;  // Tsallis order, > 0 and != 1

    void validate() const;
};

/// An m-point delayed segment with its variance weight
/// w = (1/m) * sum_k (x_k - mean)^2.
struct Segment {
    std::vector<double> values;
    int start_index = 0;
    double weight = 0.0;
};

/// Weighted ordinal-pattern frequencies. Keys are rank permutations of
/// {0..m-1}; probabilities sum to one.
struct PatternDistribution {
    std::map<std::vector<int>, double> probs;
    double total_weight = 0.0;
};

/// Rank pattern of a segment: out[i] is the rank of values[i], ties broken
/// by earlier index = smaller rank.
std::vector<int> ordinal_pattern(const std::vector<double>& values);

std::vector<Segment> embed_segments(const std::vector<double>& x, int m, int tau);

PatternDistribution weighted_pattern_probs(const std::vector<double>& x, int m, int tau);

/// Tsallis entropy of the weighted pattern distribution:
/// H_beta = (1 - sum_j p_j^beta) / (beta - 1).
double tewpp(const std::vector<double>& x, const EmbeddingConfig& cfg);
double tsallis_entropy(const PatternDistribution& dist, double beta);

struct UncertaintyPartition {
    std::vector<int> high;             // indices of segments above the median entropy
    std::vector<int> low;              // at or below the median, plus zero-weight segments
    std::vector<double> entropies;     // per segment; NaN where TEWPP is undefined
    double median = 0.0;
};

/// Median split of per-segment TEWPP. Segments whose weighted distribution
/// is undefined (all sub-segments constant) carry no empirical uncertainty
/// and always land in the low group.
UncertaintyPartition uncertainty_partition(const std::vector<std::vector<double>>& segments,
                                           const EmbeddingConfig& cfg);

}  // namespace hazecast
