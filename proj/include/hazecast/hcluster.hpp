#pragma once

#include <vector>

namespace hazecast {

struct DistanceMatrix {
    int n = 0;
    std::vector<double> entries;  // dense n x n, symmetric, zero diagonal

    double at(int i, int j) const { return entries[static_cast<size_t>(i) * n + j]; }
    double& at(int i, int j) { return entries[static_cast<size_t>(i) * n + j]; }
};

struct Merge {
    int a = 0;  // cluster ids being merged, a < b
    int b = 0;
    double distance = 0.0;
    int id = 0;  // id of the merged cluster (leaf_count + merge index)
};

struct Dendrogram {
    std::vector<Merge> merges;
    int leaf_count = 0;
};

struct ClusterAssignment {
    std::vector<int> labels;   // per segment, in [0, k)
    int k = 0;
    std::vector<int> medoids;  // one segment index per cluster
};

/// Weighted trimmed distance between two equal-length series: weights
/// w_n = max(x_p(n)/sum x_p, x_q(n)/sum x_q), elementwise d_n = w_n (x_p-x_q)^2,
/// sorted descending, then averaged over the second-to-third quartile window
/// positions ceil(T/2)..ceil(3T/4) (1-based).
double series_distance(const std::vector<double>& x_p, const std::vector<double>& x_q);

DistanceMatrix pairwise_distances(const std::vector<std::vector<double>>& segments);

/// Ranked-pair linkage: sort the |C_p|*|C_q| cross distances ascending and
/// average every pair whose distance lies in [r_ceil(N/2), r_ceil(3N/4)]
/// inclusive. For N < 4 the window degenerates to the median r_ceil(N/2).
double cluster_linkage(const std::vector<int>& cluster_p, const std::vector<int>& cluster_q,
                       const DistanceMatrix& dist);

/// Bottom-up merging with minimal linkage; ties resolved toward the lowest
/// (a, b) cluster-id pair so the tree is deterministic for a given input order.
Dendrogram agglomerate(const DistanceMatrix& dist);
Dendrogram agglomerate(const std::vector<std::vector<double>>& segments);

/// Flat clustering that keeps the first leaf_count - k merges. Labels are
/// contiguous, ordered by each cluster's smallest leaf index.
ClusterAssignment cut_dendrogram(const Dendrogram& d, int k, const DistanceMatrix& dist);

double silhouette(const ClusterAssignment& assignment, const DistanceMatrix& dist);

/// argmax_k silhouette(cut(d, k)) over [k_min, k_max]; ties go to the
/// smallest k.
int select_k(const Dendrogram& d, const DistanceMatrix& dist, int k_min, int k_max);

}  // namespace hazecast
