#include "hazecast/hcluster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "hazecast/errors.hpp"

namespace hazecast {

double series_distance(const std::vector<double>& x_p, const std::vector<double>& x_q) {
    const int T = static_cast<int>(x_p.size());
    if (x_q.size() != x_p.size()) throw ValidationError("series lengths differ");
    if (T < 4) throw ValidationError("series distance needs length >= 4");

    const double sum_p = std::accumulate(x_p.begin(), x_p.end(), 0.0);
    const double sum_q = std::accumulate(x_q.begin(), x_q.end(), 0.0);
    if (sum_p == 0.0 || sum_q == 0.0)
        throw ZeroSumSeries("series sums to zero; weights undefined");

    std::vector<double> d(T);
    for (int n = 0; n < T; ++n) {
        const double w = std::max(x_p[n] / sum_p, x_q[n] / sum_q);
        const double diff = x_p[n] - x_q[n];
        d[n] = w * diff * diff;
    }
    std::sort(d.begin(), d.end(), std::greater<>());

    // 1-based quartile positions on the descending-sorted list
    const int lo = (T + 1) / 2;        // ceil(T/2)
    const int hi = (3 * T + 3) / 4;    // ceil(3T/4)
    double acc = 0.0;
    for (int n = lo; n <= hi; ++n) acc += d[n - 1];
    return acc / (hi - lo + 1);
}

DistanceMatrix pairwise_distances(const std::vector<std::vector<double>>& segments) {
    const int n = static_cast<int>(segments.size());
    DistanceMatrix m;
    m.n = n;
    m.entries.assign(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double d = series_distance(segments[i], segments[j]);
            m.at(i, j) = d;
            m.at(j, i) = d;
        }
    return m;
}

double cluster_linkage(const std::vector<int>& cluster_p, const std::vector<int>& cluster_q,
                       const DistanceMatrix& dist) {
    if (cluster_p.empty() || cluster_q.empty()) throw EmptyCluster("linkage of empty cluster");

    std::vector<double> r;
    r.reserve(cluster_p.size() * cluster_q.size());
    for (int i : cluster_p)
        for (int j : cluster_q) r.push_back(dist.at(i, j));
    std::sort(r.begin(), r.end());

    const int N = static_cast<int>(r.size());
    const double median = r[(N + 1) / 2 - 1];
    if (N < 4) return median;

    const double lo = median;                 // r_(ceil(N/2))
    const double hi = r[(3 * N + 3) / 4 - 1]; // r_(ceil(3N/4))
    double acc = 0.0;
    int count = 0;
    for (double v : r) {
        if (v >= lo && v <= hi) {
            acc += v;
            ++count;
        }
    }
    return acc / count;
}

Dendrogram agglomerate(const DistanceMatrix& dist) {
    const int n = dist.n;
    if (n < 2) throw TooFewSegments("agglomerate needs >= 2 segments");

    struct Cluster {
        int id;
        std::vector<int> members;
    };
    std::vector<Cluster> active;
    active.reserve(n);
    for (int i = 0; i < n; ++i) active.push_back({i, {i}});

    // linkage cache keyed by (id_a < id_b); entries only change when one of
    // the two clusters is replaced by a merge
    std::map<std::pair<int, int>, double> linkage;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            linkage[{i, j}] = cluster_linkage(active[i].members, active[j].members, dist);

    Dendrogram out;
    out.leaf_count = n;
    int next_id = n;

    while (active.size() > 1) {
        std::pair<int, int> best_pair{-1, -1};
        double best = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < active.size(); ++i) {
            for (size_t j = i + 1; j < active.size(); ++j) {
                auto key = std::minmax(active[i].id, active[j].id);
                const double d = linkage.at(key);
                if (d < best || (d == best && key < best_pair)) {
                    best = d;
                    best_pair = key;
                }
            }
        }

        auto find = [&](int id) {
            return std::find_if(active.begin(), active.end(),
                                [&](const Cluster& c) { return c.id == id; });
        };
        auto it_a = find(best_pair.first);
        auto it_b = find(best_pair.second);
        Cluster merged;
        merged.id = next_id++;
        merged.members = it_a->members;
        merged.members.insert(merged.members.end(), it_b->members.begin(), it_b->members.end());

        out.merges.push_back({best_pair.first, best_pair.second, best, merged.id});

        std::erase_if(linkage, [&](const auto& kv) {
            return kv.first.first == best_pair.first || kv.first.second == best_pair.first ||
                   kv.first.first == best_pair.second || kv.first.second == best_pair.second;
        });
        active.erase(it_b);
        active.erase(find(best_pair.first));
        for (const Cluster& c : active)
            linkage[std::minmax(c.id, merged.id)] = cluster_linkage(c.members, merged.members, dist);
        active.push_back(std::move(merged));
    }
    return out;
}

Dendrogram agglomerate(const std::vector<std::vector<double>>& segments) {
    return agglomerate(pairwise_distances(segments));
}

ClusterAssignment cut_dendrogram(const Dendrogram& d, int k, const DistanceMatrix& dist) {
    const int n = d.leaf_count;
    if (k < 1 || k > n) throw InvalidK("k must be in [1, leaf_count]");

    // replay the first n - k merges
    std::map<int, std::vector<int>> clusters;
    for (int i = 0; i < n; ++i) clusters[i] = {i};
    for (int m = 0; m < n - k; ++m) {
        const Merge& mg = d.merges[m];
        std::vector<int> members = std::move(clusters.at(mg.a));
        auto& other = clusters.at(mg.b);
        members.insert(members.end(), other.begin(), other.end());
        clusters.erase(mg.a);
        clusters.erase(mg.b);
        clusters[mg.id] = std::move(members);
    }

    // order clusters by smallest leaf index for stable labels
    std::vector<std::vector<int>> groups;
    for (auto& [id, members] : clusters) {
        std::sort(members.begin(), members.end());
        groups.push_back(std::move(members));
    }
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    ClusterAssignment out;
    out.k = k;
    out.labels.assign(n, -1);
    for (int label = 0; label < k; ++label) {
        for (int idx : groups[label]) out.labels[idx] = label;
        int best = groups[label].front();
        double best_total = std::numeric_limits<double>::infinity();
        for (int candidate : groups[label]) {
            double total = 0.0;
            for (int other : groups[label]) total += dist.at(candidate, other);
            if (total < best_total) {
                best_total = total;
                best = candidate;
            }
        }
        out.medoids.push_back(best);
    }
    return out;
}

double silhouette(const ClusterAssignment& assignment, const DistanceMatrix& dist) {
    if (assignment.k < 2) throw SingleCluster("silhouette needs k >= 2");
    const int n = dist.n;

    std::vector<int> size(assignment.k, 0);
    for (int label : assignment.labels) ++size[label];

    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        const int mine = assignment.labels[i];
        if (size[mine] == 1) continue;  // singleton convention: S = 0

        std::vector<double> sum(assignment.k, 0.0);
        for (int j = 0; j < n; ++j)
            if (j != i) sum[assignment.labels[j]] += dist.at(i, j);

        const double a = sum[mine] / (size[mine] - 1);
        double b = std::numeric_limits<double>::infinity();
        for (int c = 0; c < assignment.k; ++c)
            if (c != mine && size[c] > 0) b = std::min(b, sum[c] / size[c]);

        const double denom = std::max(a, b);
        total += denom > 0.0 ? (b - a) / denom : 0.0;
    }
    return total / n;
}

int select_k(const Dendrogram& d, const DistanceMatrix& dist, int k_min, int k_max) {
    if (!(2 <= k_min && k_min <= k_max && k_max <= d.leaf_count - 1))
        throw InvalidK("need 2 <= k_min <= k_max <= n-1");
    int best_k = k_min;
    double best = -std::numeric_limits<double>::infinity();
    for (int k = k_min; k <= k_max; ++k) {
        const double s = silhouette(cut_dendrogram(d, k, dist), dist);
        if (s > best) {
            best = s;
            best_k = k;
        }
    }
    return best_k;
}

}  // namespace hazecast
