#include <chromgh/error.hpp>
#include <chromgh/persistence.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace chromgh {

namespace {

// Hopcroft-Karp on a bipartite graph with equally sized sides.
class BipartiteMatcher {
public:
    explicit BipartiteMatcher(std::vector<std::vector<std::size_t>> adj)
        : adj_(std::move(adj)), n_(adj_.size()), match_l_(n_, kFree), match_r_(n_, kFree), dist_(n_) {}

    std::size_t max_matching() {
        std::size_t size = 0;
        while (bfs())
            for (std::size_t u = 0; u < n_; ++u)
                if (match_l_[u] == kFree && dfs(u)) ++size;
        return size;
    }

private:
    static constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();

    bool bfs() {
        std::queue<std::size_t> q;
        bool found = false;
        for (std::size_t u = 0; u < n_; ++u) {
            dist_[u] = match_l_[u] == kFree ? 0 : kFree;
            if (match_l_[u] == kFree) q.push(u);
        }
        while (!q.empty()) {
            const std::size_t u = q.front();
            q.pop();
            for (std::size_t v : adj_[u]) {
                const std::size_t w = match_r_[v];
                if (w == kFree) {
                    found = true;
                } else if (dist_[w] == kFree) {
                    dist_[w] = dist_[u] + 1;
                    q.push(w);
                }
            }
        }
        return found;
    }

    bool dfs(std::size_t u) {
        for (std::size_t v : adj_[u]) {
            const std::size_t w = match_r_[v];
            if (w == kFree || (dist_[w] == dist_[u] + 1 && dfs(w))) {
                match_l_[u] = v;
                match_r_[v] = u;
                return true;
            }
        }
        dist_[u] = kFree;
        return false;
    }

    std::vector<std::vector<std::size_t>> adj_;
    std::size_t n_;
    std::vector<std::size_t> match_l_, match_r_, dist_;
};

double linf(const DiagramPoint& a, const DiagramPoint& b) {
    return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

double deletion(const DiagramPoint& a) { return (a.death - a.birth) / 2.0; }

// Left side: points of a, then diagonal copies of b. Right side: points of b,
// then diagonal copies of a.
bool feasible(const std::vector<DiagramPoint>& a, const std::vector<DiagramPoint>& b, double delta) {
    const std::size_t n = a.size(), m = b.size();
    std::vector<std::vector<std::size_t>> adj(n + m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j)
            if (linf(a[i], b[j]) <= delta) adj[i].push_back(j);
        if (deletion(a[i]) <= delta) adj[i].push_back(m + i);
    }
    for (std::size_t j = 0; j < m; ++j) {
        if (deletion(b[j]) <= delta) adj[n + j].push_back(j);
        for (std::size_t i = 0; i < n; ++i) adj[n + j].push_back(m + i);
    }
    return BipartiteMatcher(std::move(adj)).max_matching() == n + m;
}

}  // namespace

double bottleneck(const PersistenceDiagram& d1, const PersistenceDiagram& d2) {
    if (d1.degree != d2.degree) throw Error(ErrorCode::DegreeMismatch, "diagrams of different degrees");

    std::vector<DiagramPoint> a, b;
    std::vector<double> ea, eb;
    for (const auto& q : d1.points) q.is_essential() ? ea.push_back(q.birth) : a.push_back(q);
    for (const auto& q : d2.points) q.is_essential() ? eb.push_back(q.birth) : b.push_back(q);
    if (ea.size() != eb.size()) return std::numeric_limits<double>::infinity();

    // Essential points live on a line; sorted order is an optimal matching.
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    double essential = 0.0;
    for (std::size_t i = 0; i < ea.size(); ++i) essential = std::max(essential, std::abs(ea[i] - eb[i]));

    std::vector<double> candidates{0.0};
    for (const auto& p : a) candidates.push_back(deletion(p));
    for (const auto& q : b) candidates.push_back(deletion(q));
    for (const auto& p : a)
        for (const auto& q : b) candidates.push_back(linf(p, q));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::size_t lo = 0, hi = candidates.size() - 1;  // the largest candidate is always feasible
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (feasible(a, b, candidates[mid])) hi = mid;
        else lo = mid + 1;
    }
    return std::max(essential, candidates[lo]);
}

}  // namespace chromgh
