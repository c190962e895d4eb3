#include "congest/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <queue>
#include <set>

#include "congest/errors.hpp"
#include "congest/rng.hpp"

namespace congest {

Graph::Graph(int n, EdgeList edges) : n_(n) {
    if (n < 0) throw InputError("Graph: negative node count");
    std::set<Edge> seen;
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw InputError("Graph: edge endpoint out of range");
        if (u == v) throw InputError("Graph: self loop in base graph");
        seen.insert(make_edge(u, v));
    }
    edges_.assign(seen.begin(), seen.end());
    adj_.resize(n);
    for (auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

void Graph::check_node(int v) const {
    if (v < 0 || v >= n_) throw InputError("unknown node id " + std::to_string(v));
}

int Graph::degree(int v) const {
    check_node(v);
    return static_cast<int>(adj_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_node(v);
    return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
    check_node(u);
    check_node(v);
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

std::vector<int> Graph::active_nodes() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (!adj_[v].empty()) out.push_back(v);
    return out;
}

ClusterView::ClusterView(const Graph& parent, std::vector<int> members, ViewMode mode)
    : parent_(&parent), members_(std::move(members)), mode_(mode) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    local_of_.assign(parent.node_count(), -1);
    for (int i = 0; i < static_cast<int>(members_.size()); ++i) {
        parent.check_node(members_[i]);
        local_of_[members_[i]] = i;
    }
    const int s = static_cast<int>(members_.size());
    ladj_.resize(s);
    loops_.assign(s, 0);
    for (int i = 0; i < s; ++i) {
        const int v = members_[i];
        for (int w : parent.neighbors(v)) {
            const int j = local_of_[w];
            if (j >= 0) ladj_[i].push_back(j);
        }
        if (mode_ == ViewMode::LoopAugmented)
            loops_[i] = parent.degree(v) - static_cast<int>(ladj_[i].size());
        total_volume_ += view_degree(i);
        internal_edges_ += static_cast<int>(ladj_[i].size());
    }
    internal_edges_ /= 2;
}

bool ClusterView::is_connected() const {
    const int s = size();
    if (s <= 1) return true;
    std::vector<char> vis(s, 0);
    std::queue<int> q;
    q.push(0);
    vis[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        int i = q.front();
        q.pop();
        for (int j : ladj_[i])
            if (!vis[j]) {
                vis[j] = 1;
                ++cnt;
                q.push(j);
            }
    }
    return cnt == s;
}

Graph remove_nodes(const Graph& g, const std::vector<int>& gone) {
    std::vector<char> drop(g.node_count(), 0);
    for (int v : gone) {
        g.check_node(v);
        drop[v] = 1;
    }
    EdgeList keep;
    for (const auto& [u, v] : g.edges())
        if (!drop[u] && !drop[v]) keep.push_back({u, v});
    return Graph(g.node_count(), std::move(keep));
}

int deg_in(const Graph& g, int v, const std::vector<int>& s) {
    g.check_node(v);
    std::vector<char> in(g.node_count(), 0);
    for (int u : s) {
        g.check_node(u);
        in[u] = 1;
    }
    int d = 0;
    for (int w : g.neighbors(v)) d += in[w];
    return d;
}

EdgeList edges_between(const Graph& g, const std::vector<int>& s, const std::vector<int>& t) {
    std::vector<char> inS(g.node_count(), 0), inT(g.node_count(), 0);
    for (int u : s) {
        g.check_node(u);
        inS[u] = 1;
    }
    for (int u : t) {
        g.check_node(u);
        inT[u] = 1;
    }
    EdgeList out;
    for (const auto& [u, v] : g.edges())
        if ((inS[u] && inT[v]) || (inS[v] && inT[u])) out.push_back({u, v});
    return out;
}

namespace {

// Boundary and volume of a local-index cut inside a view.
struct CutState {
    std::int64_t boundary = 0;
    std::int64_t vol = 0;
};

Rational cut_value(const ClusterView& view, std::int64_t boundary, std::int64_t vol) {
    const std::int64_t other = view.total_volume() - vol;
    const std::int64_t mv = std::min(vol, other);
    if (mv == 0) return Rational(0);
    return Rational(boundary, mv);
}

} // namespace

Rational cut_conductance(const ClusterView& view, const std::vector<int>& s) {
    if (s.empty() || static_cast<int>(s.size()) >= view.size())
        throw InputError("cut_conductance: cut side must be a nonempty proper subset");
    std::vector<char> in(view.size(), 0);
    std::int64_t vol = 0;
    for (int v : s) {
        const int i = view.contains(v) ? view.local_of(v) : -1;
        if (i < 0) throw InputError("cut_conductance: node not in view");
        if (in[i]) continue;
        in[i] = 1;
        vol += view.view_degree(i);
    }
    std::int64_t boundary = 0;
    for (int i = 0; i < view.size(); ++i) {
        if (!in[i]) continue;
        for (int j : view.local_neighbors(i))
            if (!in[j]) ++boundary;
    }
    return cut_value(view, boundary, vol);
}

std::vector<double> lazy_walk_second_eigenvector(const ClusterView& view, std::uint64_t seed,
                                                 double* mu2) {
    const int s = view.size();
    std::vector<double> sqd(s, 0.0);
    double v1norm2 = 0;
    for (int i = 0; i < s; ++i) {
        sqd[i] = std::sqrt(static_cast<double>(view.view_degree(i)));
        v1norm2 += view.view_degree(i);
    }
    const double v1norm = std::sqrt(std::max(v1norm2, 1e-300));

    // x lives in the symmetrized space; v1 = sqrt(d)/||sqrt(d)||.
    std::vector<double> x(s), y(s);
    for (int i = 0; i < s; ++i)
        x[i] = (mix64(seed, 0x5eed, static_cast<std::uint64_t>(i)) & 1) ? 1.0 : -1.0;

    auto deflate = [&](std::vector<double>& z) {
        double dot = 0;
        for (int i = 0; i < s; ++i) dot += z[i] * sqd[i] / v1norm;
        for (int i = 0; i < s; ++i) z[i] -= dot * sqd[i] / v1norm;
    };
    auto normalize = [&](std::vector<double>& z) {
        double nn = 0;
        for (double t : z) nn += t * t;
        nn = std::sqrt(nn);
        if (nn < 1e-300) return false;
        for (double& t : z) t /= nn;
        return true;
    };
    auto apply = [&](const std::vector<double>& in, std::vector<double>& out) {
        // out = (I + N)/2 * in, N = D^{-1/2}(A + loops)D^{-1/2}
        for (int i = 0; i < s; ++i) {
            const int d = view.view_degree(i);
            double acc = 0;
            if (d > 0) {
                for (int j : view.local_neighbors(i)) acc += in[j] / (sqd[i] * sqd[j]);
                acc += view.loops(i) * in[i] / static_cast<double>(d);
            }
            out[i] = 0.5 * in[i] + 0.5 * acc;
        }
    };

    deflate(x);
    if (!normalize(x)) {
        // degenerate (e.g. single node); return zeros
        if (mu2) *mu2 = 0;
        return x;
    }
    const int iters = 300 + 60 * static_cast<int>(std::ceil(std::log2(s + 1)));
    for (int t = 0; t < iters; ++t) {
        apply(x, y);
        deflate(y);
        if (!normalize(y)) break;
        std::swap(x, y);
    }
    if (mu2) {
        apply(x, y);
        double dot = 0;
        for (int i = 0; i < s; ++i) dot += x[i] * y[i];
        *mu2 = dot;
    }
    return x;
}

namespace {

ConductanceResult exact_conductance(const ClusterView& view) {
    const int s = view.size();
    // Enumerate cuts containing local node 0 via Gray code over nodes 1..s-1.
    std::vector<char> in(s, 0);
    in[0] = 1;
    std::int64_t vol = view.view_degree(0);
    std::int64_t boundary = view.local_neighbors(0).size();
    Rational best = cut_value(view, boundary, vol);
    std::uint64_t bestMask = 1;
    std::uint64_t mask = 1;
    bool bestValid = (s >= 2);

    const std::uint64_t states = 1ULL << (s - 1);
    for (std::uint64_t c = 1; c < states; ++c) {
        const int flip = 1 + __builtin_ctzll(c);
        const bool adding = !in[flip];
        in[flip] = adding;
        mask ^= (1ULL << flip);
        const int d = view.view_degree(flip);
        vol += adding ? d : -d;
        for (int j : view.local_neighbors(flip)) {
            if (in[j] && j != flip) boundary += adding ? -1 : 1;
            else boundary += adding ? 1 : -1;
        }
        if (mask == (states * 2 - 1)) continue; // full set: not a proper cut
        const Rational val = cut_value(view, boundary, vol);
        if (!bestValid || val < best) {
            best = val;
            bestMask = mask;
            bestValid = true;
        }
    }

    ConductanceResult res;
    res.exact = true;
    res.value = best;
    for (int i = 0; i < s; ++i)
        if (bestMask & (1ULL << i)) res.best_cut.push_back(view.member(i));
    return res;
}

ConductanceResult sweep_conductance(const ClusterView& view, std::uint64_t seed) {
    ConductanceResult res;
    double mu2 = 0;
    const std::vector<double> x = lazy_walk_second_eigenvector(view, seed, &mu2);
    const int s = view.size();

    std::vector<int> order(s);
    for (int i = 0; i < s; ++i) order[i] = i;
    std::vector<double> key(s);
    for (int i = 0; i < s; ++i) {
        const int d = view.view_degree(i);
        key[i] = d > 0 ? x[i] / std::sqrt(static_cast<double>(d)) : 0.0;
    }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return key[a] > key[b]; });

    std::vector<char> in(s, 0);
    std::int64_t vol = 0, boundary = 0;
    Rational best(1);
    int bestK = 1;
    bool have = false;
    for (int k = 0; k < s - 1; ++k) {
        const int i = order[k];
        in[i] = 1;
        vol += view.view_degree(i);
        for (int j : view.local_neighbors(i)) boundary += in[j] ? -1 : 1;
        const Rational val = cut_value(view, boundary, vol);
        if (!have || val < best) {
            best = val;
            bestK = k + 1;
            have = true;
        }
    }
    res.exact = false;
    res.value = have ? best : Rational(1);
    res.cheeger_lower = std::max(0.0, 1.0 - mu2);
    for (int k = 0; k < bestK; ++k) res.best_cut.push_back(view.member(order[k]));
    return res;
}

} // namespace

ConductanceResult graph_conductance(const ClusterView& view, ConductanceMethod method,
                                    std::uint64_t seed) {
    if (view.size() < 2) throw InputError("graph_conductance: view needs at least 2 nodes");
    if (!view.is_connected()) {
        // Some cut has empty boundary; report it directly.
        ConductanceResult res;
        res.exact = true;
        res.value = Rational(0);
        std::vector<char> vis(view.size(), 0);
        std::queue<int> q;
        q.push(0);
        vis[0] = 1;
        while (!q.empty()) {
            int i = q.front();
            q.pop();
            for (int j : view.local_neighbors(i))
                if (!vis[j]) {
                    vis[j] = 1;
                    q.push(j);
                }
        }
        for (int i = 0; i < view.size(); ++i)
            if (vis[i]) res.best_cut.push_back(view.member(i));
        return res;
    }
    if (method == ConductanceMethod::Exact) {
        if (view.size() > kExactConductanceCap)
            throw CapabilityError("graph_conductance: exact method capped at " +
                                  std::to_string(kExactConductanceCap) + " nodes");
        return exact_conductance(view);
    }
    // restart the power iteration a few times: with a degenerate second
    // eigenvalue a single start can land on a vector whose sweep misses the
    // best cut
    ConductanceResult best = sweep_conductance(view, mix64(seed, 0));
    for (std::uint64_t r = 1; r < 5; ++r) {
        ConductanceResult cand = sweep_conductance(view, mix64(seed, r));
        if (cand.value < best.value) best = cand;
    }
    return best;
}

namespace {

int dense_mixing_time(const ClusterView& view, double tol) {
    const int s = view.size();
    const double totvol = static_cast<double>(view.total_volume());
    std::vector<double> pi(s);
    for (int i = 0; i < s; ++i) pi[i] = view.view_degree(i) / totvol;

    const long cap = 200 + 30L * s * s;
    int worst = 0;
    std::vector<double> p(s), q(s);
    for (int start = 0; start < s; ++start) {
        std::fill(p.begin(), p.end(), 0.0);
        p[start] = 1.0;
        int t = 0;
        auto tv = [&](const std::vector<double>& d) {
            double acc = 0;
            for (int i = 0; i < s; ++i) acc += std::abs(d[i] - pi[i]);
            return acc / 2;
        };
        while (tv(p) > tol && t < cap) {
            for (int i = 0; i < s; ++i) {
                const int d = view.view_degree(i);
                double acc = 0;
                for (int j : view.local_neighbors(i)) acc += p[j] / view.view_degree(j);
                if (d > 0) acc += p[i] * view.loops(i) / static_cast<double>(d);
                q[i] = 0.5 * p[i] + 0.5 * acc;
            }
            std::swap(p, q);
            ++t;
        }
        worst = std::max(worst, t);
    }
    return worst;
}

int sampled_mixing_time(const ClusterView& view, double tol) {
    // Monte Carlo fallback for large views: 64 walks per start node,
    // worst-start empirical total variation against the stationary law.
    const int s = view.size();
    const int walks = 64;
    const double totvol = static_cast<double>(view.total_volume());
    std::vector<int> pos(static_cast<std::size_t>(s) * walks);
    for (int i = 0; i < s; ++i)
        for (int w = 0; w < walks; ++w) pos[static_cast<std::size_t>(i) * walks + w] = i;

    const long cap = 200 + 30L * s;
    std::vector<double> hist(s);
    for (int t = 1; t <= cap; ++t) {
        for (std::size_t idx = 0; idx < pos.size(); ++idx) {
            const int i = pos[idx];
            const std::uint64_t r = mix64(0x6d69ULL, static_cast<std::uint64_t>(t), idx);
            if (r & 1) continue; // lazy stay
            const int d = view.view_degree(i);
            if (d == 0) continue;
            const int pick = static_cast<int>((r >> 1) % d);
            if (pick < static_cast<int>(view.local_neighbors(i).size()))
                pos[idx] = view.local_neighbors(i)[pick];
            // else: a self loop, stay
        }
        double worstTv = 0;
        for (int start = 0; start < s; ++start) {
            std::fill(hist.begin(), hist.end(), 0.0);
            for (int w = 0; w < walks; ++w)
                hist[pos[static_cast<std::size_t>(start) * walks + w]] += 1.0 / walks;
            double acc = 0;
            for (int i = 0; i < s; ++i) acc += std::abs(hist[i] - view.view_degree(i) / totvol);
            worstTv = std::max(worstTv, acc / 2);
        }
        if (worstTv <= tol) return t;
    }
    return static_cast<int>(cap);
}

} // namespace

int estimate_mixing_time(const ClusterView& view, double tolerance) {
    if (tolerance <= 0 || tolerance >= 0.5)
        throw InputError("estimate_mixing_time: tolerance must be in (0, 1/2)");
    if (view.size() == 0) throw InputError("estimate_mixing_time: empty view");
    if (!view.is_connected()) throw StructuralError("estimate_mixing_time: view is disconnected");
    if (view.size() == 1) return 0;
    if (view.size() <= 4096) return dense_mixing_time(view, tolerance);
    return sampled_mixing_time(view, tolerance);
}

} // namespace congest
