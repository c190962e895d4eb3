#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "congest/rational.hpp"

namespace congest {

using Edge = std::pair<int, int>; // always stored with first < second
using EdgeList = std::vector<Edge>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Immutable simple undirected graph on dense node ids 0..n-1.
class Graph {
public:
    Graph() = default;
    Graph(int n, EdgeList edges);

    int node_count() const { return n_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }
    const EdgeList& edges() const { return edges_; }

    int degree(int v) const;
    const std::vector<int>& neighbors(int v) const;
    bool has_edge(int u, int v) const;
    int max_degree() const;

    // Nodes with degree >= 1.
    std::vector<int> active_nodes() const;

    void check_node(int v) const;

private:
    int n_ = 0;
    EdgeList edges_;
    std::vector<std::vector<int>> adj_;
};

enum class ViewMode { Induced, LoopAugmented };

// A subgraph view over a member set S: either G[S], or G{S} where each node
// carries deg_V(v) - deg_S(v) self loops so its view degree matches deg_V(v).
class ClusterView {
public:
    ClusterView(const Graph& parent, std::vector<int> members, ViewMode mode);

    const Graph& parent() const { return *parent_; }
    ViewMode mode() const { return mode_; }
    int size() const { return static_cast<int>(members_.size()); }
    const std::vector<int>& members() const { return members_; }
    int member(int local) const { return members_[local]; }
    int local_of(int v) const { return local_of_[v]; } // -1 if not a member
    bool contains(int v) const { return v >= 0 && v < static_cast<int>(local_of_.size()) && local_of_[v] >= 0; }

    const std::vector<int>& local_neighbors(int local) const { return ladj_[local]; }
    int loops(int local) const { return loops_[local]; }
    // Degree inside the view, loops counting 1 each.
    int view_degree(int local) const { return static_cast<int>(ladj_[local].size()) + loops_[local]; }

    std::int64_t total_volume() const { return total_volume_; }
    std::int64_t internal_edge_count() const { return internal_edges_; }
    bool is_connected() const;

private:
    const Graph* parent_;
    std::vector<int> members_;
    ViewMode mode_;
    std::vector<int> local_of_;
    std::vector<std::vector<int>> ladj_;
    std::vector<int> loops_;
    std::int64_t total_volume_ = 0;
    std::int64_t internal_edges_ = 0;
};

int deg_in(const Graph& g, int v, const std::vector<int>& s);
Graph remove_nodes(const Graph& g, const std::vector<int>& gone);
EdgeList edges_between(const Graph& g, const std::vector<int>& s, const std::vector<int>& t);

// Conductance of the cut (S, members \ S) inside the view; S given as parent ids.
Rational cut_conductance(const ClusterView& view, const std::vector<int>& s);

enum class ConductanceMethod { Exact, Sweep };

struct ConductanceResult {
    bool exact = false;
    Rational value;            // exact minimum, or best sweep-cut value (upper bound)
    double cheeger_lower = 0;  // spectral-gap lower bound (sweep method only)
    std::vector<int> best_cut; // witness side, parent ids
};

// Exact method enumerates all cuts; capped at 20 member nodes.
inline constexpr int kExactConductanceCap = 20;

ConductanceResult graph_conductance(const ClusterView& view, ConductanceMethod method,
                                    std::uint64_t seed = 0);

// Second eigenvector of the lazy walk matrix of the view (deflated power
// iteration, seed-fixed start). Returns per-local-node values; *mu2 gets the
// Rayleigh estimate of the second eigenvalue.
std::vector<double> lazy_walk_second_eigenvector(const ClusterView& view, std::uint64_t seed,
                                                 double* mu2);

// Smallest t with worst-start total-variation distance to stationarity <= tol.
int estimate_mixing_time(const ClusterView& view, double tolerance = 0.25);

} // namespace congest
