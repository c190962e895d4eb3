// Acceptance suite: one line of output per criterion, nonzero exit if any
// gating criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "congest/config.hpp"
#include "congest/errors.hpp"
#include "congest/generators.hpp"
#include "congest/graph.hpp"
#include "congest/k4.hpp"
#include "congest/kp.hpp"
#include "congest/listing.hpp"
#include "congest/oracle.hpp"
#include "congest/partition.hpp"
#include "congest/rng.hpp"

using namespace congest;

namespace {

struct Tally {
    long long runs = 0;
    long long violations = 0;     // protocol violations (criterion 3)
    long long nonterminations = 0; // iteration-cap breaches (criterion 6)
    long long mismatches = 0;
    ClaimsReport claims;          // aggregated applicable claim checks
    std::vector<std::string> notes;

    void note(const std::string& s) {
        if (notes.size() < 8) notes.push_back(s);
    }
};

void run_one(const Graph& g, const std::string& algo, int p, std::uint64_t seed,
             const Config& cfg, Tally& tally) {
    RoundLedger ledger;
    ClaimsReport claims;
    ++tally.runs;
    CliqueSet found;
    try {
        found = (algo == "k4") ? k4_list(g, seed, cfg, ledger, &claims)
                               : kp_list(g, p, seed, cfg, ledger, &claims);
    } catch (const ProtocolViolation& e) {
        ++tally.violations;
        tally.note(std::string("violation: ") + e.what());
        return;
    } catch (const InvariantFailure& e) {
        ++tally.nonterminations;
        tally.note(std::string("invariant: ") + e.what());
        return;
    }
    for (const auto& check : claims.checks) tally.claims.checks.push_back(check);
    const CliqueSet want = enumerate_cliques(g, algo == "k4" ? 4 : p);
    if (found != want) {
        ++tally.mismatches;
        tally.note(algo + " seed " + std::to_string(seed) + ": got " +
                   std::to_string(found.size()) + " want " + std::to_string(want.size()));
    }
}

Graph corpus_graph_for(int seed, int which, int* n_out) {
    const std::uint64_t s = mix64(0xacce97, static_cast<std::uint64_t>(seed),
                                  static_cast<std::uint64_t>(which));
    if (which == 0) {
        const double ps[3] = {0.2, 0.35, 0.5};
        const double p_edge = ps[seed % 3];
        const int span = p_edge > 0.4 ? 21 : 61; // keep the densest graphs smaller
        const int n = 60 + static_cast<int>(counter_uniform(mix64(s, 1), span));
        *n_out = n;
        return gen_erdos_renyi(n, p_edge, s);
    }
    if (which == 1) {
        const int n = 60 + static_cast<int>(counter_uniform(mix64(s, 1), 61));
        *n_out = n;
        return gen_planted_clique_overlay(n, 0.2, 4 + seed % 3, 5 + seed % 2, s).graph;
    }
    const int n = 60 + 2 * static_cast<int>(counter_uniform(mix64(s, 1), 31));
    *n_out = n;
    return gen_two_expanders_bridged(n, 0.35, 3 + seed % 4, s);
}

// ---- criterion 2 helpers ---------------------------------------------------

CliqueSet expected_union(const ListingInstance& inst) {
    const EdgeList eprime = instance_eprime(inst);
    CliqueSet want;
    for (int pprime = 2; pprime <= inst.p; ++pprime) {
        CliqueSet part = qualifying_cliques(inst.n, inst.members, inst.ec, inst.ebar, eprime,
                                            inst.p, pprime);
        want.insert(part.begin(), part.end());
    }
    return want;
}

ListingInstance random_instance(std::uint64_t seed, const Config& cfg, bool sparse_holdings,
                                bool tiny_cluster, bool restricted) {
    const int n = 40 + static_cast<int>(counter_uniform(mix64(seed, 1), 81));
    const int p = 4 + static_cast<int>(counter_uniform(mix64(seed, 2), 3));
    const double thr = Config::frac_threshold(n, p);
    int k = tiny_cluster ? std::max(4, static_cast<int>(thr) - 2)
                         : static_cast<int>(thr) + 2 +
                               static_cast<int>(counter_uniform(mix64(seed, 3), 12));
    k = std::min(k, n - 8);
    std::vector<int> members(k);
    for (int i = 0; i < k; ++i) members[i] = i;

    EdgeList ec;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            if (counter_uniform(mix64(seed, 4, u, v), 100) < 55) ec.push_back({u, v});

    std::vector<long long> degc(k, 0);
    for (const auto& [u, v] : ec) {
        ++degc[u];
        ++degc[v];
    }
    // in the restricted ("irrelevant low-degree nodes") shape, only the first
    // few members touch the boundary
    const int barSpan = restricted ? std::max(2, k / 4) : k;
    EdgeList ebar;
    for (int u = 0; u < barSpan; ++u) {
        if (degc[u] == 0) continue; // boundary incidence is capped by cluster degree
        for (int v = k; v < n; ++v)
            if (counter_uniform(mix64(seed, 5, u, v), 100) < 12) ebar.push_back({u, v});
    }

    std::map<int, EdgeList> holdings;
    if (!sparse_holdings) {
        for (int u = k; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (counter_uniform(mix64(seed, 6, u, v), 100) < 35)
                    holdings[static_cast<int>(counter_uniform(mix64(seed, 7, u, v), k))]
                        .push_back({u, v});
    }
    return make_instance(n, members, ec, ebar, holdings, p, cfg);
}

// ---- criterion 4 helpers ---------------------------------------------------

Graph conforming_graph(const PartitionSpec& spec, std::uint64_t seed) {
    std::set<Edge> edges;
    auto eng = make_engine(seed);
    auto fill = [&](const std::vector<int>& xs, const std::vector<int>& ys, long long cap) {
        for (long long placed = 0, guard = 0; placed < cap && guard < 40 * cap + 50; ++guard) {
            const int u = xs[bounded(eng, xs.size())];
            const int v = ys[bounded(eng, ys.size())];
            if (u != v && edges.insert(make_edge(u, v)).second) ++placed;
        }
    };
    const long long s1 = static_cast<long long>(spec.V1.size());
    const long long s2 = static_cast<long long>(spec.V2.size());
    fill(spec.V1, spec.V1, std::min(spec.m1, s1 * (s1 - 1) / 2));
    fill(spec.V2, spec.V2, std::min(spec.m2, s2 * (s2 - 1) / 2));
    fill(spec.V1, spec.V2, std::min(spec.m12, s1 * s2));
    int n = 0;
    for (int v : spec.V2) n = std::max(n, v + 1);
    return Graph(n, EdgeList(edges.begin(), edges.end()));
}

// ---- criterion 7 helpers ---------------------------------------------------

// Structured graphs, where the eigenvector sweep is expected to recover the
// optimal cut exactly, plus random graphs where only the one-sided spectral
// guarantees are checkable.
std::vector<std::pair<Graph, bool>> small_corpus() {
    std::vector<std::pair<Graph, bool>> corpus;
    for (int n = 3; n <= 12; ++n) corpus.push_back({gen_cycle(n), true});
    for (int n = 2; n <= 12; ++n) corpus.push_back({gen_complete(n), true});
    for (int n = 4; n <= 12; n += 2) corpus.push_back({gen_barbell(n), true});
    for (int n = 4; n <= 10; n += 3) { // stars
        EdgeList edges;
        for (int v = 1; v < n; ++v) edges.push_back({0, v});
        corpus.push_back({Graph(n, edges), true});
    }
    for (int seed = 1; seed <= 6; ++seed) {
        const Graph g = gen_erdos_renyi(8 + seed % 5, 0.5, seed);
        std::vector<int> active = g.active_nodes();
        if (active.size() < 3) continue;
        ClusterView view(g, active, ViewMode::Induced);
        if (view.is_connected()) corpus.push_back({g, false});
    }
    return corpus;
}

bool verdict(int index, const std::string& name, bool pass, const std::string& detail = "",
             bool gating = true) {
    std::cout << "criterion " << index << " (" << name << "): "
              << (pass ? "PASS" : (gating ? "FAIL" : "FLAGGED"))
              << (detail.empty() ? "" : " — " + detail) << std::endl;
    return pass || !gating;
}

} // namespace

int main() {
    const Config cfg = Config::desk();
    bool allPass = true;
    const auto t0 = std::chrono::steady_clock::now();

    // 1: oracle equivalence + 3: load bounds + 5: claim checks + 6: termination
    Tally tally;
    for (int seed = 1; seed <= 50; ++seed)
        for (int which = 0; which < 3; ++which) {
            int n = 0;
            const Graph g = corpus_graph_for(seed, which, &n);
            const std::uint64_t s = mix64(0x5eed, seed, which);
            run_one(g, "kp", 5, s, cfg, tally);
            run_one(g, "kp", 6, s, cfg, tally);
            run_one(g, "k4", 4, s, cfg, tally);
        }
    {
        std::string detail = std::to_string(tally.runs) + " runs, " +
                             std::to_string(tally.mismatches) + " mismatches";
        for (const auto& note : tally.notes) detail += "; " + note;
        allPass &= verdict(1, "listing output equals brute-force enumeration",
                           tally.mismatches == 0 && tally.violations == 0 &&
                               tally.nonterminations == 0,
                           detail);
    }

    // 2: sparse-listing equivalence on constructed instances
    long long sparseBad = 0, sparseViolations = 0;
    std::string sparseNote;
    for (int i = 0; i < 100; ++i) {
        const bool sparseHoldings = (i % 3 == 0);
        const bool tiny = (i % 4 == 1);
        const bool restricted = (i % 5 == 2);
        try {
            ListingInstance inst = random_instance(mix64(0xcafe, i), cfg, sparseHoldings, tiny,
                                                   restricted);
            RoundLedger ledger;
            SparseLister lister(inst, cfg, ledger, mix64(0xd1ce, i), "acc");
            SparseOutcome outcome =
                lister.list_all(restricted ? AvgVariant::Restricted : AvgVariant::Full);
            if (outcome.cliques != expected_union(lister.instance())) {
                ++sparseBad;
                if (sparseNote.empty()) sparseNote = "instance " + std::to_string(i);
            }
        } catch (const ProtocolViolation& e) {
            ++sparseViolations;
            if (sparseNote.empty()) sparseNote = e.what();
        }
    }
    allPass &= verdict(2, "sparse instances equal the qualifying-clique union",
                       sparseBad == 0 && sparseViolations == 0,
                       "100 instances" + (sparseNote.empty() ? "" : "; " + sparseNote));

    // 3: zero load violations across criteria 1-2
    allPass &= verdict(3, "all routing and exchange load bounds hold",
                       tally.violations == 0 && sparseViolations == 0,
                       std::to_string(tally.violations + sparseViolations) + " violations");

    // 4: partition bound statements over 200 seeded trials
    {
        PartitionSpec spec;
        for (int v = 0; v < 64; ++v) spec.V1.push_back(v);
        for (int v = 0; v < 128; ++v) spec.V2.push_back(64 + v);
        spec.a = 2;
        spec.b = 4;
        spec.nBar = 192;
        spec.m1 = 50000;
        spec.m2 = 180000;
        spec.m12 = 45000;
        int bad = 0;
        const bool condOk = check_conditions(spec).all_pass;
        if (condOk)
            for (int trial = 0; trial < 200; ++trial) {
                const std::uint64_t s = mix64(0x3144, static_cast<std::uint64_t>(trial));
                const Graph g = conforming_graph(spec, s);
                if (!verify_bounds(g, spec, sample_partition(spec, s)).all_pass()) ++bad;
            }
        allPass &= verdict(4, "partition bounds hold in 200 conforming trials",
                           condOk && bad == 0,
                           condOk ? std::to_string(200 - bad) + "/200"
                                  : "preconditions not met");
    }

    // 5: claim-check inequalities, exact evaluation
    {
        long long applicable = 0, failed = 0;
        std::string firstFail;
        for (const auto& check : tally.claims.checks)
            if (check.applicable) {
                ++applicable;
                if (!check.pass) {
                    ++failed;
                    if (firstFail.empty()) firstFail = check.name;
                }
            }
        allPass &= verdict(5, "cost and structure claims hold where applicable", failed == 0,
                           std::to_string(applicable) + " applicable checks" +
                               (firstFail.empty() ? "" : "; first fail: " + firstFail));
    }

    // 6: termination within the iteration cap
    allPass &= verdict(6, "every run stays within the outer-iteration cap",
                       tally.nonterminations == 0,
                       std::to_string(tally.nonterminations) + " breaches");

    // 7: conductance and mixing-time cross checks on the small corpus
    {
        int checked = 0, bad = 0;
        std::string note;
        for (const auto& [g, structured] : small_corpus()) {
            std::vector<int> nodes = g.active_nodes();
            if (nodes.size() < 2) continue;
            ClusterView view(g, nodes, ViewMode::Induced);
            if (!view.is_connected()) continue;
            ++checked;
            const auto exact = graph_conductance(view, ConductanceMethod::Exact);
            const auto sweep = graph_conductance(view, ConductanceMethod::Sweep, 1);
            const bool agree =
                structured ? exact.value == sweep.value
                           : exact.value <= sweep.value &&
                                 sweep.cheeger_lower <= 2.0 * exact.value.to_double() + 1e-9;
            if (!agree) {
                ++bad;
                if (note.empty())
                    note = "sweep " + sweep.value.str() + " vs exact " + exact.value.str() +
                           " on n=" + std::to_string(nodes.size());
                continue;
            }
            const double phi = exact.value.to_double();
            const int t = estimate_mixing_time(view);
            const double lo = 0.25 / phi;
            const double hi = 16.0 * std::log(static_cast<double>(view.total_volume())) /
                              (phi * phi);
            if (t < lo || t > hi) {
                ++bad;
                if (note.empty())
                    note = "mixing " + std::to_string(t) + " outside [" + std::to_string(lo) +
                           ", " + std::to_string(hi) + "]";
            }
        }
        allPass &= verdict(7, "exact vs sweep conductance and mixing-time band", bad == 0,
                           std::to_string(checked) + " graphs" + (note.empty() ? "" : "; " + note));
    }

    // 8: scaling diagnostic (reported, non-gating)
    {
        std::vector<int> ns = {128, 256, 512, 1024};
        std::vector<double> xs, ys;
        std::string rows;
        for (int n : ns) {
            const double p_edge = 4.0 / std::sqrt(static_cast<double>(n));
            const Graph g = gen_erdos_renyi(n, p_edge, mix64(0xbe27c, (std::uint64_t)n));
            RoundLedger ledger;
            k4_list(g, 17, cfg, ledger);
            rows += " n=" + std::to_string(n) + ":" + std::to_string(ledger.total_rounds());
            xs.push_back(std::log2(static_cast<double>(n)));
            ys.push_back(
                std::log2(static_cast<double>(std::max<long long>(ledger.total_rounds(), 1))));
        }
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const double k = static_cast<double>(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sx += xs[i];
            sy += ys[i];
            sxx += xs[i] * xs[i];
            sxy += xs[i] * ys[i];
        }
        const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
        char buf[160];
        std::snprintf(buf, sizeof(buf), "slope %.3f vs reference 0.5%s;%s", slope,
                      slope > 1.0 ? " (FLAG: above the trivial baseline 1.0)" : "", rows.c_str());
        verdict(8, "round-count scaling diagnostic", slope <= 1.0, buf, /*gating=*/false);
    }

    const auto dt = std::chrono::duration_cast<std::chrono::seconds>(
        std::chrono::steady_clock::now() - t0);
    std::cout << (allPass ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " (" << dt.count()
              << "s)" << std::endl;
    return allPass ? 0 : 1;
}
