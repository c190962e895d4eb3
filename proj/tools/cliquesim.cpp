// cliquesim: generate graphs, run the listing pipelines, and export round
// ledgers, claim-check tables, and clique lists as CSV/JSON.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "congest/config.hpp"
#include "congest/decomp.hpp"
#include "congest/errors.hpp"
#include "congest/generators.hpp"
#include "congest/graph.hpp"
#include "congest/io.hpp"
#include "congest/k4.hpp"
#include "congest/kp.hpp"
#include "congest/ledger.hpp"
#include "congest/listing.hpp"
#include "congest/oracle.hpp"
#include "congest/partition.hpp"
#include "congest/rng.hpp"

namespace {

using nlohmann::json;
using namespace congest;

const std::set<std::string> kConfigKeys = {
    "family", "n",           "params",      "seed",  "seeds", "algorithm", "p",
    "beta",   "gamma",       "gamma_prime", "kappa", "kappa_bar", "kappa_prime",
    "c",      "W",           "B",           "phi",   "eps",   "profile",   "output_dir"};

json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("config: cannot open " + path);
    json j;
    in >> j;
    if (!j.is_object()) throw InputError("config: top level must be an object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!kConfigKeys.count(key)) throw InputError("config: unknown key '" + key + "'");
    }
    if (j.count("W") && j["W"].get<int>() < 1)
        throw InputError("config: W must be >= 1 (one word per message minimum)");
    if (j.count("B") && j["B"].get<int>() < 1) throw InputError("config: B must be >= 1");
    if (j.count("p") && j["p"].get<int>() < 4) throw InputError("config: p must be >= 4");
    return j;
}

Config config_from_json(const json& j) {
    Config cfg = (j.value("profile", "desk") == "faithful") ? Config::faithful() : Config::desk();
    if (j.count("beta")) cfg.beta = j["beta"].get<double>();
    if (j.count("gamma")) cfg.gamma = j["gamma"].get<double>();
    if (j.count("gamma_prime")) cfg.gamma_prime = j["gamma_prime"].get<double>();
    if (j.count("kappa")) cfg.kappa = j["kappa"].get<double>();
    if (j.count("kappa_bar")) cfg.kappa_bar = j["kappa_bar"].get<double>();
    if (j.count("kappa_prime")) cfg.kappa_prime = j["kappa_prime"].get<double>();
    if (j.count("c")) cfg.c = j["c"].get<int>();
    if (j.count("W")) cfg.W = j["W"].get<int>();
    if (j.count("B")) cfg.B = j["B"].get<int>();
    if (j.count("phi")) cfg.phi_override = j["phi"].get<double>();
    if (j.count("eps")) cfg.eps_override = j["eps"].get<double>();
    return cfg;
}

std::map<std::string, double> parse_params(const std::vector<std::string>& kvs) {
    std::map<std::string, double> params;
    for (const auto& kv : kvs) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw InputError("param must be key=value: " + kv);
        params[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    }
    return params;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open output file " + path);
    out << text;
}

std::string cliques_to_text(const CliqueSet& cliques) {
    std::string out;
    for (const auto& clique : cliques) {
        for (std::size_t i = 0; i < clique.size(); ++i)
            out += (i ? " " : "") + std::to_string(clique[i]);
        out += "\n";
    }
    return out;
}

CliqueSet cliques_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open clique list " + path);
    CliqueSet out;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        std::vector<int> clique;
        int v;
        while (ss >> v) clique.push_back(v);
        if (!clique.empty()) {
            std::sort(clique.begin(), clique.end());
            out.insert(clique);
        }
    }
    return out;
}

void write_reports(const std::string& dir, const RoundLedger& ledger, const ClaimsReport& claims,
                   const CliqueSet& cliques) {
    std::filesystem::create_directories(dir);
    write_text(dir + "/ledger.csv", ledger.to_csv());
    write_text(dir + "/ledger.json", ledger.to_json().dump(2) + "\n");
    write_text(dir + "/claims.csv", claims.to_csv());
    write_text(dir + "/cliques.txt", cliques_to_text(cliques));
}

Graph load_or_generate(const std::string& input, const std::string& family, int n,
                       const std::map<std::string, double>& params, std::uint64_t seed) {
    if (!input.empty()) {
        if (input.size() > 5 && input.substr(input.size() - 5) == ".json")
            return read_graph_json(input);
        return read_edge_list(input);
    }
    return generate(family, n, params, seed).graph;
}

// --- subcommand bodies -----------------------------------------------------

int cmd_generate(const std::string& family, int n, std::uint64_t seed,
                 const std::map<std::string, double>& params, const std::string& out) {
    GeneratedGraph gg = generate(family, n, params, seed);
    json meta;
    meta["family"] = gg.family;
    meta["seed"] = seed;
    if (!gg.planted.empty()) meta["planted"] = gg.planted;
    if (!out.empty()) {
        if (out.size() > 5 && out.substr(out.size() - 5) == ".json")
            write_graph_json(gg.graph, out, meta);
        else
            write_edge_list(gg.graph, out);
    } else {
        std::cout << graph_to_json(gg.graph, meta).dump(2) << "\n";
    }
    std::cerr << "generated " << gg.family << " n=" << gg.graph.node_count() << " m="
              << gg.graph.edge_count() << "\n";
    return 0;
}

int cmd_decompose(const Graph& g, const Config& cfg, std::uint64_t seed,
                  const std::string& out) {
    const int n = g.node_count();
    Rational phi(1, 4);
    const double target = cfg.phi_target(n);
    if (target > 0) phi = Rational(std::llround(target * 1e6), 1000000);
    RoundLedger ledger;
    std::vector<int> everyone(n);
    for (int v = 0; v < n; ++v) everyone[v] = v;
    Clustering c = decompose(g, everyone, phi, seed, cfg, &ledger, "decomp");
    ValidationReport rep = validate_decomposition(g, everyone, c, phi, cfg.eps_target(n));
    std::cout << "clusters=" << c.clusters.size() << " inter_edges="
              << c.interClusterEdges.size() << " epsilon=" << c.achievedEpsilon.str()
              << " min_phi=" << c.achievedPhi.str() << " rounds=" << c.chargedRounds
              << " validation=" << (rep.pass ? "pass" : "FAIL") << "\n";
    for (const auto& f : rep.failures) std::cout << "  " << f << "\n";
    if (!out.empty()) write_text(out, clustering_to_json(c).dump(2) + "\n");
    return rep.pass ? 0 : 1;
}

// A graph matching a partition spec: random edges inside V1, inside V2, and
// across, capped by the declared m1/m2/m12.
Graph spec_conforming_graph(const PartitionSpec& spec, std::uint64_t seed) {
    int n = 0;
    for (int v : spec.V1) n = std::max(n, v + 1);
    for (int v : spec.V2) n = std::max(n, v + 1);
    std::set<Edge> edges;
    auto eng = make_engine(mix64(seed, 0x9a9));
    auto fill = [&](const std::vector<int>& xs, const std::vector<int>& ys, long long cap,
                    bool cross) {
        long long placed = 0;
        for (long long guard = 0; placed < cap && guard < 50 * cap + 100; ++guard) {
            const int u = xs[bounded(eng, xs.size())];
            const int v = ys[bounded(eng, ys.size())];
            if (u == v) continue;
            if (!cross && edges.count(make_edge(u, v))) continue;
            if (edges.insert(make_edge(u, v)).second) ++placed;
        }
    };
    fill(spec.V1, spec.V1, std::min<long long>(spec.m1, (long long)spec.V1.size() *
                                                           (spec.V1.size() - 1) / 2),
         false);
    fill(spec.V2, spec.V2, std::min<long long>(spec.m2, (long long)spec.V2.size() *
                                                           (spec.V2.size() - 1) / 2),
         false);
    fill(spec.V1, spec.V2, std::min<long long>(spec.m12, (long long)spec.V1.size() *
                                                             (long long)spec.V2.size()),
         true);
    return Graph(n, EdgeList(edges.begin(), edges.end()));
}

int cmd_partition_test(int n1, int n2, int a, int b, long long m1, long long m2, long long m12,
                       long long nbar, int trials, std::uint64_t seed) {
    PartitionSpec spec;
    for (int v = 0; v < n1; ++v) spec.V1.push_back(v);
    for (int v = 0; v < n2; ++v) spec.V2.push_back(n1 + v);
    spec.a = a;
    spec.b = b;
    spec.m1 = m1;
    spec.m2 = m2;
    spec.m12 = m12;
    spec.nBar = nbar > 0 ? nbar : n1 + n2;
    ConditionReport cond = check_conditions(spec);
    std::cout << "preconditions: " << (cond.all_pass ? "pass" : "FAIL") << "\n";
    for (const auto& item : cond.items)
        std::cout << "  " << item.name << ": lhs=" << item.lhs << " rhs=" << item.rhs << " "
                  << (item.pass ? "pass" : "FAIL") << "\n";
    if (!cond.all_pass) return 1;
    int bad = 0;
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t s = mix64(seed, static_cast<std::uint64_t>(t));
        const Graph g = spec_conforming_graph(spec, s);
        TwoSidedPartition part = sample_partition(spec, s);
        BoundsReport rep = verify_bounds(g, spec, part);
        if (!rep.all_pass()) {
            ++bad;
            std::cout << "trial " << t << " FAIL: max11=" << rep.max11 << "/" << rep.bound11
                      << " max22=" << rep.max22 << "/" << rep.bound22 << " max12=" << rep.max12
                      << "/" << rep.bound12 << "\n";
        }
    }
    std::cout << "bound trials: " << (trials - bad) << "/" << trials << " pass\n";
    return bad == 0 ? 0 : 1;
}

int cmd_list(const Graph& g, const std::string& algo, int p, std::uint64_t seed,
             const Config& cfg, const std::string& outdir, bool skip_oracle) {
    RoundLedger ledger;
    ClaimsReport claims;
    CliqueSet found;
    bool ok = true;
    try {
        found = (algo == "k4") ? k4_list(g, seed, cfg, ledger, &claims)
                               : kp_list(g, p, seed, cfg, ledger, &claims);
    } catch (const ProtocolViolation& e) {
        std::cout << "protocol violation: " << e.what() << "\n";
        ok = false;
    }
    if (!claims.all_pass()) {
        ok = false;
        for (const auto& c : claims.checks)
            if (c.applicable && !c.pass)
                std::cout << "claim FAIL: " << c.name << " (" << c.lhs << " vs " << c.rhs
                          << ") " << c.note << "\n";
    }
    std::string diff = "skipped";
    if (!skip_oracle && g.node_count() <= kOracleNodeCap) {
        const CliqueSet want = enumerate_cliques(g, algo == "k4" ? 4 : p);
        diff = (found == want) ? "empty"
                               : ("MISMATCH got=" + std::to_string(found.size()) +
                                  " want=" + std::to_string(want.size()));
        if (found != want) ok = false;
    }
    if (!outdir.empty()) write_reports(outdir, ledger, claims, found);
    std::cout << "algo=" << algo << " p=" << (algo == "k4" ? 4 : p) << " cliques="
              << found.size() << " rounds=" << ledger.total_rounds() << " claims="
              << (claims.all_pass() ? "pass" : "FAIL") << " oracle_diff=" << diff << "\n";
    return ok ? 0 : 1;
}

ListingInstance instance_from_json(const json& j, const Config& cfg) {
    auto edges_of = [](const json& arr) {
        EdgeList edges;
        for (const auto& e : arr) edges.push_back(make_edge(e.at(0).get<int>(), e.at(1).get<int>()));
        return edges;
    };
    std::map<int, EdgeList> holdings;
    const json holdingsJson = j.value("holdings", json::object());
    for (const auto& [key, value] : holdingsJson.items()) holdings[std::stoi(key)] = edges_of(value);
    return make_instance(j.at("n").get<int>(), j.at("members").get<std::vector<int>>(),
                         edges_of(j.at("ec")), edges_of(j.value("ebar", json::array())),
                         std::move(holdings), j.value("p", 4), cfg);
}

CliqueSet expected_for_instance(const ListingInstance& inst) {
    const EdgeList eprime = instance_eprime(inst);
    CliqueSet want;
    for (int pprime = 2; pprime <= inst.p; ++pprime) {
        CliqueSet part = qualifying_cliques(inst.n, inst.members, inst.ec, inst.ebar, eprime,
                                            inst.p, pprime);
        want.insert(part.begin(), part.end());
    }
    return want;
}

int cmd_sparse(const std::string& path, const Config& cfg, std::uint64_t seed,
               const std::string& outdir) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open instance " + path);
    json j;
    in >> j;
    ListingInstance inst = instance_from_json(j, cfg);
    RoundLedger ledger;
    SparseLister lister(inst, cfg, ledger, seed, "cli");
    SparseOutcome outcome = lister.list_all(AvgVariant::Full);
    const CliqueSet want = expected_for_instance(lister.instance());
    const bool ok = outcome.cliques == want;
    ClaimsReport claims;
    claims.add("sparse listing equals qualifying-clique oracle",
               static_cast<double>(outcome.cliques.size()), static_cast<double>(want.size()), ok);
    if (!outdir.empty()) write_reports(outdir, ledger, claims, outcome.cliques);
    std::cout << "mode=" << (outcome.mode == FallbackMode::SmallK
                                 ? "smallK"
                                 : outcome.mode == FallbackMode::Padded ? "padded" : "normal")
              << " cliques=" << outcome.cliques.size() << " rounds=" << ledger.total_rounds()
              << " avg_ok=" << (outcome.avg_ok ? "yes" : "no") << " oracle_diff="
              << (ok ? "empty" : "MISMATCH") << "\n";
    return ok ? 0 : 1;
}

int cmd_bench(const std::vector<int>& ns, int p, const std::string& family, double p_edge_scale,
              std::uint64_t seed, const Config& cfg, const std::string& out) {
    std::string csv = "n,p,total_rounds,phases\n";
    std::vector<double> xs, ys;
    for (int n : ns) {
        std::map<std::string, double> params;
        params["p_edge"] = std::min(1.0, p_edge_scale / std::sqrt(static_cast<double>(n)));
        const Graph g = generate(family, n, params, mix64(seed, (std::uint64_t)n)).graph;
        RoundLedger ledger;
        ClaimsReport claims;
        if (p == 4)
            k4_list(g, seed, cfg, ledger, &claims);
        else
            kp_list(g, p, seed, cfg, ledger, &claims);
        std::string phases;
        for (const auto& [label, stats] : ledger.phases())
            phases += label + ":" + std::to_string(stats.rounds) + ";";
        csv += std::to_string(n) + "," + std::to_string(p) + "," +
               std::to_string(ledger.total_rounds()) + ",\"" + phases + "\"\n";
        xs.push_back(std::log2(static_cast<double>(n)));
        ys.push_back(std::log2(static_cast<double>(std::max<long long>(ledger.total_rounds(), 1))));
        std::cout << "n=" << n << " rounds=" << ledger.total_rounds() << "\n";
    }
    std::string slope_str = "";
    if (ns.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const double k = static_cast<double>(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sx += xs[i];
            sy += ys[i];
            sxx += xs[i] * xs[i];
            sxy += xs[i] * ys[i];
        }
        const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
        slope_str = std::to_string(slope);
        const double reference = 1.0 - 2.0 / p;
        std::cout << "fitted log-log slope = " << slope << " (reference " << reference << ")\n";
        if (slope > 1.0)
            std::cout << "WARNING: slope exceeds 1.0 (worse than the trivial baseline)\n";
    } else {
        std::cout << "single n: slope undefined\n";
    }
    csv += "slope,," + slope_str + ",\n";
    if (!out.empty()) write_text(out, csv);
    return 0;
}

int cmd_verify(const Graph& g, const std::string& cliquesPath, int p) {
    if (g.node_count() > kOracleNodeCap)
        throw CapabilityError("verify: graph exceeds the oracle node cap");
    const CliqueSet got = cliques_from_file(cliquesPath);
    const CliqueSet want = enumerate_cliques(g, p);
    std::vector<std::vector<int>> missing, extra;
    std::set_difference(want.begin(), want.end(), got.begin(), got.end(),
                        std::back_inserter(missing));
    std::set_difference(got.begin(), got.end(), want.begin(), want.end(),
                        std::back_inserter(extra));
    std::cout << "cliques=" << got.size() << " oracle=" << want.size() << " missing="
              << missing.size() << " extra=" << extra.size() << "\n";
    return (missing.empty() && extra.empty()) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"CONGEST clique-listing simulator"};
    app.require_subcommand(1);

    std::string configPath, input, out, outdir, family = "erdos-renyi", algo = "kp";
    std::string instancePath, cliquesPath;
    int n = 64, p = 5, trials = 200;
    std::uint64_t seed = 1;
    std::vector<std::string> paramKvs;
    std::vector<int> ns = {128, 256, 512, 1024};
    int n1 = 64, n2 = 64, a = 2, b = 4;
    long long m1 = 40000, m2 = 160000, m12 = 40000, nbar = 0;
    double p_edge_scale = 4.0;
    bool skipOracle = false;

    app.add_option("--config", configPath, "JSON config file; flags override");

    auto* gen = app.add_subcommand("generate", "emit a deterministic benchmark graph");
    gen->add_option("--family", family);
    gen->add_option("--n", n);
    gen->add_option("--seed", seed);
    gen->add_option("--param", paramKvs, "key=value generator parameter");
    gen->add_option("--out", out, "output path (.json or edge list)");

    auto* dec = app.add_subcommand("decompose", "expander-decompose a graph");
    dec->add_option("--input", input, "graph file (.json or edge list)");
    dec->add_option("--family", family);
    dec->add_option("--n", n);
    dec->add_option("--seed", seed);
    dec->add_option("--param", paramKvs);
    dec->add_option("--out", out, "clustering JSON output");

    auto* pt = app.add_subcommand("partition-test", "two-sided partition bound trials");
    pt->add_option("--n1", n1);
    pt->add_option("--n2", n2);
    pt->add_option("--a", a);
    pt->add_option("--b", b);
    pt->add_option("--m1", m1);
    pt->add_option("--m2", m2);
    pt->add_option("--m12", m12);
    pt->add_option("--nbar", nbar, "declared size parameter; 0 = n1+n2");
    pt->add_option("--trials", trials);
    pt->add_option("--seed", seed);

    auto* lst = app.add_subcommand("list", "run the kp or k4 listing pipeline");
    lst->add_option("--algo", algo)->check(CLI::IsMember({"kp", "k4"}));
    lst->add_option("--p", p);
    lst->add_option("--input", input);
    lst->add_option("--family", family);
    lst->add_option("--n", n);
    lst->add_option("--seed", seed);
    lst->add_option("--param", paramKvs);
    lst->add_option("--outdir", outdir, "report directory");
    lst->add_flag("--skip-oracle", skipOracle, "skip the brute-force cross-check");

    auto* sp = app.add_subcommand("sparse", "run one sparsity-aware listing instance");
    sp->add_option("--instance", instancePath, "instance JSON")->required();
    sp->add_option("--seed", seed);
    sp->add_option("--outdir", outdir);

    auto* bench = app.add_subcommand("bench", "round-count scaling sweep");
    bench->add_option("--n", ns, "n values");
    bench->add_option("--p", p);
    bench->add_option("--family", family);
    bench->add_option("--p-edge-scale", p_edge_scale, "p_edge = scale / sqrt(n)");
    bench->add_option("--seed", seed);
    bench->add_option("--out", out, "CSV output");

    auto* ver = app.add_subcommand("verify", "diff a clique list against the oracle");
    ver->add_option("--input", input)->required();
    ver->add_option("--cliques", cliquesPath)->required();
    ver->add_option("--p", p);

    CLI11_PARSE(app, argc, argv);

    try {
        json jcfg = json::object();
        if (!configPath.empty()) jcfg = load_config(configPath);
        Config cfg = config_from_json(jcfg);
        if (jcfg.count("family") && !gen->count("--family")) family = jcfg["family"];
        if (jcfg.count("n")) n = jcfg["n"].get<int>();
        if (jcfg.count("p")) p = jcfg["p"].get<int>();
        if (jcfg.count("seed")) seed = jcfg["seed"].get<std::uint64_t>();
        if (jcfg.count("algorithm")) algo = jcfg["algorithm"];
        if (jcfg.count("output_dir")) outdir = jcfg["output_dir"];
        std::map<std::string, double> params = parse_params(paramKvs);
        if (jcfg.count("params"))
            for (const auto& [key, value] : jcfg["params"].items())
                if (!params.count(key)) params[key] = value.get<double>();

        if (*gen) return cmd_generate(family, n, seed, params, out);
        if (*dec) return cmd_decompose(load_or_generate(input, family, n, params, seed), cfg,
                                       seed, out);
        if (*pt) return cmd_partition_test(n1, n2, a, b, m1, m2, m12, nbar, trials, seed);
        if (*lst)
            return cmd_list(load_or_generate(input, family, n, params, seed), algo, p, seed, cfg,
                            outdir, skipOracle);
        if (*sp) return cmd_sparse(instancePath, cfg, seed, outdir);
        if (*bench) return cmd_bench(ns, p, family, p_edge_scale, seed, cfg, out);
        if (*ver) return cmd_verify(load_or_generate(input, "", 0, {}, 0), cliquesPath, p);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
