#include "congest/listing.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "congest/errors.hpp"
#include "congest/rng.hpp"
#include "congest/routing.hpp"
#include "congest/sim.hpp"

namespace congest {

namespace {

EdgeList sorted_unique(EdgeList e) {
    for (auto& [u, v] : e)
        if (u > v) std::swap(u, v);
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return e;
}

} // namespace

ListingInstance make_instance(int n, std::vector<int> members, EdgeList ec, EdgeList ebar,
                              std::map<int, EdgeList> holdings, int p, const Config& cfg) {
    if (p < 4) throw InputError("make_instance: p must be at least 4");
    if (n < 1) throw InputError("make_instance: empty network");

    ListingInstance inst;
    inst.n = n;
    inst.p = p;
    inst.members = std::move(members);
    std::sort(inst.members.begin(), inst.members.end());
    inst.members.erase(std::unique(inst.members.begin(), inst.members.end()),
                       inst.members.end());
    std::set<int> in(inst.members.begin(), inst.members.end());
    for (int v : inst.members)
        if (v < 0 || v >= n) throw InputError("make_instance: member id out of range");

    inst.ec = sorted_unique(std::move(ec));
    std::map<int, long long> degC;
    for (const auto& [u, v] : inst.ec) {
        if (!in.count(u) || !in.count(v))
            throw InputError("make_instance: cluster edge leaves the member set");
        ++degC[u];
        ++degC[v];
    }

    inst.ebar = sorted_unique(std::move(ebar));
    std::map<int, long long> barInc;
    for (const auto& [u, v] : inst.ebar) {
        const bool iu = in.count(u) > 0, iv = in.count(v) > 0;
        if (iu == iv) throw InputError("make_instance: Ebar edge must cross the cluster boundary");
        const int inside = iu ? u : v;
        const int outside = iu ? v : u;
        if (outside < 0 || outside >= n)
            throw InputError("make_instance: Ebar endpoint must be a real node");
        ++barInc[inside];
    }

    const double polylog = std::pow(Config::log2n(n), cfg.c);
    for (const auto& [u, c] : barInc)
        if (static_cast<double>(c) > cfg.kappa_bar * static_cast<double>(degC[u]) * polylog)
            throw InputError("make_instance: Ebar incidence cap violated at node " +
                             std::to_string(u));

    const double holdCap = cfg.kappa_prime * Config::frac_threshold(n, p) * polylog;
    for (auto& [u, edges] : holdings) {
        if (!in.count(u)) throw InputError("make_instance: holdings key not a member");
        edges = sorted_unique(std::move(edges));
        for (const auto& [x, y] : edges)
            if (in.count(x) || in.count(y))
                throw InputError("make_instance: held edge touches the cluster");
        if (static_cast<double>(edges.size()) > holdCap * static_cast<double>(degC[u]))
            throw InputError("make_instance: holdings cap violated at node " + std::to_string(u));
    }
    inst.holdings = std::move(holdings);
    return inst;
}

EdgeList instance_eprime(const ListingInstance& inst) {
    EdgeList all;
    for (const auto& [u, edges] : inst.holdings)
        all.insert(all.end(), edges.begin(), edges.end());
    return sorted_unique(std::move(all));
}

SparseLister::SparseLister(ListingInstance inst, const Config& cfg, RoundLedger& ledger,
                           std::uint64_t seed, std::string cluster_key)
    : inst_(std::move(inst)), cfg_(cfg), ledger_(ledger), seed_(seed),
      key_(std::move(cluster_key)) {
    EdgeList real;
    for (const auto& e : instance_eprime(inst_))
        if (e.first < inst_.n && e.second < inst_.n) real.push_back(e);
    mprime_real_ = static_cast<long long>(real.size());
    cg_ = Graph(inst_.n, inst_.ec);
}

FallbackMode SparseLister::precheck_and_fallbacks() {
    const long long k = static_cast<long long>(inst_.members.size());
    const long long m = static_cast<long long>(inst_.ec.size());
    const long long mp = static_cast<long long>(instance_eprime(inst_).size());

    if (static_cast<double>(k) < Config::frac_threshold(inst_.n, inst_.p))
        return FallbackMode::SmallK;

    if (mp >= m) return FallbackMode::Normal;

    // pad E' with dummy edges on fresh virtual IDs; deal them to members
    // proportionally to cluster degree so the holding caps keep holding
    long long need = m - mp;
    std::vector<int> wheel;
    for (int v : inst_.members) {
        const int d = cg_.degree(v);
        for (int i = 0; i < d; ++i) wheel.push_back(v);
    }
    if (wheel.empty()) wheel = inst_.members;
    int next = inst_.n;
    // skip any virtual ids already present
    for (const auto& [u, edges] : inst_.holdings)
        for (const auto& [x, y] : edges) next = std::max({next, x + 1, y + 1});
    for (long long i = 0; i < need; ++i) {
        const int holder = wheel[static_cast<std::size_t>(i % wheel.size())];
        inst_.holdings[holder].push_back({next, next + 1});
        next += 2;
    }
    ledger_.charge("sl.fallback", 0);
    return FallbackMode::Padded;
}

SparseLister::Classes SparseLister::compute_classes_and_helpers() {
    const long long k = static_cast<long long>(inst_.members.size());
    const long long m = static_cast<long long>(inst_.ec.size());
    if (k < 2 || m < 1)
        throw InputError("compute_classes_and_helpers: need k >= 2 and m >= 1");

    // delta = 2^e with 2^e <= 2m/k < 2^{e+1}
    int e = 0;
    while ((static_cast<__int128>(k) << (e + 1)) <= 2 * static_cast<__int128>(m) &&
           e < 62)
        ++e;
    while (e > -62 && (e >= 0 ? (static_cast<__int128>(k) << e) > 2 * static_cast<__int128>(m)
                              : static_cast<__int128>(k) > (2 * static_cast<__int128>(m)) << (-e)))
        --e;

    Classes cl;
    cl.delta_exp = e;
    Rational sumKvCprime(0);
    for (int v : inst_.members) {
        const int d = cg_.degree(v);
        const Rational kv = e >= 0 ? Rational(d, std::int64_t(1) << e)
                                   : Rational(static_cast<std::int64_t>(d) << (-e));
        cl.kv[v] = kv;
        int c = 0;
        if (!(kv < Rational(1, 2))) {
            c = 1;
            // class i has kv in [2^{i-2}, 2^{i-1})
            while (c < 62 && !(kv < (c - 1 >= 0 ? Rational(std::int64_t(1) << (c - 1))
                                                : Rational(1, 2))))
                ++c;
        }
        cl.cls[v] = c;
        if (c >= 1) {
            cl.cprime.push_back(v);
            sumKvCprime = sumKvCprime + kv;
        }
    }
    if (sumKvCprime + sumKvCprime < Rational(k))
        throw InvariantFailure("class arithmetic: sum of 2k_v over C' fell below k");
    if (cl.cprime.empty())
        throw InvariantFailure("class arithmetic: C' is empty on a non-trivial cluster");

    // helpers: fill C' capacity 2^{i+1} greedily in ID order
    std::vector<int> pool;
    for (int v : inst_.members)
        if (cl.cls[v] == 0) pool.push_back(v);
    std::size_t at = 0;
    for (int v : cl.cprime) {
        cl.owner[v] = v;
        const long long cap = std::int64_t(1) << (cl.cls[v] + 1);
        for (long long i = 0; i < cap && at < pool.size(); ++i) cl.owner[pool[at++]] = v;
    }
    if (at < pool.size())
        throw InvariantFailure("class arithmetic: helper capacity exhausted");

    // absorb helper data into owners, charged as a routed transfer
    std::map<int, long long> sent, recv;
    std::map<int, long long> barInc;
    for (const auto& [u, v] : inst_.ebar) ++barInc[cl.kv.count(u) ? u : v];
    for (int u : pool) {
        const int dst = cl.owner[u];
        long long items = cg_.degree(u) + barInc[u];
        auto it = inst_.holdings.find(u);
        if (it != inst_.holdings.end()) items += static_cast<long long>(it->second.size());
        if (items == 0) continue;
        sent[u] += items;
        recv[dst] += items;
        if (it != inst_.holdings.end()) {
            auto& dstHold = inst_.holdings[dst];
            dstHold.insert(dstHold.end(), it->second.begin(), it->second.end());
            inst_.holdings.erase(u);
        }
    }
    ClusterView cluster(cg_, inst_.members, ViewMode::Induced);
    const Rational L = counts_load(cluster, sent, recv);
    if (L.to_double() > cfg_.load_cap(inst_.n, inst_.p))
        throw ProtocolViolation("sl.init: helper absorption load exceeds the configured cap");
    route_counts(cluster, sent, recv, L, ledger_, cfg_, "sl.init", key_);
    return cl;
}

SparseLister::Partitions SparseLister::build_partitions(std::uint64_t seed) {
    const long long k = static_cast<long long>(inst_.members.size());
    const long long m = static_cast<long long>(inst_.ec.size());
    const long long mp = static_cast<long long>(instance_eprime(inst_).size());
    const int n = inst_.n;
    const int p = inst_.p;

    long long b = std::llround(
        std::pow(static_cast<double>(k) * mp / std::max<long long>(m, 1), 1.0 / p));
    b = std::max<long long>(b, 2);
    long long a = std::llround(std::sqrt(static_cast<double>(k)) *
                               std::pow(static_cast<double>(b), 1.0 - p / 2.0));
    a = std::max<long long>(a, 2);
    a = std::min(a, b);

    // declared upper bounds fed to the partition precondition check, nBar = n
    const double ln = std::log(static_cast<double>(std::max(n, 2)));
    const double m1 = std::max({static_cast<double>(m), 20.0 * a * k * ln, 400.0 * a * a * ln * ln});
    const double m2 =
        std::max({static_cast<double>(mp), 20.0 * b * n * ln, 400.0 * b * b * ln * ln});
    const double m12 = std::max({static_cast<double>(inst_.ebar.size()), 20.0 * a * k * ln,
                                 20.0 * a * n * ln, 400.0 * a * a * ln * ln});

    const EdgeList eprime = instance_eprime(inst_);
    std::set<int> in(inst_.members.begin(), inst_.members.end());
    std::vector<int> outsideReal;
    for (int v = 0; v < n; ++v)
        if (!in.count(v)) outsideReal.push_back(v);
    std::set<int> virt;
    for (const auto& [x, y] : eprime) {
        if (x >= n) virt.insert(x);
        if (y >= n) virt.insert(y);
    }

    for (int attempt = 0; attempt <= 20; ++attempt) {
        const std::uint64_t s = seed + attempt;
        Partitions parts;
        parts.a = static_cast<int>(a);
        parts.b = static_cast<int>(b);
        parts.used_seed = s;
        for (int v : inst_.members)
            parts.partK[v] = static_cast<int>(
                counter_uniform(mix64(s, 0x4b, static_cast<std::uint64_t>(v)), a));
        // shared permutation cut into b nearly equal blocks
        std::vector<int> perm = outsideReal;
        auto eng = make_engine(mix64(s, 0x56));
        for (std::size_t i = perm.size(); i > 1; --i)
            std::swap(perm[i - 1], perm[bounded(eng, i)]);
        for (std::size_t idx = 0; idx < perm.size(); ++idx)
            parts.partV[perm[idx]] =
                static_cast<int>((idx * static_cast<std::size_t>(b)) / std::max<std::size_t>(perm.size(), 1));
        for (int v : virt)
            parts.partV[v] = static_cast<int>(
                counter_uniform(mix64(s, 0x57, static_cast<std::uint64_t>(v)), b));

        // pairwise edge-count bounds of the two-sided partition
        std::map<std::pair<int, int>, long long> kk, vv, kv;
        for (const auto& [u, v] : inst_.ec) {
            auto pr = std::minmax(parts.partK[u], parts.partK[v]);
            ++kk[{pr.first, pr.second}];
        }
        for (const auto& [x, y] : eprime) {
            auto pr = std::minmax(parts.partV[x], parts.partV[y]);
            ++vv[{pr.first, pr.second}];
        }
        for (const auto& [u, v] : inst_.ebar) {
            const int insideNode = in.count(u) ? u : v;
            const int outsideNode = in.count(u) ? v : u;
            ++kv[{parts.partK[insideNode], parts.partV[outsideNode]}];
        }
        long long maxKK = 0, maxVV = 0, maxKV = 0;
        for (const auto& [pr, c] : kk) maxKK = std::max(maxKK, c);
        for (const auto& [pr, c] : vv) maxVV = std::max(maxVV, c);
        for (const auto& [pr, c] : kv) maxKV = std::max(maxKV, c);
        const bool ok = static_cast<double>(maxKK) <= 24.0 * m1 / (a * a) &&
                        static_cast<double>(maxVV) <= 24.0 * m2 / (b * b) &&
                        static_cast<double>(maxKV) <= 8.0 * m12 / (a * a);
        if (!ok) continue;

        // one round for the K-part broadcast, plus the permutation
        // dissemination charge of ~sqrt(n) words over ~log n doubling steps
        const long long pi_rounds =
            static_cast<long long>(std::ceil(std::sqrt(static_cast<double>(n)))) *
            static_cast<long long>(std::ceil(Config::log2n(n)));
        ledger_.charge("sl.partition", 1 + pi_rounds);
        ledger_.record_traffic("sl.partition", 2 * m, 2 * m, 1);
        return parts;
    }
    throw StatisticalFailure("build_partitions: partition bound retries exhausted");
}

std::map<int, EdgeList> SparseLister::reshuffle_Eprime(const Classes& classes) {
    const EdgeList eprime = instance_eprime(inst_);
    const long long mp = static_cast<long long>(eprime.size());
    const long long k = static_cast<long long>(inst_.members.size());

    // current unique holder per edge: lowest-ID holder wins
    std::map<Edge, int> holder;
    for (const auto& [u, edges] : inst_.holdings)
        for (const auto& e : edges)
            if (!holder.count(e)) holder[e] = u;

    // quotas over C' proportional to k_v (largest remainder)
    Rational W(0);
    for (int v : classes.cprime) W = W + classes.kv.at(v);
    std::vector<std::pair<int, long long>> quota;
    std::vector<std::pair<Rational, int>> rem;
    long long assigned = 0;
    for (int v : classes.cprime) {
        const Rational share = Rational(mp) * classes.kv.at(v) / W;
        const long long base = share.num() >= 0 ? share.num() / share.den() : 0;
        quota.push_back({v, base});
        assigned += base;
        rem.push_back({share - Rational(base), v});
    }
    std::sort(rem.begin(), rem.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return y.first < x.first;
        return x.second < y.second;
    });
    for (std::size_t i = 0; assigned < mp && i < rem.size(); ++i) {
        for (auto& [v, q] : quota)
            if (v == rem[i].second) {
                ++q;
                ++assigned;
                break;
            }
    }
    if (assigned != mp) throw InvariantFailure("reshuffle: quota total mismatch");

    for (const auto& [v, q] : quota) {
        const std::int64_t cap =
            std::max<std::int64_t>(1, (Rational(4 * mp) * classes.kv.at(v) / Rational(k)).ceil());
        if (q > cap)
            throw InvariantFailure("reshuffle: quota for node " + std::to_string(v) +
                                   " exceeds the 4*m'*k_v/k cap");
    }

    // deal edges in canonical order; count transfers
    std::map<int, EdgeList> target;
    std::map<int, long long> sent, recv;
    std::size_t qi = 0;
    long long left = quota.empty() ? 0 : quota[0].second;
    for (const auto& [e, h] : holder) {
        while (qi < quota.size() && left == 0) {
            ++qi;
            left = qi < quota.size() ? quota[qi].second : 0;
        }
        if (qi >= quota.size()) throw InvariantFailure("reshuffle: ran out of quota");
        const int dst = quota[qi].first;
        --left;
        target[dst].push_back(e);
        if (dst != h) {
            ++sent[h];
            ++recv[dst];
        }
    }

    ClusterView cluster(cg_, inst_.members, ViewMode::Induced);
    const Rational L = counts_load(cluster, sent, recv);
    if (L.to_double() > cfg_.load_cap(inst_.n, inst_.p))
        throw ProtocolViolation("sl.reshuffle: load exceeds the configured cap");
    route_counts(cluster, sent, recv, L, ledger_, cfg_, "sl.reshuffle", key_);

    for (auto& [v, edges] : target) edges = sorted_unique(std::move(edges));
    inst_.holdings = target;
    return target;
}

namespace {

void multisets(int count, int len, std::vector<int>& cur, std::vector<std::vector<int>>& out,
               int start) {
    if (static_cast<int>(cur.size()) == len) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < count; ++i) {
        cur.push_back(i);
        multisets(count, len, cur, out, i);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> all_multisets(int count, int len) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    if (len == 0) {
        out.push_back({});
        return out;
    }
    multisets(count, len, cur, out, 0);
    return out;
}

} // namespace

SparseLister::TupleAssignment SparseLister::assign_tuples(int pprime, const Classes& classes,
                                                          const Partitions& parts) const {
    if (pprime < 2 || pprime > inst_.p)
        throw InputError("assign_tuples: need 2 <= p' <= p");
    const auto mks = all_multisets(parts.a, pprime);
    const auto mvs = all_multisets(parts.b, inst_.p - pprime);
    const long long total = static_cast<long long>(mks.size()) * mvs.size();

    long long capSum = 0;
    for (int v : classes.cprime) capSum += std::int64_t(1) << classes.cls.at(v);
    if (capSum <= 0) throw InvariantFailure("assign_tuples: zero capacity");
    const long long scale = (total + capSum - 1) / capSum;

    TupleAssignment out;
    std::size_t oi = 0;
    long long left = (std::int64_t(1) << classes.cls.at(classes.cprime[0])) * scale;
    for (const auto& mk : mks) {
        for (const auto& mv : mvs) {
            while (left == 0) {
                ++oi;
                if (oi >= classes.cprime.size())
                    throw InvariantFailure("assign_tuples: owners exhausted");
                left = (std::int64_t(1) << classes.cls.at(classes.cprime[oi])) * scale;
            }
            out[classes.cprime[oi]].push_back({mk, mv});
            --left;
        }
    }

    // each owner stays within 4*k_v tuples per capacity scale unit
    for (const auto& [v, tuples] : out) {
        const Rational cap = Rational(4) * classes.kv.at(v) * Rational(scale);
        if (Rational(static_cast<std::int64_t>(tuples.size())) > cap)
            throw InvariantFailure("assign_tuples: owner " + std::to_string(v) +
                                   " holds more than 4*k_v*scale tuples");
    }
    return out;
}

CliqueSet SparseLister::list_for_pprime(int pprime, const Classes& classes,
                                        const Partitions& parts) {
    const int p = inst_.p;
    const int q = p - pprime;
    const TupleAssignment tuples = assign_tuples(pprime, classes, parts);
    std::set<int> in(inst_.members.begin(), inst_.members.end());

    using Pair = std::pair<int, int>;
    auto norm = [](int x, int y) { return x <= y ? Pair{x, y} : Pair{y, x}; };

    // per-owner distinct needed part pairs
    struct Needs {
        std::set<Pair> kk, vv, kv;
    };
    std::map<int, Needs> needs;
    for (const auto& [owner, ts] : tuples) {
        Needs& nd = needs[owner];
        for (const auto& [mk, mv] : ts) {
            for (std::size_t i = 0; i < mk.size(); ++i)
                for (std::size_t j = i + 1; j < mk.size(); ++j) nd.kk.insert(norm(mk[i], mk[j]));
            for (std::size_t i = 0; i < mk.size(); ++i) nd.kk.insert({mk[i], mk[i]});
            for (std::size_t i = 0; i < mv.size(); ++i)
                for (std::size_t j = i + 1; j < mv.size(); ++j) nd.vv.insert(norm(mv[i], mv[j]));
            for (std::size_t i = 0; i < mv.size(); ++i) nd.vv.insert({mv[i], mv[i]});
            for (int kp : mk)
                for (int vp : mv) nd.kv.insert({kp, vp});
        }
    }

    // buckets by part pair
    std::map<Pair, EdgeList> bkk, bvv, bkv;
    for (const auto& [u, v] : inst_.ec) bkk[norm(parts.partK.at(u), parts.partK.at(v))].push_back({u, v});
    const EdgeList eprime = instance_eprime(inst_);
    for (const auto& [x, y] : eprime) bvv[norm(parts.partV.at(x), parts.partV.at(y))].push_back({x, y});
    for (const auto& [u, v] : inst_.ebar) {
        const int insideNode = in.count(u) ? u : v;
        const int outsideNode = in.count(u) ? v : u;
        bkv[{parts.partK.at(insideNode), parts.partV.at(outsideNode)}].push_back({u, v});
    }

    // traffic: receivers get their needed buckets, senders pay per needy owner
    std::map<Pair, long long> cntKK, cntVV, cntKV;
    std::map<int, long long> sent, recv;
    for (const auto& [owner, nd] : needs) {
        long long r = 0;
        for (const auto& pr : nd.kk)
            if (bkk.count(pr)) r += static_cast<long long>(bkk[pr].size());
        for (const auto& pr : nd.vv)
            if (bvv.count(pr)) r += static_cast<long long>(bvv[pr].size());
        for (const auto& pr : nd.kv)
            if (bkv.count(pr)) r += static_cast<long long>(bkv[pr].size());
        recv[owner] += r;
        for (const auto& pr : nd.kk) ++cntKK[pr];
        for (const auto& pr : nd.vv) ++cntVV[pr];
        for (const auto& pr : nd.kv) ++cntKV[pr];
    }
    std::map<Edge, int> holder;
    for (const auto& [u, edges] : inst_.holdings)
        for (const auto& e : edges)
            if (!holder.count(e)) holder[e] = u;
    auto rep = [&](int v) { return classes.owner.at(v); };
    for (const auto& [pr, edges] : bkk) {
        const long long c = cntKK.count(pr) ? cntKK[pr] : 0;
        if (c > 0)
            for (const auto& [u, v] : edges) sent[rep(std::min(u, v))] += c;
    }
    for (const auto& [pr, edges] : bkv) {
        const long long c = cntKV.count(pr) ? cntKV[pr] : 0;
        if (c > 0)
            for (const auto& [u, v] : edges) sent[rep(in.count(u) ? u : v)] += c;
    }
    for (const auto& [pr, edges] : bvv) {
        const long long c = cntVV.count(pr) ? cntVV[pr] : 0;
        if (c > 0)
            for (const auto& e : edges) sent[rep(holder.at(e))] += c;
    }

    ClusterView cluster(cg_, inst_.members, ViewMode::Induced);
    const Rational L = counts_load(cluster, sent, recv);
    if (L.to_double() > cfg_.load_cap(inst_.n, p))
        throw ProtocolViolation("sl.list: p'=" + std::to_string(pprime) +
                                " load exceeds the configured cap");
    route_counts(cluster, sent, recv, L, ledger_, cfg_, "sl.list.p'=" + std::to_string(pprime),
                 key_);

    // owner-local enumeration over received edges
    CliqueSet out;
    for (const auto& [owner, ts] : tuples) {
        const Needs& nd = needs[owner];
        std::set<Edge> secL, sbarL, sprL;
        std::set<int> insideNodes, outsideNodes;
        for (const auto& pr : nd.kk)
            if (bkk.count(pr))
                for (const auto& [u, v] : bkk[pr]) {
                    secL.insert(make_edge(u, v));
                    insideNodes.insert(u);
                    insideNodes.insert(v);
                }
        for (const auto& pr : nd.kv)
            if (bkv.count(pr))
                for (const auto& [u, v] : bkv[pr]) {
                    sbarL.insert(make_edge(u, v));
                    outsideNodes.insert(in.count(u) ? v : u);
                }
        for (const auto& pr : nd.vv)
            if (bvv.count(pr))
                for (const auto& e : bvv[pr]) sprL.insert(e);
        if (q > 0 && sbarL.empty()) continue;

        std::set<Tuple> owned(ts.begin(), ts.end());
        std::map<int, std::vector<int>> adjIn; // ec adjacency among received
        for (const auto& [u, v] : secL) {
            adjIn[u].push_back(v);
            adjIn[v].push_back(u);
        }
        for (auto& [v, a] : adjIn) std::sort(a.begin(), a.end());
        std::map<int, std::vector<int>> adjBar; // member -> outside
        for (const auto& [u, v] : sbarL) {
            const int im = in.count(u) ? u : v;
            const int om = in.count(u) ? v : u;
            adjBar[im].push_back(om);
        }
        for (auto& [v, a] : adjBar) std::sort(a.begin(), a.end());

        std::vector<int> ipick, opick;
        auto hasEdge = [](const std::set<Edge>& s, int x, int y) {
            return s.count(make_edge(x, y)) > 0;
        };
        std::function<void(const std::vector<int>&, std::size_t)> chooseOut =
            [&](const std::vector<int>& cand, std::size_t start) {
                if (static_cast<int>(opick.size()) == q) {
                    std::vector<int> mk, mv;
                    for (int u : ipick) mk.push_back(parts.partK.at(u));
                    for (int w : opick) mv.push_back(parts.partV.at(w));
                    std::sort(mk.begin(), mk.end());
                    std::sort(mv.begin(), mv.end());
                    if (!owned.count({mk, mv})) return;
                    std::vector<int> tup = ipick;
                    tup.insert(tup.end(), opick.begin(), opick.end());
                    std::sort(tup.begin(), tup.end());
                    out.insert(tup);
                    return;
                }
                for (std::size_t i = start; i < cand.size(); ++i) {
                    const int w = cand[i];
                    bool ok = true;
                    for (int x : opick)
                        if (!hasEdge(sprL, x, w)) { ok = false; break; }
                    if (!ok) continue;
                    opick.push_back(w);
                    chooseOut(cand, i + 1);
                    opick.pop_back();
                }
            };
        std::function<void(const std::vector<int>&, std::size_t)> chooseIn =
            [&](const std::vector<int>& cand, std::size_t start) {
                if (static_cast<int>(ipick.size()) == pprime) {
                    // candidates outside: common Ebar neighbors of the inside pick
                    std::vector<int> ocand = adjBar.count(ipick[0]) ? adjBar[ipick[0]]
                                                                    : std::vector<int>{};
                    for (int idx = 1; idx < pprime && !ocand.empty(); ++idx) {
                        std::vector<int> nxt;
                        const auto it = adjBar.find(ipick[idx]);
                        if (it == adjBar.end()) { ocand.clear(); break; }
                        std::set_intersection(ocand.begin(), ocand.end(), it->second.begin(),
                                              it->second.end(), std::back_inserter(nxt));
                        ocand = std::move(nxt);
                    }
                    if (q == 0 || !ocand.empty()) chooseOut(ocand, 0);
                    return;
                }
                for (std::size_t i = start; i < cand.size(); ++i) {
                    const int v = cand[i];
                    bool ok = true;
                    for (int u : ipick)
                        if (!hasEdge(secL, u, v)) { ok = false; break; }
                    if (!ok) continue;
                    ipick.push_back(v);
                    chooseIn(cand, i + 1);
                    ipick.pop_back();
                }
            };
        std::vector<int> universe(insideNodes.begin(), insideNodes.end());
        chooseIn(universe, 0);
    }
    return out;
}

CliqueSet SparseLister::small_k_listing() {
    const EdgeList eprime = instance_eprime(inst_);
    std::set<int> in(inst_.members.begin(), inst_.members.end());
    std::set<Edge> sec(inst_.ec.begin(), inst_.ec.end()), sbar, spr;
    for (const auto& [u, v] : inst_.ebar) sbar.insert(make_edge(u, v));
    for (const auto& e : eprime) spr.insert(e);

    std::map<int, std::set<int>> nbr; // over ec + ebar
    for (const auto& [u, v] : inst_.ec) {
        nbr[u].insert(v);
        nbr[v].insert(u);
    }
    for (const auto& [u, v] : inst_.ebar) {
        nbr[u].insert(v);
        nbr[v].insert(u);
    }

    auto compat = [&](int x, int y) {
        const bool ix = in.count(x) > 0, iy = in.count(y) > 0;
        if (ix && iy) return sec.count(make_edge(x, y)) > 0;
        if (!ix && !iy) return spr.count(make_edge(x, y)) > 0;
        return sbar.count(make_edge(x, y)) > 0;
    };

    CliqueSet out;
    long long maxT = 0, traffic = 0;
    for (int v : inst_.members) {
        const auto itn = nbr.find(v);
        if (itn == nbr.end()) continue;
        std::vector<int> T(itn->second.begin(), itn->second.end());
        maxT = std::max<long long>(maxT, static_cast<long long>(T.size()));
        traffic += static_cast<long long>(T.size()) * static_cast<long long>(T.size());

        std::vector<int> pick{v};
        std::function<void(std::size_t)> rec = [&](std::size_t start) {
            if (static_cast<int>(pick.size()) == inst_.p) {
                int insideCount = 0;
                for (int x : pick) insideCount += in.count(x) > 0;
                if (insideCount < 2) return;
                std::vector<int> tup = pick;
                std::sort(tup.begin(), tup.end());
                out.insert(tup);
                return;
            }
            for (std::size_t i = start; i < T.size(); ++i) {
                const int w = T[i];
                bool ok = true;
                for (int x : pick)
                    if (!compat(x, w)) { ok = false; break; }
                if (!ok) continue;
                pick.push_back(w);
                rec(i + 1);
                pick.pop_back();
            }
        };
        rec(0);
    }
    ledger_.charge("sl.fallback", 2 * maxT);
    ledger_.record_traffic("sl.fallback", traffic, traffic, maxT > 0 ? 1 : 0);
    return out;
}

bool SparseLister::check_average(AvgVariant variant, std::string& detail) const {
    const double n = inst_.n;
    const double mpReal = static_cast<double>(mprime_real_);
    double avg = 0;
    if (variant == AvgVariant::Full) {
        const double k = static_cast<double>(inst_.members.size());
        avg = k > 0 ? static_cast<double>(inst_.ec.size()) / k : 0;
        detail = "full average " + std::to_string(avg);
    } else {
        std::set<int> touched;
        for (const auto& [u, v] : inst_.ebar) {
            if (std::binary_search(inst_.members.begin(), inst_.members.end(), u))
                touched.insert(u);
            if (std::binary_search(inst_.members.begin(), inst_.members.end(), v))
                touched.insert(v);
        }
        if (touched.empty()) {
            detail = "restricted average: no boundary-incident nodes";
            return true;
        }
        long long degSum = 0;
        for (int v : touched) degSum += cg_.degree(v);
        avg = static_cast<double>(degSum) / static_cast<double>(touched.size());
        detail = "restricted average " + std::to_string(avg);
    }
    const bool okRoot = avg >= std::sqrt(n) / cfg_.gamma_prime;
    const bool okPrime = avg > mpReal / (cfg_.gamma * n);
    detail += okRoot ? " >= " : " < ";
    detail += "sqrt(n)/gamma'; vs |E'|/(gamma n)=" + std::to_string(mpReal / (cfg_.gamma * n));
    return okRoot && okPrime;
}

SparseOutcome SparseLister::list_all(AvgVariant variant) {
    SparseOutcome outcome;
    outcome.avg_ok = check_average(variant, outcome.avg_detail);
    outcome.mode = precheck_and_fallbacks();
    if (outcome.mode == FallbackMode::SmallK) {
        outcome.cliques = small_k_listing();
        return outcome;
    }
    const long long k = static_cast<long long>(inst_.members.size());
    const long long m = static_cast<long long>(inst_.ec.size());
    if (k < 2 || m < 1) return outcome; // no qualifying tuple can exist

    const Classes classes = compute_classes_and_helpers();
    const Partitions parts = build_partitions(mix64(seed_, 0x70));
    reshuffle_Eprime(classes);
    for (int pprime = 2; pprime <= inst_.p; ++pprime) {
        const CliqueSet found = list_for_pprime(pprime, classes, parts);
        outcome.cliques.insert(found.begin(), found.end());
    }
    return outcome;
}

} // namespace congest
