#include "congest/partition.hpp"

#include <algorithm>
#include <cmath>

#include "congest/errors.hpp"
#include "congest/rng.hpp"

namespace congest {

ConditionReport check_conditions(const PartitionSpec& spec) {
    if (spec.a < 1 || spec.b < 1 || spec.a > spec.b)
        throw InputError("check_conditions: need 1 <= a <= b");
    if (spec.nBar < 2) throw InputError("check_conditions: nBar must be >= 2");
    for (int v : spec.V1)
        if (std::find(spec.V2.begin(), spec.V2.end(), v) != spec.V2.end())
            throw InputError("check_conditions: V1 and V2 must be disjoint");

    const double ln = std::log(static_cast<double>(spec.nBar));
    const double a = spec.a, b = spec.b;
    const double s1 = static_cast<double>(spec.V1.size());
    const double s2 = static_cast<double>(spec.V2.size());

    ConditionReport rep;
    auto add = [&](const std::string& name, double lhs, double rhs) {
        const bool ok = lhs >= rhs;
        rep.items.push_back({name, lhs, rhs, ok});
        rep.all_pass = rep.all_pass && ok;
    };
    add("m1 >= 20*a*|V1|*log(nBar)", static_cast<double>(spec.m1), 20 * a * s1 * ln);
    add("m1 >= 400*a^2*log^2(nBar)", static_cast<double>(spec.m1), 400 * a * a * ln * ln);
    add("m2 >= 20*b*|V2|*log(nBar)", static_cast<double>(spec.m2), 20 * b * s2 * ln);
    add("m2 >= 400*b^2*log^2(nBar)", static_cast<double>(spec.m2), 400 * b * b * ln * ln);
    add("m12 >= 20*a*|V1|*log(nBar)", static_cast<double>(spec.m12), 20 * a * s1 * ln);
    add("m12 >= 20*a*|V2|*log(nBar)", static_cast<double>(spec.m12), 20 * a * s2 * ln);
    add("m12 >= 400*a^2*log^2(nBar)", static_cast<double>(spec.m12), 400 * a * a * ln * ln);
    return rep;
}

TwoSidedPartition sample_partition(const PartitionSpec& spec, std::uint64_t seed) {
    if (spec.a < 1 || spec.b < 1) throw InputError("sample_partition: part counts must be >= 1");
    TwoSidedPartition out;
    out.seed = seed;
    out.partsV1.assign(spec.a, {});
    out.partsV2.assign(spec.b, {});
    for (int v : spec.V1)
        out.partsV1[counter_uniform(mix64(seed, 0x51, static_cast<std::uint64_t>(v)), spec.a)]
            .push_back(v);
    for (int v : spec.V2)
        out.partsV2[counter_uniform(mix64(seed, 0x52, static_cast<std::uint64_t>(v)), spec.b)]
            .push_back(v);
    return out;
}

BoundsReport verify_bounds(const Graph& g, const PartitionSpec& spec,
                           const TwoSidedPartition& partition) {
    const int a = static_cast<int>(partition.partsV1.size());
    const int b = static_cast<int>(partition.partsV2.size());
    std::vector<int> side(g.node_count(), -1), part(g.node_count(), -1);
    for (int i = 0; i < a; ++i)
        for (int v : partition.partsV1[i]) {
            side[v] = 1;
            part[v] = i;
        }
    for (int j = 0; j < b; ++j)
        for (int v : partition.partsV2[j]) {
            side[v] = 2;
            part[v] = j;
        }

    std::vector<std::vector<long long>> c11(a, std::vector<long long>(a, 0));
    std::vector<std::vector<long long>> c22(b, std::vector<long long>(b, 0));
    std::vector<std::vector<long long>> c12(a, std::vector<long long>(b, 0));
    for (const auto& [u, v] : g.edges()) {
        if (side[u] < 0 || side[v] < 0) continue;
        if (side[u] == 1 && side[v] == 1) {
            c11[part[u]][part[v]] += 1;
            if (part[u] != part[v]) c11[part[v]][part[u]] += 1;
        } else if (side[u] == 2 && side[v] == 2) {
            c22[part[u]][part[v]] += 1;
            if (part[u] != part[v]) c22[part[v]][part[u]] += 1;
        } else {
            const int i = side[u] == 1 ? part[u] : part[v];
            const int j = side[u] == 1 ? part[v] : part[u];
            c12[i][j] += 1;
        }
    }

    BoundsReport rep;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < a; ++j) rep.max11 = std::max(rep.max11, c11[i][j]);
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < b; ++j) rep.max22 = std::max(rep.max22, c22[i][j]);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) rep.max12 = std::max(rep.max12, c12[i][j]);

    rep.bound11 = 24.0 * spec.m1 / (static_cast<double>(a) * a);
    rep.bound22 = 24.0 * spec.m2 / (static_cast<double>(b) * b);
    rep.bound12 = 8.0 * spec.m12 / (static_cast<double>(a) * a);
    rep.pass11 = rep.max11 <= rep.bound11;
    rep.pass22 = rep.max22 <= rep.bound22;
    rep.pass12 = rep.max12 <= rep.bound12;
    const double strong = static_cast<double>(spec.m12) / (static_cast<double>(a) * b);
    rep.cross_ab_ratio = strong > 0 ? rep.max12 / strong : 0.0;
    return rep;
}

} // namespace congest
