#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "congest/graph.hpp"

namespace congest {

// Two-sided random partition: V1 into a parts, V2 into b parts, with declared
// upper bounds m1, m2, m12 on |E(V1,V1)|, |E(V2,V2)|, |E(V1,V2)|.
struct PartitionSpec {
    std::vector<int> V1, V2;
    int a = 1, b = 1;
    long long m1 = 0, m2 = 0, m12 = 0;
    long long nBar = 2;
};

struct TwoSidedPartition {
    std::vector<std::vector<int>> partsV1, partsV2;
    std::uint64_t seed = 0;
};

struct Inequality {
    std::string name;
    double lhs = 0, rhs = 0;
    bool pass = false;
};

struct ConditionReport {
    std::vector<Inequality> items;
    bool all_pass = true;
};

struct BoundsReport {
    long long max11 = 0, max22 = 0, max12 = 0;
    double bound11 = 0, bound22 = 0, bound12 = 0;
    bool pass11 = true, pass22 = true, pass12 = true;
    // measured but not enforced: strongest cross-pair count vs m12/(a*b)
    double cross_ab_ratio = 0;
    bool all_pass() const { return pass11 && pass22 && pass12; }
};

// The seven precondition inequalities; log is the natural log of nBar.
ConditionReport check_conditions(const PartitionSpec& spec);

// I.i.d. uniform part choice per node, order-independent in the seed.
TwoSidedPartition sample_partition(const PartitionSpec& spec, std::uint64_t seed);

// Max pairwise edge counts vs 24*m1/a^2, 24*m2/b^2, 8*m12/a^2.
BoundsReport verify_bounds(const Graph& g, const PartitionSpec& spec,
                           const TwoSidedPartition& partition);

} // namespace congest
