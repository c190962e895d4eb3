#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "congest/config.hpp"
#include "congest/graph.hpp"
#include "congest/ledger.hpp"
#include "congest/oracle.hpp"
#include "congest/rational.hpp"

namespace congest {

// One sparsity-aware listing instance: a low-mixing-time cluster C plus cross
// edges Ebar and outside-outside edges E' distributed over C as holdings.
// Virtual node IDs >= n are allowed in holdings (dummy padding).
struct ListingInstance {
    int n = 0;                 // network size; also the virtual-ID base
    std::vector<int> members;  // V_C, sorted unique
    EdgeList ec;               // E_C
    EdgeList ebar;             // subset of E(V_C, V \ V_C)
    std::map<int, EdgeList> holdings;
    int p = 4;
};

// Validates structure and the per-node incidence/holding caps.
ListingInstance make_instance(int n, std::vector<int> members, EdgeList ec, EdgeList ebar,
                              std::map<int, EdgeList> holdings, int p, const Config& cfg);

EdgeList instance_eprime(const ListingInstance& inst);

enum class FallbackMode { Normal, Padded, SmallK };
enum class AvgVariant { Full, Restricted };

struct SparseOutcome {
    CliqueSet cliques;
    FallbackMode mode = FallbackMode::Normal;
    bool avg_ok = true;
    std::string avg_detail;
};

class SparseLister {
public:
    SparseLister(ListingInstance inst, const Config& cfg, RoundLedger& ledger,
                 std::uint64_t seed, std::string cluster_key);

    struct Classes {
        int delta_exp = 0;            // delta = 2^delta_exp (may be negative)
        std::map<int, Rational> kv;   // per member
        std::map<int, int> cls;       // vertex class, 0 = simulated
        std::vector<int> cprime;      // class >= 1, sorted
        std::map<int, int> owner;     // member -> its C' representative
    };
    struct Partitions {
        int a = 0, b = 0;
        std::map<int, int> partK; // member -> [0,a)
        std::map<int, int> partV; // outside/virtual id -> [0,b)
        std::uint64_t used_seed = 0;
    };
    // (p'-part multiset over K, (p-p')-part multiset over V) per owner
    using Tuple = std::pair<std::vector<int>, std::vector<int>>;
    using TupleAssignment = std::map<int, std::vector<Tuple>>;

    FallbackMode precheck_and_fallbacks();
    Classes compute_classes_and_helpers();
    Partitions build_partitions(std::uint64_t seed);
    std::map<int, EdgeList> reshuffle_Eprime(const Classes& classes);
    TupleAssignment assign_tuples(int pprime, const Classes& classes,
                                  const Partitions& parts) const;
    CliqueSet list_for_pprime(int pprime, const Classes& classes, const Partitions& parts);
    SparseOutcome list_all(AvgVariant variant);

    const ListingInstance& instance() const { return inst_; }

private:
    CliqueSet small_k_listing();
    bool check_average(AvgVariant variant, std::string& detail) const;

    ListingInstance inst_;
    Config cfg_;
    RoundLedger& ledger_;
    std::uint64_t seed_;
    std::string key_;
    Graph cg_;          // n-node graph holding only E_C (cluster communication)
    long long mprime_real_ = 0;
};

} // namespace congest
