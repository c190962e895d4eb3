#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>

#include <json.hpp>

namespace congest {

struct PhaseStats {
    long long rounds = 0;
    long long msgs_sent = 0;
    long long msgs_received = 0;
    long long max_edge_load = 0;
};

// Cumulative round/message accounting, broken down by phase label.
class RoundLedger {
public:
    void charge(const std::string& label, long long rounds);
    void record_traffic(const std::string& label, long long sent, long long received,
                        long long edge_load);

    // Returns true the first time a key is seen; used for one-shot
    // per-cluster preprocessing charges.
    bool mark_preprocessed(const std::string& key);

    long long total_rounds() const;
    const std::map<std::string, PhaseStats>& phases() const { return phases_; }
    PhaseStats phase(const std::string& label) const;

    void merge(const RoundLedger& other);

    std::string to_csv() const;
    nlohmann::json to_json() const;

private:
    std::map<std::string, PhaseStats> phases_;
    std::set<std::string> preprocessed_;
};

} // namespace congest
