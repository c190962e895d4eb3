#include "congest/ledger.hpp"

#include <algorithm>
#include <sstream>

#include "congest/errors.hpp"

namespace congest {

void RoundLedger::charge(const std::string& label, long long rounds) {
    if (rounds < 0) throw InputError("RoundLedger::charge: negative round count");
    phases_[label].rounds += rounds;
}

void RoundLedger::record_traffic(const std::string& label, long long sent, long long received,
                                 long long edge_load) {
    auto& st = phases_[label];
    st.msgs_sent += sent;
    st.msgs_received += received;
    st.max_edge_load = std::max(st.max_edge_load, edge_load);
}

bool RoundLedger::mark_preprocessed(const std::string& key) {
    return preprocessed_.insert(key).second;
}

long long RoundLedger::total_rounds() const {
    long long t = 0;
    for (const auto& [label, st] : phases_) t += st.rounds;
    return t;
}

PhaseStats RoundLedger::phase(const std::string& label) const {
    auto it = phases_.find(label);
    return it == phases_.end() ? PhaseStats{} : it->second;
}

void RoundLedger::merge(const RoundLedger& other) {
    for (const auto& [label, st] : other.phases_) {
        auto& mine = phases_[label];
        mine.rounds += st.rounds;
        mine.msgs_sent += st.msgs_sent;
        mine.msgs_received += st.msgs_received;
        mine.max_edge_load = std::max(mine.max_edge_load, st.max_edge_load);
    }
    preprocessed_.insert(other.preprocessed_.begin(), other.preprocessed_.end());
}

std::string RoundLedger::to_csv() const {
    std::ostringstream os;
    os << "phase,rounds,msgs_sent,msgs_received,max_edge_load\n";
    for (const auto& [label, st] : phases_) {
        std::string quoted = label;
        os << '"' << quoted << "\"," << st.rounds << ',' << st.msgs_sent << ','
           << st.msgs_received << ',' << st.max_edge_load << '\n';
    }
    return os.str();
}

nlohmann::json RoundLedger::to_json() const {
    nlohmann::json per_phase = nlohmann::json::object();
    for (const auto& [label, st] : phases_) {
        per_phase[label] = {{"rounds", st.rounds},
                            {"msgs_sent", st.msgs_sent},
                            {"msgs_received", st.msgs_received},
                            {"max_edge_load", st.max_edge_load}};
    }
    return {{"total_rounds", total_rounds()}, {"phases", per_phase}};
}

} // namespace congest
