#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "spinchain/analysis.hpp"
#include "spinchain/chain.hpp"
#include "spinchain/scheduler.hpp"

namespace spinchain {

// {"n": 5, "couplings_hz": [1.0, 2.0, 1.0, 0.5]}
ChainSpec chain_from_json(const nlohmann::json& j);
ChainSpec load_chain(const std::string& path);
nlohmann::json to_json(const ChainSpec& chain);

nlohmann::json to_json(const TransferReport& r);
nlohmann::json to_json(const ExchangeReport& r);
nlohmann::json to_json(const std::vector<Snapshot>& snapshots);
nlohmann::json to_json(const std::vector<TimingRow>& rows, double j_hz);

// Time breakdown, flat list of flip events with absolute times, and a
// per-step audit of accumulated coupling times.
nlohmann::json schedule_to_json(const UnequalSoliton& built, const ChainSpec& chain);

nlohmann::json complex_json(Complex z);

}  // namespace spinchain
