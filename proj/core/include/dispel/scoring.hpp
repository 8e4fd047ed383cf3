// Severity scoring and ranking.
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "dispel/policy.hpp"
#include "dispel/soc_config.hpp"

namespace dispel {

struct ScoreInputs {
    IpCategory ip_category = IpCategory::Other;
    uint32_t bits_protected = 1;            // >= 1
    std::set<AttackType> attack_types;      // non-empty
    PolicyLevel policy_level = PolicyLevel::Bus;
};

// score = bits * |attacks| * ip_weight * level_weight / divisor
struct ScoreWeights {
    std::map<IpCategory, double> ip_weights = {
        {IpCategory::Crypto, 5.0},      {IpCategory::Hashing, 4.0},
        {IpCategory::Memory, 3.0},      {IpCategory::Dsp, 2.0},
        {IpCategory::Accelerator, 2.0}, {IpCategory::Peripheral, 1.0},
        {IpCategory::Other, 1.0},
    };
    double bus_level_weight = 1.0;
    double ip_level_weight = 0.5;
    double divisor = 100.0;
};

double score_policy(const ScoreInputs& inputs, const ScoreWeights& weights = {});

// Indices into `scores`, descending by score; ties keep file order (stable).
std::vector<size_t> rank_policies(const std::vector<double>& scores);

} // namespace dispel
