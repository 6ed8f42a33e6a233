#ifndef POLLOPT_SIMULATE_HPP
#define POLLOPT_SIMULATE_HPP

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "pollopt/params.hpp"
#include "pollopt/tables.hpp"

namespace pollopt {

/// Join queue 1 with probability p (queue identity, not server position).
struct NoInfoSplit {
    double p;
};

/// Join the busy queue with probability p.
struct PartialSplit {
    double p;
};

using SimPolicy = std::variant<NoInfoSplit, PartialSplit, DecisionTable, SwitchingCurve>;

std::string policy_label(const SimPolicy& p);
bool is_no_info(const SimPolicy& p);

struct SimConfig {
    ModelParams params;
    SimPolicy policy;
    long num_cycles = 100000;   // measured regeneration cycles
    std::uint64_t seed = 1;
    long warmup_cycles = 1000;
    long state_cap = 1000000;   // defensive; exceeding it throws
};

struct Estimate {
    double value = std::numeric_limits<double>::quiet_NaN();
    double se = std::numeric_limits<double>::quiet_NaN();
    long observation_cycles = 0;
};

/// Regenerative estimates over independent busy cycles. Queue-conditional
/// means (L11, L12, L21, L22) are only produced for no-information splits,
/// where queue identity is meaningful; conditional entries observed in
/// fewer than 100 cycles are reported as NaN with their observation count.
struct SimReport {
    std::string policy;
    long cycles = 0;
    Estimate cycle_length;                 // mean busy-cycle length
    Estimate avg_cost_rate;                // time average of c X + d Y
    Estimate busy_mean;                    // L_B: time average of X
    Estimate idle_mean;                    // L_I: time average of Y
    Estimate z_mean;                       // time average of X + Y
    std::optional<std::array<Estimate, 4>> queue_means;  // L11, L12, L21, L22
    double wall_seconds = 0.0;             // excluded from to_json
};

void to_json(nlohmann::json& j, const Estimate& e);
void to_json(nlohmann::json& j, const SimReport& r);

SimReport simulate(const SimConfig& config);

/// Per-cycle cost integral and duration, for paired comparisons.
struct CycleSamples {
    std::vector<double> cost;
    std::vector<double> duration;
};

SimReport simulate(const SimConfig& config, CycleSamples* samples);

/// Throws InvalidPolicyForInfoLevel unless the report carries the
/// queue-conditional estimates.
const std::array<Estimate, 4>& queue_conditional_means(const SimReport& r);

struct PolicyComparison {
    std::vector<SimReport> reports;  // input order
    struct PairDiff {
        int a;
        int b;
        double diff;      // avg cost a minus avg cost b
        double se;
        bool resolved;    // |diff| >= 2 se
    };
    std::vector<PairDiff> pairwise;
    std::vector<int> ranking;        // indices ordered by estimated cost
};

void to_json(nlohmann::json& j, const PolicyComparison& c);

/// Runs every policy on the same arrival/service random-number streams
/// (the total-count process and the cycle boundaries then coincide across
/// policies) and reports paired average-cost differences.
PolicyComparison compare_policies(const ModelParams& m,
                                  const std::vector<SimPolicy>& policies,
                                  long num_cycles, std::uint64_t seed,
                                  long warmup_cycles = 1000);

}  // namespace pollopt

#endif
