#ifndef POLLOPT_STATIC_POLICIES_HPP
#define POLLOPT_STATIC_POLICIES_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "pollopt/params.hpp"

namespace pollopt {

/// Steady-state mean queue lengths under a no-information split,
/// conditional on the server position: L_ij = E[N_i | server busy at
/// queue j].
struct NoInfoMeans {
    double L11;
    double L12;
    double L21;
    double L22;
};

struct NoInfoCost {
    double C;        // expected steady-state cost of one customer
    double C1;       // expected cost of joining queue 1
    double C2;       // expected cost of joining queue 2
    double dC_dp1;   // derivative of C with respect to p1
};

/// Steady-state mean queue lengths under a partial-information split
/// (unconditional time averages of the busy- and idle-queue lengths).
struct PartialInfoMeans {
    double L_B;
    double L_I;
};

struct PartialInfoCost {
    double C;
    double C_B;  // expected cost of joining the busy queue
    double C_I;  // expected cost of joining the idle queue
};

struct PolicySet {
    bool whole_interval = false;   // true: every p in [0,1]
    std::vector<double> points;    // finite set otherwise

    static PolicySet interval();
    static PolicySet of(std::vector<double> pts);
    bool contains(double p) const;
};

/// Outcome of one of the static-regime classifications. `policies` is the
/// optimal (social) or equilibrium (nash) set; `socially_optimal` is the
/// subset of it that is also socially optimal; `mismatch` marks the regime
/// where the equilibrium set and the social-optimum set are disjoint.
struct PolicyClassification {
    std::string regime;
    PolicySet policies;
    PolicySet socially_optimal;
    bool coincides_with_social = false;
    bool mismatch = false;
};

void to_json(nlohmann::json& j, const PolicySet& s);
void to_json(nlohmann::json& j, const PolicyClassification& c);

// ---- no information ----

NoInfoMeans no_info_means(const ModelParams& m, const SplitProbability& split);
NoInfoCost no_info_cost(const ModelParams& m, const SplitProbability& split);

/// C1 - C2 in closed form (same sign information as dC_dp1 but derived
/// from the single-deviator comparison).
double no_info_cost_gap(const ModelParams& m, const SplitProbability& split);

PolicyClassification classify_no_info_social(const ModelParams& m);
PolicyClassification classify_no_info_nash(const ModelParams& m);

// ---- partial information ----

PartialInfoMeans partial_info_means(const ModelParams& m, const SplitProbability& split);
PartialInfoCost partial_info_cost(const ModelParams& m, const SplitProbability& split);

/// C_B - C_I; the sign does not depend on the split and equals the sign of
/// c(1-rho) - d.
double partial_info_cost_diff(const ModelParams& m, const SplitProbability& split);

PolicyClassification classify_partial_social(const ModelParams& m);
PolicyClassification classify_partial_nash(const ModelParams& m);

}  // namespace pollopt

#endif
