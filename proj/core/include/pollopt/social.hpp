#ifndef POLLOPT_SOCIAL_HPP
#define POLLOPT_SOCIAL_HPP

#include <functional>
#include <string>
#include <vector>

#include "pollopt/params.hpp"
#include "pollopt/tables.hpp"

namespace pollopt {

struct SocialOptions {
    int i_max = 64;
    int j_max = 64;               // must be <= i_max (the v(1,j) -> v(j,0)
                                  // coupling maps columns onto rows)
    double tol = 1e-9;            // estimated distance to the limit on the window
    long max_sweeps = 200000;
    double window_ratio = 0.5;
    int threads = 1;
};

/// Converged total-cost values of the normalized (lambda+mu = 1, c = 1,
/// d = 0) busy-cycle dynamic program, with the induced policy.
///
/// Grid closure: at i = i_max the Busy action is unavailable (forced Idle);
/// at j = j_max the Idle action is unavailable (forced Busy); at the corner
/// the arrival is dropped (self transition).
class ValueTable {
  public:
    ValueTable(int i_max, int j_max);

    int i_max() const { return i_max_; }
    int j_max() const { return j_max_; }
    double v(int i, int j) const { return v_[index(i, j)]; }
    double& v_ref(int i, int j) { return v_[index(i, j)]; }

    DecisionTable policy;                  // rows 1..i_max (boundary rows forced)
    long sweeps = 0;
    double residual = 0.0;                 // last window sup increment
    double tail_estimate = 0.0;
    std::vector<double> residual_history;

  private:
    std::size_t index(int i, int j) const;
    int i_max_;
    int j_max_;
    std::vector<double> v_;
};

/// Value iteration for the normalized DP. The c and d of `m` play no role
/// here (they are normalized away); social_solve handles the c <= d
/// short-circuits.
ValueTable value_iteration(const ModelParams& m, const SocialOptions& opt = {});

/// Same solver entered directly with a normalized arrival probability
/// lambda_n in [0, 1) (mu_n = 1 - lambda_n). Exposed so the zero-arrival
/// drain recursion can be exercised without a ModelParams (which requires
/// lambda > 0).
ValueTable value_iteration_normalized(double lambda_n, const SocialOptions& opt);

/// Slope of the conjectured linear switching curve g(i) ~ alpha * i;
/// alpha = 2 rho / (-1 + rho + sqrt((1-rho)(1+3 rho))) > 1.
double alpha_coefficient(double rho);
double alpha_coefficient(const ModelParams& m);

struct SocialResult {
    ValueTable value;
    SwitchingCurve g;
    double alpha = 0.0;
    double linear_deviation = 0.0;  // max over window i of |g(i) - alpha*i|
    std::string regime;             // "c>d", "c=d", or "c<d"
    bool used_dp = true;            // false for the c <= d short-circuits
    int window_i = 0;
    int window_j = 0;
};

/// Socially optimal complete-information policy. For c > d runs the
/// normalized DP; d >= c short-circuits to the all-Busy policy (for c = d
/// every policy is optimal and all-Busy is returned canonically).
SocialResult social_solve(const ModelParams& m, const SocialOptions& opt = {});

struct EvalOptions {
    int i_max = 64;
    int j_max = 64;
    double tol = 1e-12;
    long max_iters = 5000000;
};

/// Long-run average cost per unit time of a fixed complete-information
/// policy, in original units, via the renewal-reward reduction: the
/// expected busy-cycle cost from (1,0) times lambda(mu-lambda)/mu.
double average_cost_of_policy(const ModelParams& m,
                              const std::function<Action(int, int)>& policy,
                              double c, double d, const EvalOptions& opt = {});
double average_cost_of_policy(const ModelParams& m, const DecisionTable& policy,
                              double c, double d, const EvalOptions& opt = {});
double average_cost_of_policy(const ModelParams& m, const SwitchingCurve& policy,
                              double c, double d, const EvalOptions& opt = {});

}  // namespace pollopt

#endif
