#ifndef POLLOPT_EQUILIBRIUM_HPP
#define POLLOPT_EQUILIBRIUM_HPP

#include <string>
#include <vector>

#include "pollopt/params.hpp"
#include "pollopt/tables.hpp"

namespace pollopt {

/// Finite-horizon state of the individually-optimal recursion: tau(i,j) is
/// the expected time until the busy queue empties when every arrival acts
/// selfishly with the given horizon, delta(i,j) the action an arrival in
/// (i,j) takes at this horizon. Row i = 0 is identically zero.
///
/// Off-grid closure used by all algorithms in this module:
///   tau(i, j_max+1) := tau(i, j_max)
///   tau(i_max+1, j) := tau(i_max, j) + 1/(mu - lambda)
class TauTable {
  public:
    TauTable(int i_max, int j_max);

    int i_max() const { return i_max_; }
    int j_max() const { return j_max_; }
    long horizon() const { return horizon_; }

    double tau(int i, int j) const { return tau_[tau_index(i, j)]; }
    Action delta(int i, int j) const { return delta_[delta_index(i, j)]; }
    State successor(int i, int j) const;

    // mutable access for the recursion driver
    double& tau_ref(int i, int j) { return tau_[tau_index(i, j)]; }
    void set_delta(int i, int j, Action a) { delta_[delta_index(i, j)] = a; }
    void set_horizon(long n) { horizon_ = n; }

  private:
    std::size_t tau_index(int i, int j) const;
    std::size_t delta_index(int i, int j) const;
    int i_max_;
    int j_max_;
    long horizon_ = 0;
    std::vector<double> tau_;     // (i_max+1) x (j_max+1), row 0 zero
    std::vector<Action> delta_;   // rows 1..i_max
};

struct EquilibriumOptions {
    int i_max = 64;
    int j_max = 64;               // must be >= i_max
    double tol = 1e-9;            // estimated sup-norm distance to the limit,
                                  // measured on the reporting window
    long max_iters = 200000;
    double window_ratio = 0.5;    // report on i <= i_max*ratio, j <= j_max*ratio
    int threads = 1;
};

struct EquilibriumResult {
    DecisionTable f_star;                  // greedy actions of the converged tau
    TauTable tau;                          // converged expected emptying times
    SwitchingCurve h;                      // threshold form of f_star
    long iterations = 0;
    double residual = 0.0;                 // sup-norm of the last increment (window)
    double tail_estimate = 0.0;            // geometric estimate of remaining error
    bool monotone_in_horizon = true;       // tau never decreased between steps
    bool fixed_point_ok = true;            // stored actions equal the greedy rule
    int window_i = 0;
    int window_j = 0;
    std::vector<double> residual_history;  // window residual per iteration
};

/// tau at horizon 0: tau(i,j) = i/mu, with greedy actions attached.
TauTable tau_init(const ModelParams& m, int i_max, int j_max);

/// One horizon step of the recursion (uniformization weights mu/(lambda+mu)
/// and lambda/(lambda+mu)); actions of the returned table are greedy with
/// respect to the returned tau.
TauTable tau_step(const ModelParams& m, const TauTable& t, int threads = 1);

/// Iterates tau_step to the individually optimal fixed point f*.
EquilibriumResult solve_equilibrium(const ModelParams& m,
                                    const EquilibriumOptions& opt = {});

struct PropertyCheck {
    bool pass = true;
    int witness_i = -1;
    int witness_j = -1;
    std::string detail;
};

struct StructureReport {
    PropertyCheck busy_when_not_longer;  // Busy whenever 1 <= i <= j
    PropertyCheck monotone_in_j;         // Busy at (i,j) implies Busy at (i,j+1)
    PropertyCheck monotone_in_i;         // Busy at (i,j) implies Busy at (i-1,j)
    PropertyCheck tau_concave;           // tau(.,j) concave on all-Busy prefixes
    bool all_pass() const;
};

/// Checks the structural properties of a decision table (and its tau) on
/// the window i <= wi, j <= wj.
StructureReport verify_structure(const DecisionTable& table, const TauTable& tau,
                                 int wi, int wj);
StructureReport verify_structure(const EquilibriumResult& r);

/// Expected busy-queue emptying times under a fixed decision table, by
/// successive substitution from zero. Uses the same off-grid closure as
/// solve_equilibrium.
TauTable tau_policy_eval(const ModelParams& m, const DecisionTable& table,
                         double tol = 1e-10, long max_iters = 1000000);

/// Best response of one customer against a static background split p
/// (everyone else joins the busy queue with probability p): join the busy
/// queue iff c*i/mu < d*i/(mu - lambda*p) + c*j/mu. Kept for comparison
/// with the population fixed point, which supersedes it.
Action single_customer_rule(const ModelParams& m, double background_p, int i, int j);

}  // namespace pollopt

#endif
