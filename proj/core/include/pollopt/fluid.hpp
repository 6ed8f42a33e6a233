#ifndef POLLOPT_FLUID_HPP
#define POLLOPT_FLUID_HPP

#include <variant>
#include <vector>

#include "pollopt/params.hpp"

namespace pollopt {

struct FluidState {
    double x = 0.0;  // fluid in the busy queue
    double y = 0.0;  // fluid in the idle queue
    double t = 0.0;
};

/// Scalar discrete-time algebraic Riccati data for the cycle-to-cycle
/// control problem: a = rho, b = -rho, q = 1 - rho, r = rho.
struct RiccatiSolution {
    double p;  // nonnegative root
    double f;  // feedback gain, u_k = -f x_k
    double a;
    double b;
    double q;
    double r;

    double residual() const;  // |p - q - a(p - pb(r+bpb)^{-1}bp)a|
};

RiccatiSolution riccati_solve(double rho);

struct FluidCoefficients {
    double u_ratio;  // u_k / x_k of the optimal control
    double beta;     // x_{k+1} / x_k
    double alpha;    // switching-line slope
};

FluidCoefficients optimal_coefficients(double rho);

/// One server cycle of the optimally controlled fluid system, starting at
/// fluid level x_k in the (new) busy queue and an empty idle queue.
struct FluidCycle {
    int k = 0;
    double x_k = 0.0;
    double u_k = 0.0;        // x_k - mu v_k
    double v_k = 0.0;        // time fluid is routed to the idle queue
    double t_k = 0.0;        // switch epoch opening the cycle
    double cycle_cost = 0.0; // in original c, d units
};

struct LqrTrajectory {
    std::vector<FluidCycle> cycles;
    double total_cost = 0.0;  // sum of cycle costs plus the geometric tail
    double tail_cost = 0.0;   // closed-form remainder beyond the listed cycles
    double drain_time = 0.0;  // T = x0 / (mu - lambda)
};

/// Optimal bang-bang trajectory from (x0, 0). Cycles stop at num_cycles or
/// once x_k < 1e-12 x0, whichever comes first; the remaining cost is added
/// in closed form.
LqrTrajectory lqr_trajectory(double x0, const ModelParams& m, int num_cycles);

/// Closed-form cost of one cycle under front-loaded routing: busy queue
/// starts at x_k, fluid goes to the idle queue for v_k time units, then to
/// the busy queue until it empties.
double fluid_cycle_cost(double x_k, double v_k, const ModelParams& m);

/// Route all incoming fluid to the idle queue iff y < alpha * x.
/// alpha = 0 routes everything to the busy queue; alpha = +inf everything
/// to the idle queue.
struct LinePolicy {
    double alpha;
};

/// Piecewise-constant rate r(t) at which fluid is routed to the idle
/// queue: rate(k) applies on [t_{k-1}, t_k) with t_k = segments[k].t_end.
/// After the last segment the rate is 0 (everything to the busy queue).
struct RateSchedule {
    struct Segment {
        double t_end;
        double rate;  // in [0, lambda]
    };
    std::vector<Segment> segments;
};

using FluidPolicy = std::variant<LinePolicy, RateSchedule>;

enum class FluidPhase { RouteIdle, RouteBusy, Mixed, Empty };
const char* fluid_phase_name(FluidPhase p);

/// Piecewise-linear trajectory: points[k] starts a linear segment with the
/// given phase; the last point is the emptying (or truncation) state.
struct FluidTrajectory {
    struct Point {
        double t;
        double x;
        double y;
        FluidPhase phase;
    };
    std::vector<Point> points;
    double total_cost = 0.0;
    double empty_time = 0.0;  // (x0+y0)/(mu-lambda)

    FluidState state_at(double t) const;
};

/// Exact event-driven integration (the dynamics are piecewise linear, so
/// segment boundaries and curve crossings are solved in closed form;
/// dt_hint is accepted for API compatibility and only caps the segment
/// length defensively).
FluidTrajectory fluid_policy_simulate(double x0, double y0, const ModelParams& m,
                                      const FluidPolicy& policy,
                                      double dt_hint = 0.0);

/// Virtual earlier start (x_start, 0) at time tau <= 0 from which the
/// optimal line policy reaches (x0, y0) at time 0.
struct VirtualStart {
    double x_start;
    double tau;
};

VirtualStart normalize_initial_state(double x0, double y0, const ModelParams& m);

/// Nested grid search over the K-cycle truncation of
///   sum_k (1-rho) x_k^2 + rho u_k^2 + terminal_weight * x_K^2,
/// subject to x_{k+1} = rho (x_k - u_k), 0 <= u_k <= x_k. The search is
/// over the fractions u_k/x_k, refined until the grid step is below
/// `resolution`. Independent verification oracle for the closed form.
struct BruteForceResult {
    std::vector<double> u;        // optimal controls
    std::vector<double> x;        // induced levels x_0..x_K
    double cost = 0.0;
};

BruteForceResult brute_force_lqr(double x0, double rho, int horizon,
                                 double resolution, double terminal_weight = 0.0,
                                 int threads = 1);

}  // namespace pollopt

#endif
