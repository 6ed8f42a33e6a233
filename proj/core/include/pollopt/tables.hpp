#ifndef POLLOPT_TABLES_HPP
#define POLLOPT_TABLES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "pollopt/errors.hpp"

namespace pollopt {

/// Routing action for one arriving customer.
enum class Action : std::uint8_t { Busy, Idle };

char action_code(Action a);
Action action_from_code(char c);

/// (i, j) with i customers in the busy queue and j in the idle queue.
/// With zero switch-over times, i = 0 with j > 0 is not a reachable
/// stable state (the server would have switched already); the constructor
/// rejects it. (0, 0) is the empty system.
struct State {
    State(int i, int j);
    int i;
    int j;
    bool operator==(const State&) const = default;
};

/// Total decision function on the grid 1 <= i <= i_max, 0 <= j <= j_max.
class DecisionTable {
  public:
    DecisionTable(int i_max, int j_max, Action fill = Action::Idle);

    int i_max() const { return i_max_; }
    int j_max() const { return j_max_; }

    Action action(int i, int j) const { return cells_[index(i, j)]; }
    void set(int i, int j, Action a) { cells_[index(i, j)] = a; }

    /// Lookup with indices clamped to the grid; used when a finite table
    /// stands in for a policy on the infinite lattice.
    Action action_clamped(int i, int j) const;

    bool operator==(const DecisionTable&) const = default;

  private:
    std::size_t index(int i, int j) const;
    int i_max_;
    int j_max_;
    std::vector<Action> cells_;
};

/// Per-row threshold form of a monotone decision table: the action at
/// (i, j) is Busy iff j > threshold(i). threshold = -1 encodes an all-Busy
/// row. slope_hint, when set, extends the curve beyond the stored rows as
/// the real line j > slope_hint * i (used for the fluid line alpha*i).
struct SwitchingCurve {
    std::vector<int> thresholds;  // thresholds[k] is t(i) for i = k+1
    std::optional<double> slope_hint;

    int max_i() const { return static_cast<int>(thresholds.size()); }
    int threshold(int i) const { return thresholds.at(static_cast<std::size_t>(i - 1)); }

    /// Action at (i, j) for any i >= 1: stored threshold in range, then
    /// slope_hint extrapolation, then the last stored threshold.
    Action action(int i, int j) const;
};

/// Converts a table whose Busy sets are upward closed in j into threshold
/// form; throws NotThreshold (with the offending cell) otherwise.
SwitchingCurve curve_from_table(const DecisionTable& table);

/// Materializes a curve back into a table on the given grid.
DecisionTable table_from_curve(const SwitchingCurve& curve, int i_max, int j_max);

}  // namespace pollopt

#endif
