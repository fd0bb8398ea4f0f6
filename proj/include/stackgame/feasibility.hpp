#pragma once

#include <span>
#include <vector>

#include "stackgame/game_model.hpp"

namespace stackgame {

/// Interval check for one non-anchor asset: with positive attacker omega the
/// anchor cost must satisfy -R_R(n) <= C_R(N) <= C_R(n); with negative omega
/// the inequalities flip.
struct AssetIntervalCheck {
  std::size_t index;  // position among the first N-1 assets (0-based)
  int omega_sign;     // sign of the asset's attacker omega (+1 or -1)
  bool passed;
};

struct FeasibilityReport {
  std::vector<AssetIntervalCheck> per_asset_checks;
  Rational sum_condition_one;  // sum over n < N of (R_R(n) - R_R(N)) / omega_R(n); must be 1
  Rational sum_condition_two;  // sum over n < N of (R_R(n) + C_R(N)) / omega_R(n); must be 0
  bool intervals_ok = false;
  bool sums_ok = false;
  bool feasible = false;  // intervals_ok && sums_ok
};

/// Evaluates the anchor constraints that keep the whole defense family
/// inside the probability simplex. An infeasible instance yields a report,
/// never an exception.
FeasibilityReport check_feasibility(const GameInstance& instance);

struct AnchorParams {
  Rational reward_attacker;
  Rational cost_attacker;
};

/// Solves the two sum conditions for the anchor's attacker reward and cost
/// given the first N-1 assets. The per-asset interval conditions are not
/// implied; re-check the completed instance with check_feasibility.
/// Throws DegenerateError when sum(1/omega) = 0 makes the system singular.
AnchorParams solve_anchor(std::span<const AssetParams> prefix);

/// omega_R(anchor) * sum over n < N of 1/omega_R(n). Equals -1 exactly for
/// every instance satisfying both sum conditions.
Rational anchor_omega_identity(const GameInstance& instance);

}  // namespace stackgame
