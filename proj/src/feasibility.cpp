#include "stackgame/feasibility.hpp"

namespace stackgame {

FeasibilityReport check_feasibility(const GameInstance& instance) {
  const AssetParams& anchor = instance.anchor();
  FeasibilityReport report;
  report.intervals_ok = true;

  for (std::size_t n = 0; n + 1 < instance.size(); ++n) {
    const AssetParams& a = instance.asset(n);
    const Rational omega = a.omega_attacker();
    const int sign = omega.sign();
    bool passed;
    if (sign > 0) {
      passed = -a.reward_attacker <= anchor.cost_attacker &&
               anchor.cost_attacker <= a.cost_attacker;
    } else {
      passed = -a.reward_attacker >= anchor.cost_attacker &&
               anchor.cost_attacker >= a.cost_attacker;
    }
    report.per_asset_checks.push_back({n, sign, passed});
    report.intervals_ok = report.intervals_ok && passed;

    report.sum_condition_one += (a.reward_attacker - anchor.reward_attacker) / omega;
    report.sum_condition_two += (a.reward_attacker + anchor.cost_attacker) / omega;
  }

  report.sums_ok = report.sum_condition_one == 1 && report.sum_condition_two.is_zero();
  report.feasible = report.intervals_ok && report.sums_ok;
  return report;
}

AnchorParams solve_anchor(std::span<const AssetParams> prefix) {
  if (prefix.empty()) {
    throw ValidationError("anchor solve needs at least one prefix asset");
  }
  Rational inv_sum;     // sum of 1/omega
  Rational reward_sum;  // sum of R_R(n)/omega
  for (const AssetParams& a : prefix) {
    const Rational omega = a.omega_attacker();
    if (omega.is_zero()) {
      throw ValidationError("prefix asset '" + a.name + "' has attacker reward + cost = 0");
    }
    inv_sum += Rational(1) / omega;
    reward_sum += a.reward_attacker / omega;
  }
  if (inv_sum.is_zero()) {
    throw DegenerateError("anchor system is singular: sum of 1/omega over the prefix is 0");
  }
  // sum (R_n - x)/omega = 1  and  sum (R_n + y)/omega = 0.
  AnchorParams anchor;
  anchor.reward_attacker = (reward_sum - 1) / inv_sum;
  anchor.cost_attacker = -reward_sum / inv_sum;
  return anchor;
}

Rational anchor_omega_identity(const GameInstance& instance) {
  Rational inv_sum;
  for (std::size_t n = 0; n + 1 < instance.size(); ++n) {
    inv_sum += Rational(1) / instance.asset(n).omega_attacker();
  }
  return instance.anchor().omega_attacker() * inv_sum;
}

}  // namespace stackgame
