#include "stackgame/best_response.hpp"

#include <optional>

#include "stackgame/feasibility.hpp"

namespace stackgame {

void require_anchor_sum_conditions(const GameInstance& instance) {
  FeasibilityReport report = check_feasibility(instance);
  if (!report.sums_ok) {
    throw InfeasibleError(
        "instance violates the anchor sum conditions: first sum = " +
        report.sum_condition_one.str() + " (want 1), second sum = " +
        report.sum_condition_two.str() + " (want 0)");
  }
}

namespace {

Rational family_entry(const GameInstance& instance, std::size_t n, const Rational& d) {
  if (n + 1 == instance.size()) return d;
  const AssetParams& asset = instance.asset(n);
  const AssetParams& anchor = instance.anchor();
  return (asset.reward_attacker - anchor.reward_attacker + anchor.omega_attacker() * d) /
         asset.omega_attacker();
}

}  // namespace

DefenseFamily::DefenseFamily(const GameInstance& instance) : instance_(&instance) {}

Rational DefenseFamily::entry(std::size_t n, const Rational& anchor_prob) const {
  instance_->asset(n);  // range check
  return family_entry(*instance_, n, anchor_prob);
}

DefenseVector DefenseFamily::at(const Rational& anchor_prob) const {
  if (anchor_prob < 0 || anchor_prob > 1) {
    throw ValidationError("anchor probability " + anchor_prob.str() + " outside [0,1]");
  }
  require_sum_conditions(*instance_);
  std::vector<Rational> entries;
  entries.reserve(instance_->size());
  for (std::size_t n = 0; n < instance_->size(); ++n) {
    Rational e = family_entry(*instance_, n, anchor_prob);
    if (e < 0 || e > 1) {
      throw InfeasibleError("defense family leaves [0,1] at d = " + anchor_prob.str() +
                            ": asset '" + instance_->asset(n).name + "' gets " + e.str());
    }
    entries.push_back(std::move(e));
  }
  return DefenseVector(std::move(entries));
}

DefenseVector defense_family_at(const GameInstance& instance, const Rational& anchor_prob) {
  return DefenseFamily(instance).at(anchor_prob);
}

std::pair<Rational, Rational> feasible_anchor_interval(const GameInstance& instance) {
  Rational lo(0), hi(1);  // the anchor coordinate itself is a probability
  const Rational omega_anchor = instance.anchor().omega_attacker();

  for (std::size_t n = 0; n + 1 < instance.size(); ++n) {
    const AssetParams& a = instance.asset(n);
    const Rational omega = a.omega_attacker();
    const Rational offset = a.reward_attacker - instance.anchor().reward_attacker;

    // 0 <= (offset + omega_anchor*d) / omega <= 1 rearranged to
    // L <= omega_anchor*d <= U. omega_anchor is nonzero by instance invariant.
    Rational L = -offset;
    Rational U = omega - offset;
    if (omega.sign() < 0) std::swap(L, U);

    Rational lower = L / omega_anchor;
    Rational upper = U / omega_anchor;
    if (omega_anchor.sign() < 0) std::swap(lower, upper);
    if (lower > lo) lo = lower;
    if (upper < hi) hi = upper;
  }

  if (lo > hi) {
    throw DegenerateError("empty anchor interval: the defense family never stays inside [0,1]");
  }
  return {lo, hi};
}

BestResponse attacker_best_response(const GameInstance& instance, const DefenseVector& defense) {
  BestResponse best;
  std::optional<Rational> top;
  for (std::size_t n = 0; n < instance.size(); ++n) {
    Rational u = attack_utility(instance, defense, n);
    if (!top || u > *top) {
      top = u;
      best.argmax.assign(1, n);
    } else if (u == *top) {
      best.argmax.push_back(n);
    }
  }
  best.value = *top;
  return best;
}

Rational indifference_gap(const GameInstance& instance, const DefenseVector& defense) {
  Rational min_u = attack_utility(instance, defense, 0);
  Rational max_u = min_u;
  for (std::size_t n = 1; n < instance.size(); ++n) {
    Rational u = attack_utility(instance, defense, n);
    if (u < min_u) min_u = u;
    if (u > max_u) max_u = u;
  }
  return max_u - min_u;
}

}  // namespace stackgame
