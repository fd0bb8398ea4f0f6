#include "stackgame/stackelberg_solver.hpp"

#include <stdexcept>

namespace stackgame {

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::Positive: return "positive";
    case Regime::Negative: return "negative";
    case Regime::Zero: return "zero";
  }
  throw std::logic_error("unknown regime");
}

DeltaTriple compute_deltas(const GameInstance& instance, const AttackVector& attack) {
  if (attack.size() != instance.size()) {
    throw ValidationError("attack vector has length " + std::to_string(attack.size()) +
                          " but the instance has " + std::to_string(instance.size()) + " assets");
  }
  const AssetParams& anchor = instance.anchor();
  DeltaTriple d;
  Rational omega_ratio_sum;
  for (std::size_t n = 0; n < instance.size(); ++n) {
    const AssetParams& a = instance.asset(n);
    if (n + 1 < instance.size()) {
      d.delta1 += (a.reward_attacker - anchor.reward_attacker) / a.omega_attacker() *
                  a.omega_defender() * attack[n];
    }
    omega_ratio_sum += a.omega_defender() / a.omega_attacker() * attack[n];
    d.delta3 += a.cost_defender * attack[n];
  }
  d.delta2 = anchor.omega_attacker() * omega_ratio_sum;
  return d;
}

Regime classify_regime(const DeltaTriple& deltas) {
  switch (deltas.delta2.sign()) {
    case 1: return Regime::Positive;
    case -1: return Regime::Negative;
    default: return Regime::Zero;
  }
}

OptimalDefense optimal_defense(const GameInstance& instance, Regime regime) {
  const auto [lo, hi] = feasible_anchor_interval(instance);
  DefenseFamily family(instance);
  switch (regime) {
    case Regime::Positive:
      return {false, {lo, hi}, hi, family.at(hi)};
    case Regime::Negative:
      return {false, {lo, hi}, lo, family.at(lo)};
    case Regime::Zero:
      return {true, {lo, hi}, lo, family.at(lo)};
  }
  throw std::logic_error("unknown regime");
}

PayoffCoefficients defender_payoff_coefficients(const GameInstance& instance) {
  const auto [lo, hi] = feasible_anchor_interval(instance);
  DefenseFamily family(instance);
  PayoffCoefficients coeffs;
  coeffs.c1.reserve(instance.size());
  coeffs.c2.reserve(instance.size());
  for (std::size_t n = 0; n < instance.size(); ++n) {
    const AssetParams& a = instance.asset(n);
    coeffs.c1.push_back(family.entry(n, hi) * a.omega_defender() - a.cost_defender);
    coeffs.c2.push_back(family.entry(n, lo) * a.omega_defender() - a.cost_defender);
  }
  return coeffs;
}

SolveReport solve(const GameInstance& instance, const AttackVector& attack) {
  DeltaTriple deltas = compute_deltas(instance, attack);
  Regime regime = classify_regime(deltas);
  OptimalDefense defense = optimal_defense(instance, regime);

  Rational from_decomposition =
      (deltas.delta1 - deltas.delta3) + deltas.delta2 * defense.anchor_prob;
  Rational direct = defender_payoff(instance, defense.vector, attack);
  if (direct != from_decomposition) {
    throw std::logic_error("defender payoff decomposition mismatch: direct evaluation gives " +
                           direct.str() + ", decomposition gives " + from_decomposition.str());
  }

  Rational attacker = attacker_payoff(instance, defense.vector, attack);
  return SolveReport{std::move(deltas), regime, std::move(defense),
                     std::move(from_decomposition), std::move(attacker)};
}

Rational attacker_equilibrium_payoff(const GameInstance& instance, const Rational& anchor_prob) {
  if (anchor_prob < 0 || anchor_prob > 1) {
    throw ValidationError("anchor probability " + anchor_prob.str() + " outside [0,1]");
  }
  const AssetParams& anchor = instance.anchor();
  return anchor.reward_attacker - anchor.omega_attacker() * anchor_prob;
}

}  // namespace stackgame
