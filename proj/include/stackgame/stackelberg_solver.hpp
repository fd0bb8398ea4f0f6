#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stackgame/best_response.hpp"
#include "stackgame/game_model.hpp"

namespace stackgame {

/// Decomposition of the defender's payoff along the indifference family:
/// payoff(family(d), A) = (delta1 - delta3) + delta2 * d.
struct DeltaTriple {
  Rational delta1;
  Rational delta2;
  Rational delta3;
};

/// Sign of delta2; decides where on the family the defender's payoff peaks.
enum class Regime { Positive, Negative, Zero };

std::string to_string(Regime regime);

/// The defender's pick on the family. In the Zero regime the payoff is
/// independent of d, so the whole interval is optimal; family_indeterminate
/// marks that, with anchor_prob pinned to the interval's low end by
/// convention for consumers needing one concrete vector.
struct OptimalDefense {
  bool family_indeterminate;
  std::pair<Rational, Rational> anchor_interval;
  Rational anchor_prob;
  DefenseVector vector;
};

/// Per-attack-coordinate defender payoff coefficients at the two interval
/// endpoints: c1 at the high end, c2 at the low end.
struct PayoffCoefficients {
  std::vector<Rational> c1;
  std::vector<Rational> c2;
};

struct SolveReport {
  DeltaTriple deltas;
  Regime regime;
  OptimalDefense defense;
  Rational defender_payoff;
  Rational attacker_payoff;
};

DeltaTriple compute_deltas(const GameInstance& instance, const AttackVector& attack);

Regime classify_regime(const DeltaTriple& deltas);

OptimalDefense optimal_defense(const GameInstance& instance, Regime regime);

PayoffCoefficients defender_payoff_coefficients(const GameInstance& instance);

/// Full backward-induction outcome for an observed attack vector.
SolveReport solve(const GameInstance& instance, const AttackVector& attack);

/// Attacker's payoff at family(d); the same for every attack vector.
Rational attacker_equilibrium_payoff(const GameInstance& instance, const Rational& anchor_prob);

}  // namespace stackgame
