#pragma once

#include <optional>
#include <vector>

#include "stackgame/game_model.hpp"

namespace stackgame {

/// The attacker's problem on the delta2 = 0 hyperplane after eliminating the
/// anchor coordinate A_N = 1 - sum of the rest:
///
///   maximize/minimize  objective . A_{1..N-1}
///   subject to         alpha . A_{1..N-1} = rhs,  A >= 0,  sum <= 1.
struct HyperplaneProblem {
  std::vector<Rational> alpha;      // length N-1
  Rational rhs;
  std::vector<Rational> objective;  // length N-1, the low-endpoint payoff coefficients
};

/// r_i = rhs * objective_i / alpha_i. On the constraint set the objective is
/// a convex combination of these ratios. Entries with alpha_i = 0 carry no
/// ratio. feasible_indices lists i with rhs/alpha_i in [0,1], where all
/// weight can sit on the single index i.
struct RatioTable {
  std::vector<std::optional<Rational>> ratios;
  std::vector<std::size_t> feasible_indices;
};

struct ConstrainedExtrema {
  Rational min_value;
  AttackVector min_attack;
  Rational max_value;
  AttackVector max_attack;
};

HyperplaneProblem build_hyperplane_problem(const GameInstance& instance);

RatioTable payoff_ratios(const HyperplaneProblem& problem);

/// Exact extrema of the objective over the hyperplane-restricted simplex,
/// by enumerating the polytope's vertices. Witness attacks are full-length
/// vectors with the anchor coordinate absorbing the slack.
ConstrainedExtrema constrained_extrema(const HyperplaneProblem& problem);

/// True iff the constrained maximum strictly exceeds the threshold.
bool exceeds_threshold(const HyperplaneProblem& problem, const Rational& threshold);

}  // namespace stackgame
