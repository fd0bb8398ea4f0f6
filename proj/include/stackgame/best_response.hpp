#pragma once

#include <utility>
#include <vector>

#include "stackgame/game_model.hpp"

namespace stackgame {

/// The one-parameter family of defenses that leaves the attacker indifferent
/// between all assets:
///
///   D_n(d) = (R_R(n) - R_R(anchor) + omega_R(anchor) * d) / omega_R(n)   for n < N,
///   D_N(d) = d.
///
/// entry() is the raw algebraic expression; at() additionally requires the
/// two anchor sum conditions (they make the family sum to exactly 1 for
/// every d) and each coordinate to land in [0,1].
class DefenseFamily {
 public:
  explicit DefenseFamily(const GameInstance& instance);

  const GameInstance& instance() const { return *instance_; }

  /// Raw family expression for one coordinate; no validation.
  Rational entry(std::size_t n, const Rational& anchor_prob) const;

  /// Family vector at the given anchor probability; validated.
  DefenseVector at(const Rational& anchor_prob) const;

 private:
  const GameInstance* instance_;
};

/// Throws InfeasibleError unless both anchor sum conditions hold. They make
/// the family sum to 1 for every d and force a nonzero anchor omega.
void require_anchor_sum_conditions(const GameInstance& instance);

/// Family vector at anchor probability d. Throws InfeasibleError when the
/// instance violates the sum conditions or the family leaves [0,1] at d,
/// ValidationError when d itself is outside [0,1].
DefenseVector defense_family_at(const GameInstance& instance, const Rational& anchor_prob);

/// Largest interval [lo, hi] within [0,1] on which every family coordinate
/// stays in [0,1], from exact intersection of the per-asset linear bounds.
/// Throws DegenerateError when the intersection is empty.
std::pair<Rational, Rational> feasible_anchor_interval(const GameInstance& instance);

struct BestResponse {
  std::vector<std::size_t> argmax;  // every maximizing asset, ascending
  Rational value;
};

/// All pure attacks maximizing the attacker's utility under the defense.
/// Any attack vector supported on the argmax set is a best response.
BestResponse attacker_best_response(const GameInstance& instance, const DefenseVector& defense);

/// max_n u_n - min_n u_n; zero exactly on the indifference family.
Rational indifference_gap(const GameInstance& instance, const DefenseVector& defense);

}  // namespace stackgame
