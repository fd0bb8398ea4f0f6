#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "stackgame/game_model.hpp"

namespace stackgame {

/// Enumeration cap for grid oracles; STACKGAME_GRID_CAP overrides the
/// default of 10^7.
std::uint64_t simplex_grid_cap();

/// Number of grid points: C(resolution + dimension - 1, dimension - 1).
/// Throws GridCapError when it exceeds the cap.
std::uint64_t simplex_grid_size(std::size_t dimension, unsigned resolution);

/// All rational probability vectors whose entries are multiples of
/// 1/resolution, exactly once each, in ascending lexicographic order.
struct SimplexGrid {
  std::size_t dimension;
  unsigned resolution;

  std::uint64_t size() const { return simplex_grid_size(dimension, resolution); }
  void for_each(const std::function<void(std::span<const Rational>)>& visit) const;
};

void enumerate_simplex_grid(std::size_t dimension, unsigned resolution,
                            const std::function<void(std::span<const Rational>)>& visit);

struct BruteForceBestAttack {
  Rational value;
  std::vector<std::size_t> witnesses;  // every maximizing vertex, ascending
};

/// Maximizes the attacker's payoff over the pure attacks (sufficient for a
/// linear objective over the simplex).
BruteForceBestAttack brute_force_attacker(const GameInstance& instance,
                                          const DefenseVector& defense);

struct FamilySweepResult {
  Rational best_anchor_prob;
  Rational value;
};

/// Sweeps the defender payoff over the anchor grid {0, 1/k, ..., 1}
/// intersected with the feasible interval (endpoints included), evaluating
/// each point directly. Ties keep the smallest anchor probability.
FamilySweepResult brute_force_defender_on_family(const GameInstance& instance,
                                                 const AttackVector& attack,
                                                 unsigned resolution);

struct ConstrainedBruteForce {
  Rational min_value;
  AttackVector min_witness;
  Rational max_value;
  AttackVector max_witness;
};

/// Full-space enumeration of the vertices of (simplex intersect delta2 = 0):
/// pure attacks with zero delta2 contribution plus the sign-change points of
/// every vertex pair. Evaluates the low-endpoint payoff coefficients over
/// the first N-1 coordinates.
ConstrainedBruteForce brute_force_constrained_attacker(const GameInstance& instance);

}  // namespace stackgame
