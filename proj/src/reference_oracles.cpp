#include "stackgame/reference_oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "stackgame/best_response.hpp"

namespace stackgame {

std::uint64_t simplex_grid_cap() {
  static constexpr std::uint64_t kDefaultCap = 10'000'000;
  const char* override_text = std::getenv("STACKGAME_GRID_CAP");
  if (override_text == nullptr || *override_text == '\0') {
    return kDefaultCap;
  }
  char* end = nullptr;
  unsigned long long cap = std::strtoull(override_text, &end, 10);
  if (end == override_text || *end != '\0') {
    throw ParseError("STACKGAME_GRID_CAP is not a positive integer: '" +
                     std::string(override_text) + "'");
  }
  return cap;
}

std::uint64_t simplex_grid_size(std::size_t dimension, unsigned resolution) {
  if (dimension == 0) {
    throw ValidationError("simplex grid needs dimension >= 1");
  }
  if (resolution == 0) {
    throw ValidationError("simplex grid needs resolution >= 1");
  }
  const std::uint64_t cap = simplex_grid_cap();
  // C(resolution + dimension - 1, dimension - 1), exact, capped.
  BigInt count = 1;
  for (std::size_t i = 1; i < dimension; ++i) {
    count = count * (resolution + i) / i;
    if (count > cap) {
      throw GridCapError("simplex grid would have more than " + std::to_string(cap) +
                         " points (cap via STACKGAME_GRID_CAP)");
    }
  }
  return count.convert_to<std::uint64_t>();
}

void enumerate_simplex_grid(std::size_t dimension, unsigned resolution,
                            const std::function<void(std::span<const Rational>)>& visit) {
  simplex_grid_size(dimension, resolution);  // validates and applies the cap

  std::vector<unsigned> counts(dimension, 0);
  std::vector<Rational> point(dimension);
  const long long k = resolution;

  auto emit = [&] {
    for (std::size_t i = 0; i < dimension; ++i) {
      point[i] = Rational(counts[i], k);
    }
    visit(point);
  };

  // Ascending lexicographic order over the integer compositions.
  auto recurse = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
    if (pos + 1 == dimension) {
      counts[pos] = remaining;
      emit();
      return;
    }
    for (unsigned v = 0; v <= remaining; ++v) {
      counts[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  recurse(recurse, 0, resolution);
}

void SimplexGrid::for_each(const std::function<void(std::span<const Rational>)>& visit) const {
  enumerate_simplex_grid(dimension, resolution, visit);
}

BruteForceBestAttack brute_force_attacker(const GameInstance& instance,
                                          const DefenseVector& defense) {
  BruteForceBestAttack best;
  for (std::size_t n = 0; n < instance.size(); ++n) {
    Rational value = attacker_payoff(instance, defense, AttackVector::unit(n, instance.size()));
    if (best.witnesses.empty() || value > best.value) {
      best.value = value;
      best.witnesses.assign(1, n);
    } else if (value == best.value) {
      best.witnesses.push_back(n);
    }
  }
  return best;
}

FamilySweepResult brute_force_defender_on_family(const GameInstance& instance,
                                                 const AttackVector& attack,
                                                 unsigned resolution) {
  if (resolution == 0) {
    throw ValidationError("family sweep needs resolution >= 1");
  }
  const auto [lo, hi] = feasible_anchor_interval(instance);
  DefenseFamily family(instance);

  std::vector<Rational> grid{lo, hi};
  for (unsigned j = 0; j <= resolution; ++j) {
    Rational d(j, static_cast<long long>(resolution));
    if (d >= lo && d <= hi) grid.push_back(std::move(d));
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  FamilySweepResult best{grid.front(), defender_payoff(instance, family.at(grid.front()), attack)};
  for (std::size_t i = 1; i < grid.size(); ++i) {
    Rational value = defender_payoff(instance, family.at(grid[i]), attack);
    if (value > best.value) {
      best.value = value;
      best.best_anchor_prob = grid[i];
    }
  }
  return best;
}

ConstrainedBruteForce brute_force_constrained_attacker(const GameInstance& instance) {
  const std::size_t n_assets = instance.size();
  const Rational omega_anchor = instance.anchor().omega_attacker();
  const auto [lo, hi] = feasible_anchor_interval(instance);
  DefenseFamily family(instance);

  // delta2 contribution of each pure attack, and the low-endpoint payoff
  // coefficient of each non-anchor coordinate.
  std::vector<Rational> delta(n_assets), objective(n_assets, Rational(0));
  for (std::size_t n = 0; n < n_assets; ++n) {
    const AssetParams& a = instance.asset(n);
    delta[n] = omega_anchor * a.omega_defender() / a.omega_attacker();
    if (n + 1 < n_assets) {
      objective[n] = family.entry(n, lo) * a.omega_defender() - a.cost_defender;
    }
  }

  auto evaluate = [&](const std::vector<Rational>& attack) {
    Rational value;
    for (std::size_t n = 0; n + 1 < n_assets; ++n) {
      value += objective[n] * attack[n];
    }
    return value;
  };

  std::vector<std::vector<Rational>> candidates;
  for (std::size_t i = 0; i < n_assets; ++i) {
    if (delta[i].is_zero()) {
      std::vector<Rational> attack(n_assets, Rational(0));
      attack[i] = 1;
      candidates.push_back(std::move(attack));
    }
  }
  for (std::size_t i = 0; i < n_assets; ++i) {
    for (std::size_t j = i + 1; j < n_assets; ++j) {
      if (delta[i].sign() * delta[j].sign() >= 0) continue;
      // t*delta_i + (1-t)*delta_j = 0 with t strictly inside (0,1)
      Rational t = delta[j] / (delta[j] - delta[i]);
      std::vector<Rational> attack(n_assets, Rational(0));
      attack[i] = t;
      attack[j] = Rational(1) - t;
      candidates.push_back(std::move(attack));
    }
  }
  if (candidates.empty()) {
    throw DegenerateError("no attack vector makes delta2 vanish on this instance");
  }

  ConstrainedBruteForce result{evaluate(candidates[0]), AttackVector(candidates[0]),
                               evaluate(candidates[0]), AttackVector(candidates[0])};
  for (std::size_t c = 1; c < candidates.size(); ++c) {
    Rational value = evaluate(candidates[c]);
    if (value < result.min_value) {
      result.min_value = value;
      result.min_witness = AttackVector(candidates[c]);
    }
    if (value > result.max_value) {
      result.max_value = value;
      result.max_witness = AttackVector(candidates[c]);
    }
  }
  return result;
}

}  // namespace stackgame
