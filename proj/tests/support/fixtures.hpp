#pragma once

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "stackgame/feasibility.hpp"
#include "stackgame/game_model.hpp"

namespace stackgame::testing {

inline Rational rat(const char* text) { return Rational::parse(text); }

inline std::vector<Rational> rats(std::initializer_list<const char*> texts) {
  std::vector<Rational> out;
  out.reserve(texts.size());
  for (const char* t : texts) out.push_back(Rational::parse(t));
  return out;
}

inline AssetParams asset(std::string name, const char* reward_defender, const char* cost_defender,
                         const char* reward_attacker, const char* cost_attacker) {
  return AssetParams{std::move(name), rat(reward_defender), rat(cost_defender),
                     rat(reward_attacker), rat(cost_attacker)};
}

/// The bundled eight-asset example, built directly from parameters so the
/// tests do not depend on the JSON path.
inline GameInstance example_instance() {
  return GameInstance({
      asset("T1", "8", "2", "5", "-2"),
      asset("T2", "6", "-1", "5", "0"),
      asset("T3", "9", "4", "5", "1"),
      asset("T4", "5", "2", "5", "2"),
      asset("T5", "7", "-3", "5", "7"),
      asset("T6", "4", "1", "5", "15"),
      asset("T7", "6", "3", "5", "37"),
      asset("T8", "3", "0", "4", "-5"),
  });
}

/// Same attacker columns with the defender columns zeroed out.
inline GameInstance zero_defender_instance() {
  std::vector<AssetParams> assets = example_instance().assets();
  for (AssetParams& a : assets) {
    a.reward_defender = 0;
    a.cost_defender = 0;
  }
  return GameInstance(std::move(assets));
}

/// Two assets: prefix (R=2, C=-1), anchor (1, -2). Satisfies every
/// feasibility condition with room to spare.
inline GameInstance two_asset_instance() {
  return GameInstance({
      asset("T1", "3", "1", "2", "-1"),
      asset("T2", "2", "1", "1", "-2"),
  });
}

/// Three assets completed by the anchor solve: omegas 3 and 3/2, anchor
/// (4, -5).
inline GameInstance three_asset_instance() {
  return GameInstance({
      asset("T1", "2", "1", "5", "-2"),
      asset("T2", "1", "0", "5", "-7/2"),
      asset("T3", "3", "2", "4", "-5"),
  });
}

inline std::vector<Rational> family_zero_entries() {
  return rats({"1/3", "1/5", "1/6", "1/7", "1/12", "1/20", "1/42", "0"});
}

struct RandomGen {
  std::mt19937 rng;

  explicit RandomGen(unsigned seed) : rng(seed) {}

  long long pick(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
  }

  Rational small_rational(long long lo, long long hi, long long max_den = 3) {
    return Rational(pick(lo, hi), pick(1, max_den));
  }

  /// Exact random point on the simplex from integer weights.
  std::vector<Rational> simplex_point(std::size_t size) {
    std::vector<long long> weights(size);
    long long total = 0;
    while (total == 0) {
      for (auto& w : weights) {
        w = pick(0, 9);
        total += w;
      }
    }
    std::vector<Rational> entries;
    entries.reserve(size);
    for (long long w : weights) entries.emplace_back(w, total);
    return entries;
  }

  AttackVector attack(std::size_t size) { return AttackVector(simplex_point(size)); }
  DefenseVector defense(std::size_t size) { return DefenseVector(simplex_point(size)); }

  /// Any valid instance: nonzero attacker omegas of either sign,
  /// unconstrained defender parameters. Usually infeasible.
  GameInstance game_instance(std::size_t min_assets = 2, std::size_t max_assets = 8) {
    std::size_t n = static_cast<std::size_t>(pick(static_cast<long long>(min_assets),
                                                  static_cast<long long>(max_assets)));
    std::vector<AssetParams> assets;
    for (std::size_t i = 0; i < n; ++i) {
      AssetParams a;
      a.name = "T" + std::to_string(i + 1);
      a.reward_defender = small_rational(-9, 9);
      a.cost_defender = small_rational(-9, 9);
      do {
        a.reward_attacker = small_rational(-9, 9);
        a.cost_attacker = small_rational(-9, 9);
      } while (a.omega_attacker().is_zero());
      assets.push_back(std::move(a));
    }
    return GameInstance(std::move(assets));
  }

  /// Instance passing every feasibility condition: shared attacker reward
  /// and positive omegas across the prefix, anchor completed by the exact
  /// anchor solve.
  GameInstance feasible_instance(std::size_t min_assets = 2, std::size_t max_assets = 8) {
    std::size_t n = static_cast<std::size_t>(pick(static_cast<long long>(min_assets),
                                                  static_cast<long long>(max_assets)));
    Rational shared_reward = small_rational(1, 9);
    std::vector<AssetParams> assets;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      AssetParams a;
      a.name = "T" + std::to_string(i + 1);
      a.reward_defender = small_rational(-9, 9);
      a.cost_defender = small_rational(-9, 9);
      a.reward_attacker = shared_reward;
      Rational omega = Rational(pick(1, 12), pick(1, 3));  // > 0
      a.cost_attacker = omega - shared_reward;
      assets.push_back(std::move(a));
    }
    AnchorParams anchor = solve_anchor(assets);
    AssetParams last;
    last.name = "T" + std::to_string(n);
    last.reward_defender = small_rational(-9, 9);
    last.cost_defender = small_rational(-9, 9);
    last.reward_attacker = anchor.reward_attacker;
    last.cost_attacker = anchor.cost_attacker;
    assets.push_back(std::move(last));

    GameInstance instance(std::move(assets));
    if (!check_feasibility(instance).feasible) {
      throw std::logic_error("generator produced an infeasible instance");
    }
    return instance;
  }
};

}  // namespace stackgame::testing
