#include "stackgame/game_model.hpp"

#include <unordered_set>

namespace stackgame {

GameInstance::GameInstance(std::vector<AssetParams> assets) : assets_(std::move(assets)) {
  if (assets_.size() < 2) {
    throw ValidationError("a game instance needs at least two assets");
  }
  std::unordered_set<std::string> names;
  for (std::size_t n = 0; n < assets_.size(); ++n) {
    const AssetParams& a = assets_[n];
    if (a.name.empty()) {
      throw ValidationError("asset with empty name");
    }
    if (!names.insert(a.name).second) {
      throw ValidationError("duplicate asset name '" + a.name + "'");
    }
    // non-anchor omegas divide the defense family expressions; the anchor's
    // omega never does, and a zero there just makes the instance infeasible
    if (n + 1 < assets_.size() && a.omega_attacker().is_zero()) {
      throw ValidationError("asset '" + a.name +
                            "' has attacker reward + cost = 0; it would divide the "
                            "defense family expressions");
    }
  }
}

const AssetParams& GameInstance::asset(std::size_t n) const {
  if (n >= assets_.size()) {
    throw std::out_of_range("asset index " + std::to_string(n) + " out of range (instance has " +
                            std::to_string(assets_.size()) + " assets)");
  }
  return assets_[n];
}

Rational omega_attacker(const GameInstance& instance, std::size_t n) {
  return instance.asset(n).omega_attacker();
}

Rational omega_defender(const GameInstance& instance, std::size_t n) {
  return instance.asset(n).omega_defender();
}

namespace {

void require_length(const GameInstance& instance, std::size_t got, const char* what) {
  if (got != instance.size()) {
    throw ValidationError(std::string(what) + " has length " + std::to_string(got) +
                          " but the instance has " + std::to_string(instance.size()) + " assets");
  }
}

}  // namespace

Rational defender_payoff(const GameInstance& instance, const DefenseVector& defense,
                         const AttackVector& attack) {
  require_length(instance, defense.size(), "defense vector");
  require_length(instance, attack.size(), "attack vector");
  Rational total;
  for (std::size_t n = 0; n < instance.size(); ++n) {
    const AssetParams& a = instance.asset(n);
    total += attack[n] * (defense[n] * a.reward_defender -
                          (Rational(1) - defense[n]) * a.cost_defender);
  }
  return total;
}

Rational attacker_payoff(const GameInstance& instance, const DefenseVector& defense,
                         const AttackVector& attack) {
  require_length(instance, defense.size(), "defense vector");
  require_length(instance, attack.size(), "attack vector");
  Rational total;
  for (std::size_t n = 0; n < instance.size(); ++n) {
    total += attack[n] * attack_utility(instance, defense, n);
  }
  return total;
}

Rational attack_utility(const GameInstance& instance, const DefenseVector& defense,
                        std::size_t n) {
  require_length(instance, defense.size(), "defense vector");
  const AssetParams& a = instance.asset(n);
  return (Rational(1) - defense[n]) * a.reward_attacker - defense[n] * a.cost_attacker;
}

PayoffPair payoffs(const GameInstance& instance, const DefenseVector& defense,
                   const AttackVector& attack) {
  return PayoffPair{defender_payoff(instance, defense, attack),
                    attacker_payoff(instance, defense, attack)};
}

}  // namespace stackgame
