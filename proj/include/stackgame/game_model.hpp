#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "stackgame/errors.hpp"
#include "stackgame/rational.hpp"

namespace stackgame {

/// Per-asset rewards and costs for both teams.
///
/// reward_defender: defender's reward when the attacked asset was protected.
/// cost_defender:   defender's cost when the attacked asset was unprotected.
/// reward_attacker: attacker's reward for hitting an unprotected asset.
/// cost_attacker:   attacker's cost of attacking a protected asset.
struct AssetParams {
  std::string name;
  Rational reward_defender;
  Rational cost_defender;
  Rational reward_attacker;
  Rational cost_attacker;

  Rational omega_defender() const { return reward_defender + cost_defender; }
  Rational omega_attacker() const { return reward_attacker + cost_attacker; }

  friend bool operator==(const AssetParams&, const AssetParams&) = default;
};

/// Ordered asset list. The last asset is the anchor: its protection
/// probability parameterizes the whole indifference defense family.
///
/// Invariants enforced at construction: at least two assets, unique
/// non-empty names, and a nonzero attacker omega for every asset (it
/// divides everything downstream).
class GameInstance {
 public:
  explicit GameInstance(std::vector<AssetParams> assets);

  std::size_t size() const { return assets_.size(); }
  const AssetParams& asset(std::size_t n) const;
  const std::vector<AssetParams>& assets() const { return assets_; }

  const AssetParams& anchor() const { return assets_.back(); }
  std::size_t anchor_index() const { return assets_.size() - 1; }

  friend bool operator==(const GameInstance&, const GameInstance&) = default;

 private:
  std::vector<AssetParams> assets_;
};

/// Exact probability vector over assets: entries in [0,1] summing to 1.
/// The tag keeps defense and attack vectors from mixing up.
template <class Tag>
class SimplexVector {
 public:
  explicit SimplexVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) {
      throw ValidationError("probability vector must not be empty");
    }
    Rational sum;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      const Rational& e = entries_[i];
      if (e < 0 || e > 1) {
        throw ValidationError("probability vector entry " + std::to_string(i + 1) +
                              " = " + e.str() + " outside [0,1]");
      }
      sum += e;
    }
    if (sum != 1) {
      throw ValidationError("probability vector sums to " + sum.str() + ", not 1");
    }
  }

  static SimplexVector unit(std::size_t index, std::size_t size) {
    if (index >= size) {
      throw ValidationError("unit vector index out of range");
    }
    std::vector<Rational> entries(size, Rational(0));
    entries[index] = 1;
    return SimplexVector(std::move(entries));
  }

  static SimplexVector uniform(std::size_t size) {
    if (size == 0) {
      throw ValidationError("probability vector must not be empty");
    }
    return SimplexVector(std::vector<Rational>(size, Rational(1, static_cast<long long>(size))));
  }

  std::size_t size() const { return entries_.size(); }
  const Rational& operator[](std::size_t n) const { return entries_[n]; }
  const std::vector<Rational>& entries() const { return entries_; }

  friend bool operator==(const SimplexVector&, const SimplexVector&) = default;

 private:
  std::vector<Rational> entries_;
};

using DefenseVector = SimplexVector<struct defense_tag>;
using AttackVector = SimplexVector<struct attack_tag>;

/// Convex combination lambda*a + (1-lambda)*b, exact.
template <class Tag>
SimplexVector<Tag> mix(const SimplexVector<Tag>& a, const SimplexVector<Tag>& b,
                       const Rational& lambda) {
  if (a.size() != b.size()) {
    throw ValidationError("cannot mix probability vectors of different lengths");
  }
  if (lambda < 0 || lambda > 1) {
    throw ValidationError("mixing weight outside [0,1]");
  }
  std::vector<Rational> entries;
  entries.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    entries.push_back(lambda * a[i] + (Rational(1) - lambda) * b[i]);
  }
  return SimplexVector<Tag>(std::move(entries));
}

struct PayoffPair {
  Rational defender;
  Rational attacker;
};

Rational omega_attacker(const GameInstance& instance, std::size_t n);
Rational omega_defender(const GameInstance& instance, std::size_t n);

/// Defender's expected payoff: sum_n A_n { D_n R_B(n) - (1 - D_n) C_B(n) }.
Rational defender_payoff(const GameInstance& instance, const DefenseVector& defense,
                         const AttackVector& attack);

/// Attacker's expected payoff: sum_n A_n { (1 - D_n) R_R(n) - D_n C_R(n) }.
Rational attacker_payoff(const GameInstance& instance, const DefenseVector& defense,
                         const AttackVector& attack);

/// Attacker's utility for a pure attack on asset n under the given defense.
Rational attack_utility(const GameInstance& instance, const DefenseVector& defense,
                        std::size_t n);

PayoffPair payoffs(const GameInstance& instance, const DefenseVector& defense,
                   const AttackVector& attack);

}  // namespace stackgame
