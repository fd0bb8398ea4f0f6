#include "stackgame/attacker_analysis.hpp"

#include <algorithm>

#include "stackgame/stackelberg_solver.hpp"

namespace stackgame {

HyperplaneProblem build_hyperplane_problem(const GameInstance& instance) {
  PayoffCoefficients coeffs = defender_payoff_coefficients(instance);
  const AssetParams& anchor = instance.anchor();
  const Rational anchor_ratio = anchor.omega_defender() / anchor.omega_attacker();

  HyperplaneProblem problem;
  problem.rhs = -anchor_ratio;
  for (std::size_t n = 0; n + 1 < instance.size(); ++n) {
    const AssetParams& a = instance.asset(n);
    problem.alpha.push_back(a.omega_defender() / a.omega_attacker() - anchor_ratio);
    problem.objective.push_back(coeffs.c2[n]);
  }
  return problem;
}

RatioTable payoff_ratios(const HyperplaneProblem& problem) {
  RatioTable table;
  bool any_nonzero = false;
  for (std::size_t i = 0; i < problem.alpha.size(); ++i) {
    const Rational& alpha = problem.alpha[i];
    if (alpha.is_zero()) {
      table.ratios.emplace_back(std::nullopt);
      continue;
    }
    any_nonzero = true;
    table.ratios.emplace_back(problem.rhs * problem.objective[i] / alpha);
    Rational weight = problem.rhs / alpha;
    if (weight >= 0 && weight <= 1) {
      table.feasible_indices.push_back(i);
    }
  }
  if (!any_nonzero) {
    throw DegenerateError("all hyperplane coefficients are zero; the ratio analysis degenerates");
  }
  return table;
}

namespace {

// Reduced-space candidate: the first N-1 attack coordinates; the anchor
// absorbs 1 - sum.
using Reduced = std::vector<Rational>;

AttackVector lift(const Reduced& x) {
  std::vector<Rational> entries = x;
  Rational slack(1);
  for (const Rational& e : x) slack -= e;
  entries.push_back(slack);
  return AttackVector(std::move(entries));
}

Rational evaluate(const HyperplaneProblem& problem, const Reduced& x) {
  Rational value;
  for (std::size_t i = 0; i < x.size(); ++i) {
    value += problem.objective[i] * x[i];
  }
  return value;
}

}  // namespace

ConstrainedExtrema constrained_extrema(const HyperplaneProblem& problem) {
  const std::size_t m = problem.alpha.size();
  std::vector<Reduced> candidates;

  // Vertices of {x >= 0, sum(x) <= 1, alpha.x = rhs}: the origin (anchor-only
  // attack), single-coordinate points with the sum constraint slack, and
  // two-coordinate points on the sum(x) = 1 face.
  if (problem.rhs.is_zero()) {
    candidates.emplace_back(m, Rational(0));
  }
  for (std::size_t k = 0; k < m; ++k) {
    if (!problem.alpha[k].is_zero()) {
      Rational x = problem.rhs / problem.alpha[k];
      if (x >= 0 && x <= 1) {
        Reduced c(m, Rational(0));
        c[k] = x;
        candidates.push_back(std::move(c));
      }
    } else if (problem.rhs.is_zero()) {
      Reduced c(m, Rational(0));
      c[k] = 1;
      candidates.push_back(std::move(c));
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (problem.alpha[i] == problem.alpha[j]) {
        if (problem.alpha[i] == problem.rhs) {
          // the whole edge satisfies the constraint; its endpoints suffice
          Reduced ci(m, Rational(0)), cj(m, Rational(0));
          ci[i] = 1;
          cj[j] = 1;
          candidates.push_back(std::move(ci));
          candidates.push_back(std::move(cj));
        }
        continue;
      }
      Rational t = (problem.rhs - problem.alpha[j]) / (problem.alpha[i] - problem.alpha[j]);
      if (t >= 0 && t <= 1) {
        Reduced c(m, Rational(0));
        c[i] = t;
        c[j] = Rational(1) - t;
        candidates.push_back(std::move(c));
      }
    }
  }

  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  if (candidates.empty()) {
    throw DegenerateError("the delta2 = 0 hyperplane does not intersect the attack simplex");
  }

  std::size_t min_at = 0, max_at = 0;
  Rational min_value = evaluate(problem, candidates[0]);
  Rational max_value = min_value;
  for (std::size_t c = 1; c < candidates.size(); ++c) {
    Rational value = evaluate(problem, candidates[c]);
    if (value < min_value) {
      min_value = value;
      min_at = c;
    }
    if (value > max_value) {
      max_value = value;
      max_at = c;
    }
  }
  return ConstrainedExtrema{min_value, lift(candidates[min_at]), max_value,
                            lift(candidates[max_at])};
}

bool exceeds_threshold(const HyperplaneProblem& problem, const Rational& threshold) {
  return constrained_extrema(problem).max_value > threshold;
}

}  // namespace stackgame
