#include "stackgame/selftest.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>
#include <vector>

#include "stackgame/attacker_analysis.hpp"
#include "stackgame/feasibility.hpp"
#include "stackgame/instance_io.hpp"
#include "stackgame/payoff_region.hpp"
#include "stackgame/reference_oracles.hpp"
#include "stackgame/stackelberg_solver.hpp"

namespace stackgame {

namespace {

struct Checker {
  std::ostream& out;
  int failures = 0;
  int total = 0;

  void report(bool ok, const std::string& name, const std::string& detail) {
    ++total;
    if (!ok) ++failures;
    out << (ok ? "ok    " : "FAIL  ") << std::left << std::setw(44) << name;
    if (!ok) out << "  " << detail;
    out << '\n';
  }

  void check(const std::string& name, const Rational& got, const Rational& want) {
    report(got == want, name, "expected " + want.str() + ", got " + got.str());
  }

  void check(const std::string& name, bool got, bool want) {
    report(got == want, name,
           std::string("expected ") + (want ? "true" : "false") + ", got " +
               (got ? "true" : "false"));
  }

  void check_vector(const std::string& name, const std::vector<Rational>& got,
                    const std::vector<Rational>& want) {
    auto render = [](const std::vector<Rational>& v) {
      std::ostringstream os;
      os << '(';
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i].str();
      }
      os << ')';
      return os.str();
    };
    report(got == want, name, "expected " + render(want) + ", got " + render(got));
  }
};

std::vector<Rational> rationals(std::initializer_list<const char*> texts) {
  std::vector<Rational> out;
  out.reserve(texts.size());
  for (const char* t : texts) out.push_back(Rational::parse(t));
  return out;
}

}  // namespace

int run_selftest(std::ostream& out) {
  const GameInstance instance = paper_example_instance();
  Checker c{out};

  {
    std::vector<Rational> omega_b, omega_r;
    for (std::size_t n = 0; n < instance.size(); ++n) {
      omega_b.push_back(omega_defender(instance, n));
      omega_r.push_back(omega_attacker(instance, n));
    }
    c.check_vector("defender omegas", omega_b, rationals({"10", "5", "13", "7", "4", "5", "9", "3"}));
    c.check_vector("attacker omegas", omega_r, rationals({"3", "5", "6", "7", "12", "20", "42", "-1"}));
  }

  {
    FeasibilityReport report = check_feasibility(instance);
    c.check("feasibility: first sum condition", report.sum_condition_one, 1);
    c.check("feasibility: second sum condition", report.sum_condition_two, 0);
    c.check("feasibility: verdict", report.feasible, true);
  }

  {
    std::span<const AssetParams> prefix(instance.assets().data(), instance.size() - 1);
    AnchorParams anchor = solve_anchor(prefix);
    c.check("anchor solve: attacker reward", anchor.reward_attacker, 4);
    c.check("anchor solve: attacker cost", anchor.cost_attacker, -5);
    c.check("anchor omega identity", anchor_omega_identity(instance), -1);
  }

  {
    DefenseFamily family(instance);
    c.check_vector("defense family at 0", family.at(Rational(0)).entries(),
                   rationals({"1/3", "1/5", "1/6", "1/7", "1/12", "1/20", "1/42", "0"}));
    c.check_vector("defense family at 1", family.at(Rational(1)).entries(),
                   rationals({"0", "0", "0", "0", "0", "0", "0", "1"}));
    auto [lo, hi] = feasible_anchor_interval(instance);
    c.check("anchor interval low end", lo, 0);
    c.check("anchor interval high end", hi, 1);
  }

  {
    auto deltas_of = [&](std::size_t n) {
      return compute_deltas(instance, AttackVector::unit(n, instance.size()));
    };
    DeltaTriple d8 = deltas_of(7), d5 = deltas_of(4), d1 = deltas_of(0);
    c.check_vector("deltas at pure attack 8", {d8.delta1, d8.delta2, d8.delta3},
                   rationals({"0", "3", "0"}));
    c.check_vector("deltas at pure attack 5", {d5.delta1, d5.delta2, d5.delta3},
                   rationals({"1/3", "-1/3", "-3"}));
    c.check_vector("deltas at pure attack 1", {d1.delta1, d1.delta2, d1.delta3},
                   rationals({"10/3", "-10/3", "2"}));
  }

  {
    SolveReport r8 = solve(instance, AttackVector::unit(7, instance.size()));
    c.check("solve e8: positive regime", r8.regime == Regime::Positive, true);
    c.check("solve e8: defender payoff", r8.defender_payoff, 3);
    c.check("solve e8: attacker payoff", r8.attacker_payoff, 5);

    SolveReport r5 = solve(instance, AttackVector::unit(4, instance.size()));
    c.check("solve e5: negative regime", r5.regime == Regime::Negative, true);
    c.check("solve e5: defender payoff", r5.defender_payoff, Rational(10, 3));
    c.check("solve e5: attacker payoff", r5.attacker_payoff, 4);

    SolveReport r7 = solve(instance, AttackVector::unit(6, instance.size()));
    c.check("solve e7: negative regime", r7.regime == Regime::Negative, true);
    c.check("solve e7: defender payoff", r7.defender_payoff, Rational(-39, 14));
    c.check("solve e7: attacker payoff", r7.attacker_payoff, 4);
  }

  {
    PayoffCoefficients coeffs = defender_payoff_coefficients(instance);
    c.check_vector("payoff coefficients c1", coeffs.c1,
                   rationals({"-2", "1", "-4", "-2", "3", "-1", "-3", "3"}));
    c.check_vector("payoff coefficients c2", coeffs.c2,
                   rationals({"4/3", "2", "-11/6", "-1", "10/3", "-3/4", "-39/14", "0"}));
  }

  {
    HyperplaneProblem problem = build_hyperplane_problem(instance);
    c.check_vector("hyperplane coefficients", problem.alpha,
                   rationals({"19/3", "4", "31/6", "4", "10/3", "13/4", "45/14"}));
    c.check("hyperplane right-hand side", problem.rhs, 3);
    c.check_vector("hyperplane objective", problem.objective,
                   rationals({"4/3", "2", "-11/6", "-1", "10/3", "-3/4", "-39/14"}));

    RatioTable ratios = payoff_ratios(problem);
    std::vector<Rational> got;
    for (const auto& r : ratios.ratios) got.push_back(r.value_or(Rational(0)));
    c.check_vector("payoff ratios", got,
                   rationals({"12/19", "3/2", "-33/31", "-3/4", "3", "-9/13", "-13/5"}));
    c.check("all seven ratios single-index feasible",
            ratios.feasible_indices.size() == problem.alpha.size(), true);

    ConstrainedExtrema extrema = constrained_extrema(problem);
    c.check("constrained minimum", extrema.min_value, Rational(-13, 5));
    c.check_vector("constrained minimizer", extrema.min_attack.entries(),
                   rationals({"0", "0", "0", "0", "0", "0", "14/15", "1/15"}));
    c.check("constrained maximum", extrema.max_value, 3);
    c.check_vector("constrained maximizer", extrema.max_attack.entries(),
                   rationals({"0", "0", "0", "0", "9/10", "0", "0", "1/10"}));
    c.check("maximum stays within 5", exceeds_threshold(problem, 5), false);

    ConstrainedBruteForce brute = brute_force_constrained_attacker(instance);
    c.check("brute-force constrained minimum", brute.min_value, Rational(-13, 5));
    c.check("brute-force constrained maximum", brute.max_value, 3);
  }

  {
    PayoffRegion region = build_payoff_region(instance);
    std::vector<Rational> xs, ys;
    for (const PlanarPoint& p : region.vertices) {
      xs.push_back(p.x);
      ys.push_back(p.y);
    }
    c.check_vector("vertex image first coordinates", xs,
                   rationals({"-2", "1", "-4", "-2", "3", "-1", "-3", "3"}));
    c.check_vector("vertex image second coordinates", ys,
                   rationals({"4/3", "2", "-11/6", "-1", "10/3", "-3/4", "-39/14", "0"}));
    c.check("unique maximal point", region.pareto.size() == 1, true);
    if (region.pareto.size() == 1) {
      c.check("maximal point first coordinate", region.pareto[0].x, 3);
      c.check("maximal point second coordinate", region.pareto[0].y, Rational(10, 3));
    }
  }

  {
    c.check("attacker payoff on family at 1", attacker_equilibrium_payoff(instance, Rational(1)), 5);
    c.check("attacker payoff on family at 0", attacker_equilibrium_payoff(instance, Rational(0)), 4);
  }

  out << "selftest: " << (c.total - c.failures) << '/' << c.total << " checks passed\n";
  return c.failures;
}

}  // namespace stackgame
