#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stackgame/game_model.hpp"

namespace stackgame {

/// Point in the two-payoff plane (high-endpoint payoff, low-endpoint payoff).
/// Vertex images carry the 0-based index of the pure attack that produced
/// them; mixture points carry none. Equality compares coordinates only.
struct PlanarPoint {
  Rational x;
  Rational y;
  std::optional<std::size_t> source_index;

  std::string label() const;

  friend bool operator==(const PlanarPoint& a, const PlanarPoint& b) {
    return a.x == b.x && a.y == b.y;
  }
};

struct PayoffRegion {
  std::vector<PlanarPoint> vertices;  // one per asset, in asset order
  std::vector<PlanarPoint> hull;      // counterclockwise, strict turns only
  std::vector<PlanarPoint> pareto;    // maximal vertices under weak dominance
};

/// (a - o) x (b - o); positive for a left turn.
Rational cross(const PlanarPoint& o, const PlanarPoint& a, const PlanarPoint& b);

/// Images of the pure attacks under the two payoff coefficient vectors.
std::vector<PlanarPoint> vertex_images(const GameInstance& instance);

/// Monotone-chain hull over exact cross products. Counterclockwise order
/// starting from the lexicographically smallest point; collinear boundary
/// points dropped, duplicates collapsed. Degenerate inputs yield the single
/// point or segment.
std::vector<PlanarPoint> convex_hull_2d(std::vector<PlanarPoint> points);

/// Points not weakly dominated (>= in both coordinates, > in one) by any
/// other. Exact duplicates of a maximal point are all retained.
std::vector<PlanarPoint> pareto_frontier(std::span<const PlanarPoint> points);

/// Payoff-plane image of a mixed attack; always inside or on the hull of
/// the vertex images.
PlanarPoint point_for_attack(const GameInstance& instance, const AttackVector& attack);

/// Exact membership test against a counterclockwise hull.
bool inside_or_on_hull(std::span<const PlanarPoint> hull, const PlanarPoint& p);

PayoffRegion build_payoff_region(const GameInstance& instance);

/// Scalable vector graphic of the region: labeled vertices, hull polygon,
/// highlighted maximal points, axis labels.
void render_region_svg(const PayoffRegion& region, std::ostream& out);

/// Comma-delimited coordinate table, exact "p/q" values.
/// Header: index,label,pi_b1,pi_b2,on_hull,pareto
void write_region_table(const PayoffRegion& region, std::ostream& out);

}  // namespace stackgame
