#include <doctest.h>

#include <sstream>

#include "stackgame/payoff_region.hpp"
#include "stackgame/stackelberg_solver.hpp"
#include "support/fixtures.hpp"

using namespace stackgame;
using namespace stackgame::testing;

namespace {

PlanarPoint pt(const char* x, const char* y) { return PlanarPoint{rat(x), rat(y), std::nullopt}; }

std::vector<PlanarPoint> example_points() {
  return {pt("-2", "4/3"), pt("1", "2"),      pt("-4", "-11/6"), pt("-2", "-1"),
          pt("3", "10/3"), pt("-1", "-3/4"),  pt("-3", "-39/14"), pt("3", "0")};
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0, pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

}  // namespace

TEST_CASE("vertex images are the coefficient pairs") {
  std::vector<PlanarPoint> points = vertex_images(example_instance());
  REQUIRE(points.size() == 8);
  std::vector<PlanarPoint> expected = example_points();
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(points[i] == expected[i]);
    CHECK(points[i].source_index == i);
    CHECK(points[i].label() == "p" + std::to_string(i + 1));
  }

  for (const PlanarPoint& p : vertex_images(zero_defender_instance())) {
    CHECK(p == pt("0", "0"));
  }

  // independent route: evaluate the defender payoff at the interval ends
  GameInstance three = three_asset_instance();
  DefenseFamily family(three);
  auto [lo, hi] = feasible_anchor_interval(three);
  std::vector<PlanarPoint> images = vertex_images(three);
  for (std::size_t i = 0; i < 3; ++i) {
    AttackVector attack = AttackVector::unit(i, 3);
    CHECK(images[i].x == defender_payoff(three, family.at(hi), attack));
    CHECK(images[i].y == defender_payoff(three, family.at(lo), attack));
  }
}

TEST_CASE("convex hull handles the textbook degenerate cases") {
  // unit square plus center: the four corners, counterclockwise
  std::vector<PlanarPoint> square{pt("0", "0"), pt("1", "0"), pt("1", "1"), pt("0", "1"),
                                  pt("1/2", "1/2")};
  std::vector<PlanarPoint> hull = convex_hull_2d(square);
  REQUIRE(hull.size() == 4);
  CHECK(hull[0] == pt("0", "0"));
  CHECK(hull[1] == pt("1", "0"));
  CHECK(hull[2] == pt("1", "1"));
  CHECK(hull[3] == pt("0", "1"));

  // collinear points collapse to the extreme pair
  std::vector<PlanarPoint> col{pt("0", "0"), pt("1", "1"), pt("2", "2")};
  std::vector<PlanarPoint> segment = convex_hull_2d(col);
  REQUIRE(segment.size() == 2);
  CHECK(segment[0] == pt("0", "0"));
  CHECK(segment[1] == pt("2", "2"));

  // duplicates collapse
  CHECK(convex_hull_2d({pt("1", "1"), pt("1", "1")}).size() == 1);
  CHECK_THROWS_AS(convex_hull_2d({}), ValidationError);
}

TEST_CASE("the example hull keeps exactly the extreme images") {
  std::vector<PlanarPoint> points = vertex_images(example_instance());
  std::vector<PlanarPoint> hull = convex_hull_2d(points);

  std::vector<std::string> labels;
  for (const PlanarPoint& p : hull) labels.push_back(p.label());
  CHECK(labels == std::vector<std::string>{"p3", "p7", "p8", "p5", "p1"});

  // counterclockwise and strictly convex
  REQUIRE(hull.size() >= 3);
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const PlanarPoint& a = hull[i];
    const PlanarPoint& b = hull[(i + 1) % hull.size()];
    const PlanarPoint& c = hull[(i + 2) % hull.size()];
    CHECK(cross(a, b, c) > 0);
  }

  // a point belongs on the hull exactly when the others do not contain it
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<PlanarPoint> others;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j != i) others.push_back(points[j]);
    }
    bool expressible = inside_or_on_hull(convex_hull_2d(others), points[i]);
    bool on_hull = std::find(hull.begin(), hull.end(), points[i]) != hull.end();
    CHECK(on_hull == !expressible);
  }

  // idempotence
  CHECK(convex_hull_2d(hull) == hull);
}

TEST_CASE("pareto frontier keeps exactly the undominated points") {
  std::vector<PlanarPoint> points = vertex_images(example_instance());
  std::vector<PlanarPoint> frontier = pareto_frontier(points);
  REQUIRE(frontier.size() == 1);
  CHECK(frontier[0] == pt("3", "10/3"));
  CHECK(frontier[0].label() == "p5");

  std::vector<PlanarPoint> incomparable{pt("0", "1"), pt("1", "0")};
  CHECK(pareto_frontier(incomparable).size() == 2);

  // duplicated maximal point: both copies survive weak dominance
  std::vector<PlanarPoint> dup{pt("3", "3"), pt("3", "3"), pt("1", "1")};
  CHECK(pareto_frontier(dup).size() == 2);
}

TEST_CASE("attack mixtures map to convex combinations") {
  GameInstance instance = example_instance();
  CHECK(point_for_attack(instance, AttackVector::unit(4, 8)) == pt("3", "10/3"));
  CHECK(point_for_attack(instance, AttackVector(rats({"0", "1/2", "0", "0", "0", "0", "0", "1/2"}))) ==
        pt("2", "1"));

  PlanarPoint mean = point_for_attack(instance, AttackVector::uniform(8));
  Rational sx, sy;
  for (const PlanarPoint& p : example_points()) {
    sx += p.x;
    sy += p.y;
  }
  CHECK(mean.x == sx / 8);
  CHECK(mean.y == sy / 8);
  CHECK(mean.label() == "mixture");

  RandomGen gen(61);
  for (int i = 0; i < 10; ++i) {
    AttackVector a1 = gen.attack(8), a2 = gen.attack(8);
    Rational lambda(gen.pick(0, 6), 6);
    PlanarPoint p1 = point_for_attack(instance, a1);
    PlanarPoint p2 = point_for_attack(instance, a2);
    PlanarPoint pm = point_for_attack(instance, mix(a1, a2, lambda));
    CHECK(pm.x == lambda * p1.x + (Rational(1) - lambda) * p2.x);
    CHECK(pm.y == lambda * p1.y + (Rational(1) - lambda) * p2.y);
  }

  CHECK_THROWS_AS(point_for_attack(instance, AttackVector::uniform(3)), ValidationError);
}

TEST_CASE("every mixture lands inside or on the hull") {
  GameInstance instance = example_instance();
  PayoffRegion region = build_payoff_region(instance);
  RandomGen gen(67);
  for (int i = 0; i < 250; ++i) {
    CHECK(inside_or_on_hull(region.hull, point_for_attack(instance, gen.attack(8))));
  }
  // boundary and outside checks
  CHECK(inside_or_on_hull(region.hull, pt("3", "1")));     // on the right edge
  CHECK(inside_or_on_hull(region.hull, pt("-4", "-11/6")));
  CHECK_FALSE(inside_or_on_hull(region.hull, pt("4", "0")));
  CHECK_FALSE(inside_or_on_hull(region.hull, pt("-4", "0")));
}

TEST_CASE("the region table is the exact CSV golden") {
  PayoffRegion region = build_payoff_region(example_instance());
  std::ostringstream table;
  write_region_table(region, table);
  CHECK(table.str() ==
        "index,label,pi_b1,pi_b2,on_hull,pareto\n"
        "1,p1,-2,4/3,true,false\n"
        "2,p2,1,2,false,false\n"
        "3,p3,-4,-11/6,true,false\n"
        "4,p4,-2,-1,false,false\n"
        "5,p5,3,10/3,true,true\n"
        "6,p6,-1,-3/4,false,false\n"
        "7,p7,-3,-39/14,true,false\n"
        "8,p8,3,0,true,false\n");
}

TEST_CASE("the SVG plot carries the hull, labels and highlight") {
  PayoffRegion region = build_payoff_region(example_instance());
  std::ostringstream svg1, svg2;
  render_region_svg(region, svg1);
  render_region_svg(region, svg2);
  CHECK(svg1.str() == svg2.str());  // deterministic

  const std::string& text = svg1.str();
  CHECK(text.find("<svg") != std::string::npos);
  CHECK(count_occurrences(text, "<polygon") == 1);
  CHECK(count_occurrences(text, "<circle") == 9);  // 8 vertices + 1 highlight
  for (int i = 1; i <= 8; ++i) {
    CHECK(text.find(">p" + std::to_string(i) + "<") != std::string::npos);
  }
  CHECK(text.find("\xCE\xA0_B^(1)") != std::string::npos);
  CHECK(text.find("\xCE\xA0_B^(2)") != std::string::npos);

  // degenerate regions still render
  PayoffRegion single{{pt("1", "1")}, {pt("1", "1")}, {pt("1", "1")}};
  std::ostringstream svg3;
  render_region_svg(single, svg3);
  CHECK(svg3.str().find("<circle") != std::string::npos);
  CHECK(svg3.str().find("<polygon") == std::string::npos);

  PayoffRegion segment{{pt("0", "0"), pt("2", "1")},
                       {pt("0", "0"), pt("2", "1")},
                       {pt("2", "1")}};
  std::ostringstream svg4;
  render_region_svg(segment, svg4);
  CHECK(svg4.str().find("<polyline") != std::string::npos);
}
