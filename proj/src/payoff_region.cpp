#include "stackgame/payoff_region.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "stackgame/stackelberg_solver.hpp"

namespace stackgame {

std::string PlanarPoint::label() const {
  return source_index ? "p" + std::to_string(*source_index + 1) : "mixture";
}

Rational cross(const PlanarPoint& o, const PlanarPoint& a, const PlanarPoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

std::vector<PlanarPoint> vertex_images(const GameInstance& instance) {
  PayoffCoefficients coeffs = defender_payoff_coefficients(instance);
  std::vector<PlanarPoint> points;
  points.reserve(instance.size());
  for (std::size_t n = 0; n < instance.size(); ++n) {
    points.push_back({coeffs.c1[n], coeffs.c2[n], n});
  }
  return points;
}

std::vector<PlanarPoint> convex_hull_2d(std::vector<PlanarPoint> points) {
  if (points.empty()) {
    throw ValidationError("convex hull of an empty point set");
  }
  auto lex_less = [](const PlanarPoint& a, const PlanarPoint& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  };
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() <= 2) return points;

  std::vector<PlanarPoint> hull;
  hull.reserve(points.size() * 2);
  // lower chain
  for (const PlanarPoint& p : points) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) {
      hull.pop_back();
    }
    hull.push_back(p);
  }
  // upper chain
  const std::size_t lower_size = hull.size() + 1;
  for (auto it = points.rbegin() + 1; it != points.rend(); ++it) {
    while (hull.size() >= lower_size && cross(hull[hull.size() - 2], hull.back(), *it) <= 0) {
      hull.pop_back();
    }
    hull.push_back(*it);
  }
  hull.pop_back();  // last point repeats the first
  return hull;
}

std::vector<PlanarPoint> pareto_frontier(std::span<const PlanarPoint> points) {
  std::vector<PlanarPoint> frontier;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < points.size() && !dominated; ++j) {
      if (j == i) continue;
      const PlanarPoint& p = points[j];
      const PlanarPoint& q = points[i];
      dominated = p.x >= q.x && p.y >= q.y && (p.x > q.x || p.y > q.y);
    }
    if (!dominated) frontier.push_back(points[i]);
  }
  return frontier;
}

PlanarPoint point_for_attack(const GameInstance& instance, const AttackVector& attack) {
  if (attack.size() != instance.size()) {
    throw ValidationError("attack vector has length " + std::to_string(attack.size()) +
                          " but the instance has " + std::to_string(instance.size()) + " assets");
  }
  PayoffCoefficients coeffs = defender_payoff_coefficients(instance);
  PlanarPoint p{Rational(0), Rational(0), std::nullopt};
  for (std::size_t n = 0; n < instance.size(); ++n) {
    p.x += coeffs.c1[n] * attack[n];
    p.y += coeffs.c2[n] * attack[n];
  }
  return p;
}

bool inside_or_on_hull(std::span<const PlanarPoint> hull, const PlanarPoint& p) {
  if (hull.empty()) return false;
  if (hull.size() == 1) return p == hull[0];
  if (hull.size() == 2) {
    if (!cross(hull[0], hull[1], p).is_zero()) return false;
    const auto& [lo_x, hi_x] = std::minmax(hull[0].x, hull[1].x);
    const auto& [lo_y, hi_y] = std::minmax(hull[0].y, hull[1].y);
    return p.x >= lo_x && p.x <= hi_x && p.y >= lo_y && p.y <= hi_y;
  }
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const PlanarPoint& a = hull[i];
    const PlanarPoint& b = hull[(i + 1) % hull.size()];
    if (cross(a, b, p) < 0) return false;  // strictly right of a CCW edge
  }
  return true;
}

PayoffRegion build_payoff_region(const GameInstance& instance) {
  PayoffRegion region;
  region.vertices = vertex_images(instance);
  region.hull = convex_hull_2d(region.vertices);
  region.pareto = pareto_frontier(region.vertices);
  return region;
}

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct Mapper {
  double min_x, max_x, min_y, max_y;
  double px0, px1, py0, py1;  // screen box; py0 is the top edge

  double sx(double x) const { return px0 + (x - min_x) / (max_x - min_x) * (px1 - px0); }
  double sy(double y) const { return py1 - (y - min_y) / (max_y - min_y) * (py1 - py0); }
};

}  // namespace

void render_region_svg(const PayoffRegion& region, std::ostream& out) {
  if (region.vertices.empty()) {
    throw ValidationError("cannot render an empty region");
  }
  double min_x = region.vertices[0].x.to_double(), max_x = min_x;
  double min_y = region.vertices[0].y.to_double(), max_y = min_y;
  for (const PlanarPoint& p : region.vertices) {
    min_x = std::min(min_x, p.x.to_double());
    max_x = std::max(max_x, p.x.to_double());
    min_y = std::min(min_y, p.y.to_double());
    max_y = std::max(max_y, p.y.to_double());
  }
  double span_x = max_x - min_x, span_y = max_y - min_y;
  if (span_x == 0) { min_x -= 1; max_x += 1; span_x = 2; }
  if (span_y == 0) { min_y -= 1; max_y += 1; span_y = 2; }
  min_x -= 0.08 * span_x;
  max_x += 0.08 * span_x;
  min_y -= 0.08 * span_y;
  max_y += 0.08 * span_y;

  const Mapper map{min_x, max_x, min_y, max_y, 70.0, 610.0, 30.0, 425.0};

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
         "viewBox=\"0 0 640 480\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" fill=\"white\"/>\n"
      << "<rect x=\"70\" y=\"30\" width=\"540\" height=\"395\" fill=\"none\" "
         "stroke=\"#999999\"/>\n";

  // axis ticks
  for (int i = 0; i <= 4; ++i) {
    double wx = min_x + (max_x - min_x) * i / 4.0;
    double wy = min_y + (max_y - min_y) * i / 4.0;
    double tx = map.sx(wx), ty = map.sy(wy);
    out << "<line x1=\"" << fmt(tx) << "\" y1=\"425\" x2=\"" << fmt(tx)
        << "\" y2=\"430\" stroke=\"#555555\"/>\n"
        << "<text x=\"" << fmt(tx) << "\" y=\"443\" font-size=\"11\" "
           "font-family=\"sans-serif\" text-anchor=\"middle\">" << fmt(wx) << "</text>\n"
        << "<line x1=\"65\" y1=\"" << fmt(ty) << "\" x2=\"70\" y2=\"" << fmt(ty)
        << "\" stroke=\"#555555\"/>\n"
        << "<text x=\"60\" y=\"" << fmt(ty + 4) << "\" font-size=\"11\" "
           "font-family=\"sans-serif\" text-anchor=\"end\">" << fmt(wy) << "</text>\n";
  }
  out << "<text x=\"340\" y=\"468\" font-size=\"14\" font-family=\"sans-serif\" "
         "text-anchor=\"middle\">\xCE\xA0_B^(1)</text>\n"
      << "<text x=\"18\" y=\"228\" font-size=\"14\" font-family=\"sans-serif\" "
         "text-anchor=\"middle\" transform=\"rotate(-90 18 228)\">\xCE\xA0_B^(2)</text>\n";

  if (region.hull.size() >= 3) {
    out << "<polygon points=\"";
    for (std::size_t i = 0; i < region.hull.size(); ++i) {
      if (i) out << ' ';
      out << fmt(map.sx(region.hull[i].x.to_double())) << ','
          << fmt(map.sy(region.hull[i].y.to_double()));
    }
    out << "\" fill=\"#cfe0f2\" fill-opacity=\"0.6\" stroke=\"#2a6fb0\" "
           "stroke-width=\"1.5\"/>\n";
  } else if (region.hull.size() == 2) {
    out << "<polyline points=\""
        << fmt(map.sx(region.hull[0].x.to_double())) << ','
        << fmt(map.sy(region.hull[0].y.to_double())) << ' '
        << fmt(map.sx(region.hull[1].x.to_double())) << ','
        << fmt(map.sy(region.hull[1].y.to_double()))
        << "\" fill=\"none\" stroke=\"#2a6fb0\" stroke-width=\"1.5\"/>\n";
  }

  for (const PlanarPoint& p : region.vertices) {
    double x = map.sx(p.x.to_double()), y = map.sy(p.y.to_double());
    out << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
        << "\" r=\"4\" fill=\"#16324f\"/>\n"
        << "<text x=\"" << fmt(x + 7) << "\" y=\"" << fmt(y - 7)
        << "\" font-size=\"12\" font-family=\"sans-serif\">" << p.label() << "</text>\n";
  }
  for (const PlanarPoint& p : region.pareto) {
    out << "<circle cx=\"" << fmt(map.sx(p.x.to_double())) << "\" cy=\""
        << fmt(map.sy(p.y.to_double()))
        << "\" r=\"8\" fill=\"none\" stroke=\"#c23b22\" stroke-width=\"2\"/>\n";
  }
  out << "</svg>\n";
}

void write_region_table(const PayoffRegion& region, std::ostream& out) {
  auto contains = [](const std::vector<PlanarPoint>& set, const PlanarPoint& p) {
    return std::find(set.begin(), set.end(), p) != set.end();
  };
  out << "index,label,pi_b1,pi_b2,on_hull,pareto\n";
  for (std::size_t i = 0; i < region.vertices.size(); ++i) {
    const PlanarPoint& p = region.vertices[i];
    out << (i + 1) << ',' << p.label() << ',' << p.x.str() << ',' << p.y.str() << ','
        << (contains(region.hull, p) ? "true" : "false") << ','
        << (contains(region.pareto, p) ? "true" : "false") << '\n';
  }
}

}  // namespace stackgame
