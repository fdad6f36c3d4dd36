#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "fracml/geometry.hpp"

namespace fracml {

namespace {
constexpr std::size_t kLeafSize = 8;
constexpr std::size_t kStackDepth = 128;
}  // namespace

ClosedPolygon::ClosedPolygon(std::vector<Point2> vertices)
    : v_(std::move(vertices)) {
  if (v_.size() < 3) {
    throw std::invalid_argument("a closed polygon needs at least 3 vertices");
  }
  for (const auto& p : v_) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw std::invalid_argument("polygon vertices must be finite");
    }
  }
  const std::size_t nv = v_.size();
  const bool explicitly_closed =
      v_.front().x == v_.back().x && v_.front().y == v_.back().y;
  const std::size_t nseg = explicitly_closed ? nv - 1 : nv;
  seg_.reserve(nseg);
  for (std::size_t i = 0; i < nseg; ++i) {
    seg_.push_back({v_[i], v_[(i + 1) % nv]});
  }
  nodes_.reserve(2 * (nseg / kLeafSize + 1));
  build(0, nseg);
}

std::size_t ClosedPolygon::build(std::size_t lo, std::size_t hi) {
  const std::size_t id = nodes_.size();
  Node n{std::numeric_limits<double>::infinity(),
         -std::numeric_limits<double>::infinity(),
         std::numeric_limits<double>::infinity(),
         -std::numeric_limits<double>::infinity(), lo, hi, 0, 0};
  for (std::size_t s = lo; s < hi; ++s) {
    for (const Point2& q : {seg_[s].a, seg_[s].b}) {
      n.xmin = std::min(n.xmin, q.x);
      n.xmax = std::max(n.xmax, q.x);
      n.ymin = std::min(n.ymin, q.y);
      n.ymax = std::max(n.ymax, q.y);
    }
  }
  nodes_.push_back(n);
  if (hi - lo > kLeafSize) {
    const std::size_t mid = lo + (hi - lo) / 2;
    const std::size_t l = build(lo, mid);
    const std::size_t r = build(mid, hi);
    nodes_[id].left = l;
    nodes_[id].right = r;
  }
  return id;
}

bool ClosedPolygon::contains(Point2 p) const {
  // Even-odd ray cast towards +x, skipping runs whose box the ray misses.
  bool inside = false;
  std::size_t stack[kStackDepth];
  std::size_t top = 0;
  stack[top++] = 0;
  while (top > 0) {
    const Node& n = nodes_[stack[--top]];
    if (p.y < n.ymin || p.y > n.ymax || p.x > n.xmax) continue;
    if (n.left != 0) {
      stack[top++] = n.left;
      stack[top++] = n.right;
      continue;
    }
    for (std::size_t s = n.lo; s < n.hi; ++s) {
      const auto& [a, b] = seg_[s];
      if ((a.y > p.y) != (b.y > p.y)) {
        const double xc = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
        if (p.x < xc) inside = !inside;
      }
    }
  }
  return inside;
}

double ClosedPolygon::segment_distance(std::size_t s, Point2 p) const {
  const auto& [a, b] = seg_[s];
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double u = 0.0;
  if (len2 > 0.0) {
    u = std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / len2, 0.0, 1.0);
  }
  return std::hypot(p.x - (a.x + u * dx), p.y - (a.y + u * dy));
}

double ClosedPolygon::box_distance(const Node& n, Point2 p) {
  const double dx = std::max({n.xmin - p.x, 0.0, p.x - n.xmax});
  const double dy = std::max({n.ymin - p.y, 0.0, p.y - n.ymax});
  return std::hypot(dx, dy);
}

double ClosedPolygon::distance(Point2 p) const {
  // Depth-first, nearer child first, pruning boxes farther than the best hit.
  double best = std::numeric_limits<double>::infinity();
  std::size_t stack[kStackDepth];
  std::size_t top = 0;
  stack[top++] = 0;
  while (top > 0) {
    const Node& n = nodes_[stack[--top]];
    if (box_distance(n, p) >= best) continue;
    if (n.left != 0) {
      const double dl = box_distance(nodes_[n.left], p);
      const double dr = box_distance(nodes_[n.right], p);
      if (dl <= dr) {
        stack[top++] = n.right;
        stack[top++] = n.left;
      } else {
        stack[top++] = n.left;
        stack[top++] = n.right;
      }
      continue;
    }
    for (std::size_t s = n.lo; s < n.hi; ++s) {
      best = std::min(best, segment_distance(s, p));
    }
  }
  return best;
}

double ClosedPolygon::signed_distance(Point2 p) const {
  const double d = distance(p);
  return contains(p) ? -d : d;
}

}  // namespace fracml
