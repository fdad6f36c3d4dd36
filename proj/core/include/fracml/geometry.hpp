#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fracml {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Closed polygon indexed by a bounding-box tree over runs of consecutive
/// segments. Supports even-odd containment and exact nearest-segment distance
/// in roughly O(log n) per query for well-sampled curves.
///
/// The vertex list may repeat the first vertex at the end; the closing edge is
/// implied either way.
class ClosedPolygon {
 public:
  explicit ClosedPolygon(std::vector<Point2> vertices);

  std::span<const Point2> vertices() const noexcept { return v_; }

  bool contains(Point2 p) const;
  double distance(Point2 p) const;
  /// Distance to the boundary, negative inside.
  double signed_distance(Point2 p) const;

 private:
  struct Segment {
    Point2 a;
    Point2 b;
  };

  struct Node {
    double xmin, xmax, ymin, ymax;
    std::size_t lo, hi;  // segment range [lo, hi)
    std::size_t left, right;  // child indices; 0 for leaves
  };

  std::size_t build(std::size_t lo, std::size_t hi);
  double segment_distance(std::size_t seg, Point2 p) const;
  static double box_distance(const Node& n, Point2 p);

  std::vector<Point2> v_;
  std::vector<Segment> seg_;
  std::vector<Node> nodes_;  // nodes_[0] is the root
};

}  // namespace fracml
