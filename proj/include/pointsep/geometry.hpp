#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "pointsep/quadratic.hpp"
#include "pointsep/rational.hpp"

namespace pointsep {

struct Point {
    Rational x{0};
    Rational y{0};
};

inline bool operator==(const Point& p, const Point& q) { return p.x == q.x && p.y == q.y; }
inline bool operator!=(const Point& p, const Point& q) { return !(p == q); }
bool operator<(const Point& p, const Point& q);  // lexicographic, for ordered keys

/// Sign of the signed area of triangle pqr: +1 counterclockwise, 0 collinear.
int orientation(const Point& p, const Point& q, const Point& r);

Rational cross(const Point& o, const Point& a, const Point& b);
Rational dist2(const Point& p, const Point& q);
Rational segment_dist2(const Point& p, const Point& a, const Point& b);
bool point_on_segment(const Point& p, const Point& a, const Point& b);

struct Segment {
    Point a, b;
};

struct Disk {
    Point center;
    Rational radius;
};

struct ConvexPolygon {
    std::vector<Point> vertices;  // counterclockwise, strictly convex
    bool filled = true;
};

struct Polyline {
    std::vector<Point> vertices;
};

using GeometricObject = std::variant<Disk, Segment, ConvexPolygon, Polyline>;

const char* object_type_name(const GeometricObject& o);

/// Closed-set membership (boundary points are members; tangency counts).
bool point_in_object(const Point& p, const GeometricObject& o);

/// Closed-set intersection over every type pair, exact.
bool objects_intersect(const GeometricObject& o1, const GeometricObject& o2);

/// One exact common point when the objects intersect; empty otherwise.
std::optional<Point> intersection_witness(const GeometricObject& o1, const GeometricObject& o2);

/// Number of proper crossings of the path with the open barrier segment,
/// mod 2. Throws DegenerateConfiguration when a general-position
/// precondition fails (vertex on barrier, collinear overlap, pass through a
/// barrier endpoint).
int crossing_parity_polyline(const Polyline& path, const Segment& barrier);

/// Proper crossing of one edge with the open barrier; returns the parameter
/// along the edge, or nullopt when the edge misses the open barrier.
/// Throws DegenerateConfiguration on the same precondition violations.
std::optional<Rational> edge_barrier_crossing(const Point& a, const Point& b, const Point& s,
                                              const Point& t);

/// Exact parameter interval of o ∩ segment(s,t) in [0,1]. Endpoints are
/// degree-2 algebraic for disks, rational otherwise. Throws NotConvex for a
/// polyline of more than two non-collinear vertices.
struct StInterval {
    QuadExpr lo, hi;
};
std::optional<StInterval> st_interval(const GeometricObject& o, const Point& s, const Point& t);

// ---- helpers shared with the lift machinery ------------------------------

struct SegSegHit {
    enum Kind { None, At, Overlap } kind = None;
    Point p, q;  // single point in p; overlap endpoints in p..q
};
SegSegHit seg_seg_intersection(const Point& a, const Point& b, const Point& c, const Point& d);

bool point_in_convex(const Point& p, const std::vector<Point>& ccw);
bool on_polygon_boundary(const Point& p, const std::vector<Point>& ccw);

/// Convex polygon clipped to {p : side * orient(s,t,p) >= 0}.
struct ClipResult {
    enum Kind { Empty, At, Seg, Poly } kind = Empty;
    std::vector<Point> pts;
};
ClipResult clip_convex_by_halfplane(const std::vector<Point>& ccw, const Point& s, const Point& t,
                                    int side);

/// Parameter of p along the directed line s->t (p need not be on the line;
/// this is the orthogonal projection parameter).
Rational line_param(const Point& s, const Point& t, const Point& p);

bool is_strictly_convex_ccw(const std::vector<Point>& vertices);
bool is_simple_polyline(const std::vector<Point>& vertices);

}  // namespace pointsep
