#include "pointsep/geometry.hpp"

#include <algorithm>
#include <cstdlib>

#include "pointsep/errors.hpp"

namespace pointsep {

bool operator<(const Point& p, const Point& q) {
    int cx = cmp(p.x, q.x);
    if (cx != 0) return cx < 0;
    return cmp(p.y, q.y) < 0;
}

Rational cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

int orientation(const Point& p, const Point& q, const Point& r) { return sign(cross(p, q, r)); }

Rational dist2(const Point& p, const Point& q) {
    Rational dx = p.x - q.x, dy = p.y - q.y;
    return dx * dx + dy * dy;
}

static Rational dot_pq(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.x - o.x) + (a.y - o.y) * (b.y - o.y);
}

Rational segment_dist2(const Point& p, const Point& a, const Point& b) {
    if (a == b) return dist2(p, a);
    if (sign(dot_pq(a, b, p)) <= 0) return dist2(p, a);
    if (sign(dot_pq(b, a, p)) <= 0) return dist2(p, b);
    Rational c = cross(a, b, p);
    return c * c / dist2(a, b);
}

bool point_on_segment(const Point& p, const Point& a, const Point& b) {
    if (orientation(a, b, p) != 0) return false;
    return sign(dot_pq(p, a, b)) <= 0;  // p between a and b (inclusive)
}

Rational line_param(const Point& s, const Point& t, const Point& p) {
    return dot_pq(s, t, p) / dist2(s, t);
}

const char* object_type_name(const GeometricObject& o) {
    switch (o.index()) {
        case 0: return "disk";
        case 1: return "segment";
        case 2: return std::get<ConvexPolygon>(o).filled ? "polygon" : "polygon-outline";
        default: return "polyline";
    }
}

bool point_in_convex(const Point& p, const std::vector<Point>& ccw) {
    std::size_t n = ccw.size();
    for (std::size_t i = 0; i < n; ++i)
        if (orientation(ccw[i], ccw[(i + 1) % n], p) < 0) return false;
    return true;
}

bool on_polygon_boundary(const Point& p, const std::vector<Point>& ccw) {
    std::size_t n = ccw.size();
    for (std::size_t i = 0; i < n; ++i)
        if (point_on_segment(p, ccw[i], ccw[(i + 1) % n])) return true;
    return false;
}

bool point_in_object(const Point& p, const GeometricObject& o) {
    if (const auto* d = std::get_if<Disk>(&o)) return dist2(p, d->center) <= d->radius * d->radius;
    if (const auto* s = std::get_if<Segment>(&o)) return point_on_segment(p, s->a, s->b);
    if (const auto* g = std::get_if<ConvexPolygon>(&o))
        return g->filled ? point_in_convex(p, g->vertices) : on_polygon_boundary(p, g->vertices);
    const auto& pl = std::get<Polyline>(o);
    for (std::size_t i = 0; i + 1 < pl.vertices.size(); ++i)
        if (point_on_segment(p, pl.vertices[i], pl.vertices[i + 1])) return true;
    return false;
}

SegSegHit seg_seg_intersection(const Point& a, const Point& b, const Point& c, const Point& d) {
    int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
    int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
    SegSegHit hit;
    if (o1 == 0 && o2 == 0) {
        // collinear: overlap interval in params of [a,b]
        Rational len2 = dist2(a, b);
        Rational tc = dot_pq(a, b, c) / len2;
        Rational td = dot_pq(a, b, d) / len2;
        Rational lo = std::min(tc, td), hi = std::max(tc, td);
        if (lo < 0) lo = 0;
        if (hi > 1) hi = 1;
        if (lo > hi) return hit;
        Point P{a.x + lo * (b.x - a.x), a.y + lo * (b.y - a.y)};
        Point Q{a.x + hi * (b.x - a.x), a.y + hi * (b.y - a.y)};
        if (P == Q) {
            hit.kind = SegSegHit::At;
            hit.p = P;
        } else {
            hit.kind = SegSegHit::Overlap;
            hit.p = P;
            hit.q = Q;
        }
        return hit;
    }
    if (o1 * o2 < 0 && o3 * o4 < 0) {
        // param of intersection along c..d: solve orient(a,b, c+u(d-c)) = 0
        Rational oc = cross(a, b, c), od = cross(a, b, d);
        Rational u = oc / (oc - od);
        hit.kind = SegSegHit::At;
        hit.p = Point{c.x + u * (d.x - c.x), c.y + u * (d.y - c.y)};
        return hit;
    }
    // touching cases: one endpoint on the other segment
    for (const Point* e : {&c, &d})
        if (point_on_segment(*e, a, b)) {
            hit.kind = SegSegHit::At;
            hit.p = *e;
            return hit;
        }
    for (const Point* e : {&a, &b})
        if (point_on_segment(*e, c, d)) {
            hit.kind = SegSegHit::At;
            hit.p = *e;
            return hit;
        }
    return hit;
}

// ---- intersection dispatch ------------------------------------------------

namespace {

bool seg_intersects_edges(const Point& a, const Point& b, const std::vector<Point>& verts,
                          bool closed) {
    std::size_t n = verts.size();
    std::size_t m = closed ? n : n - 1;
    for (std::size_t i = 0; i < m; ++i)
        if (seg_seg_intersection(a, b, verts[i], verts[(i + 1) % n]).kind != SegSegHit::None)
            return true;
    return false;
}

Rational min_edge_dist2(const Point& p, const std::vector<Point>& verts, bool closed) {
    std::size_t n = verts.size();
    std::size_t m = closed ? n : n - 1;
    Rational best = segment_dist2(p, verts[0], verts[1 % n]);
    for (std::size_t i = 1; i < m; ++i)
        best = std::min(best, segment_dist2(p, verts[i], verts[(i + 1) % n]));
    return best;
}

bool disk_disk(const Disk& d1, const Disk& d2) {
    Rational rr = d1.radius + d2.radius;
    return dist2(d1.center, d2.center) <= rr * rr;
}

bool disk_segment(const Disk& d, const Point& a, const Point& b) {
    return segment_dist2(d.center, a, b) <= d.radius * d.radius;
}

bool disk_polygon(const Disk& d, const ConvexPolygon& g) {
    if (g.filled && point_in_convex(d.center, g.vertices)) return true;
    return min_edge_dist2(d.center, g.vertices, true) <= d.radius * d.radius;
}

bool disk_polyline(const Disk& d, const std::vector<Point>& verts) {
    return min_edge_dist2(d.center, verts, false) <= d.radius * d.radius;
}

bool segment_polygon(const Point& a, const Point& b, const ConvexPolygon& g) {
    if (g.filled && (point_in_convex(a, g.vertices) || point_in_convex(b, g.vertices))) return true;
    return seg_intersects_edges(a, b, g.vertices, true);
}

bool polygon_polygon(const ConvexPolygon& g1, const ConvexPolygon& g2) {
    if (g1.filled)
        for (const Point& v : g2.vertices)
            if (point_in_convex(v, g1.vertices)) return true;
    if (g2.filled)
        for (const Point& v : g1.vertices)
            if (point_in_convex(v, g2.vertices)) return true;
    std::size_t n1 = g1.vertices.size();
    for (std::size_t i = 0; i < n1; ++i)
        if (seg_intersects_edges(g1.vertices[i], g1.vertices[(i + 1) % n1], g2.vertices, true))
            return true;
    return false;
}

bool polygon_polyline(const ConvexPolygon& g, const std::vector<Point>& verts) {
    if (g.filled)
        for (const Point& v : verts)
            if (point_in_convex(v, g.vertices)) return true;
    for (std::size_t i = 0; i + 1 < verts.size(); ++i)
        if (seg_intersects_edges(verts[i], verts[i + 1], g.vertices, true)) return true;
    return false;
}

bool polyline_polyline(const std::vector<Point>& v1, const std::vector<Point>& v2) {
    for (std::size_t i = 0; i + 1 < v1.size(); ++i)
        if (seg_intersects_edges(v1[i], v1[i + 1], v2, false)) return true;
    return false;
}

Point lerp(const Point& a, const Point& b, const Rational& t) {
    return Point{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

/// Closest point to p on segment a..b (exact).
Point closest_on_segment(const Point& p, const Point& a, const Point& b) {
    if (a == b) return a;
    Rational t = dot_pq(a, b, p) / dist2(a, b);
    if (t <= 0) return a;
    if (t >= 1) return b;
    return lerp(a, b, t);
}

Point closest_on_edges(const Point& p, const std::vector<Point>& verts, bool closed) {
    std::size_t n = verts.size();
    std::size_t m = closed ? n : n - 1;
    Point best = closest_on_segment(p, verts[0], verts[1 % n]);
    Rational bd = dist2(p, best);
    for (std::size_t i = 1; i < m; ++i) {
        Point cand = closest_on_segment(p, verts[i], verts[(i + 1) % n]);
        Rational cd = dist2(p, cand);
        if (cd < bd) {
            bd = cd;
            best = cand;
        }
    }
    return best;
}

std::optional<Point> curve_curve_witness(const std::vector<Point>& v1, bool closed1,
                                         const std::vector<Point>& v2, bool closed2) {
    std::size_t n1 = v1.size(), n2 = v2.size();
    std::size_t m1 = closed1 ? n1 : n1 - 1, m2 = closed2 ? n2 : n2 - 1;
    for (std::size_t i = 0; i < m1; ++i)
        for (std::size_t j = 0; j < m2; ++j) {
            auto hit = seg_seg_intersection(v1[i], v1[(i + 1) % n1], v2[j], v2[(j + 1) % n2]);
            if (hit.kind != SegSegHit::None) return hit.p;
        }
    return std::nullopt;
}

std::vector<Point> object_curve(const GeometricObject& o, bool& closed) {
    if (const auto* s = std::get_if<Segment>(&o)) {
        closed = false;
        return {s->a, s->b};
    }
    if (const auto* g = std::get_if<ConvexPolygon>(&o)) {
        closed = true;
        return g->vertices;
    }
    closed = false;
    return std::get<Polyline>(o).vertices;
}

}  // namespace

bool objects_intersect(const GeometricObject& o1, const GeometricObject& o2) {
    if (o1.index() > o2.index()) return objects_intersect(o2, o1);

    if (const auto* d1 = std::get_if<Disk>(&o1)) {
        if (const auto* d2 = std::get_if<Disk>(&o2)) return disk_disk(*d1, *d2);
        if (const auto* s = std::get_if<Segment>(&o2)) return disk_segment(*d1, s->a, s->b);
        if (const auto* g = std::get_if<ConvexPolygon>(&o2)) return disk_polygon(*d1, *g);
        return disk_polyline(*d1, std::get<Polyline>(o2).vertices);
    }
    if (const auto* s1 = std::get_if<Segment>(&o1)) {
        if (const auto* s2 = std::get_if<Segment>(&o2))
            return seg_seg_intersection(s1->a, s1->b, s2->a, s2->b).kind != SegSegHit::None;
        if (const auto* g = std::get_if<ConvexPolygon>(&o2)) return segment_polygon(s1->a, s1->b, *g);
        return seg_intersects_edges(s1->a, s1->b, std::get<Polyline>(o2).vertices, false);
    }
    if (const auto* g1 = std::get_if<ConvexPolygon>(&o1)) {
        if (const auto* g2 = std::get_if<ConvexPolygon>(&o2)) return polygon_polygon(*g1, *g2);
        return polygon_polyline(*g1, std::get<Polyline>(o2).vertices);
    }
    return polyline_polyline(std::get<Polyline>(o1).vertices, std::get<Polyline>(o2).vertices);
}

std::optional<Point> intersection_witness(const GeometricObject& o1, const GeometricObject& o2) {
    if (!objects_intersect(o1, o2)) return std::nullopt;

    if (o1.index() > o2.index()) return intersection_witness(o2, o1);

    if (const auto* d1 = std::get_if<Disk>(&o1)) {
        if (const auto* d2 = std::get_if<Disk>(&o2)) {
            if (d1->center == d2->center) return d1->center;
            Rational t = d1->radius / (d1->radius + d2->radius);
            return lerp(d1->center, d2->center, t);
        }
        if (const auto* s = std::get_if<Segment>(&o2)) return closest_on_segment(d1->center, s->a, s->b);
        if (const auto* g = std::get_if<ConvexPolygon>(&o2)) {
            if (g->filled && point_in_convex(d1->center, g->vertices)) return d1->center;
            return closest_on_edges(d1->center, g->vertices, true);
        }
        return closest_on_edges(d1->center, std::get<Polyline>(o2).vertices, false);
    }

    // both linear: look for containment witnesses first, then edge hits
    bool closed1 = false, closed2 = false;
    std::vector<Point> c1 = object_curve(o1, closed1), c2 = object_curve(o2, closed2);
    const auto* g1 = std::get_if<ConvexPolygon>(&o1);
    const auto* g2 = std::get_if<ConvexPolygon>(&o2);
    if (g1 && g1->filled)
        for (const Point& v : c2)
            if (point_in_convex(v, g1->vertices)) return v;
    if (g2 && g2->filled)
        for (const Point& v : c1)
            if (point_in_convex(v, g2->vertices)) return v;
    if (auto w = curve_curve_witness(c1, closed1, c2, closed2)) return w;
    // filled-filled with one containing the other: boundaries disjoint
    if (g1 && g1->filled && g2 && g2->filled) {
        if (point_in_convex(c2[0], g1->vertices)) return c2[0];
        if (point_in_convex(c1[0], g2->vertices)) return c1[0];
    }
    return std::nullopt;
}

// ---- barrier crossings -----------------------------------------------------

std::optional<Rational> edge_barrier_crossing(const Point& a, const Point& b, const Point& s,
                                              const Point& t) {
    int oa = orientation(s, t, a), ob = orientation(s, t, b);
    if (oa == 0 && ob == 0) {
        // collinear edge: reject any contact with the closed barrier
        Rational len2 = dist2(s, t);
        Rational ta = dot_pq(s, t, a) / len2, tb = dot_pq(s, t, b) / len2;
        if (std::max(Rational(0), std::min(ta, tb)) <= std::min(Rational(1), std::max(ta, tb)))
            throw DegenerateConfiguration("edge collinear-overlapping with barrier");
        return std::nullopt;
    }
    if (oa == 0 || ob == 0) {
        // an edge endpoint on the barrier line: degenerate only if on the closed segment
        const Point& e = (oa == 0) ? a : b;
        if (point_on_segment(e, s, t)) throw DegenerateConfiguration("path vertex on barrier");
        return std::nullopt;
    }
    if (oa * ob > 0) return std::nullopt;
    // endpoints strictly on opposite sides: where does the edge meet the barrier line?
    int os = orientation(a, b, s), ot = orientation(a, b, t);
    if (os == 0 || ot == 0) throw DegenerateConfiguration("path passes through a barrier endpoint");
    if (os * ot > 0) return std::nullopt;  // crosses the line beyond the segment
    Rational ca = cross(s, t, a), cb = cross(s, t, b);
    return ca / (ca - cb);
}

int crossing_parity_polyline(const Polyline& path, const Segment& barrier) {
    int count = 0;
    const auto& v = path.vertices;
    for (const Point& p : v)
        if (point_on_segment(p, barrier.a, barrier.b))
            throw DegenerateConfiguration("path vertex on barrier");
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (edge_barrier_crossing(v[i], v[i + 1], barrier.a, barrier.b)) ++count;
    return count % 2;
}

// ---- st intervals ----------------------------------------------------------

ClipResult clip_convex_by_halfplane(const std::vector<Point>& ccw, const Point& s, const Point& t,
                                    int side) {
    ClipResult out;
    std::size_t n = ccw.size();
    std::vector<Point> kept;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& cur = ccw[i];
        const Point& nxt = ccw[(i + 1) % n];
        int sc = side * orientation(s, t, cur);
        int sn = side * orientation(s, t, nxt);
        if (sc >= 0) kept.push_back(cur);
        if ((sc > 0 && sn < 0) || (sc < 0 && sn > 0)) {
            Rational cc = cross(s, t, cur), cn = cross(s, t, nxt);
            Rational u = cc / (cc - cn);
            kept.push_back(lerp(cur, nxt, u));
        }
    }
    std::vector<Point> uniq;
    for (const Point& p : kept)
        if (uniq.empty() || !(uniq.back() == p)) uniq.push_back(p);
    while (uniq.size() > 1 && uniq.front() == uniq.back()) uniq.pop_back();
    out.pts = std::move(uniq);
    switch (out.pts.size()) {
        case 0: out.kind = ClipResult::Empty; break;
        case 1: out.kind = ClipResult::At; break;
        case 2: out.kind = ClipResult::Seg; break;
        default: out.kind = ClipResult::Poly; break;
    }
    return out;
}

namespace {

std::optional<StInterval> clamp_unit(QuadExpr lo, QuadExpr hi) {
    QuadExpr zero{Rational(0)}, one{Rational(1)};
    if (compare(hi, zero) < 0 || compare(lo, one) > 0) return std::nullopt;
    if (compare(lo, zero) < 0) lo = zero;
    if (compare(hi, one) > 0) hi = one;
    return StInterval{lo, hi};
}

std::optional<StInterval> segment_interval(const Point& a, const Point& b, const Point& s,
                                           const Point& t) {
    auto hit = seg_seg_intersection(s, t, a, b);
    if (hit.kind == SegSegHit::None) return std::nullopt;
    Rational len2 = dist2(s, t);
    if (hit.kind == SegSegHit::At) {
        Rational u = dot_pq(s, t, hit.p) / len2;
        return StInterval{QuadExpr(u), QuadExpr(u)};
    }
    Rational u1 = dot_pq(s, t, hit.p) / len2, u2 = dot_pq(s, t, hit.q) / len2;
    if (u1 > u2) std::swap(u1, u2);
    return StInterval{QuadExpr(u1), QuadExpr(u2)};
}

}  // namespace

std::optional<StInterval> st_interval(const GeometricObject& o, const Point& s, const Point& t) {
    Rational len2 = dist2(s, t);

    if (const auto* d = std::get_if<Disk>(&o)) {
        Rational t0 = dot_pq(s, t, d->center) / len2;
        Rational c = cross(s, t, d->center);
        Rational disc = (d->radius * d->radius * len2 - c * c) / (len2 * len2);
        if (sign(disc) < 0) return std::nullopt;
        return clamp_unit(QuadExpr(t0, Rational(-1), disc), QuadExpr(t0, Rational(1), disc));
    }
    if (const auto* sg = std::get_if<Segment>(&o)) return segment_interval(sg->a, sg->b, s, t);
    if (const auto* g = std::get_if<ConvexPolygon>(&o)) {
        // Cyrus-Beck clip of the parametrized segment s + u(t-s) against the hull
        Rational lo(0), hi(1);
        std::size_t n = g->vertices.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point& p = g->vertices[i];
            const Point& q = g->vertices[(i + 1) % n];
            Rational os = cross(p, q, s), ot = cross(p, q, t);
            Rational d = ot - os;
            if (sign(d) == 0) {
                if (sign(os) < 0) return std::nullopt;
                continue;
            }
            Rational u = -os / d;  // orient(p,q, s+u(t-s)) = 0 at u
            if (sign(d) > 0)
                lo = std::max(lo, u);
            else
                hi = std::min(hi, u);
        }
        if (lo > hi) return std::nullopt;
        return StInterval{QuadExpr(lo), QuadExpr(hi)};
    }
    const auto& pl = std::get<Polyline>(o);
    const auto& v = pl.vertices;
    bool collinear = true;
    for (std::size_t i = 2; i < v.size() && collinear; ++i)
        collinear = orientation(v[0], v[1], v[i]) == 0;
    if (v.size() > 2 && !collinear)
        throw NotConvex("st_interval on a non-degenerate polyline");
    // collinear chain: the union is the segment between the extreme points
    Point lo = v[0], hi = v[0];
    for (const Point& p : v) {
        if (p < lo) lo = p;
        if (hi < p) hi = p;
    }
    return segment_interval(lo, hi, s, t);
}

// ---- validation helpers ----------------------------------------------------

bool is_strictly_convex_ccw(const std::vector<Point>& vertices) {
    std::size_t n = vertices.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (orientation(vertices[i], vertices[(i + 1) % n], vertices[(i + 2) % n]) <= 0)
            return false;
    }
    return true;
}

bool is_simple_polyline(const std::vector<Point>& vertices) {
    std::size_t n = vertices.size();
    if (n < 2) return false;
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (vertices[i] == vertices[i + 1]) return false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j + 1 < n; ++j) {
            auto hit = seg_seg_intersection(vertices[i], vertices[i + 1], vertices[j], vertices[j + 1]);
            if (hit.kind == SegSegHit::None) continue;
            if (j == i + 1) {
                // adjacent edges may share exactly the common vertex
                if (hit.kind != SegSegHit::At || !(hit.p == vertices[j])) return false;
            } else {
                return false;
            }
        }
    }
    return true;
}

}  // namespace pointsep
