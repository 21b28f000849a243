#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pointsep/geometry.hpp"

namespace pointsep {

/// One of the two copies of an object in the homology cover.
struct LiftedVertex {
    int object = 0;
    int sheet = -1;  // -1 or +1
};

inline bool operator==(const LiftedVertex& u, const LiftedVertex& v) {
    return u.object == v.object && u.sheet == v.sheet;
}
inline bool operator<(const LiftedVertex& u, const LiftedVertex& v) {
    return u.object != v.object ? u.object < v.object : u.sheet < v.sheet;
}
inline int vertex_id(const LiftedVertex& v) { return 2 * v.object + (v.sheet > 0 ? 1 : 0); }
inline LiftedVertex vertex_from_id(int id) { return {id / 2, (id % 2) ? +1 : -1}; }
inline LiftedVertex flip(const LiftedVertex& v) { return {v.object, -v.sheet}; }

// ---- fragments -------------------------------------------------------------

/// Open or closed polygonal curve piece. Cut endpoints (on the open barrier)
/// carry the local side the piece departs to.
struct CurvePiece {
    std::vector<Point> pts;
    bool closed = false;
    int front_contact = 0;  // 0 none, otherwise the local side at pts.front()
    int back_contact = 0;
};

struct DiskPiece {
    Disk disk;
};
struct HalfDiskPiece {
    Disk disk;
    int side;  // the closed halfplane side of line(st) this piece occupies
};
struct PolyRegionPiece {
    std::vector<Point> ccw;  // concrete (already clipped) filled convex region
    int side;                // 0 whole, otherwise clip side
};

/// Planar piece of one object. rel_sheet is the sheet the piece carries
/// relative to the owner's lifted sheet: the canonical piece has +1, and each
/// barrier crossing flips the sign.
struct Piece {
    std::variant<DiskPiece, HalfDiskPiece, PolyRegionPiece, CurvePiece> shape;
    int rel_sheet = 1;
};

struct StContext {
    Point s, t;
    Rational len2;
};

/// Cover connectivity between two pieces: same_sheet is "the pieces share a
/// cover point when carried on equal sheets", opp_sheet the flipped-sheet
/// analogue (contact through the barrier seam).
struct PieceMeet {
    bool same_sheet = false;
    bool opp_sheet = false;
};
PieceMeet piece_meet(const Piece& p1, const Piece& p2, const StContext& st);

// ---- per-object operations ---------------------------------------------------

/// True iff the object alone separates s from t. Filled regions separate when
/// they contain s or t; boundary cycles when they enclose exactly one of the
/// two; open curves never. Throws PointOnObject when s or t lies on the
/// object's curve.
bool single_object_separates(const GeometricObject& o, const Point& s, const Point& t);

Point canonical_point(const GeometricObject& o);

/// Fragment decomposition of one lifted copy: pieces partition the object and
/// rel_sheet is resolved against the requested sheet. Throws
/// DegenerateConfiguration when general position fails.
std::vector<Piece> lift_fragments(const GeometricObject& o, int sheet, const Point& s,
                                  const Point& t);

// ---- normalized instances ----------------------------------------------------

struct Instance {
    Point s, t;
    std::vector<GeometricObject> objects;
    std::vector<int> original_index;  // position in the raw input list
};

struct NormalizationReport {
    std::vector<int> trivial_separators;  // original indices removed by the pre-check
    std::vector<int> filled_normalized;   // crossing boundary cycles marked filled
    std::vector<std::string> notes;
    bool trivial_opt = false;
};

struct NormalizeResult {
    Instance instance;
    NormalizationReport report;
};

/// Validates general position against the barrier, removes single-object
/// separators (reported), applies the interior normalization for crossing
/// boundary cycles, and freezes the instance. Throws DegenerateConfiguration
/// listing every offending object, SchemaError on type-invariant violations.
NormalizeResult normalize_instance(std::vector<GeometricObject> objects, Point s, Point t);

// ---- the lifted instance -----------------------------------------------------

struct ObjectLift {
    Point canonical;
    std::vector<Piece> pieces;  // rel sheets
    bool crosses_st = false;
    std::optional<StInterval> chord;  // convex crossing objects only
};

struct PairAdjacency {
    bool same_bit = false;   // c1^b adjacent to c2^b
    bool cross_bit = false;  // c1^b adjacent to c2^-b
};

/// Immutable lift of a normalized instance: canonical points, fragments, and
/// the lifted adjacency predicate (cached per object pair at desk scale).
class LiftedInstance {
public:
    explicit LiftedInstance(Instance inst);

    const Instance& instance() const { return inst_; }
    int size() const { return static_cast<int>(inst_.objects.size()); }
    const ObjectLift& lift(int i) const { return lifts_[i]; }
    const StContext& st() const { return st_; }

    PairAdjacency pair_adjacency(int i, int j) const;
    bool lifted_adjacent(const LiftedVertex& u, const LiftedVertex& v) const;

private:
    PairAdjacency compute_pair(int i, int j) const;

    Instance inst_;
    StContext st_;
    std::vector<ObjectLift> lifts_;
    mutable std::vector<std::uint8_t> pair_cache_;  // bit0 set, bit1 same, bit2 cross
    bool cache_enabled_ = false;
};

}  // namespace pointsep
