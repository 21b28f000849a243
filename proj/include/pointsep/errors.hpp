#pragma once

#include <stdexcept>
#include <string>

namespace pointsep {

/// Input violates the instance schema (bad field, bad number, wrong type).
struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

/// A geometric configuration the exact machinery refuses to interpret
/// (vertex on the barrier, collinear overlap with it, tangency to it, ...).
struct DegenerateConfiguration : std::runtime_error {
    explicit DegenerateConfiguration(const std::string& what) : std::runtime_error(what) {}
};

/// s or t lies exactly on an object's boundary curve.
struct PointOnObject : DegenerateConfiguration {
    explicit PointOnObject(const std::string& what) : DegenerateConfiguration(what) {}
};

/// Operation requires a convex object and got a polyline.
struct NotConvex : std::runtime_error {
    explicit NotConvex(const std::string& what) : std::runtime_error(what) {}
};

/// The chosen neighbor oracle cannot index this instance's object mix.
struct UnsupportedObjects : std::runtime_error {
    explicit UnsupportedObjects(const std::string& what) : std::runtime_error(what) {}
};

/// Brute-force oracle called beyond its size cap.
struct TooLarge : std::runtime_error {
    explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

/// Flood-fill grid too coarse for the instance's clearance.
struct ResolutionTooCoarse : std::runtime_error {
    explicit ResolutionTooCoarse(const std::string& what) : std::runtime_error(what) {}
};

/// Dividing-path precondition failed: the two copies of the chosen object
/// are not connected in the current residual graph.
struct Disconnected : std::runtime_error {
    explicit Disconnected(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pointsep
