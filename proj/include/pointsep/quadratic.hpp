#pragma once

#include "pointsep/rational.hpp"

namespace pointsep {

/// Exact number of the form a + b*sqrt(c) with rational a, b and rational
/// c >= 0. Closed under the comparisons the solver needs: chord endpoints of
/// disks on the st segment, and the Thm.-style thresholds m/sqrt(1+eps)+3.
struct QuadExpr {
    Rational a{0};
    Rational b{0};
    Rational c{0};

    QuadExpr() = default;
    explicit QuadExpr(Rational rational_value) : a(std::move(rational_value)) {}
    QuadExpr(Rational a_, Rational b_, Rational c_);

    bool is_rational() const { return b == 0; }
    double approx() const;
};

/// Exact sign of a + b*sqrt(c).
int sign_of(const QuadExpr& x);

/// Exact three-way comparison; the radicands may differ.
int compare(const QuadExpr& x, const QuadExpr& y);

inline bool operator<(const QuadExpr& x, const QuadExpr& y) { return compare(x, y) < 0; }
inline bool operator<=(const QuadExpr& x, const QuadExpr& y) { return compare(x, y) <= 0; }
inline bool operator==(const QuadExpr& x, const QuadExpr& y) { return compare(x, y) == 0; }

/// Largest integer <= x, exact.
std::int64_t floor_quad(const QuadExpr& x);

}  // namespace pointsep
