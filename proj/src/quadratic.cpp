#include "pointsep/quadratic.hpp"

#include <cmath>
#include <stdexcept>

namespace pointsep {

QuadExpr::QuadExpr(Rational a_, Rational b_, Rational c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    if (c < 0) throw std::invalid_argument("QuadExpr: negative radicand");
    if (b == 0 || c == 0) {
        b = 0;
        c = 0;
    }
}

double QuadExpr::approx() const { return a.get_d() + b.get_d() * std::sqrt(c.get_d()); }

int sign_of(const QuadExpr& x) {
    if (x.b == 0 || x.c == 0) return sign(x.a);
    if (x.a == 0) return sign(x.b);
    int sa = sign(x.a), sb = sign(x.b);
    if (sa == sb) return sa;
    Rational lhs = x.a * x.a;
    Rational rhs = x.b * x.b * x.c;
    int cmp = sign(Rational(lhs - rhs));
    if (cmp == 0) return 0;
    return cmp > 0 ? sa : sb;
}

int compare(const QuadExpr& x, const QuadExpr& y) {
    Rational A = x.a - y.a;
    if (x.c == y.c || y.b == 0 || x.b == 0) {
        // single radical after merging
        if (y.b == 0)
            return sign_of(QuadExpr(A, x.b, x.c));
        if (x.b == 0)
            return -sign_of(QuadExpr(-A, y.b, y.c));
        return sign_of(QuadExpr(A, x.b - y.b, x.c));
    }
    // sign of (A + bx*sqrt(cx)) - by*sqrt(cy)
    QuadExpr u(A, x.b, x.c);
    int su = sign_of(u);
    int sv = (y.c == 0) ? 0 : sign(y.b);
    if (sv == 0) return su;
    if (su == 0) return -sv;
    if (su != sv) return su;
    // same nonzero sign: compare squares, u^2 has a single radical
    QuadExpr diff(A * A + x.b * x.b * x.c - y.b * y.b * y.c, 2 * A * x.b, x.c);
    return su * sign_of(diff);
}

std::int64_t floor_quad(const QuadExpr& x) {
    if (x.is_rational()) {
        mpz_class r;
        mpz_fdiv_q(r.get_mpz_t(), x.a.get_num().get_mpz_t(), x.a.get_den().get_mpz_t());
        return static_cast<std::int64_t>(r.get_si());
    }
    auto k = static_cast<std::int64_t>(std::floor(x.approx()));
    while (compare(QuadExpr(Rational(static_cast<long>(k + 1))), x) <= 0) ++k;
    while (compare(QuadExpr(Rational(static_cast<long>(k))), x) > 0) --k;
    return k;
}

}  // namespace pointsep
