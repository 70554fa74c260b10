#pragma once

#include "extremal/certified.hpp"
#include "extremal/ints.hpp"
#include "extremal/triple.hpp"

namespace extremal {

/// Integer polynomial p0 + p1 T + p2 T^2.
struct Poly2 {
    Int p0{0}, p1{0}, p2{0};

    Poly2() = default;
    Poly2(Int a, Int b, Int c) : p0(std::move(a)), p1(std::move(b)), p2(std::move(c)) {}

    bool operator==(const Poly2& o) const = default;
    bool isZero() const { return sgn(p0) == 0 && sgn(p1) == 0 && sgn(p2) == 0; }
};

Int height(const Poly2& p);

/// Flip sign so that the first nonzero of (p2,p1,p0) is positive.
Poly2 signNormalize(const Poly2& p);

/// (p2 q1 - p1 q2, p0 q2 - p2 q0, p1 q0 - p0 q1).
IntTriple wedgePoly(const Poly2& p, const Poly2& q);

/// 4x4 Sylvester resultant, both arguments treated as formal quadratics.
Int resultant(const Poly2& p, const Poly2& q);

CReal evalPoly(const Poly2& p, const CReal& xi);
CReal evalPoly(const Poly2& p, const CReal& xi, const CReal& xi2);

/// Monic cubic T^3 + p T^2 + q T + r.
struct MonicPoly3 {
    Int p{0}, q{0}, r{0};

    MonicPoly3() = default;
    MonicPoly3(Int p_, Int q_, Int r_) : p(std::move(p_)), q(std::move(q_)), r(std::move(r_)) {}

    bool operator==(const MonicPoly3& o) const = default;
};

Int height(const MonicPoly3& p);

CReal evalPoly(const MonicPoly3& p, const CReal& xi);
/// Exact value at a dyadic point.
Dyadic evalExact(const MonicPoly3& p, const Dyadic& t);
/// Exact value at a rational point.
Rat evalExact(const MonicPoly3& p, const Rat& t);

/// Discriminant of T^3 + pT^2 + qT + r.
Int discriminant(const MonicPoly3& p);

}  // namespace extremal
