#include "extremal/poly.hpp"

namespace extremal {

Int height(const Poly2& p) {
    Int h = abs(p.p0);
    if (abs(p.p1) > h) h = abs(p.p1);
    if (abs(p.p2) > h) h = abs(p.p2);
    return h;
}

Poly2 signNormalize(const Poly2& p) {
    int lead = sgn(p.p2) != 0 ? sgn(p.p2) : (sgn(p.p1) != 0 ? sgn(p.p1) : sgn(p.p0));
    if (lead < 0) return {-p.p0, -p.p1, -p.p2};
    return p;
}

IntTriple wedgePoly(const Poly2& p, const Poly2& q) {
    return {p.p2 * q.p1 - p.p1 * q.p2, p.p0 * q.p2 - p.p2 * q.p0, p.p1 * q.p0 - p.p0 * q.p1};
}

Int resultant(const Poly2& p, const Poly2& q) {
    // det of [[p2 p1 p0 0],[0 p2 p1 p0],[q2 q1 q0 0],[0 q2 q1 q0]]
    // expanded via 2x2 minors (Laplace along rows 1,3)
    Int m01 = p.p2 * q.p1 - p.p1 * q.p2;
    Int m02 = p.p2 * q.p0 - p.p0 * q.p2;
    Int m12 = p.p1 * q.p0 - p.p0 * q.p1;
    return m02 * m02 - m01 * m12;
}

CReal evalPoly(const Poly2& p, const CReal& xi) { return evalPoly(p, xi, square(xi)); }

CReal evalPoly(const Poly2& p, const CReal& xi, const CReal& xi2) {
    return CReal(p.p0) + xi * p.p1 + xi2 * p.p2;
}

Int height(const MonicPoly3& p) {
    Int h(1);
    if (abs(p.p) > h) h = abs(p.p);
    if (abs(p.q) > h) h = abs(p.q);
    if (abs(p.r) > h) h = abs(p.r);
    return h;
}

CReal evalPoly(const MonicPoly3& p, const CReal& xi) {
    CReal xi2 = square(xi);
    return cube(xi) + xi2 * p.p + xi * p.q + CReal(p.r);
}

Dyadic evalExact(const MonicPoly3& p, const Dyadic& t) {
    // Horner, all dyadic-exact
    Dyadic v = t + Dyadic(p.p);
    v = v * t + Dyadic(p.q);
    v = v * t + Dyadic(p.r);
    return v;
}

Rat evalExact(const MonicPoly3& p, const Rat& t) {
    Rat v = t + Rat(p.p);
    v = v * t + Rat(p.q);
    v = v * t + Rat(p.r);
    v.canonicalize();
    return v;
}

Int discriminant(const MonicPoly3& m) {
    const Int &p = m.p, &q = m.q, &r = m.r;
    return 18 * p * q * r - 4 * p * p * p * r + p * p * q * q - 4 * q * q * q - 27 * r * r;
}

}  // namespace extremal
