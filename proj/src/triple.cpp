#include "extremal/triple.hpp"

#include <stdexcept>

namespace extremal {

Matrix2 IntTriple::toMatrix() const { return {x0, x1, x1, x2}; }

IntTriple IntTriple::fromSymmetric(const Matrix2& m) {
    if (!m.isSymmetric()) throw std::logic_error("fromSymmetric: matrix not symmetric");
    return {m.a, m.b, m.d};
}

bool lexLess(const IntTriple& a, const IntTriple& b) {
    if (a.x0 != b.x0) return a.x0 < b.x0;
    if (a.x1 != b.x1) return a.x1 < b.x1;
    return a.x2 < b.x2;
}

Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Matrix2 operator-(const Matrix2& x) { return {-x.a, -x.b, -x.c, -x.d}; }

Int det(const Matrix2& m) { return m.a * m.d - m.b * m.c; }

Matrix2 adjoint(const Matrix2& m) { return {m.d, -m.b, -m.c, m.a}; }

Int traceMJ(const Matrix2& m) {
    // M*J = [[-b, a], [-d, c]]
    return m.c - m.b;
}

Int det2(const IntTriple& x) { return x.x0 * x.x2 - x.x1 * x.x1; }

Int det3(const IntTriple& x, const IntTriple& y, const IntTriple& z) {
    return x.x0 * (y.x1 * z.x2 - y.x2 * z.x1) - x.x1 * (y.x0 * z.x2 - y.x2 * z.x0) +
           x.x2 * (y.x0 * z.x1 - y.x1 * z.x0);
}

IntTriple bracket(const IntTriple& x, const IntTriple& z) {
    Matrix2 p = x.toMatrix() * adjoint(z.toMatrix()) * x.toMatrix();
    return IntTriple::fromSymmetric(p);
}

IntTriple wedge(const IntTriple& x, const IntTriple& y) {
    return {x.x1 * y.x2 - x.x2 * y.x1, x.x2 * y.x0 - x.x0 * y.x2, x.x0 * y.x1 - x.x1 * y.x0};
}

Int maxNorm(const IntTriple& x) {
    Int n = abs(x.x0);
    if (abs(x.x1) > n) n = abs(x.x1);
    if (abs(x.x2) > n) n = abs(x.x2);
    return n;
}

Int eucNormSq(const IntTriple& x) { return x.x0 * x.x0 + x.x1 * x.x1 + x.x2 * x.x2; }

std::pair<IntTriple, Rat> primitive(const IntTriple& x) {
    if (x.isZero()) throw std::domain_error("primitive: zero triple");
    Int g = gcd3(x.x0, x.x1, x.x2);
    int lead = sgn(x.x0) != 0 ? sgn(x.x0) : (sgn(x.x1) != 0 ? sgn(x.x1) : sgn(x.x2));
    Int div = lead < 0 ? Int(-g) : g;
    IntTriple y(x.x0 / div, x.x1 / div, x.x2 / div);
    Rat rho(1, div);
    rho.canonicalize();
    return {y, rho};
}

bool isPrimitive(const IntTriple& x) {
    if (x.isZero()) return false;
    if (gcd3(x.x0, x.x1, x.x2) != 1) return false;
    int lead = sgn(x.x0) != 0 ? sgn(x.x0) : (sgn(x.x1) != 0 ? sgn(x.x1) : sgn(x.x2));
    return lead > 0;
}

CReal heightL(const IntTriple& x, const CReal& xi) { return heightL(x, xi, square(xi)); }

CReal heightL(const IntTriple& x, const CReal& xi, const CReal& xi2) {
    CReal t1 = cabs(CReal(x.x1) - xi * x.x0);
    CReal t2 = cabs(CReal(x.x2) - xi2 * x.x0);
    return cmax(t1, t2);
}

CReal projDist(const IntTriple& x, const IntTriple& y, long prec) {
    if (x.isZero() || y.isZero()) throw std::domain_error("projDist: zero vector");
    Int num = maxNorm(wedge(x, y));
    Int den = maxNorm(x) * maxNorm(y);
    Rat q(num, den);
    q.canonicalize();
    return CReal::fromRational(q, prec);
}

}  // namespace extremal
