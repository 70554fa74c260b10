#include "extremal/golden.hpp"

#include <cmath>

namespace extremal {

GoldenExact GoldenExact::gammaPow(unsigned long j) {
    if (j == 0) return GoldenExact(1);
    return {fibonacci(j - 1), fibonacci(j)};
}

GoldenExact operator+(const GoldenExact& x, const GoldenExact& y) { return {x.a + y.a, x.b + y.b}; }
GoldenExact operator-(const GoldenExact& x, const GoldenExact& y) { return {x.a - y.a, x.b - y.b}; }

GoldenExact operator*(const GoldenExact& x, const GoldenExact& y) {
    // (a1 + b1 g)(a2 + b2 g) = a1a2 + (a1b2 + b1a2) g + b1b2 g^2, g^2 = g+1
    Int bb = x.b * y.b;
    return {x.a * y.a + bb, x.a * y.b + x.b * y.a + bb};
}

GoldenExact operator*(const GoldenExact& x, const Int& k) { return {x.a * k, x.b * k}; }
GoldenExact operator-(const GoldenExact& x) { return {-x.a, -x.b}; }

int signOf(const GoldenExact& x) {
    // a + b*gamma = ((2a+b) + b*sqrt(5)) / 2
    Int u = 2 * x.a + x.b;
    const Int& v = x.b;
    int su = sgn(u), sv = sgn(v);
    if (su == sv) return su;
    if (su == 0) return sv;
    if (sv == 0) return su;
    // opposite signs: compare u^2 against 5 v^2
    Int d = u * u - 5 * v * v;
    int sd = sgn(d);
    if (sd == 0) return 0;  // cannot happen for integers (sqrt(5) irrational) unless u=v=0
    return sd > 0 ? su : sv;
}

int goldenCompare(const GoldenExact& u, const GoldenExact& v) { return signOf(u - v); }

double toDouble(const GoldenExact& x) {
    static const double g = (1.0 + std::sqrt(5.0)) / 2.0;
    return x.a.get_d() + x.b.get_d() * g;
}

}  // namespace extremal
