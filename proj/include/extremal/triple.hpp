#pragma once

#include <utility>

#include "extremal/certified.hpp"
#include "extremal/ints.hpp"

namespace extremal {

struct Matrix2;

/// Integer point x = (x0,x1,x2), identified with the symmetric matrix
/// [[x0,x1],[x1,x2]].
struct IntTriple {
    Int x0{0}, x1{0}, x2{0};

    IntTriple() = default;
    IntTriple(Int a, Int b, Int c) : x0(std::move(a)), x1(std::move(b)), x2(std::move(c)) {}

    bool operator==(const IntTriple& o) const = default;
    bool isZero() const { return sgn(x0) == 0 && sgn(x1) == 0 && sgn(x2) == 0; }

    Matrix2 toMatrix() const;
    static IntTriple fromSymmetric(const Matrix2& m);  // asserts symmetry
};

/// Lexicographic order on (x0,x1,x2).
bool lexLess(const IntTriple& a, const IntTriple& b);

struct Matrix2 {
    Int a{0}, b{0}, c{0}, d{0};  // [[a,b],[c,d]]

    Matrix2() = default;
    Matrix2(Int a_, Int b_, Int c_, Int d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    bool operator==(const Matrix2& o) const = default;
    bool isSymmetric() const { return b == c; }
    Matrix2 transpose() const { return {a, c, b, d}; }
    static Matrix2 identity() { return {Int(1), Int(0), Int(0), Int(1)}; }
    static Matrix2 J() { return {Int(0), Int(1), Int(-1), Int(0)}; }
};

Matrix2 operator*(const Matrix2& x, const Matrix2& y);
Matrix2 operator-(const Matrix2& x);

Int det(const Matrix2& m);
Matrix2 adjoint(const Matrix2& m);
/// trace(M*J) with J = [[0,1],[-1,0]].
Int traceMJ(const Matrix2& m);

Int det2(const IntTriple& x);
Int det3(const IntTriple& x, const IntTriple& y, const IntTriple& z);

/// [x,x,z] = x Adj(z) x on the symmetric-matrix identification.
IntTriple bracket(const IntTriple& x, const IntTriple& z);

/// Cross product.
IntTriple wedge(const IntTriple& x, const IntTriple& y);

Int maxNorm(const IntTriple& x);
Int eucNormSq(const IntTriple& x);

/// Divide by the gcd and make the first nonzero coordinate positive.
/// Returns the normalized triple and the exact factor rho with
/// normalized = rho * x (rho = +/- 1/g).
std::pair<IntTriple, Rat> primitive(const IntTriple& x);

bool isPrimitive(const IntTriple& x);

/// L_xi(x) = max(|x1 - xi x0|, |x2 - xi^2 x0|), certified.
CReal heightL(const IntTriple& x, const CReal& xi);
/// Variant reusing a precomputed enclosure of xi^2.
CReal heightL(const IntTriple& x, const CReal& xi, const CReal& xi2);

/// Projective distance ||x ^ y|| / (||x|| ||y||) with the max-norm.
CReal projDist(const IntTriple& x, const IntTriple& y, long prec = 128);

}  // namespace extremal
