#pragma once

#include <optional>
#include <string>

#include "extremal/ints.hpp"

namespace extremal {

/// Dyadic rational man * 2^exp.  Addition, subtraction and multiplication
/// are exact; only division and explicit rounding lose information.
struct Dyadic {
    Int man{0};
    long exp = 0;

    Dyadic() = default;
    Dyadic(Int m, long e) : man(std::move(m)), exp(e) { canonicalize(); }
    explicit Dyadic(const Int& m) : man(m), exp(0) { canonicalize(); }
    explicit Dyadic(long m) : man(m), exp(0) { canonicalize(); }

    void canonicalize();
    bool isZero() const { return sgn(man) == 0; }
    int sign() const { return sgn(man); }
    long bits() const { return bitLength(man); }

    static Dyadic zero() { return Dyadic(); }
    static Dyadic one() { return Dyadic(Int(1)); }
    /// 2^e
    static Dyadic pow2(long e) { return Dyadic(Int(1), e); }
};

Dyadic operator+(const Dyadic& a, const Dyadic& b);
Dyadic operator-(const Dyadic& a, const Dyadic& b);
Dyadic operator*(const Dyadic& a, const Dyadic& b);
Dyadic operator-(const Dyadic& a);
Dyadic operator*(const Dyadic& a, const Int& k);
Dyadic dabs(const Dyadic& a);
Dyadic dmax(const Dyadic& a, const Dyadic& b);
Dyadic dmin(const Dyadic& a, const Dyadic& b);
/// Exact halving.
Dyadic half(const Dyadic& a);

int cmp(const Dyadic& a, const Dyadic& b);
inline bool operator<(const Dyadic& a, const Dyadic& b) { return cmp(a, b) < 0; }
inline bool operator<=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) <= 0; }
inline bool operator==(const Dyadic& a, const Dyadic& b) { return cmp(a, b) == 0; }
inline bool operator>(const Dyadic& a, const Dyadic& b) { return cmp(a, b) > 0; }
inline bool operator>=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) >= 0; }

/// Round to at most prec mantissa bits, toward -inf / +inf.
Dyadic roundDown(const Dyadic& a, long prec);
Dyadic roundUp(const Dyadic& a, long prec);

/// Directed-rounding quotient a/b to roughly prec significant bits.
Dyadic divDown(const Dyadic& a, const Dyadic& b, long prec);
Dyadic divUp(const Dyadic& a, const Dyadic& b, long prec);

/// Largest integer <= a.
Int dyadicFloor(const Dyadic& a);

Rat toRational(const Dyadic& a);
double toDouble(const Dyadic& a);
/// log2(|a|) in double accuracy; a != 0.
double log2Approx(const Dyadic& a);

/// Decimal rendering with sigDigits significant digits (round to nearest).
std::string toDecimal(const Dyadic& a, int sigDigits);

/// Midpoint-radius enclosure of a real number.  Every operation returns an
/// interval containing the exact image of the inputs.
struct CReal {
    Dyadic mid;
    Dyadic rad;  // >= 0

    CReal() = default;
    explicit CReal(Dyadic m) : mid(std::move(m)) {}
    CReal(Dyadic m, Dyadic r) : mid(std::move(m)), rad(std::move(r)) {}
    explicit CReal(const Int& n) : mid(n) {}
    explicit CReal(long n) : mid(Dyadic(n)) {}

    Dyadic lower() const { return mid - rad; }
    Dyadic upper() const { return mid + rad; }
    bool containsZero() const { return dabs(mid) <= rad; }
    bool isExact() const { return rad.isZero(); }

    static CReal fromEndpoints(const Dyadic& lo, const Dyadic& hi);
    /// Enclosure of a rational at ~prec bits.
    static CReal fromRational(const Rat& q, long prec);
};

CReal operator+(const CReal& a, const CReal& b);
CReal operator-(const CReal& a, const CReal& b);
CReal operator-(const CReal& a);
CReal operator*(const CReal& a, const CReal& b);
CReal operator*(const CReal& a, const Int& k);
CReal operator+(const CReal& a, const Int& k);
CReal operator-(const CReal& a, const Int& k);

CReal cabs(const CReal& a);
CReal cmax(const CReal& a, const CReal& b);
CReal square(const CReal& a);
CReal cube(const CReal& a);

/// Interval division; throws if b's enclosure contains zero.
CReal cdiv(const CReal& a, const CReal& b, long prec);

/// Round mid to prec bits, folding the rounding error into the radius.
CReal roundTo(const CReal& a, long prec);

/// Three-way comparison: nullopt when the enclosures overlap.
std::optional<int> certifiedCmp(const CReal& a, const CReal& b);
bool certainlyLess(const CReal& a, const CReal& b);
bool certainlyPositive(const CReal& a);

/// Enclosure of the distance from a to the nearest integer; requires
/// rad(a) < 1/4.
CReal distToNearestInt(const CReal& a);

/// "0.dddd ± 1e-k" style rendering.
std::string describe(const CReal& a, int sigDigits = 20);

}  // namespace extremal
