#include "extremal/certified.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace extremal {

void Dyadic::canonicalize() {
    if (sgn(man) == 0) {
        exp = 0;
        return;
    }
    mp_bitcnt_t t = mpz_scan1(man.get_mpz_t(), 0);
    if (t > 0) {
        mpz_fdiv_q_2exp(man.get_mpz_t(), man.get_mpz_t(), t);
        exp += static_cast<long>(t);
    }
}

namespace {

// Shift a.man so both operands share the exponent min(a.exp, b.exp).
void align(const Dyadic& a, const Dyadic& b, Int& ma, Int& mb, long& e) {
    e = std::min(a.exp, b.exp);
    ma = a.man;
    mb = b.man;
    if (a.exp > e) mpz_mul_2exp(ma.get_mpz_t(), ma.get_mpz_t(), a.exp - e);
    if (b.exp > e) mpz_mul_2exp(mb.get_mpz_t(), mb.get_mpz_t(), b.exp - e);
}

}  // namespace

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    if (a.isZero()) return b;
    if (b.isZero()) return a;
    Int ma, mb;
    long e;
    align(a, b, ma, mb, e);
    return Dyadic(ma + mb, e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
    if (b.isZero()) return a;
    if (a.isZero()) return -b;
    Int ma, mb;
    long e;
    align(a, b, ma, mb, e);
    return Dyadic(ma - mb, e);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    if (a.isZero() || b.isZero()) return Dyadic();
    return Dyadic(a.man * b.man, a.exp + b.exp);
}

Dyadic operator-(const Dyadic& a) { return Dyadic(-a.man, a.exp); }

Dyadic operator*(const Dyadic& a, const Int& k) { return Dyadic(a.man * k, a.exp); }

Dyadic dabs(const Dyadic& a) { return Dyadic(abs(a.man), a.exp); }

Dyadic dmax(const Dyadic& a, const Dyadic& b) { return cmp(a, b) >= 0 ? a : b; }
Dyadic dmin(const Dyadic& a, const Dyadic& b) { return cmp(a, b) <= 0 ? a : b; }

Dyadic half(const Dyadic& a) { return Dyadic(a.man, a.exp - 1); }

int cmp(const Dyadic& a, const Dyadic& b) {
    int sa = a.sign(), sb = b.sign();
    if (sa != sb) return sa < sb ? -1 : 1;
    if (sa == 0) return 0;
    Int ma, mb;
    long e;
    align(a, b, ma, mb, e);
    return ::cmp(ma, mb) < 0 ? -1 : (::cmp(ma, mb) > 0 ? 1 : 0);
}

Dyadic roundDown(const Dyadic& a, long prec) {
    long drop = a.bits() - prec;
    if (drop <= 0) return a;
    Int q;
    mpz_fdiv_q_2exp(q.get_mpz_t(), a.man.get_mpz_t(), drop);
    return Dyadic(q, a.exp + drop);
}

Dyadic roundUp(const Dyadic& a, long prec) {
    long drop = a.bits() - prec;
    if (drop <= 0) return a;
    Int q;
    mpz_cdiv_q_2exp(q.get_mpz_t(), a.man.get_mpz_t(), drop);
    return Dyadic(q, a.exp + drop);
}

namespace {

Dyadic divDir(const Dyadic& a, const Dyadic& b, long prec, bool up) {
    if (b.isZero()) throw std::domain_error("Dyadic division by zero");
    if (a.isZero()) return Dyadic();
    long s = prec + std::max(0L, b.bits() - a.bits()) + 2;
    Int num = a.man;
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), s);
    Int q;
    if (up)
        mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), b.man.get_mpz_t());
    else
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), b.man.get_mpz_t());
    return Dyadic(q, a.exp - b.exp - s);
}

}  // namespace

Dyadic divDown(const Dyadic& a, const Dyadic& b, long prec) { return divDir(a, b, prec, false); }
Dyadic divUp(const Dyadic& a, const Dyadic& b, long prec) { return divDir(a, b, prec, true); }

Int dyadicFloor(const Dyadic& a) {
    if (a.exp >= 0) {
        Int r = a.man;
        mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), a.exp);
        return r;
    }
    Int q;
    mpz_fdiv_q_2exp(q.get_mpz_t(), a.man.get_mpz_t(), -a.exp);
    return q;
}

Rat toRational(const Dyadic& a) {
    Rat r(a.man);
    if (a.exp >= 0) {
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, a.exp);
        r *= Rat(p);
    } else {
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, -a.exp);
        r /= Rat(p);
    }
    r.canonicalize();
    return r;
}

double toDouble(const Dyadic& a) {
    if (a.isZero()) return 0.0;
    long e = 0;
    double d = mpz_get_d_2exp(&e, a.man.get_mpz_t());
    return std::ldexp(d, static_cast<int>(std::max(-2000L, std::min(2000L, e + a.exp))));
}

double log2Approx(const Dyadic& a) {
    if (a.isZero()) throw std::domain_error("log2Approx: zero");
    return log2Approx(a.man) + static_cast<double>(a.exp);
}

std::string toDecimal(const Dyadic& a, int sigDigits) {
    if (a.isZero()) return "0";
    // scale so that |value|*10^k has sigDigits digits before rounding
    double l10 = log2Approx(a) * 0.30102999566398120;
    long k = sigDigits - static_cast<long>(std::floor(l10)) - 1;
    Int pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(k)));
    Dyadic scaled = k >= 0 ? a * pow10 : divDown(a, Dyadic(pow10), 64 + 4 * sigDigits);
    // round to nearest integer
    Int digits = dyadicFloor(scaled + Dyadic(Int(1), -1));
    bool neg = sgn(digits) < 0;
    std::string s = Int(abs(digits)).get_str(10);
    std::ostringstream out;
    if (neg) out << '-';
    long pointPos = static_cast<long>(s.size()) - k;
    if (pointPos <= 0) {
        out << "0." << std::string(-pointPos, '0') << s;
    } else if (pointPos >= static_cast<long>(s.size())) {
        out << s << std::string(pointPos - s.size(), '0');
    } else {
        out << s.substr(0, pointPos) << '.' << s.substr(pointPos);
    }
    return out.str();
}

CReal CReal::fromEndpoints(const Dyadic& lo, const Dyadic& hi) {
    if (cmp(lo, hi) > 0) throw std::logic_error("fromEndpoints: lo > hi");
    return CReal(half(lo + hi), half(hi - lo));
}

CReal CReal::fromRational(const Rat& q, long prec) {
    Dyadic num(Int(q.get_num()));
    Dyadic den(Int(q.get_den()));
    return fromEndpoints(divDown(num, den, prec), divUp(num, den, prec));
}

CReal operator+(const CReal& a, const CReal& b) { return {a.mid + b.mid, a.rad + b.rad}; }
CReal operator-(const CReal& a, const CReal& b) { return {a.mid - b.mid, a.rad + b.rad}; }
CReal operator-(const CReal& a) { return {-a.mid, a.rad}; }

CReal operator*(const CReal& a, const CReal& b) {
    Dyadic mid = a.mid * b.mid;
    Dyadic rad = dabs(a.mid) * b.rad + dabs(b.mid) * a.rad + a.rad * b.rad;
    return {mid, rad};
}

CReal operator*(const CReal& a, const Int& k) { return {a.mid * k, a.rad * abs(k)}; }
CReal operator+(const CReal& a, const Int& k) { return {a.mid + Dyadic(k), a.rad}; }
CReal operator-(const CReal& a, const Int& k) { return {a.mid - Dyadic(k), a.rad}; }

CReal cabs(const CReal& a) {
    Dyadic lo = a.lower(), hi = a.upper();
    if (lo.sign() >= 0) return a;
    if (hi.sign() <= 0) return -a;
    return CReal::fromEndpoints(Dyadic(), dmax(-lo, hi));
}

CReal cmax(const CReal& a, const CReal& b) {
    return CReal::fromEndpoints(dmax(a.lower(), b.lower()), dmax(a.upper(), b.upper()));
}

CReal square(const CReal& a) {
    CReal r = a * a;
    // tighten around zero: a*a >= 0 always
    if (r.lower().sign() < 0) r = CReal::fromEndpoints(Dyadic(), r.upper());
    return r;
}

CReal cube(const CReal& a) { return a * a * a; }

CReal cdiv(const CReal& a, const CReal& b, long prec) {
    if (b.containsZero()) throw std::domain_error("cdiv: denominator encloses zero");
    Dyadic al = a.lower(), au = a.upper();
    Dyadic bl = b.lower(), bu = b.upper();
    Dyadic lo = divDown(al, bl, prec), hi = divUp(al, bl, prec);
    for (const auto& [n, d] : {std::pair{al, bu}, {au, bl}, {au, bu}}) {
        lo = dmin(lo, divDown(n, d, prec));
        hi = dmax(hi, divUp(n, d, prec));
    }
    return CReal::fromEndpoints(lo, hi);
}

CReal roundTo(const CReal& a, long prec) {
    Dyadic m = roundDown(a.mid, prec);
    Dyadic err = a.mid - m;
    return {m, roundUp(a.rad + err, 32)};
}

std::optional<int> certifiedCmp(const CReal& a, const CReal& b) {
    if (cmp(a.upper(), b.lower()) < 0) return -1;
    if (cmp(b.upper(), a.lower()) < 0) return 1;
    if (a.isExact() && b.isExact() && a.mid == b.mid) return 0;
    return std::nullopt;
}

bool certainlyLess(const CReal& a, const CReal& b) { return cmp(a.upper(), b.lower()) < 0; }
bool certainlyPositive(const CReal& a) { return a.lower().sign() > 0; }

CReal distToNearestInt(const CReal& a) {
    static const Dyadic quarter = Dyadic::pow2(-2);
    if (!(a.rad < quarter)) throw std::domain_error("distToNearestInt: radius >= 1/4");
    Int n = dyadicFloor(a.mid + Dyadic(Int(1), -1));  // nearest integer to mid
    CReal f = cabs(a - n);
    Dyadic halfD = Dyadic::pow2(-1);
    Dyadic hi = dmin(f.upper(), halfD);
    Dyadic lo = dmin(f.lower(), halfD);
    return CReal::fromEndpoints(lo, hi);
}

std::string describe(const CReal& a, int sigDigits) {
    std::ostringstream out;
    out << toDecimal(a.mid, sigDigits);
    if (a.rad.isZero()) {
        out << " (exact)";
    } else {
        double l10 = log2Approx(a.rad) * 0.30102999566398120;
        out << " +/- 1e" << static_cast<long>(std::ceil(l10));
    }
    return out.str();
}

}  // namespace extremal
