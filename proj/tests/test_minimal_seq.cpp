#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>

#include "extremal/minimal.hpp"
#include "extremal/sequence.hpp"

using namespace extremal;

namespace {

// Odd 40-bit numerators: xi = m / 2^40 has reduced denominator 2^40, so no
// quadratic with small coefficients vanishes at xi and no two scan
// candidates can tie in value unless their dominating linear forms coincide.
Int oddMantissa(double x) {
    Int m(static_cast<long>(x * 1099511627776.0));  // 2^40
    if (m % 2 == 0) m += 1;
    return m;
}

CReal dyadicXi(double x) { return CReal(Dyadic(oddMantissa(x), -40)); }

// |x1 2^80 - x0 m 2^40| vs |x2 2^80 - x0 m^2|, both scaled by 2^80.
Int scaledL(const IntTriple& t, const Int& m) {
    Int p40 = Int(1) << 40;
    Int a = abs(t.x1 * p40 * p40 - t.x0 * m * p40);
    Int b = abs(t.x2 * p40 * p40 - t.x0 * m * m);
    return std::max(a, b);
}

// min of the scaled L over all points of each exact norm, by brute force.
std::map<long, Int> minPerNorm(const Int& m, long X) {
    std::map<long, Int> best;
    for (long x0 = 1; x0 <= X; ++x0)
        for (long x1 = -X; x1 <= X; ++x1)
            for (long x2 = -X; x2 <= X; ++x2) {
                long n = std::max({x0, std::labs(x1), std::labs(x2)});
                Int L = scaledL(IntTriple(Int(x0), Int(x1), Int(x2)), m);
                auto it = best.find(n);
                if (it == best.end() || L < it->second) best[n] = L;
            }
    return best;
}

// |P(xi)| * 2^80 for xi = m / 2^40, exact.
Int scaledV(const Poly2& p, const Int& m) {
    Int p40 = Int(1) << 40;
    return abs(p.p0 * p40 * p40 + p.p1 * m * p40 + p.p2 * m * m);
}

bool enclosesRat(const CReal& v, const Rat& q) {
    return toRational(v.lower()) <= q && q <= toRational(v.upper());
}

CReal xiFor(ExtremalSequence& seq, long bits) {
    for (int r = 0; r < 60; ++r) {
        try {
            return xiFromSequence(seq, Dyadic::pow2(-bits));
        } catch (const NeedMoreTermsError&) {
            seq.extend(4);
        }
    }
    throw std::runtime_error("xi target unreachable");
}

}  // namespace

TEST_CASE("minimal points: input validation") {
    CHECK_THROWS_AS(minimalPoints(CReal(Dyadic(Int(3), -1)), 10), std::invalid_argument);
    CHECK_THROWS_AS(minimalPoints(CReal(Dyadic(Int(-1), -2)), 10), std::invalid_argument);
    CReal coarse(Dyadic(Int(1), -1), Dyadic::pow2(-10));  // radius 2^-10
    CHECK_THROWS_AS(minimalPoints(coarse, 1000), PrecisionError);
}

TEST_CASE("minimal points: norm bound 1") {
    CReal xi = dyadicXi(0.6180339887);
    auto recs = minimalPoints(xi, 1);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].point == IntTriple(Int(1), Int(1), Int(0)));
    CHECK(recs[0].norm == 1);
    Int den80 = Int(1) << 80;
    Rat exact(scaledL(recs[0].point, xi.mid.man), den80);
    exact.canonicalize();
    CHECK(enclosesRat(recs[0].L, exact));
}

TEST_CASE("minimal points agree with the exhaustive staircase oracle") {
    for (double x : {0.6180339887, 0.3029954, 0.8417356}) {
        CReal xi = dyadicXi(x);
        const Int& m = xi.mid.man;
        const long X = 25;
        auto perNorm = minPerNorm(m, X);
        // oracle staircase: norms where the running minimum strictly drops
        std::vector<std::pair<long, Int>> stair;
        for (auto& [n, L] : perNorm)
            if (stair.empty() || L < stair.back().second) stair.emplace_back(n, L);

        auto recs = minimalPoints(xi, X);
        REQUIRE(recs.size() == stair.size());
        for (std::size_t i = 0; i < recs.size(); ++i) {
            CHECK(recs[i].norm == stair[i].first);
            CHECK(maxNorm(recs[i].point) == stair[i].first);
            // the reported point attains the oracle minimum exactly
            CHECK(scaledL(recs[i].point, m) == stair[i].second);
            Int den80 = Int(1) << 80;
            Rat exact(stair[i].second, den80);
            exact.canonicalize();
            CHECK(enclosesRat(recs[i].L, exact));
        }
    }
}

TEST_CASE("minimal points are independent of the worker count") {
    CReal xi = dyadicXi(0.6180339887);
    auto r1 = minimalPoints(xi, 400, 1);
    auto r3 = minimalPoints(xi, 400, 3);
    auto r7 = minimalPoints(xi, 400, 7);
    REQUIRE(r1.size() == r3.size());
    REQUIRE(r1.size() == r7.size());
    for (std::size_t i = 0; i < r1.size(); ++i) {
        CHECK(r1[i].point == r3[i].point);
        CHECK(r1[i].point == r7[i].point);
        CHECK(r1[i].L.mid == r3[i].L.mid);
        CHECK(r1[i].L.rad == r3[i].L.rad);
    }
}

TEST_CASE("cross-check against the generated sequence") {
    ExtremalSequence seq(fibonacciSeed(Int(1), Int(2)));
    seq.extend(8);  // norms far beyond Xmax^2
    CReal xi = xiFor(seq, 90);
    const long X = 100000;
    auto recs = minimalPoints(xi, X, 3);
    auto cc = crosscheckMinimalPoints(recs, seq);
    CHECK(cc.N0 <= 10);
    // every unmatched record at or past N0 is certified above the small-value cut
    for (std::size_t u : cc.unmatched) {
        bool isInterloper =
            std::find(cc.interlopers.begin(), cc.interlopers.end(), u) != cc.interlopers.end();
        CHECK((recs[u].norm < cc.N0 || isInterloper));
    }
    // generated triples of norm in [N0, X] all appear among the records
    std::size_t expected = 0;
    for (const auto& t : seq.triples())
        if (maxNorm(t) >= cc.N0 && maxNorm(t) <= X) ++expected;
    std::size_t matchedTriples = 0;
    for (const auto& r : recs)
        for (const auto& t : seq.triples())
            if (r.point == t) ++matchedTriples;
    CHECK(matchedTriples >= expected);
}

TEST_CASE("minimal polynomials: exhaustive oracle at small height caps") {
    for (double x : {0.6180339887, 0.3029954}) {
        CReal xi = dyadicXi(x);
        const Int& m = xi.mid.man;
        for (long H : {1L, 4L}) {
            // oracle: min scaled |P(xi)| per exact height
            std::map<long, Int> perH;
            for (long p2 = -H; p2 <= H; ++p2)
                for (long p1 = -H; p1 <= H; ++p1)
                    for (long p0 = -H; p0 <= H; ++p0) {
                        Poly2 p{Int(p0), Int(p1), Int(p2)};
                        if (p.isZero()) continue;
                        long h = std::max({std::labs(p0), std::labs(p1), std::labs(p2)});
                        Int v = scaledV(p, m);
                        auto it = perH.find(h);
                        if (it == perH.end() || v < it->second) perH[h] = v;
                    }
            std::vector<std::pair<long, Int>> stair;
            for (auto& [h, v] : perH)
                if (stair.empty() || v < stair.back().second) stair.emplace_back(h, v);

            auto recs = minimalPolys(xi, H);
            REQUIRE(recs.size() == stair.size());
            for (std::size_t i = 0; i < recs.size(); ++i) {
                CHECK(recs[i].height == stair[i].first);
                CHECK(height(recs[i].poly) == stair[i].first);
                CHECK(recs[i].poly == signNormalize(recs[i].poly));
                CHECK(scaledV(recs[i].poly, m) == stair[i].second);
                Int den80 = Int(1) << 80;
                Rat exact(stair[i].second, den80);
                exact.canonicalize();
                CHECK(enclosesRat(recs[i].value, exact));
            }
        }
    }
}

TEST_CASE("minimal polynomials: filtered pass matches the exhaustive oracle") {
    // Hmax above the exhaustive threshold exercises the candidate filter.
    CReal xi = dyadicXi(0.6180339887);
    const Int& m = xi.mid.man;
    const long H = 30;
    std::map<long, Int> perH;
    for (long p2 = -H; p2 <= H; ++p2)
        for (long p1 = -H; p1 <= H; ++p1)
            for (long p0 = -H; p0 <= H; ++p0) {
                if (p0 == 0 && p1 == 0 && p2 == 0) continue;
                long h = std::max({std::labs(p0), std::labs(p1), std::labs(p2)});
                Int v = scaledV(Poly2(Int(p0), Int(p1), Int(p2)), m);
                auto it = perH.find(h);
                if (it == perH.end() || v < it->second) perH[h] = v;
            }
    std::vector<std::pair<long, Int>> stair;
    for (auto& [h, v] : perH)
        if (stair.empty() || v < stair.back().second) stair.emplace_back(h, v);

    auto recs = minimalPolys(xi, H);
    REQUIRE(recs.size() == stair.size());
    for (std::size_t i = 0; i < recs.size(); ++i) {
        CHECK(recs[i].height == stair[i].first);
        CHECK(scaledV(recs[i].poly, m) == stair[i].second);
    }
}

TEST_CASE("minimal polynomial records: heights increase, values decrease") {
    ExtremalSequence seq(fibonacciSeed(Int(1), Int(2)));
    seq.extend(10);
    CReal xi = xiFor(seq, 400);
    auto recs = minimalPolys(xi, 2000);
    REQUIRE(recs.size() >= 4);
    CHECK(recs.front().height == 1);
    for (std::size_t i = 0; i + 1 < recs.size(); ++i) {
        CHECK(recs[i].height < recs[i + 1].height);
        CHECK(recs[i + 1].value.upper() < recs[i].value.lower());
    }
}

TEST_CASE("best monic cubic at xi = 1/2") {
    CReal xi(Dyadic(Int(1), -1));
    auto [p, v] = bestMonicCubic(xi, 1);
    // values at 1/2 are odd multiples of 1/8, so the optimum is 1/8
    CHECK(v.isExact());
    CHECK(toRational(v.mid) == Rat(1, 8));
    Rat at = evalExact(p, Rat(1, 2));
    CHECK(abs(at) == Rat(1, 8));
    CHECK(height(p) <= 1);
}

TEST_CASE("best monic cubic matches brute force and is monotone in H") {
    CReal xi(Dyadic(Int(5), -4));  // 5/16
    for (long H : {1L, 2L, 3L}) {
        Rat bestOracle;
        bool have = false;
        for (long p = -H; p <= H; ++p)
            for (long q = -H; q <= H; ++q)
                for (long r = -H; r <= H; ++r) {
                    Rat val = abs(evalExact(MonicPoly3(Int(p), Int(q), Int(r)), Rat(5, 16)));
                    if (!have || val < bestOracle) {
                        bestOracle = val;
                        have = true;
                    }
                }
        auto [poly, v] = bestMonicCubic(xi, H);
        CHECK(v.isExact());
        CHECK(toRational(v.mid) == bestOracle);
        CHECK(abs(evalExact(poly, Rat(5, 16))) == bestOracle);
    }
    // widening the box can only improve the optimum
    auto v1 = bestMonicCubic(xi, 1).second;
    auto v4 = bestMonicCubic(xi, 4).second;
    auto v8 = bestMonicCubic(xi, 8).second;
    CHECK(v4.mid <= v1.mid);
    CHECK(v8.mid <= v4.mid);
}

TEST_CASE("real roots of reference cubics") {
    const long prec = 96;
    auto close = [&](const CReal& r, const Rat& q) {
        return toRational(r.lower()) <= q && q <= toRational(r.upper());
    };
    {
        auto roots = realRoots(MonicPoly3(Int(-6), Int(11), Int(-6)), prec);
        REQUIRE(roots.size() == 3);
        CHECK(close(roots[0], Rat(1)));
        CHECK(close(roots[1], Rat(2)));
        CHECK(close(roots[2], Rat(3)));
        for (const auto& r : roots) CHECK(r.rad <= Dyadic::pow2(-prec));
    }
    {
        // repeated root: (T-1)^2 (T+2)
        auto roots = realRoots(MonicPoly3(Int(0), Int(-3), Int(2)), prec);
        bool hasOne = false, hasMinusTwo = false;
        for (const auto& r : roots) {
            if (close(r, Rat(1))) hasOne = true;
            if (close(r, Rat(-2))) hasMinusTwo = true;
        }
        CHECK(hasOne);
        CHECK(hasMinusTwo);
    }
    {
        auto roots = realRoots(MonicPoly3(Int(0), Int(0), Int(-2)), prec);
        REQUIRE(roots.size() == 1);
        CReal c = cube(roots[0]);
        CHECK(c.lower() <= Dyadic(Int(2)));
        CHECK(Dyadic(Int(2)) <= c.upper());
    }
    {
        auto roots = realRoots(MonicPoly3(Int(0), Int(1), Int(0)), prec);  // T^3 + T
        REQUIRE(roots.size() == 1);
        CHECK(roots[0].isExact());
        CHECK(roots[0].mid.isZero());
    }
}

TEST_CASE("nearest cubic algebraic integer matches brute force") {
    CReal xi(Dyadic(Int(1), -1));
    const long H = 2;
    auto res = bestCubicAlgebraicInteger(xi, H);
    // oracle: smallest |1/2 - root| over every real root in the box
    Dyadic oracleHi;
    bool have = false;
    for (long p = -H; p <= H; ++p)
        for (long q = -H; q <= H; ++q)
            for (long r = -H; r <= H; ++r) {
                for (const auto& rt : realRoots(MonicPoly3(Int(p), Int(q), Int(r)), 128)) {
                    Dyadic d = (cabs(xi - rt)).upper();
                    if (!have || d < oracleHi) {
                        oracleHi = d;
                        have = true;
                    }
                }
            }
    REQUIRE(have);
    // the reported enclosure must contain the oracle optimum
    CHECK(res.distance.lower() <= oracleHi);
    CHECK(oracleHi <= res.distance.upper() + Dyadic::pow2(-100));
    // the reported root really belongs to the reported polynomial
    CReal val = evalPoly(res.poly, res.root);
    CHECK(val.lower() <= Dyadic());
    CHECK(Dyadic() <= val.upper());
    // and it attains the reported distance
    CReal d = cabs(xi - res.root);
    CHECK(d.lower() <= res.distance.upper());
}

TEST_CASE("cubic gap values stay in [0, 1/2] and match a rational recomputation") {
    ExtremalSequence seq(fibonacciSeed(Int(1), Int(2)));
    seq.extend(10);
    CReal xi = xiFor(seq, 700);
    auto gaps = cubicGapSequence(seq, xi, 10);
    REQUIRE(gaps.size() == 10);
    Rat q = toRational(xi.mid);
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        CHECK(Dyadic() <= gaps[i].upper());
        CHECK(gaps[i].lower() <= Dyadic(Int(1), -1));
        // independent midpoint recomputation in rational arithmetic
        Rat t = q * q * q * Rat(seq.term(i + 1).x0);
        Int n(t.get_num() / t.get_den());
        Rat frac = t - Rat(n);
        Rat dist = std::min(Rat(frac), Rat(1 - frac));
        CHECK(toRational(gaps[i].lower()) <= dist + Rat(1, 1000000));
        CHECK(dist - Rat(1, 1000000) <= toRational(gaps[i].upper()));
    }
    // a coarse xi cannot resolve the fractional parts
    CReal coarse = roundTo(xi, 40);
    CReal blurred(coarse.mid, Dyadic::pow2(-40));
    CHECK_THROWS_AS(cubicGapSequence(seq, blurred, 10), PrecisionError);
}

TEST_CASE("csv renderers emit one line per record") {
    CReal xi = dyadicXi(0.6180339887);
    auto recs = minimalPoints(xi, 25);
    std::string csv = minimalPointsCsv(recs);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(recs.size()) + 1);
    auto polys = minimalPolys(xi, 4);
    std::string pcsv = minimalPolysCsv(polys);
    CHECK(std::count(pcsv.begin(), pcsv.end(), '\n') == static_cast<long>(polys.size()) + 1);
}
