#pragma once

#include <utility>
#include <vector>

#include "extremal/certified.hpp"
#include "extremal/poly.hpp"
#include "extremal/sequence.hpp"
#include "extremal/triple.hpp"

namespace extremal {

struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MinimalPointRecord {
    IntTriple point;
    Int norm;
    CReal L;
};

/// Brute-force minimal-point sequence for xi in (0,1) with max-norm <= Xmax.
/// Requires rad(xi) < 1/(8 Xmax^2).  Results are independent of the worker
/// count.
std::vector<MinimalPointRecord> minimalPoints(const CReal& xi, long Xmax, int workers = 1);

/// Matching of scan records against +/- generated triples.  Records whose
/// value satisfies L * norm^(1/gamma) <= 1/2 (certified) are the ones the
/// uniqueness argument covers; those are all expected to match past N0.
/// Unmatched records failing the smallness cut are reported separately --
/// they are near-miss integer combinations (e.g. y_{i+1} - y_i) whose L
/// dips just below the previous record.
struct MinimalPointCrossCheck {
    Int N0;  // small-value records with norm >= N0 all match +/- a triple
    std::vector<std::size_t> unmatched;    // every record index that matches no triple
    std::vector<std::size_t> interlopers;  // unmatched and certainly above the cut
};

MinimalPointCrossCheck crosscheckMinimalPoints(const std::vector<MinimalPointRecord>& records,
                                               const ExtremalSequence& seq);

struct MinimalPolyRecord {
    Poly2 poly;
    Int height;
    CReal value;  // |P(xi)|
};

/// Minimal-polynomial sequence (record-small |P(xi)| by height) up to Hmax.
std::vector<MinimalPolyRecord> minimalPolys(const CReal& xi, long Hmax);

/// Minimizer of |P(xi)| over monic cubics with |p|,|q|,|r| <= H.
std::pair<MonicPoly3, CReal> bestMonicCubic(const CReal& xi, long H);

struct CubicRootResult {
    MonicPoly3 poly;
    CReal root;
    CReal distance;  // |xi - root|
};

/// Nearest real root of any monic cubic of height <= H.
CubicRootResult bestCubicAlgebraicInteger(const CReal& xi, long H);

/// Certified enclosures (width <= 2^-precBits) of all real roots.
std::vector<CReal> realRoots(const MonicPoly3& p, long precBits);

/// {y_{i,0} xi^3} for i = 1..count; xi must be precise enough that every
/// enclosure has radius < 1/4.
std::vector<CReal> cubicGapSequence(const ExtremalSequence& seq, const CReal& xi,
                                    std::size_t count);

std::string minimalPointsCsv(const std::vector<MinimalPointRecord>& records);
std::string minimalPolysCsv(const std::vector<MinimalPolyRecord>& records);

}  // namespace extremal
