#pragma once

#include <optional>
#include <string>
#include <vector>

#include "extremal/certified.hpp"
#include "extremal/minimal.hpp"
#include "extremal/poly.hpp"
#include "extremal/sequence.hpp"
#include "extremal/triple.hpp"

namespace extremal {

enum class Outcome { PASS, FAIL, INDETERMINATE };

std::string outcomeName(Outcome o);
int outcomeExitCode(Outcome o);
/// FAIL dominates, then INDETERMINATE.
Outcome combine(Outcome a, Outcome b);

struct CertRow {
    std::size_t i = 0;
    Int norm;
    Int det2v;
    Int det3v;          // det3(y_i, y_{i+1}, y_{i+2})
    CReal LtimesNorm;   // L_xi(y_i) * ||y_i||
    double logNormRatio = 0;  // log||y_{i+1}|| / log||y_i||
    double slope = 0;         // log L_xi(y_i) / log||y_i||
    Outcome outcome = Outcome::PASS;
    std::string note;
};

/// Finite-range growth/approximation certificate: exact determinant
/// non-vanishing, certified L * norm enclosures, growth-exponent ratios, and
/// the smallest constant c >= 1 making all four condition families hold on
/// the covered range.
struct ExtremalityCertificate {
    std::size_t rangeLo = 0, rangeHi = 0;
    std::vector<CertRow> rows;
    double measuredC = 0;
    Outcome outcome = Outcome::PASS;
    std::string summary;

    std::string toJson() const;
    std::string toCsv() const;
};

ExtremalityCertificate extremalityCertificate(const ExtremalSequence& seq, const CReal& xi,
                                              std::size_t lo, std::size_t hi);

struct RelationRow {
    std::size_t i = 0;
    Int dA;  // det3(y_i,     y_{i+1}, [y_{i+3}, y_{i+3}, y_{i+4}])
    Int dB;  // det3(y_{i+1}, y_{i+2}, [y_{i+3}, y_{i+3}, y_{i+4}])
};

struct RelationCheckResult {
    std::vector<RelationRow> rows;
    /// smallest i0 with dA = dB = 0 for every covered i >= i0
    std::optional<std::size_t> firstHoldingIndex;
};

/// Exact evaluation of the two determinant relations along the sequence.
RelationCheckResult relationCheck(const ExtremalSequence& seq);

struct MatrixRecoveryResult {
    Matrix2 canonical;  // lexicographically smallest of {+/-M, +/-M^T}
    bool consistent = true;
    std::string note;
};

/// Recover the recurrence matrix from the triples alone, up to sign and
/// transposition; verifies every index agrees on the class.
MatrixRecoveryResult matrixRecovery(const ExtremalSequence& seq);

struct PolyCertRow {
    std::size_t k = 0;      // position in the input record list
    Int height;
    CReal scaled;           // |Q_k(xi)| * H(Q_k)^(2*gamma+1)
    Int resAbs;             // |Res(Q_k, Q_{k+1})|, 0 on the last row
    Int det3Abs;            // |det3| of the three consecutive coefficient triples
    double logHeightRatio = 0;
};

/// Certificate over the extracted subsequence of minimal polynomials with
/// independent neighbors and nonzero consecutive resultants.  The value
/// bound is two-sided with exponent -(2*gamma+1) on both sides (the
/// one-sided variant is vacuous); this reading is recorded in the summary.
struct PolyCertificate {
    std::vector<std::size_t> qIndices;
    std::vector<PolyCertRow> rows;
    double measuredC2 = 0;
    Outcome outcome = Outcome::PASS;
    std::string summary;

    std::string toJson() const;
    std::string toCsv() const;
};

PolyCertificate polyCertificate(const std::vector<MinimalPolyRecord>& polys, const CReal& xi);

struct SandwichRow {
    std::size_t idx = 0;  // pair (polys[idx], polys[idx+1])
    bool preconditionHolds = false;
    Outcome outcome = Outcome::PASS;
    std::string note;
};

struct SandwichReport {
    std::vector<SandwichRow> rows;
    std::size_t checked = 0;
    std::size_t skipped = 0;
    Outcome outcome = Outcome::PASS;
};

/// For consecutive records (P,Q) with 2 H(P)|Q(xi)| <= H(Q)|P(xi)| certified,
/// assert H(Q)|P(xi)| / (2 max(1, |xi|+xi^2)) <= L_xi(P ^ Q) <= (3/2) H(Q)|P(xi)|.
SandwichReport dualSandwichCheck(const std::vector<MinimalPolyRecord>& polys, const CReal& xi);

}  // namespace extremal
