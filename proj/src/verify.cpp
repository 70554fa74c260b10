#include "extremal/verify.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "extremal/linalg.hpp"

namespace extremal {

namespace {

constexpr double kGamma = 1.6180339887498948482;
constexpr double kGammaCubed = 2 * kGamma + 1;
constexpr double kInflate = 1e-9;  // slack for double-precision log/exp steps

Dyadic dyadicFromDouble(double x) {
    int e = 0;
    double m = std::frexp(x, &e);
    auto man = static_cast<long long>(std::llround(std::ldexp(m, 53)));
    return Dyadic(Int(static_cast<long>(man)), e - 53);
}

std::string midRadJson(const CReal& v, nlohmann::json& out) {
    out = {{"mid", toDecimal(v.mid, 25)}, {"rad", v.rad.isZero() ? "0" : toDecimal(v.rad, 4)}};
    return {};
}

}  // namespace

std::string outcomeName(Outcome o) {
    switch (o) {
        case Outcome::PASS: return "PASS";
        case Outcome::FAIL: return "FAIL";
        default: return "INDETERMINATE";
    }
}

int outcomeExitCode(Outcome o) {
    switch (o) {
        case Outcome::PASS: return 0;
        case Outcome::FAIL: return 1;
        default: return 2;
    }
}

Outcome combine(Outcome a, Outcome b) {
    if (a == Outcome::FAIL || b == Outcome::FAIL) return Outcome::FAIL;
    if (a == Outcome::INDETERMINATE || b == Outcome::INDETERMINATE)
        return Outcome::INDETERMINATE;
    return Outcome::PASS;
}

ExtremalityCertificate extremalityCertificate(const ExtremalSequence& seq, const CReal& xi,
                                              std::size_t lo, std::size_t hi) {
    if (seq.size() < 3) throw std::invalid_argument("extremalityCertificate: need >= 3 terms");
    if (lo < 1 || lo > hi || hi + 2 > seq.size())
        throw std::invalid_argument("extremalityCertificate: range needs terms up to hi+2");

    ExtremalityCertificate cert;
    cert.rangeLo = lo;
    cert.rangeHi = hi;
    CReal xi2 = square(xi);
    double logC = 0;  // log2 of the measured constant

    for (std::size_t i = lo; i <= hi; ++i) {
        CertRow row;
        row.i = i;
        const IntTriple& y = seq.term(i);
        row.norm = maxNorm(y);
        row.det2v = det2(y);
        row.det3v = det3(y, seq.term(i + 1), seq.term(i + 2));
        CReal L = heightL(y, xi, xi2);
        row.LtimesNorm = L * row.norm;

        double ln = log2Approx(row.norm);
        double lnNext = log2Approx(maxNorm(seq.term(i + 1)));
        row.logNormRatio = ln > 1e-9 ? lnNext / ln : 0;

        if (sgn(row.det2v) == 0) {
            row.outcome = Outcome::FAIL;
            row.note = "det2 vanishes";
        }
        if (sgn(row.det3v) == 0) {
            row.outcome = Outcome::FAIL;
            row.note += std::string(row.note.empty() ? "" : "; ") + "det3 vanishes";
        }

        // growth-exponent contribution to c
        logC = std::max(logC, std::fabs(lnNext - kGamma * ln));
        if (sgn(row.det2v) != 0) logC = std::max(logC, log2Approx(abs(row.det2v)));
        if (sgn(row.det3v) != 0) logC = std::max(logC, log2Approx(abs(row.det3v)));

        if (row.LtimesNorm.lower().sign() <= 0) {
            if (row.outcome != Outcome::FAIL) {
                row.outcome = Outcome::INDETERMINATE;
                row.note = "L enclosure not resolved at this precision";
            }
        } else {
            double lLo = log2Approx(row.LtimesNorm.lower());
            double lHi = log2Approx(row.LtimesNorm.upper());
            logC = std::max(logC, std::max(lHi, -lLo));
            row.slope = ln > 1e-9 ? (0.5 * (lLo + lHi) - ln) / ln : 0;
            if (i >= 10 && row.outcome == Outcome::PASS) {
                if (std::fabs(row.logNormRatio - kGamma) > 0.01) {
                    row.outcome = Outcome::FAIL;
                    row.note = "growth exponent off gamma";
                }
                if (std::fabs(row.slope + 1.0) > 0.01) {
                    row.outcome = Outcome::FAIL;
                    row.note += std::string(row.note.empty() ? "" : "; ") +
                                "approximation slope off -1";
                }
            }
        }
        cert.outcome = combine(cert.outcome, row.outcome);
        cert.rows.push_back(std::move(row));
    }
    cert.measuredC = std::exp2(logC) * (1 + kInflate);
    if (cert.measuredC < 1) cert.measuredC = 1;
    std::ostringstream s;
    s << "consistent with the extremal growth/approximation conditions on range [" << lo << ","
      << hi << "] with c = " << cert.measuredC << " (" << outcomeName(cert.outcome) << ")";
    cert.summary = s.str();
    return cert;
}

std::string ExtremalityCertificate::toJson() const {
    nlohmann::json j;
    j["range"] = {rangeLo, rangeHi};
    j["measured_c"] = measuredC;
    j["outcome"] = outcomeName(outcome);
    j["summary"] = summary;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json row;
        row["i"] = r.i;
        row["norm"] = r.norm.get_str();
        row["det2"] = r.det2v.get_str();
        row["det3"] = r.det3v.get_str();
        midRadJson(r.LtimesNorm, row["L_times_norm"]);
        row["log_norm_ratio"] = r.logNormRatio;
        row["slope"] = r.slope;
        row["outcome"] = outcomeName(r.outcome);
        if (!r.note.empty()) row["note"] = r.note;
        j["rows"].push_back(std::move(row));
    }
    return j.dump(2);
}

std::string ExtremalityCertificate::toCsv() const {
    std::ostringstream out;
    out << "i,norm,det2,det3,L_norm_mid,L_norm_rad,log_norm_ratio,slope,outcome\n";
    for (const auto& r : rows) {
        out << r.i << ',' << r.norm << ',' << r.det2v << ',' << r.det3v << ','
            << toDecimal(r.LtimesNorm.mid, 20) << ','
            << (r.LtimesNorm.rad.isZero() ? "0" : toDecimal(r.LtimesNorm.rad, 4)) << ','
            << r.logNormRatio << ',' << r.slope << ',' << outcomeName(r.outcome) << '\n';
    }
    return out.str();
}

RelationCheckResult relationCheck(const ExtremalSequence& seq) {
    if (seq.size() < 5) throw std::invalid_argument("relationCheck: need >= 5 terms");
    RelationCheckResult res;
    for (std::size_t i = 1; i + 4 <= seq.size(); ++i) {
        IntTriple br = bracket(seq.term(i + 3), seq.term(i + 4));
        RelationRow row;
        row.i = i;
        row.dA = det3(seq.term(i), seq.term(i + 1), br);
        row.dB = det3(seq.term(i + 1), seq.term(i + 2), br);
        res.rows.push_back(std::move(row));
    }
    for (std::size_t k = res.rows.size(); k-- > 0;) {
        if (sgn(res.rows[k].dA) != 0 || sgn(res.rows[k].dB) != 0) break;
        res.firstHoldingIndex = res.rows[k].i;
    }
    return res;
}

namespace {

Matrix2 canonicalClass(const Matrix2& m) {
    auto lessM = [](const Matrix2& x, const Matrix2& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        if (x.c != y.c) return x.c < y.c;
        return x.d < y.d;
    };
    Matrix2 best = m;
    for (const Matrix2& cand : {-m, m.transpose(), -(m.transpose())}) {
        if (lessM(cand, best)) best = cand;
    }
    return best;
}

}  // namespace

MatrixRecoveryResult matrixRecovery(const ExtremalSequence& seq) {
    if (seq.size() < 3) throw std::invalid_argument("matrixRecovery: need >= 3 terms");
    MatrixRecoveryResult res;
    bool have = false;
    std::size_t haveIdx = 0;
    for (std::size_t j = 3; j <= seq.size(); ++j) {
        Matrix2 A = seq.term(j - 1).toMatrix();
        Matrix2 B = seq.term(j - 2).toMatrix();
        Matrix2 Z = seq.term(j).toMatrix();
        // unknowns (s00, s01, s10, s11, lambda): A S B = lambda Z
        std::vector<std::vector<Int>> rows;
        const Int* Arow[2][2] = {{&A.a, &A.b}, {&A.c, &A.d}};
        const Int* Brow[2][2] = {{&B.a, &B.b}, {&B.c, &B.d}};
        const Int* Zrow[2][2] = {{&Z.a, &Z.b}, {&Z.c, &Z.d}};
        for (int r = 0; r < 2; ++r) {
            for (int s = 0; s < 2; ++s) {
                std::vector<Int> eq(5);
                for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l) eq[2 * k + l] = (*Arow[r][k]) * (*Brow[l][s]);
                eq[4] = -(*Zrow[r][s]);
                rows.push_back(std::move(eq));
            }
        }
        auto kernel = nullSpace(std::move(rows), 5);
        if (kernel.size() != 1) {
            res.consistent = false;
            res.note = "ambiguous solve at index " + std::to_string(j);
            continue;
        }
        Matrix2 S(kernel[0][0], kernel[0][1], kernel[0][2], kernel[0][3]);
        Matrix2 Mj = (j % 2 == 1) ? S : S.transpose();
        Matrix2 canon = canonicalClass(Mj);
        if (!have) {
            have = true;
            haveIdx = j;
            res.canonical = canon;
        } else if (!(canon == res.canonical)) {
            res.consistent = false;
            res.note = "indices " + std::to_string(haveIdx) + " and " + std::to_string(j) +
                       " disagree";
        }
    }
    if (!have) {
        res.consistent = false;
        if (res.note.empty()) res.note = "no index produced a unique solve";
    }
    return res;
}

namespace {

CReal scaleByDouble(const CReal& v, double s) {
    Dyadic lo = dyadicFromDouble(s * (1 - kInflate));
    Dyadic hi = dyadicFromDouble(s * (1 + kInflate));
    Dyadic a = roundDown(v.lower() * lo, 64);
    Dyadic b = roundUp(v.upper() * hi, 64);
    if (v.lower().sign() < 0) a = roundDown(v.lower() * hi, 64);
    return CReal::fromEndpoints(a, b);
}

IntTriple coeffTriple(const Poly2& p) { return {p.p0, p.p1, p.p2}; }

}  // namespace

PolyCertificate polyCertificate(const std::vector<MinimalPolyRecord>& polys, const CReal& xi) {
    const std::size_t n = polys.size();
    // smallest index past which all consecutive resultants are nonzero
    std::size_t i1 = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (sgn(resultant(polys[i].poly, polys[i + 1].poly)) == 0) i1 = i + 1;
    }
    PolyCertificate cert;
    for (std::size_t i = std::max<std::size_t>(i1, 1); i + 1 < n; ++i) {
        if (sgn(det3(coeffTriple(polys[i - 1].poly), coeffTriple(polys[i].poly),
                     coeffTriple(polys[i + 1].poly))) != 0)
            cert.qIndices.push_back(i);
    }
    if (cert.qIndices.size() < 3)
        throw std::runtime_error("polyCertificate: fewer than 3 usable records");

    CReal xi2 = square(xi);
    double logC2 = 0;
    for (std::size_t k = 0; k < cert.qIndices.size(); ++k) {
        std::size_t i = cert.qIndices[k];
        PolyCertRow row;
        row.k = i;
        row.height = polys[i].height;
        CReal value = cabs(evalPoly(polys[i].poly, xi, xi2));
        double scale = std::exp2(kGammaCubed * log2Approx(row.height));
        row.scaled = scaleByDouble(value, scale);
        if (k + 1 < cert.qIndices.size()) {
            std::size_t inext = cert.qIndices[k + 1];
            row.resAbs = abs(resultant(polys[i].poly, polys[inext].poly));
            double lh = log2Approx(row.height);
            row.logHeightRatio = lh > 1e-9 ? log2Approx(polys[inext].height) / lh : 0;
            if (sgn(row.resAbs) == 0) {
                cert.outcome = Outcome::FAIL;
            } else {
                logC2 = std::max(logC2, log2Approx(row.resAbs));
            }
        }
        row.det3Abs = abs(det3(coeffTriple(polys[i - 1].poly), coeffTriple(polys[i].poly),
                               coeffTriple(polys[i + 1].poly)));
        if (row.scaled.lower().sign() <= 0) {
            cert.outcome = combine(cert.outcome, Outcome::INDETERMINATE);
        } else {
            logC2 = std::max(logC2, log2Approx(row.scaled.upper()));
            logC2 = std::max(logC2, -log2Approx(row.scaled.lower()));
        }
        cert.rows.push_back(std::move(row));
    }
    cert.measuredC2 = std::exp2(logC2) * (1 + kInflate);
    if (cert.measuredC2 < 1) cert.measuredC2 = 1;
    std::ostringstream s;
    s << "two-sided value bound with exponent -(2*gamma+1) on both sides; "
      << cert.qIndices.size() << " rows, c2 = " << cert.measuredC2 << " ("
      << outcomeName(cert.outcome) << ")";
    cert.summary = s.str();
    return cert;
}

std::string PolyCertificate::toJson() const {
    nlohmann::json j;
    j["q_indices"] = qIndices;
    j["measured_c2"] = measuredC2;
    j["outcome"] = outcomeName(outcome);
    j["summary"] = summary;
    j["exponent_reading"] = "value comparable to height^-(2*gamma+1), two-sided";
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json row;
        row["k"] = r.k;
        row["height"] = r.height.get_str();
        midRadJson(r.scaled, row["scaled_value"]);
        row["res_abs"] = r.resAbs.get_str();
        row["det3_abs"] = r.det3Abs.get_str();
        row["log_height_ratio"] = r.logHeightRatio;
        j["rows"].push_back(std::move(row));
    }
    return j.dump(2);
}

std::string PolyCertificate::toCsv() const {
    std::ostringstream out;
    out << "k,height,scaled_mid,scaled_rad,res_abs,det3_abs,log_height_ratio\n";
    for (const auto& r : rows) {
        out << r.k << ',' << r.height << ',' << toDecimal(r.scaled.mid, 20) << ','
            << (r.scaled.rad.isZero() ? "0" : toDecimal(r.scaled.rad, 4)) << ',' << r.resAbs
            << ',' << r.det3Abs << ',' << r.logHeightRatio << '\n';
    }
    return out.str();
}

SandwichReport dualSandwichCheck(const std::vector<MinimalPolyRecord>& polys, const CReal& xi) {
    SandwichReport rep;
    CReal xi2 = square(xi);
    CReal denom = cmax(CReal(Int(1)), cabs(xi) + xi2);
    for (std::size_t k = 0; k + 1 < polys.size(); ++k) {
        const Poly2& P = polys[k].poly;
        const Poly2& Q = polys[k + 1].poly;
        SandwichRow row;
        row.idx = k;
        CReal vP = cabs(evalPoly(P, xi, xi2));
        CReal vQ = cabs(evalPoly(Q, xi, xi2));
        Int hP = height(P), hQ = height(Q);
        CReal lhs = vQ * (Int(2) * hP);
        CReal rhs = vP * hQ;
        IntTriple w = wedgePoly(P, Q);
        if (w.isZero() || cmp(lhs.lower(), rhs.upper()) > 0) {
            row.preconditionHolds = false;
            row.note = "precondition false";
            ++rep.skipped;
        } else if (cmp(lhs.upper(), rhs.lower()) > 0) {
            row.preconditionHolds = false;
            row.outcome = Outcome::INDETERMINATE;
            row.note = "precondition undecidable";
            ++rep.skipped;
        } else {
            row.preconditionHolds = true;
            ++rep.checked;
            CReal L = heightL(w, xi, xi2);
            CReal lb = cdiv(rhs, denom * Int(2), 192);
            CReal ub = (rhs * Int(3)) * CReal(Dyadic::pow2(-1));
            if (cmp(L.upper(), lb.lower()) < 0 || cmp(L.lower(), ub.upper()) > 0) {
                row.outcome = Outcome::FAIL;
                row.note = "enclosure certainly outside the bounds";
            } else if (cmp(lb.upper(), L.lower()) <= 0 && cmp(L.upper(), ub.lower()) <= 0) {
                row.outcome = Outcome::PASS;
            } else {
                row.outcome = Outcome::INDETERMINATE;
                row.note = "bounds not separated at this precision";
            }
        }
        rep.outcome = combine(rep.outcome, row.outcome);
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace extremal
