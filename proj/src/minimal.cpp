#include "extremal/minimal.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace extremal {

namespace {

Int dyadicCeil(const Dyadic& a) { return -dyadicFloor(-a); }

// floor(a * 2^k) for the fixed-point scan
Int scaleFloor(const Dyadic& a, long k) { return dyadicFloor(Dyadic(a.man, a.exp + k)); }
Int scaleCeil(const Dyadic& a, long k) { return dyadicCeil(Dyadic(a.man, a.exp + k)); }

struct ScanCand {
    Int x0, x1, x2;
    Int norm;
    // enclosures scaled by 2^k
    Int t1lo, t1hi, t2lo, t2hi;
    Int Llo, Lhi;
};

void absInterval(Int& lo, Int& hi) {
    if (sgn(lo) >= 0) return;
    if (sgn(hi) <= 0) {
        std::swap(lo, hi);
        lo = -lo;
        hi = -hi;
        return;
    }
    hi = std::max(Int(-lo), hi);
    lo = 0;
}

// Exact equality detection for overlapping L enclosures: both values are
// dominated by the same exact linear form.
bool exactlyEqualL(const ScanCand& a, const ScanCand& b) {
    bool aT1 = a.t1lo > a.t2hi, bT1 = b.t1lo > b.t2hi;
    bool aT2 = a.t2lo > a.t1hi, bT2 = b.t2lo > b.t1hi;
    if (aT1 && bT1) return a.x0 == b.x0 && a.x1 == b.x1;
    if (aT2 && bT2) return a.x0 == b.x0 && a.x2 == b.x2;
    return false;
}

bool lexLessCand(const ScanCand& a, const ScanCand& b) {
    if (a.x0 != b.x0) return a.x0 < b.x0;
    if (a.x1 != b.x1) return a.x1 < b.x1;
    return a.x2 < b.x2;
}

// Collect candidates over x0 in [lo, hi) that are not certainly worse than
// the running block minimum.
std::vector<ScanCand> collectRange(long lo, long hi, long Xmax, long k, const Int& XL,
                                   const Int& XU, const Int& YL, const Int& YU) {
    std::vector<ScanCand> kept;
    bool haveBest = false;
    Int bestHi;
    Int aLo, aHi, bLo, bHi, f, g, xs;
    for (long x0 = lo; x0 < hi; ++x0) {
        aLo = XL * x0;
        aHi = XU * x0;
        bLo = YL * x0;
        bHi = YU * x0;
        mpz_fdiv_q_2exp(f.get_mpz_t(), aLo.get_mpz_t(), k);
        mpz_fdiv_q_2exp(g.get_mpz_t(), bLo.get_mpz_t(), k);
        for (int i = 0; i < 3; ++i) {
            Int x1 = f + i;
            if (sgn(x1) < 0) continue;
            Int t1lo, t1hi;
            xs = x1;
            mpz_mul_2exp(xs.get_mpz_t(), xs.get_mpz_t(), k);
            t1lo = xs - aHi;
            t1hi = xs - aLo;
            absInterval(t1lo, t1hi);
            for (int j = 0; j < 3; ++j) {
                Int x2 = g + j;
                if (sgn(x2) < 0) continue;
                ScanCand c;
                c.x0 = x0;
                c.x1 = x1;
                c.x2 = x2;
                c.norm = std::max(Int(x0), std::max(x1, x2));
                if (c.norm > Xmax) continue;
                xs = x2;
                mpz_mul_2exp(xs.get_mpz_t(), xs.get_mpz_t(), k);
                c.t2lo = xs - bHi;
                c.t2hi = xs - bLo;
                absInterval(c.t2lo, c.t2hi);
                c.t1lo = t1lo;
                c.t1hi = t1hi;
                c.Llo = std::max(c.t1lo, c.t2lo);
                c.Lhi = std::max(c.t1hi, c.t2hi);
                if (haveBest && c.Llo > bestHi) continue;
                if (!haveBest || c.Lhi < bestHi) {
                    bestHi = c.Lhi;
                    haveBest = true;
                }
                kept.push_back(std::move(c));
            }
        }
    }
    return kept;
}

}  // namespace

std::vector<MinimalPointRecord> minimalPoints(const CReal& xi, long Xmax, int workers) {
    if (Xmax < 1) throw std::invalid_argument("minimalPoints: Xmax >= 1 required");
    if (!(xi.lower().sign() > 0) || !(xi.upper() < Dyadic::one()))
        throw std::invalid_argument("minimalPoints: xi must lie in (0,1)");
    {
        Dyadic bound = divDown(Dyadic::one(), Dyadic(Int(8) * Int(Xmax) * Int(Xmax)), 64);
        if (!(xi.rad < bound))
            throw PrecisionError("minimalPoints: xi radius too large for Xmax");
    }
    long k = std::max(64L, static_cast<long>(-log2Approx(
                               xi.rad.isZero() ? Dyadic::pow2(-4 * 64) : xi.rad)) + 8);
    CReal xi2 = square(xi);
    Int XL = scaleFloor(xi.lower(), k), XU = scaleCeil(xi.upper(), k);
    Int YL = scaleFloor(xi2.lower(), k), YU = scaleCeil(xi2.upper(), k);

    int w = std::max(1, workers);
    std::vector<std::vector<ScanCand>> parts(w);
    if (w == 1) {
        parts[0] = collectRange(1, Xmax + 1, Xmax, k, XL, XU, YL, YU);
    } else {
        std::vector<std::thread> threads;
        long chunk = (Xmax + w - 1) / w;
        for (int t = 0; t < w; ++t) {
            long lo = 1 + t * chunk;
            long hi = std::min(Xmax + 1, lo + chunk);
            if (lo > Xmax) break;
            threads.emplace_back([&, t, lo, hi] {
                parts[t] = collectRange(lo, hi, Xmax, k, XL, XU, YL, YU);
            });
        }
        for (auto& th : threads) th.join();
    }
    std::vector<ScanCand> all;
    for (auto& p : parts) {
        all.insert(all.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
        p.clear();
    }
    std::sort(all.begin(), all.end(), [](const ScanCand& a, const ScanCand& b) {
        if (a.norm != b.norm) return a.norm < b.norm;
        return lexLessCand(a, b);
    });

    // replay: group per norm, pick the group minimum, then apply the
    // record-breaking sweep with certified comparisons
    std::vector<MinimalPointRecord> records;
    const ScanCand* best = nullptr;
    std::size_t i = 0;
    while (i < all.size()) {
        std::size_t j = i;
        const ScanCand* groupBest = &all[i];
        for (++j; j < all.size() && all[j].norm == all[i].norm; ++j) {
            const ScanCand& c = all[j];
            if (c.Lhi < groupBest->Llo) {
                groupBest = &c;
            } else if (groupBest->Lhi < c.Llo) {
                // keep groupBest
            } else if (!exactlyEqualL(*groupBest, c)) {
                throw PrecisionError("minimalPoints: unresolved comparison at x0 = " +
                                     c.x0.get_str());
            }
            // exact tie: lex order already favors the earlier candidate
        }
        const ScanCand& c = *groupBest;
        bool take = false;
        if (best == nullptr) {
            take = true;
        } else if (c.Lhi < best->Llo) {
            take = true;
        } else if (best->Lhi < c.Llo || exactlyEqualL(*best, c)) {
            take = false;
        } else {
            throw PrecisionError("minimalPoints: unresolved record comparison at x0 = " +
                                 c.x0.get_str());
        }
        if (take) {
            MinimalPointRecord rec;
            rec.point = IntTriple(c.x0, c.x1, c.x2);
            rec.norm = c.norm;
            rec.L = CReal::fromEndpoints(Dyadic(c.Llo, -k), Dyadic(c.Lhi, -k));
            records.push_back(std::move(rec));
            best = groupBest;
        }
        i = j;
    }
    return records;
}

MinimalPointCrossCheck crosscheckMinimalPoints(const std::vector<MinimalPointRecord>& records,
                                               const ExtremalSequence& seq) {
    std::set<std::array<std::string, 3>> keys;
    for (const auto& t : seq.triples())
        keys.insert({t.x0.get_str(), t.x1.get_str(), t.x2.get_str()});
    MinimalPointCrossCheck res;
    res.N0 = 1;
    const double invGamma = 0.61803398874989485;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& p = records[i].point;
        auto [norm, rho] = primitive(p);
        (void)rho;
        bool match = keys.count({norm.x0.get_str(), norm.x1.get_str(), norm.x2.get_str()}) > 0;
        if (match) continue;
        res.unmatched.push_back(i);
        // smallness cut L * norm^(1/gamma) <= 1/2, decided with slack
        double lr = log2Approx(records[i].L.lower().sign() > 0 ? records[i].L.lower()
                                                               : records[i].L.upper()) +
                    invGamma * log2Approx(records[i].norm);
        if (records[i].L.lower().sign() > 0 && lr > -0.99) {
            res.interlopers.push_back(i);
        } else {
            res.N0 = records[i].norm + 1;
        }
    }
    return res;
}

namespace {

struct PolyCand {
    Poly2 poly;
    Int height;
    CReal value;
};

}  // namespace

std::vector<MinimalPolyRecord> minimalPolys(const CReal& xi, long Hmax) {
    if (Hmax < 1) throw std::invalid_argument("minimalPolys: Hmax >= 1");
    if (!(xi.lower().sign() > 0) || !(xi.upper() < Dyadic::one()))
        throw std::invalid_argument("minimalPolys: xi must lie in (0,1)");
    CReal xiR = roundTo(xi, 512);
    CReal xi2 = square(xiR);

    std::set<std::array<long, 3>> seen;  // (p2,p1,p0) sign-normalized
    std::vector<Poly2> cands;
    auto push = [&](long p0, long p1, long p2) {
        Poly2 p = signNormalize(Poly2(Int(p0), Int(p1), Int(p2)));
        if (p.isZero()) return;
        if (seen.insert({p.p2.get_si(), p.p1.get_si(), p.p0.get_si()}).second)
            cands.push_back(std::move(p));
    };

    long smallH = std::min(Hmax, 4L);
    for (long p2 = -smallH; p2 <= smallH; ++p2)
        for (long p1 = -smallH; p1 <= smallH; ++p1)
            for (long p0 = -smallH; p0 <= smallH; ++p0) push(p0, p1, p2);

    if (Hmax > 4) {
        double X1 = toDouble(xiR.mid);
        double X2 = X1 * X1;
        for (long p2 = 0; p2 <= Hmax; ++p2) {
            long p1lo = (p2 == 0) ? 1 : -Hmax;
            for (long p1 = p1lo; p1 <= Hmax; ++p1) {
                double t = static_cast<double>(p2) * X2 + static_cast<double>(p1) * X1;
                long base = -static_cast<long>(std::nearbyint(t));
                for (long p0 = base - 1; p0 <= base + 1; ++p0) {
                    long h = std::max({std::labs(p0), std::labs(p1), std::labs(p2)});
                    if (h <= 4 || h > Hmax) continue;
                    double va = std::fabs(t + static_cast<double>(p0));
                    double hd = static_cast<double>(h);
                    if (va < 10.0 / (hd * hd) + 1e-10 * hd) push(p0, p1, p2);
                }
            }
        }
    }

    std::vector<PolyCand> evald;
    evald.reserve(cands.size());
    for (auto& p : cands) {
        PolyCand c;
        c.height = height(p);
        c.value = cabs(evalPoly(p, xiR, xi2));
        c.poly = std::move(p);
        evald.push_back(std::move(c));
    }
    std::sort(evald.begin(), evald.end(), [](const PolyCand& a, const PolyCand& b) {
        if (a.height != b.height) return a.height < b.height;
        if (a.poly.p2 != b.poly.p2) return a.poly.p2 < b.poly.p2;
        if (a.poly.p1 != b.poly.p1) return a.poly.p1 < b.poly.p1;
        return a.poly.p0 < b.poly.p0;
    });

    std::vector<MinimalPolyRecord> records;
    const PolyCand* best = nullptr;
    std::size_t i = 0;
    while (i < evald.size()) {
        std::size_t j = i;
        const PolyCand* groupBest = &evald[i];
        for (++j; j < evald.size() && evald[j].height == evald[i].height; ++j) {
            auto c = certifiedCmp(evald[j].value, groupBest->value);
            if (!c)
                throw PrecisionError("minimalPolys: unresolved comparison between candidates");
            if (*c < 0) groupBest = &evald[j];
        }
        bool take = false;
        if (best == nullptr) {
            take = true;
        } else {
            auto c = certifiedCmp(groupBest->value, best->value);
            if (!c) throw PrecisionError("minimalPolys: unresolved record comparison");
            take = *c < 0;
        }
        if (take) {
            records.push_back({groupBest->poly, groupBest->height, groupBest->value});
            best = groupBest;
        }
        i = j;
    }
    return records;
}

std::pair<MonicPoly3, CReal> bestMonicCubic(const CReal& xi, long H) {
    if (H < 1) throw std::invalid_argument("bestMonicCubic: H >= 1");
    CReal c1 = roundTo(xi, 320);
    CReal c2 = square(c1);
    CReal c3 = c1 * c2;
    bool have = false;
    MonicPoly3 bestP;
    CReal bestV;
    Dyadic halfD = Dyadic::pow2(-1);
    for (long p = -H; p <= H; ++p) {
        CReal tp = c3 + c2 * Int(p);
        for (long q = -H; q <= H; ++q) {
            CReal t = tp + c1 * Int(q);
            Int r0 = -dyadicFloor(t.mid + halfD);
            for (Int r = r0 - 1; r <= r0 + 1; ++r) {
                Int rc = r;
                if (rc > H) rc = H;
                if (rc < -H) rc = -H;
                CReal v = cabs(t + rc);
                if (!have) {
                    have = true;
                    bestP = MonicPoly3(Int(p), Int(q), rc);
                    bestV = v;
                    continue;
                }
                auto c = certifiedCmp(v, bestV);
                if (!c) {
                    if (MonicPoly3(Int(p), Int(q), rc) == bestP) continue;
                    throw PrecisionError("bestMonicCubic: unresolved comparison");
                }
                if (*c < 0) {
                    bestP = MonicPoly3(Int(p), Int(q), rc);
                    bestV = v;
                }
            }
        }
    }
    return {bestP, bestV};
}

namespace {

CReal sqrtEnclosure(const Int& d, long m) {
    if (sgn(d) < 0) throw std::domain_error("sqrtEnclosure: negative");
    Int scaled = d;
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * static_cast<unsigned long>(m));
    Int s;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    if (s * s == scaled) return CReal(Dyadic(s, -m));
    return CReal::fromEndpoints(Dyadic(s, -m), Dyadic(s + 1, -m));
}

CReal bisectRoot(const MonicPoly3& p, Dyadic lo, Dyadic hi, long precBits) {
    int slo = evalExact(p, lo).sign();
    int shi = evalExact(p, hi).sign();
    if (slo == 0) return CReal(lo);
    if (shi == 0) return CReal(hi);
    if (slo == shi) throw std::logic_error("bisectRoot: no sign change");
    Dyadic eps = Dyadic::pow2(-precBits);
    while (eps < hi - lo) {
        Dyadic mid = half(lo + hi);
        int sm = evalExact(p, mid).sign();
        if (sm == 0) return CReal(mid);
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
    return CReal::fromEndpoints(lo, hi);
}

}  // namespace

std::vector<CReal> realRoots(const MonicPoly3& p, long precBits) {
    Int disc = discriminant(p);
    Int maxc = std::max({abs(p.p), abs(p.q), abs(p.r)});
    Dyadic B(maxc + 1);
    std::vector<CReal> roots;
    if (sgn(disc) < 0) {
        roots.push_back(bisectRoot(p, -B, B, precBits));
        return roots;
    }
    if (sgn(disc) > 0) {
        // three distinct real roots, separated by the critical points
        Int d2 = p.p * p.p - 3 * p.q;
        for (long m = 32;; m *= 2) {
            if (m > 1L << 20) throw PrecisionError("realRoots: critical point separation failed");
            CReal s = sqrtEnclosure(d2, m);
            CReal tm = cdiv(CReal(-p.p) - s, CReal(Int(3)), m + 16);
            CReal tp = cdiv(CReal(-p.p) + s, CReal(Int(3)), m + 16);
            Dyadic cLeft = tm.mid, cRight = tp.mid;
            if (evalExact(p, cLeft).sign() > 0 && evalExact(p, cRight).sign() < 0) {
                roots.push_back(bisectRoot(p, -B, cLeft, precBits));
                roots.push_back(bisectRoot(p, cLeft, cRight, precBits));
                roots.push_back(bisectRoot(p, cRight, B, precBits));
                return roots;
            }
        }
    }
    // disc == 0: the multiple root is an integer dividing r (or 0)
    std::vector<Int> intRoots;
    auto tryRoot = [&](const Int& a) {
        if (evalExact(p, Rat(a)) == 0) intRoots.push_back(a);
    };
    if (sgn(p.r) == 0) {
        tryRoot(Int(0));
    }
    Int ar = abs(p.r);
    for (Int d(1); d * d <= ar; ++d) {
        if (sgn(ar) != 0 && ar % d == 0) {
            for (const Int& cand : {Int(d), Int(ar / d)}) {
                tryRoot(cand);
                tryRoot(-cand);
            }
        }
    }
    if (intRoots.empty()) throw std::logic_error("realRoots: disc=0 without integer root");
    Int alpha = intRoots.front();
    // P = (T - alpha)(T^2 + bT + c)
    Int b = p.p + alpha;
    Int c = p.q + alpha * b;
    roots.push_back(CReal(alpha));
    Int d3 = b * b - 4 * c;
    if (sgn(d3) >= 0) {
        // remaining roots (-b +/- sqrt(d3)) / 2
        CReal s = sqrtEnclosure(d3, precBits + 4);
        Dyadic nb(-b);
        roots.push_back(CReal::fromEndpoints(half(nb - s.upper()), half(nb - s.lower())));
        roots.push_back(CReal::fromEndpoints(half(nb + s.lower()), half(nb + s.upper())));
    }
    return roots;
}

CubicRootResult bestCubicAlgebraicInteger(const CReal& xi, long H) {
    if (H < 1) throw std::invalid_argument("bestCubicAlgebraicInteger: H >= 1");
    CReal c1 = roundTo(xi, 400);
    CReal c2 = square(c1);
    CReal c3 = c1 * c2;
    double x = toDouble(c1.mid);

    // cheap double-precision pass for a starting candidate
    double bestEst = 1e300;
    MonicPoly3 seedPoly(Int(0), Int(0), Int(std::lround(std::fmin(
                                            static_cast<double>(H),
                                            std::fmax(-static_cast<double>(H),
                                                      -std::nearbyint(x * x * x))))));
    for (long p = -H; p <= H; ++p) {
        for (long q = -H; q <= H; ++q) {
            double t = x * x * x + p * x * x + q * x;
            double r0 = -std::nearbyint(t);
            if (r0 > H) r0 = H;
            if (r0 < -H) r0 = -H;
            double a = x;
            for (int it = 0; it < 6; ++it) {
                double f = a * a * a + p * a * a + q * a + r0;
                double df = 3 * a * a + 2 * p * a + q;
                if (std::fabs(df) < 1e-12) break;
                a -= f / df;
            }
            double d = std::fabs(x - a);
            if (std::isfinite(d) && d < bestEst) {
                bestEst = d;
                seedPoly = MonicPoly3(Int(p), Int(q), Int(static_cast<long>(r0)));
            }
        }
    }

    long prec = std::max(128L, static_cast<long>(-std::log2(std::max(bestEst, 1e-280))) + 64);
    CReal globalMin;
    bool have = false;
    CubicRootResult result;

    auto consider = [&](const MonicPoly3& poly) {
        auto roots = realRoots(poly, prec);
        for (const auto& rt : roots) {
            CReal d = cabs(c1 - rt);
            if (!have) {
                have = true;
                globalMin = d;
                result = {poly, rt, d};
                continue;
            }
            if (cmp(d.upper(), globalMin.upper()) < 0) {
                result = {poly, rt, d};
            }
            globalMin = CReal::fromEndpoints(dmin(globalMin.lower(), d.lower()),
                                             dmin(globalMin.upper(), d.upper()));
        }
    };
    consider(seedPoly);

    for (long p = -H; p <= H; ++p) {
        CReal tp = c3 + c2 * Int(p);
        for (long q = -H; q <= H; ++q) {
            CReal t = tp + c1 * Int(q);
            // window of trailing coefficients that could place a root within
            // the current best distance
            Dyadic delta = globalMin.upper();
            if (delta.sign() < 0) delta = Dyadic();
            Dyadic A = roundUp(dabs(c1.mid) + c1.rad + delta, 53);
            Dyadic Du = roundUp(A * A * Int(3) + A * Int(2 * std::labs(p)) + Dyadic(Int(std::labs(q))), 53);
            Dyadic w = roundUp(Du * delta, 53);
            Int rlo = dyadicFloor(-t.upper() - w);
            Int rhi = dyadicCeil(-t.lower() + w);
            for (Int r = rlo; r <= rhi; ++r) {
                if (r > H || r < -H) continue;
                MonicPoly3 poly(Int(p), Int(q), r);
                if (poly == result.poly) continue;
                // quick reject on |P(xi)|
                CReal v = cabs(t + r);
                if (cmp(v.lower(), w) > 0) continue;
                consider(poly);
            }
        }
    }
    result.distance = globalMin;
    return result;
}

std::vector<CReal> cubicGapSequence(const ExtremalSequence& seq, const CReal& xi,
                                    std::size_t count) {
    if (count > seq.size()) throw std::invalid_argument("cubicGapSequence: not enough terms");
    CReal xi3 = cube(xi);
    std::vector<CReal> out;
    out.reserve(count);
    for (std::size_t i = 1; i <= count; ++i) {
        CReal v = xi3 * seq.term(i).x0;
        try {
            out.push_back(distToNearestInt(v));
        } catch (const std::domain_error&) {
            throw PrecisionError("cubicGapSequence: xi radius too large at index " +
                                 std::to_string(i));
        }
    }
    return out;
}

namespace {

std::string radString(const Dyadic& rad) {
    if (rad.isZero()) return "0";
    double l10 = log2Approx(rad) * 0.30102999566398120;
    return "1e" + std::to_string(static_cast<long>(std::ceil(l10)));
}

}  // namespace

std::string minimalPointsCsv(const std::vector<MinimalPointRecord>& records) {
    std::ostringstream out;
    out << "index,x0,x1,x2,norm,L_mid,L_rad\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        out << i + 1 << ',' << r.point.x0 << ',' << r.point.x1 << ',' << r.point.x2 << ','
            << r.norm << ',' << toDecimal(r.L.mid, 30) << ',' << radString(r.L.rad) << '\n';
    }
    return out.str();
}

std::string minimalPolysCsv(const std::vector<MinimalPolyRecord>& records) {
    std::ostringstream out;
    out << "index,p0,p1,p2,height,value_mid,value_rad\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        out << i + 1 << ',' << r.poly.p0 << ',' << r.poly.p1 << ',' << r.poly.p2 << ','
            << r.height << ',' << toDecimal(r.value.mid, 30) << ',' << radString(r.value.rad)
            << '\n';
    }
    return out.str();
}

}  // namespace extremal
