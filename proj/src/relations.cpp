#include "extremal/relations.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

#include "extremal/golden.hpp"
#include "extremal/linalg.hpp"

namespace extremal {

long MultiDegree::total() const {
    long t = 0;
    for (int x : d) t += x;
    return t;
}

bool RelationCandidate::isZero() const {
    for (const Int& c : coeffs)
        if (sgn(c) != 0) return false;
    return true;
}

std::vector<Monomial> enumerateMonomials(const MultiDegree& md) {
    if (md.d.empty()) throw std::invalid_argument("enumerateMonomials: empty multi-degree");
    for (int x : md.d)
        if (x < 0) throw std::invalid_argument("enumerateMonomials: negative degree");
    if (md.p < 0 || md.p > 2 * md.total())
        throw std::invalid_argument("enumerateMonomials: weight out of range");

    std::vector<Monomial> out;
    Monomial cur;
    cur.e.assign(md.d.size(), {0, 0, 0});
    // maximal weight achievable by slots > j
    std::vector<int> maxTail(md.d.size() + 1, 0);
    for (std::size_t j = md.d.size(); j-- > 0;)
        maxTail[j] = maxTail[j + 1] + 2 * md.d[j];

    auto rec = [&](auto&& self, std::size_t j, int weightLeft) -> void {
        if (j == md.d.size()) {
            if (weightLeft == 0) out.push_back(cur);
            return;
        }
        if (weightLeft < 0 || weightLeft > maxTail[j]) return;
        int dj = md.d[j];
        for (int e0 = 0; e0 <= dj; ++e0) {
            for (int e1 = 0; e1 + e0 <= dj; ++e1) {
                int e2 = dj - e0 - e1;
                cur.e[j] = {e0, e1, e2};
                self(self, j + 1, weightLeft - e1 - 2 * e2);
            }
        }
        cur.e[j] = {0, 0, 0};
    };
    rec(rec, 0, md.p);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return a.e < b.e;
    });
    return out;
}

std::size_t monomialSpaceDim(const MultiDegree& md) { return enumerateMonomials(md).size(); }

std::vector<DerivativeProfile> admissibleProfiles(const MultiDegree& md) {
    GoldenExact rhs;
    for (std::size_t j = 0; j < md.d.size(); ++j)
        rhs = rhs + GoldenExact::gammaPow(j) * Int(md.d[j]);

    std::vector<DerivativeProfile> out;
    DerivativeProfile cur;
    cur.f.assign(md.d.size(), {0, 0});
    auto rec = [&](auto&& self, std::size_t j, GoldenExact lhs) -> void {
        if (goldenCompare(lhs * Int(2), rhs) > 0) return;  // only grows further down
        if (j == md.d.size()) {
            out.push_back(cur);
            return;
        }
        for (int f1 = 0; f1 <= md.d[j]; ++f1) {
            for (int f2 = 0; f1 + f2 <= md.d[j]; ++f2) {
                cur.f[j] = {f1, f2};
                self(self, j + 1, lhs + GoldenExact::gammaPow(j) * Int(f1 + f2));
            }
        }
        cur.f[j] = {0, 0};
    };
    rec(rec, 0, GoldenExact());
    return out;
}

Int derivativeAtOnes(const Monomial& m, const DerivativeProfile& f) {
    Int prod(1);
    for (std::size_t j = 0; j < m.e.size(); ++j) {
        for (int l = 1; l <= 2; ++l) {
            int e = m.e[j][l];
            int k = f.f[j][l - 1];
            for (int t = 0; t < k; ++t) prod *= (e - t);
            if (sgn(prod) == 0) return prod;
        }
    }
    return prod;
}

std::vector<RelationCandidate> relationKernel(const MultiDegree& md) {
    auto monos = enumerateMonomials(md);
    auto profiles = admissibleProfiles(md);
    std::vector<std::vector<Int>> rows;
    rows.reserve(profiles.size());
    for (const auto& f : profiles) {
        std::vector<Int> row(monos.size());
        for (std::size_t c = 0; c < monos.size(); ++c) row[c] = derivativeAtOnes(monos[c], f);
        rows.push_back(std::move(row));
    }
    auto kernel = nullSpace(std::move(rows), monos.size());
    std::vector<RelationCandidate> out;
    for (auto& v : kernel) out.push_back({md, std::move(v)});
    return out;
}

namespace {

// sparse polynomial in the 3(k+1) variables u_{j,l}, keyed by exponent table
using Expo = std::vector<int>;
using MultiPoly = std::map<Expo, Int>;

constexpr int kVars = 15;  // j = 0..4, l = 0..2

MultiPoly mono(int j, int l) {
    Expo e(kVars, 0);
    e[3 * j + l] = 1;
    return {{std::move(e), Int(1)}};
}

MultiPoly add(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (const auto& [e, c] : b) {
        Int& t = r[e];
        t += c;
        if (sgn(t) == 0) r.erase(e);
    }
    return r;
}

MultiPoly neg(const MultiPoly& a) {
    MultiPoly r;
    for (const auto& [e, c] : a) r[e] = -c;
    return r;
}

MultiPoly mul(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            Expo e(kVars);
            for (int i = 0; i < kVars; ++i) e[i] = ea[i] + eb[i];
            Int& t = r[e];
            t += ca * cb;
            if (sgn(t) == 0) r.erase(e);
        }
    }
    return r;
}

MultiPoly det3Sym(const std::array<MultiPoly, 3>& x, const std::array<MultiPoly, 3>& y,
                  const std::array<MultiPoly, 3>& z) {
    MultiPoly r = mul(x[0], add(mul(y[1], z[2]), neg(mul(y[2], z[1]))));
    r = add(r, neg(mul(x[1], add(mul(y[0], z[2]), neg(mul(y[2], z[0]))))));
    r = add(r, mul(x[2], add(mul(y[0], z[1]), neg(mul(y[1], z[0])))));
    return r;
}

// [x,x,z] = X Adj(Z) X on the symmetric-matrix identification
std::array<MultiPoly, 3> bracketSym(int jx, int jz) {
    MultiPoly x0 = mono(jx, 0), x1 = mono(jx, 1), x2 = mono(jx, 2);
    MultiPoly z0 = mono(jz, 0), z1 = mono(jz, 1), z2 = mono(jz, 2);
    // X = [[x0,x1],[x1,x2]], Adj(Z) = [[z2,-z1],[-z1,z0]]
    MultiPoly a[2][2] = {{x0, x1}, {x1, x2}};
    MultiPoly az[2][2] = {{z2, neg(z1)}, {neg(z1), z0}};
    MultiPoly t[2][2];
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            t[r][c] = add(mul(a[r][0], az[0][c]), mul(a[r][1], az[1][c]));
    MultiPoly p[2][2];
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            p[r][c] = add(mul(t[r][0], a[0][c]), mul(t[r][1], a[1][c]));
    return {p[0][0], p[0][1], p[1][1]};
}

}  // namespace

RelationCandidate expandKnownRelation(int which) {
    if (which != 1 && which != 2) throw std::invalid_argument("expandKnownRelation: which in {1,2}");
    int ja = which == 1 ? 0 : 1;
    int jb = which == 1 ? 1 : 2;
    auto br = bracketSym(3, 4);
    std::array<MultiPoly, 3> ua = {mono(ja, 0), mono(ja, 1), mono(ja, 2)};
    std::array<MultiPoly, 3> ub = {mono(jb, 0), mono(jb, 1), mono(jb, 2)};
    MultiPoly det = det3Sym(ua, ub, br);

    MultiDegree md;
    md.d = which == 1 ? std::vector<int>{1, 1, 0, 2, 1} : std::vector<int>{0, 1, 1, 2, 1};
    md.p = 5;
    auto monos = enumerateMonomials(md);
    std::map<std::vector<std::array<int, 3>>, std::size_t> index;
    for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i].e] = i;

    RelationCandidate cand;
    cand.md = md;
    cand.coeffs.assign(monos.size(), Int(0));
    for (const auto& [e, c] : det) {
        std::vector<std::array<int, 3>> table(5);
        for (int j = 0; j < 5; ++j) table[j] = {e[3 * j], e[3 * j + 1], e[3 * j + 2]};
        auto it = index.find(table);
        if (it == index.end())
            throw std::logic_error("expandKnownRelation: monomial outside the expected space");
        cand.coeffs[it->second] = c;
    }
    // content normalization with positive leading coefficient
    Int g(0);
    for (const Int& c : cand.coeffs) g = gcd(g, c);
    if (sgn(g) != 0) {
        int lead = 0;
        for (const Int& c : cand.coeffs)
            if (sgn(c) != 0) {
                lead = sgn(c);
                break;
            }
        if (lead < 0) g = -g;
        for (Int& c : cand.coeffs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
    return cand;
}

bool inSpan(const std::vector<RelationCandidate>& basis, const RelationCandidate& v) {
    if (basis.empty()) return v.isZero();
    std::size_t cols = v.coeffs.size();
    std::vector<std::vector<Int>> rows;
    for (const auto& b : basis) {
        if (b.coeffs.size() != cols) throw std::invalid_argument("inSpan: size mismatch");
        rows.push_back(b.coeffs);
    }
    std::size_t r0 = rankOf(rows, cols);
    rows.push_back(v.coeffs);
    return rankOf(rows, cols) == r0;
}

Int evalCandidate(const RelationCandidate& c, const ExtremalSequence& seq, std::size_t i) {
    auto monos = enumerateMonomials(c.md);
    Int sum(0);
    for (std::size_t m = 0; m < monos.size(); ++m) {
        if (sgn(c.coeffs[m]) == 0) continue;
        Int term = c.coeffs[m];
        for (std::size_t j = 0; j < monos[m].e.size(); ++j) {
            const IntTriple& y = seq.term(i + j);
            const Int* comp[3] = {&y.x0, &y.x1, &y.x2};
            for (int l = 0; l < 3; ++l) {
                for (int t = 0; t < monos[m].e[j][l]; ++t) term *= *comp[l];
            }
        }
        sum += term;
    }
    return sum;
}

std::vector<CandidateVerdict> validateCandidates(const std::vector<RelationCandidate>& cands,
                                                 const ExtremalSequence& seq) {
    std::vector<CandidateVerdict> out;
    for (const auto& c : cands) {
        CandidateVerdict v;
        if (c.isZero()) {
            v.degenerate = true;
            out.push_back(v);
            continue;
        }
        std::size_t k = static_cast<std::size_t>(c.md.k());
        if (seq.size() < k + 1) throw std::invalid_argument("validateCandidates: sequence too short");
        std::size_t windows = seq.size() - k;
        v.windows = windows;
        for (std::size_t i = windows; i-- > 0;) {
            if (sgn(evalCandidate(c, seq, i + 1)) != 0) break;
            v.firstIndex = i + 1;
        }
        out.push_back(v);
    }
    return out;
}

std::vector<SweepHit> sweepSearch(int k, int maxTotal) {
    if (k < 1 || maxTotal < 1) throw std::invalid_argument("sweepSearch: k >= 1, maxTotal >= 1");
    std::vector<SweepHit> hits;
    std::vector<int> d(static_cast<std::size_t>(k) + 1, 0);
    auto rec = [&](auto&& self, std::size_t j, int left) -> void {
        if (j == d.size()) {
            int total = maxTotal - left;
            if (total == 0) return;
            // weights ordered from |d| outward
            for (int off = 0; off <= total; ++off) {
                for (int s = 0; s < (off == 0 ? 1 : 2); ++s) {
                    int p = total + (s == 0 ? off : -off);
                    if (p < 0 || p > 2 * total) continue;
                    MultiDegree md{d, p};
                    auto kernel = relationKernel(md);
                    std::erase_if(kernel, [](const RelationCandidate& c) { return c.isZero(); });
                    if (!kernel.empty()) hits.push_back({md, std::move(kernel)});
                }
            }
            return;
        }
        for (int x = 0; x <= left; ++x) {
            d[j] = x;
            self(self, j + 1, left - x);
        }
        d[j] = 0;
    };
    rec(rec, 0, maxTotal);
    return hits;
}

std::string prettyMonomial(const Monomial& m) {
    std::ostringstream out;
    bool any = false;
    for (std::size_t j = 0; j < m.e.size(); ++j) {
        for (int l = 0; l < 3; ++l) {
            int e = m.e[j][l];
            if (e == 0) continue;
            if (any) out << '*';
            any = true;
            out << "u[" << j << "][" << l << "]";
            if (e > 1) out << '^' << e;
        }
    }
    return any ? out.str() : "1";
}

std::string prettyCandidate(const RelationCandidate& c) {
    auto monos = enumerateMonomials(c.md);
    std::ostringstream out;
    bool any = false;
    for (std::size_t m = 0; m < monos.size(); ++m) {
        const Int& coef = c.coeffs[m];
        if (sgn(coef) == 0) continue;
        if (any) out << (sgn(coef) > 0 ? " + " : " - ");
        else if (sgn(coef) < 0) out << '-';
        any = true;
        Int a = abs(coef);
        if (a != 1) out << a << '*';
        out << prettyMonomial(monos[m]);
    }
    return any ? out.str() : "0";
}

std::string relationsToJson(const std::vector<RelationCandidate>& cands) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : cands) {
        nlohmann::json item;
        item["multidegree"] = c.md.d;
        item["weight"] = c.md.p;
        auto monos = enumerateMonomials(c.md);
        nlohmann::json coeffs = nlohmann::json::array();
        for (std::size_t m = 0; m < monos.size(); ++m) {
            if (sgn(c.coeffs[m]) == 0) continue;
            nlohmann::json table = nlohmann::json::array();
            for (const auto& row : monos[m].e) table.push_back({row[0], row[1], row[2]});
            coeffs.push_back({table, c.coeffs[m].get_str()});
        }
        item["coefficients"] = std::move(coeffs);
        item["pretty"] = prettyCandidate(c);
        j.push_back(std::move(item));
    }
    return j.dump(2);
}

}  // namespace extremal
