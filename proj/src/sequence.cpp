#include "extremal/sequence.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <stdexcept>

namespace extremal {

namespace {

std::vector<std::string> hardFailures(const Seed& s) {
    std::vector<std::string> f;
    const Matrix2& M = s.M;
    if (sgn(det(M)) == 0) f.push_back("M singular");
    if (M.isSymmetric()) f.push_back("M symmetric");
    if (sgn(M.a) == 0 && sgn(M.d) == 0 && M.b == -M.c) f.push_back("M skew-symmetric");
    Int g;
    mpz_gcd(g.get_mpz_t(), M.a.get_mpz_t(), M.b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), M.c.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), M.d.get_mpz_t());
    if (g != 1) f.push_back("gcd of M entries != 1");
    if (!isPrimitive(s.y1)) f.push_back("y1 not primitive");
    if (!isPrimitive(s.y2)) f.push_back("y2 not primitive");
    if (sgn(det2(s.y1)) == 0) f.push_back("det2(y1) = 0");
    if (sgn(det2(s.y2)) == 0) f.push_back("det2(y2) = 0");
    if (!f.empty()) return f;
    Matrix2 prod = s.y2.toMatrix() * M * s.y1.toMatrix();
    if (!prod.isSymmetric()) f.push_back("y2 M y1 not symmetric");
    return f;
}

}  // namespace

std::string SeedReport::summary() const {
    std::ostringstream out;
    out << (ok ? "PASS" : "FAIL");
    for (const auto& s : failures) out << "; " << s;
    if (ok) {
        out << "; norms:";
        for (const auto& n : firstNorms) out << ' ' << n;
        out << "; min growth ratio " << minGrowthRatio.get_str();
    }
    return out.str();
}

SeedReport validateSeed(const Seed& seed) {
    SeedReport rep;
    rep.failures = hardFailures(seed);
    if (!rep.failures.empty()) return rep;
    rep.ok = true;
    ExtremalSequence seq(seed);
    seq.extend(10);
    for (const auto& t : seq.triples()) rep.firstNorms.push_back(maxNorm(t));
    bool first = true;
    for (std::size_t i = 0; i + 2 < seq.size(); ++i) {
        Rat r(rep.firstNorms[i + 2], rep.firstNorms[i + 1] * rep.firstNorms[i]);
        r.canonicalize();
        if (first || r < rep.minGrowthRatio) rep.minGrowthRatio = r;
        first = false;
    }
    return rep;
}

Seed fibonacciSeed(const Int& a, const Int& b) {
    if (sgn(a) <= 0 || sgn(b) <= 0) throw std::invalid_argument("fibonacciSeed: a,b must be positive");
    if (a == b) throw std::invalid_argument("fibonacciSeed: a and b must be distinct");
    Matrix2 A(a, Int(1), Int(1), Int(0));
    Matrix2 B(b, Int(1), Int(1), Int(0));
    Matrix2 M = A * B;
    Matrix2 ABA = A * B * A;
    return {M, IntTriple::fromSymmetric(A), IntTriple::fromSymmetric(ABA)};
}

Seed exampleTwoSeed(const Int& a) {
    if (sgn(a) <= 0) throw std::invalid_argument("exampleTwoSeed: a must be positive");
    Matrix2 M(a, Int(1), Int(-1), Int(0));
    IntTriple y1(Int(1), Int(1), Int(0));
    Int a2 = a * a, a3 = a2 * a;
    IntTriple y2(a3 + 2 * a, a3 - a2 + 2 * a - 1, a3 - 2 * a2 + 3 * a - 2);
    return {M, y1, y2};
}

ExtremalSequence::ExtremalSequence(Seed seed) : seed_(std::move(seed)) {
    auto f = hardFailures(seed_);
    if (!f.empty()) {
        std::string msg = "invalid seed:";
        for (const auto& s : f) msg += " [" + s + "]";
        throw std::invalid_argument(msg);
    }
    triples_ = {seed_.y1, seed_.y2};
}

Matrix2 stepMatrix(const Matrix2& M, std::size_t producedIndex) {
    return producedIndex % 2 == 1 ? M : M.transpose();
}

void ExtremalSequence::extend(std::size_t count) {
    for (std::size_t c = 0; c < count; ++c) {
        std::size_t idx = triples_.size() + 1;  // 1-based index of the new term
        Matrix2 S = stepMatrix(seed_.M, idx);
        Matrix2 prod = triples_.back().toMatrix() * S * triples_[triples_.size() - 2].toMatrix();
        if (!prod.isSymmetric()) {
            throw std::runtime_error("recurrence product not symmetric at index " +
                                     std::to_string(idx));
        }
        auto [y, rho] = primitive(IntTriple::fromSymmetric(prod));
        triples_.push_back(std::move(y));
        rhos_.push_back(std::move(rho));
    }
}

CReal xiFromSequence(const ExtremalSequence& seq, const Dyadic& targetRadius) {
    const auto& ts = seq.triples();
    std::size_t n = ts.size();
    if (n < 5) throw NeedMoreTermsError("xiFromSequence: need at least 5 terms");
    if (!(targetRadius.sign() > 0)) throw std::invalid_argument("targetRadius must be positive");

    std::vector<Int> N(n);
    Int c4(0);
    for (std::size_t j = 0; j < n; ++j) {
        N[j] = maxNorm(ts[j]);
        Int d = abs(det2(ts[j]));
        if (sgn(d) == 0) throw std::runtime_error("xiFromSequence: zero det2 in sequence");
        if (d > c4) c4 = d;
    }
    const Matrix2& M = seq.seed().M;
    Int c6 = abs(M.a) + abs(M.b) + abs(M.c) + abs(M.d);

    const long P = 64;  // working precision of the bound chain (upper bounds)
    // d[j] >= d(y_j, y_{j+1}) for 1 <= j <= n-2
    std::vector<Dyadic> d(n - 1);
    for (std::size_t j = 1; j + 1 < n; ++j) {
        Dyadic num(2 * c4 * c6 * N[j - 1]);
        d[j] = divUp(num, Dyadic(N[j] * N[j + 1]), P);
    }
    std::size_t K = n - 2;
    // geometric-tail hypothesis check on the measured terms
    if (!(d[K] * Int(8) <= d[K - 1]))
        throw NeedMoreTermsError("xiFromSequence: tail terms not yet decaying");
    // suffix sums S[i] >= sum_{j>=i} 2^{j-i} d(y_j,y_{j+1}), tail majorized
    std::vector<Dyadic> S(n - 1);
    S[K] = roundUp(d[K] * Int(11), P);
    S[K].exp -= 3;  // d_K * 11/8 >= d_K * 4/3
    for (std::size_t i = K - 1; i >= 1; --i) {
        S[i] = roundUp(d[i] + S[i + 1] + S[i + 1], P);
        if (i == 1) break;
    }

    Dyadic target = targetRadius;
    Dyadic targetHalf = half(target);
    for (std::size_t i = 1; i + 2 < n; ++i) {
        if (sgn(ts[i].x0) == 0) continue;
        Dyadic absX0(abs(ts[i].x0));
        // bootstrap bound on max(1, xi, xi^2) via the provisional factor 4
        Dyadic e4 = roundUp(divUp(Dyadic(N[i]) * S[i], absX0, P), P);
        e4.exp += 2;
        Dyadic ub = roundUp(divUp(Dyadic(abs(ts[i].x1)), absX0, P) + e4, P);
        if (!(ub <= Dyadic(2))) continue;  // provisional bound not validated at this index
        Dyadic U = dmax(Dyadic::one(), roundUp(ub * ub, P));
        Dyadic r = roundUp(divUp(U * Dyadic(N[i]) * S[i], absX0, P), P);
        if (!(r <= targetHalf)) continue;
        long prec = std::max(96L, static_cast<long>(-log2Approx(targetHalf)) + 8);
        Dyadic num(ts[i].x1), den(ts[i].x0);
        CReal mid = CReal::fromEndpoints(divDown(num, den, prec), divUp(num, den, prec));
        CReal xi(mid.mid, roundUp(mid.rad + r, 48));
        if (xi.rad <= target) return xi;
    }
    throw NeedMoreTermsError("xiFromSequence: cannot reach target radius; extend the sequence");
}

std::vector<Int> fibonacciWord(const Int& a, const Int& b, std::size_t length) {
    // fixed point of a -> ab, b -> a; s1 = a, s2 = ab, s_{k+1} = s_k s_{k-1}
    std::vector<Int> prev = {a};
    std::vector<Int> cur = {a, b};
    if (length <= 1) return {prev.begin(), prev.begin() + length};
    while (cur.size() < length) {
        std::vector<Int> next = cur;
        next.insert(next.end(), prev.begin(), prev.end());
        prev = std::move(cur);
        cur = std::move(next);
    }
    cur.resize(length);
    return cur;
}

CFExpansion fibonacciWordCF(const Int& a, const Int& b, std::size_t terms) {
    if (sgn(a) <= 0 || sgn(b) <= 0) throw std::invalid_argument("fibonacciWordCF: a,b positive");
    if (a == b) throw std::invalid_argument("fibonacciWordCF: a != b required");
    CFExpansion cf;
    cf.quotients.push_back(Int(0));
    auto word = fibonacciWord(a, b, terms);
    cf.quotients.insert(cf.quotients.end(), word.begin(), word.end());

    Int h1(0), h0(1), k1(1), k0(0);  // h/k after a0=0: h1/k1 = 0/1
    for (const auto& w : word) {
        Int h = w * h1 + h0;
        Int k = w * k1 + k0;
        h0 = h1; h1 = h;
        k0 = k1; k1 = k;
    }
    // |xi - h1/k1| < 1/(k1 * k2), k2 >= k1 + k0
    Int den = k1 * (k1 + k0);
    long prec = 2 * bitLength(k1) + 16;
    CReal mid = CReal::fromEndpoints(divDown(Dyadic(h1), Dyadic(k1), prec),
                                     divUp(Dyadic(h1), Dyadic(k1), prec));
    Dyadic rad = roundUp(mid.rad + divUp(Dyadic::one(), Dyadic(den), 48), 48);
    cf.value = CReal(mid.mid, rad);
    return cf;
}

namespace {

nlohmann::json tripleToJson(const IntTriple& t) {
    return nlohmann::json::array({toDecimal(t.x0), toDecimal(t.x1), toDecimal(t.x2)});
}

IntTriple tripleFromJson(const nlohmann::json& j) {
    return {Int(j.at(0).get<std::string>()), Int(j.at(1).get<std::string>()),
            Int(j.at(2).get<std::string>())};
}

}  // namespace

std::string ExtremalSequence::toJson() const {
    nlohmann::json j;
    j["matrix"] = {toDecimal(seed_.M.a), toDecimal(seed_.M.b), toDecimal(seed_.M.c),
                   toDecimal(seed_.M.d)};
    j["y1"] = tripleToJson(seed_.y1);
    j["y2"] = tripleToJson(seed_.y2);
    j["triples"] = nlohmann::json::array();
    for (const auto& t : triples_) j["triples"].push_back(tripleToJson(t));
    j["rhos"] = nlohmann::json::array();
    for (const auto& r : rhos_)
        j["rhos"].push_back({toDecimal(Int(r.get_num())), toDecimal(Int(r.get_den()))});
    return j.dump(2);
}

ExtremalSequence ExtremalSequence::fromJson(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Seed seed;
    const auto& m = j.at("matrix");
    seed.M = Matrix2(Int(m.at(0).get<std::string>()), Int(m.at(1).get<std::string>()),
                     Int(m.at(2).get<std::string>()), Int(m.at(3).get<std::string>()));
    seed.y1 = tripleFromJson(j.at("y1"));
    seed.y2 = tripleFromJson(j.at("y2"));
    ExtremalSequence seq(seed);
    seq.triples_.clear();
    for (const auto& t : j.at("triples")) seq.triples_.push_back(tripleFromJson(t));
    if (seq.triples_.size() < 2 || !(seq.triples_[0] == seed.y1) || !(seq.triples_[1] == seed.y2))
        throw std::runtime_error("sequence file: triples do not start with y1, y2");
    for (const auto& r : j.at("rhos")) {
        Rat q(Int(r.at(0).get<std::string>()), Int(r.at(1).get<std::string>()));
        q.canonicalize();
        seq.rhos_.push_back(q);
    }
    if (seq.rhos_.size() + 2 != seq.triples_.size())
        throw std::runtime_error("sequence file: rho count mismatch");
    return seq;
}

}  // namespace extremal
