// command-line front end: sequence generation, xi evaluation, brute-force
// oracles, certificates, and relation searches
#include "CLI11.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "extremal/minimal.hpp"
#include "extremal/relations.hpp"
#include "extremal/sequence.hpp"
#include "extremal/verify.hpp"

using namespace extremal;

namespace {

struct RunConfig {
    long precisionCap = 100000;  // bits
    long radiusExp = 80;         // default xi radius 10^-radiusExp
    long xmax = 1000000;
    long hmax = 10000;
    int workers = 1;
    std::string outPath;
    std::string csvPath;
};

void loadConfigFile(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto pos = line.find('=');
        if (pos == std::string::npos || line.empty() || line[0] == '#') continue;
        std::string key = line.substr(0, pos), val = line.substr(pos + 1);
        if (key == "precision_cap") cfg.precisionCap = std::stol(val);
        else if (key == "radius_exp") cfg.radiusExp = std::stol(val);
        else if (key == "xmax") cfg.xmax = std::stol(val);
        else if (key == "hmax") cfg.hmax = std::stol(val);
        else if (key == "workers") cfg.workers = std::stoi(val);
        else if (key == "out") cfg.outPath = val;
        else if (key == "csv") cfg.csvPath = val;
        else throw CLI::ValidationError("--config", "unknown key " + key);
    }
    if (cfg.precisionCap < 128) throw CLI::ValidationError("--config", "precision cap < 128 bits");
}

ExtremalSequence loadSequence(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return ExtremalSequence::fromJson(buf.str());
}

void writeFile(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

Dyadic radiusFromExp(long k10) {
    return Dyadic::pow2(-static_cast<long>(k10 * 3.3219280948873623) - 2);
}

/// Extend the in-memory sequence until the tail bound closes below the
/// requested radius.
CReal computeXi(ExtremalSequence& seq, long k10) {
    Dyadic target = radiusFromExp(k10);
    for (int round = 0;; ++round) {
        try {
            return xiFromSequence(seq, target);
        } catch (const NeedMoreTermsError&) {
            if (round > 200) throw;
            seq.extend(2);
        }
    }
}

void printNormsTable(const ExtremalSequence& seq) {
    std::cout << "  i            |y_i|   det2\n";
    for (std::size_t i = 1; i <= seq.size(); ++i) {
        const IntTriple& y = seq.term(i);
        std::string n = maxNorm(y).get_str();
        if (n.size() > 12) n = n.substr(0, 6) + "..e" + std::to_string(n.size() - 1);
        std::cout << "  " << i << '\t' << n << '\t' << det2(y).get_str() << '\n';
    }
}

int runGenerate(const std::string& mode, long a, long b, const std::vector<std::string>& matrix,
                const std::vector<std::string>& y1s, const std::vector<std::string>& y2s,
                long terms, const std::string& out) {
    Seed seed;
    if (mode == "fib") {
        seed = fibonacciSeed(Int(a), Int(b));
    } else if (mode == "ex2") {
        seed = exampleTwoSeed(Int(a));
    } else {
        if (matrix.size() != 4 || y1s.size() != 3 || y2s.size() != 3)
            throw std::runtime_error("custom seed needs --matrix (4) --y1 (3) --y2 (3)");
        seed.M = Matrix2(Int(matrix[0]), Int(matrix[1]), Int(matrix[2]), Int(matrix[3]));
        seed.y1 = IntTriple(Int(y1s[0]), Int(y1s[1]), Int(y1s[2]));
        seed.y2 = IntTriple(Int(y2s[0]), Int(y2s[1]), Int(y2s[2]));
    }
    SeedReport rep = validateSeed(seed);
    if (!rep.ok) {
        std::cerr << "seed rejected:\n" << rep.summary() << '\n';
        return 1;
    }
    ExtremalSequence seq(seed);
    if (terms > 2) seq.extend(static_cast<std::size_t>(terms) - 2);
    writeFile(out, seq.toJson());
    printNormsTable(seq);
    std::cout << "wrote " << out << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact construction and certification of golden-ratio-extremal numbers"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string configPath;
    app.add_option("--config", configPath, "key=value config file");
    app.add_option("--workers", cfg.workers, "worker threads (never affects results)");

    // generate
    auto* gen = app.add_subcommand("generate", "generate a sequence from a seed");
    std::string genMode = "fib", genOut = "sequence.json";
    long genA = 1, genB = 2, genTerms = 20;
    std::vector<std::string> genMatrix, genY1, genY2;
    gen->add_option("mode", genMode, "fib | ex2 | custom")->required();
    gen->add_option("--a", genA, "seed parameter a");
    gen->add_option("--b", genB, "seed parameter b");
    gen->add_option("--matrix", genMatrix, "custom matrix entries a,b,c,d")->delimiter(',');
    gen->add_option("--y1", genY1, "custom y1 triple")->delimiter(',');
    gen->add_option("--y2", genY2, "custom y2 triple")->delimiter(',');
    gen->add_option("--terms", genTerms, "number of terms");
    gen->add_option("--out", genOut, "output JSON path");

    // xi
    auto* xic = app.add_subcommand("xi", "print xi to the requested digits");
    std::string xiSeq;
    long xiDigits = 50;
    xic->add_option("--seq", xiSeq, "sequence JSON")->required();
    xic->add_option("--digits", xiDigits, "decimal digits");

    // cf
    auto* cfc = app.add_subcommand("cf", "continued fraction [0; Fibonacci word on {a,b}]");
    long cfA = 1, cfB = 2, cfTerms = 100, cfDigits = 50;
    cfc->add_option("--a", cfA);
    cfc->add_option("--b", cfB);
    cfc->add_option("--terms", cfTerms, "partial quotients");
    cfc->add_option("--digits", cfDigits);

    // verify
    auto* ver = app.add_subcommand("verify", "growth/approximation certificate + relations");
    std::string verSeq, verRange = "1:15";
    ver->add_option("--seq", verSeq)->required();
    ver->add_option("--range", verRange, "lo:hi row range");
    ver->add_option("--out", cfg.outPath, "certificate JSON path");
    ver->add_option("--csv", cfg.csvPath, "certificate CSV path");

    // minpoints
    auto* mpt = app.add_subcommand("minpoints", "brute-force minimal points");
    std::string mptSeq;
    bool mptCross = false;
    mpt->add_option("--seq", mptSeq)->required();
    mpt->add_option("--xmax", cfg.xmax);
    mpt->add_flag("--crosscheck", mptCross, "match records against generated triples");
    mpt->add_option("--csv", cfg.csvPath);

    // minpoly
    auto* mpl = app.add_subcommand("minpoly", "minimal polynomials + dual certificate");
    std::string mplSeq;
    mpl->add_option("--seq", mplSeq)->required();
    mpl->add_option("--hmax", cfg.hmax);
    mpl->add_option("--csv", cfg.csvPath);
    mpl->add_option("--out", cfg.outPath, "certificate JSON path");

    // cubicgap
    auto* cgp = app.add_subcommand("cubicgap", "fractional parts of y_{i,0} xi^3");
    std::string cgpSeq;
    long cgpCount = 15;
    cgp->add_option("--seq", cgpSeq)->required();
    cgp->add_option("--count", cgpCount);

    // cubic
    auto* cub = app.add_subcommand("cubic", "best monic cubic / nearest cubic algebraic integer");
    std::string cubSeq;
    long cubH = 50;
    bool cubAlg = false;
    cub->add_option("--seq", cubSeq)->required();
    cub->add_option("--height", cubH);
    cub->add_flag("--algebraic", cubAlg, "search roots instead of values");

    // relations
    auto* rel = app.add_subcommand("relations", "multilinear relation kernel search");
    std::vector<int> relD;
    int relP = 0;
    std::string relValidate;
    int relSweepK = 0, relSweepTotal = 0;
    rel->add_option("--d", relD, "multi-degree d_0,...,d_k")->delimiter(',');
    rel->add_option("--p", relP, "weight");
    rel->add_option("--validate", relValidate, "sequence JSON to evaluate candidates on");
    rel->add_option("--sweep-k", relSweepK, "sweep mode: slots k");
    rel->add_option("--sweep-total", relSweepTotal, "sweep mode: max |d|");
    rel->add_option("--out", cfg.outPath, "kernel JSON path");

    CLI11_PARSE(app, argc, argv);
    try {
        if (!configPath.empty()) loadConfigFile(cfg, configPath);

        if (gen->parsed())
            return runGenerate(genMode, genA, genB, genMatrix, genY1, genY2, genTerms, genOut);

        if (xic->parsed()) {
            ExtremalSequence seq = loadSequence(xiSeq);
            Dyadic target = radiusFromExp(xiDigits + 5);
            CReal xi;
            try {
                xi = xiFromSequence(seq, target);
            } catch (const NeedMoreTermsError& e) {
                std::cerr << "extend sequence: " << e.what() << '\n';
                return 2;
            }
            std::cout << describe(xi, static_cast<int>(xiDigits)) << '\n';
            return 0;
        }

        if (cfc->parsed()) {
            CFExpansion cf = fibonacciWordCF(Int(cfA), Int(cfB), static_cast<std::size_t>(cfTerms));
            std::cout << "[0";
            for (std::size_t i = 1; i < cf.quotients.size(); ++i)
                std::cout << (i == 1 ? "; " : ", ") << cf.quotients[i].get_str();
            std::cout << "]\n" << describe(cf.value, static_cast<int>(cfDigits)) << '\n';
            return 0;
        }

        if (ver->parsed()) {
            ExtremalSequence seq = loadSequence(verSeq);
            auto pos = verRange.find(':');
            if (pos == std::string::npos) throw std::runtime_error("--range wants lo:hi");
            std::size_t lo = std::stoul(verRange.substr(0, pos));
            std::size_t hi = std::stoul(verRange.substr(pos + 1));
            while (seq.size() < hi + 2) seq.extend(1);
            // resolving L(y_i) ~ 1/|y_i| needs radius well below |y_hi|^-2
            double lg = log2Approx(maxNorm(seq.term(hi + 1))) * 0.30103;
            long k10 = std::max(cfg.radiusExp, static_cast<long>(2.2 * lg) + 30);
            CReal xi = computeXi(seq, k10);
            auto cert = extremalityCertificate(seq, xi, lo, hi);
            auto relres = relationCheck(seq);
            auto mat = matrixRecovery(seq);
            std::cout << cert.summary << '\n';
            if (relres.firstHoldingIndex)
                std::cout << "determinant relations hold from i = " << *relres.firstHoldingIndex
                          << '\n';
            else
                std::cout << "determinant relations: NEVER\n";
            std::cout << "recovered matrix class [[" << mat.canonical.a << ','
                      << mat.canonical.b << "],[" << mat.canonical.c << ',' << mat.canonical.d
                      << "]] " << (mat.consistent ? "(consistent)" : "(INCONSISTENT: " + mat.note + ")")
                      << '\n';
            if (!cfg.outPath.empty()) writeFile(cfg.outPath, cert.toJson());
            if (!cfg.csvPath.empty()) writeFile(cfg.csvPath, cert.toCsv());
            Outcome o = cert.outcome;
            if (!mat.consistent || !relres.firstHoldingIndex) o = combine(o, Outcome::FAIL);
            return outcomeExitCode(o);
        }

        if (mpt->parsed()) {
            ExtremalSequence seq = loadSequence(mptSeq);
            long k10 = static_cast<long>(2 * std::log10(static_cast<double>(cfg.xmax))) + 4;
            CReal xi = computeXi(seq, k10);
            auto records = minimalPoints(xi, cfg.xmax, cfg.workers);
            std::cout << records.size() << " minimal points up to " << cfg.xmax << '\n';
            if (!cfg.csvPath.empty()) writeFile(cfg.csvPath, minimalPointsCsv(records));
            if (mptCross) {
                while (maxNorm(seq.term(seq.size())) < Int(cfg.xmax) * Int(cfg.xmax))
                    seq.extend(1);
                auto cc = crosscheckMinimalPoints(records, seq);
                std::cout << "small-value records with norm >= " << cc.N0.get_str()
                          << " all match +/- generated triples (" << cc.unmatched.size()
                          << " unmatched, of which " << cc.interlopers.size()
                          << " are near-miss combinations above the value cut)\n";
                return cc.N0 <= 10 ? 0 : 1;
            }
            return 0;
        }

        if (mpl->parsed()) {
            ExtremalSequence seq = loadSequence(mplSeq);
            CReal xi = computeXi(seq, std::max(cfg.radiusExp, 60L));
            auto records = minimalPolys(xi, cfg.hmax);
            std::cout << records.size() << " minimal polynomials up to height " << cfg.hmax
                      << '\n';
            if (!cfg.csvPath.empty()) writeFile(cfg.csvPath, minimalPolysCsv(records));
            auto cert = polyCertificate(records, xi);
            auto sandwich = dualSandwichCheck(records, xi);
            std::cout << cert.summary << '\n';
            std::cout << "sandwich rows checked " << sandwich.checked << ", skipped "
                      << sandwich.skipped << " (" << outcomeName(sandwich.outcome) << ")\n";
            if (!cfg.outPath.empty()) writeFile(cfg.outPath, cert.toJson());
            return outcomeExitCode(combine(cert.outcome, sandwich.outcome));
        }

        if (cgp->parsed()) {
            ExtremalSequence seq = loadSequence(cgpSeq);
            while (seq.size() < static_cast<std::size_t>(cgpCount)) seq.extend(1);
            // radius must stay below 1/(4 y_{i,0}) for the largest i
            double lg = log2Approx(seq.term(static_cast<std::size_t>(cgpCount)).x0) * 0.30103;
            long k10 = std::max(cfg.radiusExp, static_cast<long>(lg) + 20);
            CReal xi = computeXi(seq, k10);
            auto vals = cubicGapSequence(seq, xi, static_cast<std::size_t>(cgpCount));
            for (std::size_t i = 0; i < vals.size(); ++i)
                std::cout << i + 1 << '\t' << describe(vals[i], 20) << '\n';
            return 0;
        }

        if (cub->parsed()) {
            ExtremalSequence seq = loadSequence(cubSeq);
            CReal xi = computeXi(seq, cfg.radiusExp);
            if (cubAlg) {
                auto res = bestCubicAlgebraicInteger(xi, cubH);
                std::cout << "T^3 + " << res.poly.p << " T^2 + " << res.poly.q << " T + "
                          << res.poly.r << '\n'
                          << "root " << describe(res.root, 25) << '\n'
                          << "distance " << describe(res.distance, 15) << '\n';
            } else {
                auto [poly, value] = bestMonicCubic(xi, cubH);
                std::cout << "T^3 + " << poly.p << " T^2 + " << poly.q << " T + " << poly.r
                          << '\n'
                          << "value " << describe(value, 15) << '\n';
            }
            return 0;
        }

        if (rel->parsed()) {
            std::vector<RelationCandidate> cands;
            if (relSweepK > 0) {
                auto hits = sweepSearch(relSweepK, relSweepTotal > 0 ? relSweepTotal : 3);
                if (hits.empty())
                    std::cout << "no nontrivial kernels up to |d| = "
                              << (relSweepTotal > 0 ? relSweepTotal : 3) << '\n';
                for (const auto& h : hits) {
                    std::cout << "d = (";
                    for (std::size_t i = 0; i < h.md.d.size(); ++i)
                        std::cout << (i ? "," : "") << h.md.d[i];
                    std::cout << "), p = " << h.md.p << ": kernel dim " << h.kernel.size()
                              << '\n';
                    cands.insert(cands.end(), h.kernel.begin(), h.kernel.end());
                }
            } else {
                if (relD.empty()) throw std::runtime_error("relations: need --d or --sweep-k");
                MultiDegree md{relD, relP};
                cands = relationKernel(md);
                std::cout << "dim E(d,p) = " << monomialSpaceDim(md) << ", kernel dim "
                          << cands.size() << '\n';
                for (const auto& c : cands) std::cout << "  " << prettyCandidate(c) << '\n';
            }
            if (!relValidate.empty()) {
                ExtremalSequence seq = loadSequence(relValidate);
                auto verdicts = validateCandidates(cands, seq);
                for (std::size_t i = 0; i < verdicts.size(); ++i) {
                    std::cout << "candidate " << i << ": ";
                    if (verdicts[i].degenerate) std::cout << "DEGENERATE\n";
                    else if (verdicts[i].firstIndex)
                        std::cout << "vanishes from i = " << *verdicts[i].firstIndex << '\n';
                    else std::cout << "NEVER\n";
                }
            }
            if (!cfg.outPath.empty()) writeFile(cfg.outPath, relationsToJson(cands));
            return 0;
        }
    } catch (const PrecisionError& e) {
        std::cerr << "precision: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
