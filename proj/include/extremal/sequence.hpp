#pragma once

#include <string>
#include <vector>

#include "extremal/certified.hpp"
#include "extremal/triple.hpp"

namespace extremal {

/// Seed of the matrix recurrence: y_{i+2} is the primitive reduction of
/// y_{i+1} S y_i where S alternates between M and its transpose.
struct Seed {
    Matrix2 M;
    IntTriple y1;
    IntTriple y2;
};

struct SeedReport {
    bool ok = false;
    std::vector<std::string> failures;    // hard conditions violated
    std::vector<Int> firstNorms;          // growth evidence
    Rat minGrowthRatio{0};                // min ||y_{i+2}|| / (||y_{i+1}|| ||y_i||)
    std::string summary() const;
};

SeedReport validateSeed(const Seed& seed);

/// Example 1 seed: y1 = A, y2 = ABA, M = AB with A = [[a,1],[1,0]],
/// B = [[b,1],[1,0]].  Requires distinct positive a, b.
Seed fibonacciSeed(const Int& a, const Int& b);

/// Example 2 seed: y1 = (1,1,0), M = [[a,1],[-1,0]].  Requires a >= 1.
Seed exampleTwoSeed(const Int& a);

class ExtremalSequence {
public:
    explicit ExtremalSequence(Seed seed);

    const Seed& seed() const { return seed_; }
    /// triples()[i] is y_{i+1} in 1-based indexing.
    const std::vector<IntTriple>& triples() const { return triples_; }
    const std::vector<Rat>& rhos() const { return rhos_; }
    std::size_t size() const { return triples_.size(); }

    /// y_i, 1-based.
    const IntTriple& term(std::size_t i) const { return triples_.at(i - 1); }

    /// Appends count terms via the alternating recurrence; throws if a
    /// product fails to be symmetric.
    void extend(std::size_t count);

    std::string toJson() const;
    static ExtremalSequence fromJson(const std::string& text);

private:
    ExtremalSequence() = default;
    Seed seed_;
    std::vector<IntTriple> triples_;
    std::vector<Rat> rhos_;  // rhos_[i]: y_{i+3} = rho * (y_{i+2} S y_{i+1}), 0-based
};

/// Matrix S used to produce 1-based term index i (i >= 3): M when i is odd,
/// transpose(M) when i is even.
Matrix2 stepMatrix(const Matrix2& M, std::size_t producedIndex);

/// Certified enclosure of xi = lim y_{i,1}/y_{i,0}.  Throws
/// NeedMoreTermsError when the tail bound cannot close below targetRadius.
CReal xiFromSequence(const ExtremalSequence& seq, const Dyadic& targetRadius);

struct NeedMoreTermsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CFExpansion {
    std::vector<Int> quotients;  // leading 0 included
    CReal value;
};

/// Continued fraction [0; w1, w2, ...] with w the Fibonacci word on {a,b}.
CFExpansion fibonacciWordCF(const Int& a, const Int& b, std::size_t terms);

/// Fibonacci word prefix over {a,b} of the given length.
std::vector<Int> fibonacciWord(const Int& a, const Int& b, std::size_t length);

}  // namespace extremal
