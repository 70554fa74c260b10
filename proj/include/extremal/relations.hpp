#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "extremal/ints.hpp"
#include "extremal/sequence.hpp"

namespace extremal {

/// Multi-degree d = (d_0..d_k) with weight p.
struct MultiDegree {
    std::vector<int> d;
    int p = 0;

    int k() const { return static_cast<int>(d.size()) - 1; }
    long total() const;  // |d|
    bool operator==(const MultiDegree& o) const = default;
};

/// Monomial prod_j prod_l u_{j,l}^{e[j][l]} with sum_l e[j][l] = d_j and
/// sum e[j][l]*l = p.
struct Monomial {
    std::vector<std::array<int, 3>> e;
    bool operator==(const Monomial& o) const = default;
};

/// Differentiation orders with respect to u_{j,1} and u_{j,2}.
struct DerivativeProfile {
    std::vector<std::array<int, 2>> f;  // f[j] = {f_{j,1}, f_{j,2}}
};

/// Integer coefficient vector over enumerateMonomials(md), content-normalized
/// with positive leading coefficient.
struct RelationCandidate {
    MultiDegree md;
    std::vector<Int> coeffs;

    bool isZero() const;
};

/// Deterministic basis of the monomial space, ordered lexicographically on
/// the flattened exponent table.
std::vector<Monomial> enumerateMonomials(const MultiDegree& md);

/// Profiles with f_{j,1}+f_{j,2} <= d_j and
/// 2 sum (f_{j,1}+f_{j,2}) gamma^j <= sum d_j gamma^j, the inequality decided
/// exactly in Z[gamma].
std::vector<DerivativeProfile> admissibleProfiles(const MultiDegree& md);

/// Falling-factorial product prod e_{j,l}(e_{j,l}-1)...(e_{j,l}-f_{j,l}+1)
/// over l in {1,2}; the value of the differentiated monomial at all-ones.
Int derivativeAtOnes(const Monomial& m, const DerivativeProfile& f);

/// Exact kernel of the derivative-at-ones constraint matrix.
std::vector<RelationCandidate> relationKernel(const MultiDegree& md);

/// dim E(d,p) (basis size).
std::size_t monomialSpaceDim(const MultiDegree& md);

/// Symbolic expansion of the two determinant relations:
/// 1 -> det(u_0, u_1, [u_3,u_3,u_4]),  2 -> det(u_1, u_2, [u_3,u_3,u_4]).
RelationCandidate expandKnownRelation(int which);

/// True when v lies in the span of basis (exact rank test).
bool inSpan(const std::vector<RelationCandidate>& basis, const RelationCandidate& v);

/// Exact value of the candidate on the window (y_i, ..., y_{i+k}).
Int evalCandidate(const RelationCandidate& c, const ExtremalSequence& seq, std::size_t i);

struct CandidateVerdict {
    bool degenerate = false;                 // zero polynomial
    std::optional<std::size_t> firstIndex;   // vanishes for all covered i >= firstIndex
    std::size_t windows = 0;
};

std::vector<CandidateVerdict> validateCandidates(const std::vector<RelationCandidate>& cands,
                                                 const ExtremalSequence& seq);

struct SweepHit {
    MultiDegree md;
    std::vector<RelationCandidate> kernel;
};

/// Enumerate multi-degrees with k+1 slots, |d| <= maxTotal, weights ordered
/// from p = |d| outward; reports every nonzero kernel.
std::vector<SweepHit> sweepSearch(int k, int maxTotal);

std::string prettyMonomial(const Monomial& m);
std::string prettyCandidate(const RelationCandidate& c);
std::string relationsToJson(const std::vector<RelationCandidate>& cands);

}  // namespace extremal
