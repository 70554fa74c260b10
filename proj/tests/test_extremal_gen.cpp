#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "extremal/sequence.hpp"
#include "extremal/triple.hpp"

using namespace extremal;

namespace {

IntTriple T(long a, long b, long c) { return {Int(a), Int(b), Int(c)}; }

}  // namespace

TEST_CASE("seed constructors reject bad parameters") {
    CHECK_THROWS_AS(fibonacciSeed(Int(1), Int(1)), std::invalid_argument);
    CHECK_THROWS_AS(fibonacciSeed(Int(0), Int(2)), std::invalid_argument);
    CHECK_THROWS_AS(fibonacciSeed(Int(-1), Int(2)), std::invalid_argument);
    CHECK_THROWS_AS(exampleTwoSeed(Int(0)), std::invalid_argument);
    CHECK(validateSeed(fibonacciSeed(Int(1), Int(2))).ok);
    CHECK(validateSeed(fibonacciSeed(Int(2), Int(3))).ok);
    CHECK(validateSeed(exampleTwoSeed(Int(1))).ok);
    CHECK(validateSeed(exampleTwoSeed(Int(2))).ok);
}

TEST_CASE("seed validation flags structural failures") {
    Seed bad;
    bad.M = Matrix2(Int(2), Int(1), Int(1), Int(1));  // symmetric
    bad.y1 = T(1, 1, 0);
    bad.y2 = T(4, 3, 2);
    SeedReport rep = validateSeed(bad);
    CHECK(!rep.ok);
    CHECK(!rep.failures.empty());

    Seed sing;
    sing.M = Matrix2(Int(1), Int(2), Int(1), Int(2));  // singular
    sing.y1 = T(1, 1, 0);
    sing.y2 = T(4, 3, 2);
    CHECK(!validateSeed(sing).ok);
    CHECK_THROWS_AS(ExtremalSequence{sing}, std::invalid_argument);

    Seed imp;
    imp.M = Matrix2(Int(3), Int(1), Int(2), Int(1));
    imp.y1 = T(2, 2, 0);  // not primitive
    imp.y2 = T(4, 3, 2);
    CHECK(!validateSeed(imp).ok);
}

TEST_CASE("first-family triples match frozen values") {
    ExtremalSequence seq(fibonacciSeed(Int(1), Int(2)));
    seq.extend(4);
    CHECK(seq.term(1) == T(1, 1, 0));
    CHECK(seq.term(2) == T(4, 3, 2));
    CHECK(seq.term(3) == T(25, 18, 13));
    CHECK(seq.term(4) == T(576, 415, 299));
    CHECK(seq.term(5) == T(81788, 58927, 42456));
    CHECK(seq.term(6) == IntTriple(Int(267610361), Int(192809162), Int(138916045)));
}

TEST_CASE("second-family triples match frozen values") {
    ExtremalSequence s1(exampleTwoSeed(Int(1)));
    s1.extend(4);
    CHECK(s1.term(1) == T(1, 1, 0));
    CHECK(s1.term(2) == T(3, 1, 0));
    CHECK(s1.term(3) == T(5, 2, 1));
    CHECK(s1.term(4) == T(16, 7, 3));
    CHECK(s1.term(5) == T(77, 34, 15));
    CHECK(s1.term(6) == T(1237, 546, 241));

    ExtremalSequence s2(exampleTwoSeed(Int(2)));
    s2.extend(2);
    CHECK(s2.term(2) == T(12, 7, 4));
    CHECK(s2.term(3) == T(29, 17, 10));
    CHECK(s2.term(4) == T(697, 409, 240));
}

TEST_CASE("determinants stay +/-1 and triples stay primitive") {
    for (int family = 0; family < 3; ++family) {
        Seed seed = family == 0   ? fibonacciSeed(Int(1), Int(2))
                    : family == 1 ? fibonacciSeed(Int(2), Int(3))
                                  : exampleTwoSeed(Int(2));
        ExtremalSequence seq(seed);
        seq.extend(28);
        for (const auto& y : seq.triples()) {
            CHECK(abs(det2(y)) == 1);
            CHECK(isPrimitive(y));
        }
        // consecutive triples are never proportional
        for (std::size_t i = 1; i < seq.size(); ++i)
            CHECK(!wedge(seq.term(i), seq.term(i + 1)).isZero());
    }
}

TEST_CASE("recurrence consistency: y_{i+2} = rho * y_{i+1} S y_i") {
    ExtremalSequence seq(fibonacciSeed(Int(1), Int(2)));
    seq.extend(10);
    const Matrix2& M = seq.seed().M;
    CHECK(stepMatrix(M, 3) == M);
    CHECK(stepMatrix(M, 4) == M.transpose());
    CHECK(stepMatrix(M, 5) == M);
    for (std::size_t i = 1; i + 2 <= seq.size(); ++i) {
        Matrix2 S = stepMatrix(M, i + 2);
        Matrix2 prod = seq.term(i + 1).toMatrix() * S * seq.term(i).toMatrix();
        REQUIRE(prod.isSymmetric());
        auto [y, rho] = primitive(IntTriple::fromSymmetric(prod));
        CHECK(y == seq.term(i + 2));
        CHECK(rho == seq.rhos().at(i - 1));
    }
}

TEST_CASE("word prefix over {a,b}") {
    auto w = fibonacciWord(Int(1), Int(2), 8);
    std::vector<Int> expect{Int(1), Int(2), Int(1), Int(1), Int(2), Int(1), Int(2), Int(1)};
    CHECK(w == expect);
    auto w2 = fibonacciWord(Int(3), Int(7), 5);
    std::vector<Int> expect2{Int(3), Int(7), Int(3), Int(3), Int(7)};
    CHECK(w2 == expect2);
}

TEST_CASE("xi from the sequence agrees with the continued fraction") {
    for (auto [a, b] : {std::pair<long, long>{1, 2}, {2, 3}, {1, 3}}) {
        ExtremalSequence seq(fibonacciSeed(Int(a), Int(b)));
        seq.extend(14);
        CReal xi = xiFromSequence(seq, Dyadic::pow2(-200));
        CHECK(xi.rad <= Dyadic::pow2(-200));
        CHECK(Dyadic() < xi.lower());
        CHECK(xi.upper() < Dyadic(Int(1)));
        CFExpansion cf = fibonacciWordCF(Int(a), Int(b), 200);
        // the two independent enclosures must overlap
        CHECK(!certifiedCmp(xi, cf.value).has_value());
        CHECK(dabs(xi.mid - cf.value.mid) < Dyadic::pow2(-190));
    }
}

TEST_CASE("continued fraction quotients") {
    CFExpansion cf = fibonacciWordCF(Int(1), Int(2), 5);
    std::vector<Int> expect{Int(0), Int(1), Int(2), Int(1), Int(1), Int(2)};
    CHECK(cf.quotients == expect);
}

TEST_CASE("xi demands enough terms") {
    ExtremalSequence seq(fibonacciSeed(Int(1), Int(2)));
    seq.extend(2);
    CHECK_THROWS_AS(xiFromSequence(seq, Dyadic::pow2(-40)), NeedMoreTermsError);
    seq.extend(4);
    CHECK_THROWS_AS(xiFromSequence(seq, Dyadic::pow2(-5000)), NeedMoreTermsError);
}

TEST_CASE("json round trip is the identity") {
    ExtremalSequence seq(exampleTwoSeed(Int(2)));
    seq.extend(8);
    std::string text = seq.toJson();
    ExtremalSequence back = ExtremalSequence::fromJson(text);
    CHECK(back.seed().M == seq.seed().M);
    CHECK(back.seed().y1 == seq.seed().y1);
    CHECK(back.seed().y2 == seq.seed().y2);
    CHECK(back.triples() == seq.triples());
    CHECK(back.rhos() == seq.rhos());
    CHECK(back.toJson() == text);
    // a restored sequence keeps extending identically
    ExtremalSequence ref(exampleTwoSeed(Int(2)));
    ref.extend(12);
    back.extend(4);
    CHECK(back.triples() == ref.triples());
}
