#pragma once

#include "extremal/ints.hpp"

namespace extremal {

/// Element a + b*gamma of Z[gamma], gamma = (1+sqrt(5))/2, gamma^2 = gamma+1.
/// All comparisons are exact integer computations.
struct GoldenExact {
    Int a{0};
    Int b{0};

    GoldenExact() = default;
    GoldenExact(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {}
    explicit GoldenExact(long n) : a(n) {}

    static GoldenExact gamma() { return {Int(0), Int(1)}; }
    /// gamma^j = F(j)*gamma + F(j-1), F Fibonacci, valid for j >= 0.
    static GoldenExact gammaPow(unsigned long j);

    bool operator==(const GoldenExact& o) const { return a == o.a && b == o.b; }
};

GoldenExact operator+(const GoldenExact& x, const GoldenExact& y);
GoldenExact operator-(const GoldenExact& x, const GoldenExact& y);
GoldenExact operator*(const GoldenExact& x, const GoldenExact& y);
GoldenExact operator*(const GoldenExact& x, const Int& k);
GoldenExact operator-(const GoldenExact& x);

/// Exact sign of a + b*gamma as a real number.
int signOf(const GoldenExact& x);

/// -1, 0, 1 as u < v, u == v, u > v.
int goldenCompare(const GoldenExact& u, const GoldenExact& v);

/// Value as a double (diagnostics only).
double toDouble(const GoldenExact& x);

}  // namespace extremal
