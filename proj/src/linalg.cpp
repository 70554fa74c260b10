#include "extremal/linalg.hpp"

#include <algorithm>

namespace extremal {

namespace {

struct Echelon {
    std::vector<std::vector<Int>> rows;   // echelon rows, pivot at pivotCol[r]
    std::vector<std::size_t> pivotCol;
};

// Fraction-free elimination; pivot chosen as the smallest-magnitude nonzero
// entry in the column to limit growth.
Echelon eliminate(std::vector<std::vector<Int>>& a, std::size_t cols) {
    Echelon e;
    std::size_t r = 0;
    Int prevPivot(1);
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t best = a.size();
        for (std::size_t i = r; i < a.size(); ++i) {
            if (sgn(a[i][c]) == 0) continue;
            if (best == a.size() || abs(a[i][c]) < abs(a[best][c])) best = i;
        }
        if (best == a.size()) continue;
        std::swap(a[r], a[best]);
        const Int pivot = a[r][c];
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            Int f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) {
                Int t = a[i][j] * pivot - a[r][j] * f;
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prevPivot.get_mpz_t());
                a[i][j] = std::move(t);
            }
        }
        e.rows.push_back(a[r]);
        e.pivotCol.push_back(c);
        prevPivot = pivot;
        ++r;
    }
    return e;
}

void normalize(std::vector<Int>& v) {
    Int g(0);
    for (const Int& x : v) g = gcd(g, x);
    if (sgn(g) == 0) return;
    int lead = 0;
    for (const Int& x : v) {
        if (sgn(x) != 0) {
            lead = sgn(x);
            break;
        }
    }
    if (lead < 0) g = -g;
    for (Int& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

std::vector<std::vector<Int>> nullSpace(std::vector<std::vector<Int>> rows, std::size_t cols) {
    Echelon e = eliminate(rows, cols);
    std::vector<bool> isPivot(cols, false);
    for (std::size_t c : e.pivotCol) isPivot[c] = true;

    std::vector<std::vector<Int>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (isPivot[f]) continue;
        std::vector<Rat> x(cols, Rat(0));
        x[f] = 1;
        for (std::size_t k = e.rows.size(); k-- > 0;) {
            std::size_t pc = e.pivotCol[k];
            Rat s(0);
            for (std::size_t j = pc + 1; j < cols; ++j) {
                if (sgn(e.rows[k][j]) != 0) s += Rat(e.rows[k][j]) * x[j];
            }
            x[pc] = -s / Rat(e.rows[k][pc]);
            x[pc].canonicalize();
        }
        Int den(1);
        for (const Rat& q : x) den = lcm(den, Int(q.get_den()));
        std::vector<Int> v(cols);
        for (std::size_t j = 0; j < cols; ++j) v[j] = Int(x[j] * Rat(den));
        normalize(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rankOf(std::vector<std::vector<Int>> rows, std::size_t cols) {
    return eliminate(rows, cols).rows.size();
}

}  // namespace extremal
