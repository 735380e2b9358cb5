#pragma once

// Brute-force linear-algebra helpers used as independent oracles in tests:
// graded pieces of ideals as row spaces over Q, plus seeded random inputs.

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "folcalc/polynomial.hpp"

namespace folcalc::testutil {

using QRow = std::vector<Rational>;

// In-place reduced row echelon form; returns the rank.
inline int rref(std::vector<QRow>& rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const Rational lead = rows[r][c];
        for (auto& x : rows[r]) x /= lead;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k == r || rows[k][c] == 0) continue;
            const Rational f = rows[k][c];
            for (std::size_t j = 0; j < cols; ++j) rows[k][j] -= f * rows[r][j];
        }
        ++r;
    }
    rows.resize(r);
    return static_cast<int>(r);
}

inline bool in_rowspace(std::vector<QRow> rows, const QRow& v) {
    const int before = rref(rows);
    rows.push_back(v);
    return rref(rows) == before;
}

// All monomials of exact degree d in nv variables, in a fixed order.
inline std::vector<Monomial> degree_monomials(int nv, int d) {
    std::vector<Monomial> out;
    Monomial m(nv);
    auto rec = [&](auto&& self, int var, int rem) -> void {
        if (var == nv - 1) {
            m.exp[static_cast<std::size_t>(var)] = rem;
            out.push_back(m);
            m.exp[static_cast<std::size_t>(var)] = 0;
            return;
        }
        for (int e = rem; e >= 0; --e) {
            m.exp[static_cast<std::size_t>(var)] = e;
            self(self, var + 1, rem - e);
        }
        m.exp[static_cast<std::size_t>(var)] = 0;
    };
    rec(rec, 0, d);
    return out;
}

inline QRow coeff_vector(const Polynomial& f, const std::vector<Monomial>& basis) {
    QRow v(basis.size(), Rational(0));
    for (const Term& t : f.terms()) {
        auto it = std::find(basis.begin(), basis.end(), t.mono);
        if (it == basis.end()) throw std::logic_error("coeff_vector: monomial outside basis");
        v[static_cast<std::size_t>(it - basis.begin())] = t.coeff;
    }
    return v;
}

// Spanning rows of the degree-d piece of the ideal generated by `gens`.
inline std::vector<QRow> graded_piece(const std::vector<Polynomial>& gens, int nv, int d,
                                      const std::vector<Monomial>& basis) {
    std::vector<QRow> rows;
    for (const Polynomial& g : gens) {
        const int dg = degree(g);
        if (dg < 0 || dg > d) continue;
        for (const Monomial& m : degree_monomials(nv, d - dg)) {
            rows.push_back(coeff_vector(Polynomial::monomial(nv, m) * g, basis));
        }
    }
    return rows;
}

// dim_Q of the degree-d piece of S/I by rank arithmetic.
inline int quotient_piece_dimension(const std::vector<Polynomial>& gens, int nv, int d) {
    const auto basis = degree_monomials(nv, d);
    auto rows = graded_piece(gens, nv, d, basis);
    return static_cast<int>(basis.size()) - rref(rows);
}

inline Polynomial random_homog(std::mt19937& rng, int nv, int deg) {
    std::uniform_int_distribution<int> coef(-3, 3);
    std::vector<Term> ts;
    for (const Monomial& m : degree_monomials(nv, deg)) {
        const int c = coef(rng);
        if (c != 0 && rng() % 2 == 0) ts.push_back(Term{Rational(c), m});
    }
    return Polynomial::from_terms(nv, std::move(ts));
}

inline Monomial random_monomial(std::mt19937& rng, int nv, int maxdeg) {
    std::uniform_int_distribution<int> expo(0, maxdeg);
    Monomial m(nv);
    int budget = maxdeg;
    for (int i = 0; i < nv && budget > 0; ++i) {
        const int e = expo(rng) % (budget + 1);
        m.exp[static_cast<std::size_t>(i)] = e;
        budget -= e;
    }
    return m;
}

}  // namespace folcalc::testutil
