#include "folcalc/zerodim.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace folcalc {

namespace {

// ---- dense univariate helpers (coefficient k multiplies x^k) ----

using UPoly = std::vector<Rational>;

void trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly to_dense(const Polynomial& f) {
    UPoly out(static_cast<std::size_t>(std::max(degree(f), -1) + 1), Rational(0));
    for (const Term& t : f.terms()) {
        out[static_cast<std::size_t>(t.mono.degree())] = t.coeff;
    }
    return out;
}

UPoly derivative(const UPoly& p) {
    UPoly out;
    for (std::size_t k = 1; k < p.size(); ++k) out.push_back(Rational(k) * p[k]);
    trim(out);
    return out;
}

// Remainder of a by b (b nonzero), both made irrelevant of scaling.
UPoly rem(UPoly a, const UPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        const Rational c = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= c * b[k];
        a.pop_back();  // leading coefficient cancels exactly
        trim(a);
    }
    return a;
}

UPoly make_monic(UPoly p) {
    if (p.empty()) return p;
    const Rational lead = p.back();
    for (Rational& c : p) c /= lead;
    return p;
}

UPoly gcd(UPoly a, UPoly b) {
    while (!b.empty()) {
        UPoly r = rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(std::move(a));
}

// Exact quotient a / b for b | a.
UPoly div_exact(UPoly a, const UPoly& b) {
    UPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        const Rational c = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= c * b[k];
        a.pop_back();
        trim(a);
    }
    if (!a.empty()) throw std::logic_error("div_exact: not an exact division");
    trim(q);
    return q;
}

UPoly squarefree_part(const UPoly& p) {
    if (p.size() <= 1) return make_monic(p);  // constants (and 0) are their own part
    const UPoly g = gcd(p, derivative(p));
    return make_monic(div_exact(make_monic(p), g));
}

// x_v^k monomials of a dense univariate polynomial, lifted into an
// nvars-variable ring.
Polynomial lift_univariate(const UPoly& p, int nvars, int v) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] == 0) continue;
        Monomial m(nvars);
        m.exp[static_cast<std::size_t>(v)] = static_cast<std::int32_t>(k);
        terms.push_back(Term{p[k], std::move(m)});
    }
    return Polynomial::from_terms(nvars, std::move(terms));
}

// Univariate eliminant of variable v: the monic generator of I ∩ Q[x_v],
// empty ideal signalled as an empty polynomial.
Polynomial eliminant(const Ideal& i, int v) {
    const int nv = i.nvars();
    std::vector<int> perm(static_cast<std::size_t>(nv));
    perm[static_cast<std::size_t>(v)] = 0;
    int next = 1;
    for (int k = 0; k < nv; ++k) {
        if (k != v) perm[static_cast<std::size_t>(k)] = next++;
    }
    std::vector<Polynomial> permuted;
    permuted.reserve(i.generators().size());
    for (const Polynomial& g : i.generators()) permuted.push_back(permute_vars(g, perm));
    const std::vector<Polynomial> elim = eliminate_trailing(permuted, nv - 1);
    if (elim.empty()) return Polynomial::zero(1);
    // A univariate ideal is principal; its reduced GB is the single monic
    // generator.
    return elim.front();
}

}  // namespace

Ideal zero_dim_radical(const Ideal& i) {
    const int nv = i.nvars();
    if (nv == 0) throw std::invalid_argument("zero_dim_radical: empty ring");
    std::vector<Polynomial> gens = i.generators();
    for (int v = 0; v < nv; ++v) {
        const Polynomial g = (nv == 1) ? (i.groebner().empty() ? Polynomial::zero(1)
                                                               : i.groebner().front())
                                       : eliminant(i, v);
        if (g.is_zero()) {
            throw std::invalid_argument(
                "zero_dim_radical: no univariate eliminant in variable " + std::to_string(v) +
                " (ideal is not zero-dimensional)");
        }
        if (degree(g) == 0) return Ideal::unit(nv);  // 1 ∈ I, so sqrt(I) = (1)
        gens.push_back(lift_univariate(squarefree_part(to_dense(g)), nv, v));
    }
    return Ideal(nv, std::move(gens));
}

BigInt artinian_dimension(const Ideal& i) {
    const int nv = i.nvars();
    std::vector<Monomial> lt;
    for (const Polynomial& g : i.groebner()) {
        lt.push_back(leading_monomial(g, MonomialOrder::grevlex()));
    }
    // Finiteness: every variable must appear as a pure power among the lead
    // terms; the minimal such exponents bound the standard-monomial box.
    std::vector<int> bound(static_cast<std::size_t>(nv), -1);
    for (const Monomial& m : lt) {
        int var = -1;
        bool pure = true;
        for (int v = 0; v < nv; ++v) {
            if (m.exp[static_cast<std::size_t>(v)] > 0) {
                if (var >= 0) {
                    pure = false;
                    break;
                }
                var = v;
            }
        }
        if (m.is_one()) return 0;  // the unit ideal: empty quotient
        if (pure && var >= 0) {
            int& b = bound[static_cast<std::size_t>(var)];
            const int e = m.exp[static_cast<std::size_t>(var)];
            if (b < 0 || e < b) b = e;
        }
    }
    for (int v = 0; v < nv; ++v) {
        if (bound[static_cast<std::size_t>(v)] < 0) {
            throw std::invalid_argument(
                "artinian_dimension: quotient is infinite-dimensional (no pure power of "
                "variable " +
                std::to_string(v) + " among the lead terms)");
        }
    }
    // Enumerate the box and count monomials outside the lead-term ideal.
    BigInt count(0);
    Monomial probe(nv);
    const auto standard = [&](const Monomial& m) {
        return std::none_of(lt.begin(), lt.end(),
                            [&](const Monomial& l) { return divides(l, m); });
    };
    // Odometer over exponents below the per-variable bounds.
    while (true) {
        if (standard(probe)) ++count;
        int v = 0;
        while (v < nv) {
            auto& e = probe.exp[static_cast<std::size_t>(v)];
            if (++e < bound[static_cast<std::size_t>(v)]) break;
            e = 0;
            ++v;
        }
        if (v == nv) break;
    }
    return count;
}

BigInt point_multiplicity(const Ideal& i, std::span<const Rational> point) {
    const int nv = i.nvars();
    if (static_cast<int>(point.size()) != nv) {
        throw std::invalid_argument("point_multiplicity: point has wrong coordinate count");
    }
    int chart = -1;
    for (int v = 0; v < nv; ++v) {
        if (point[static_cast<std::size_t>(v)] != 0) {
            chart = v;
            break;
        }
    }
    if (chart < 0) {
        throw std::invalid_argument("point_multiplicity: (0:...:0) is not a projective point");
    }
    for (const Polynomial& g : i.generators()) {
        if (evaluate(g, point) != 0) {
            throw std::invalid_argument("point_multiplicity: point does not lie on V(I)");
        }
    }
    // Affine coordinates in the chart, in the ring with x_chart removed.
    const int m = nv - 1;
    std::vector<Polynomial> affine;
    affine.reserve(i.generators().size());
    std::vector<Polynomial> images;
    images.reserve(static_cast<std::size_t>(m));
    int j = 0;
    for (int v = 0; v < nv; ++v) {
        if (v == chart) continue;
        const Rational a = point[static_cast<std::size_t>(v)] / point[static_cast<std::size_t>(chart)];
        images.push_back(Polynomial::variable(m, j) + Polynomial::constant(m, a));
        ++j;
    }
    for (const Polynomial& g : i.generators()) {
        affine.push_back(substitute(dehomogenize(g, chart), images));
    }
    const Ideal i_aff(m, std::move(affine));
    const Ideal residual = saturate(i_aff, Ideal::irrelevant(m));
    const Ideal primary = quotient(i_aff, residual);
    if (primary.is_unit()) {
        throw std::invalid_argument(
            "point_multiplicity: the scheme is positive-dimensional at the point "
            "(no isolated primary component)");
    }
    return artinian_dimension(primary);
}

}  // namespace folcalc
