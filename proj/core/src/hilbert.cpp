#include "folcalc/hilbert.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace folcalc {

namespace {

// ---- dense integer polynomials in t (numerator arithmetic) ----

using ZPoly = std::vector<BigInt>;  // coefficient k multiplies t^k; empty == 0

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
    ZPoly out(std::max(a.size(), b.size()), BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    trim(out);
    return out;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

// t^d shift.
ZPoly zp_shift(ZPoly p, int d) {
    if (p.empty()) return p;
    p.insert(p.begin(), static_cast<std::size_t>(d), BigInt(0));
    return p;
}

// 1 - t^d.
ZPoly zp_one_minus_power(int d) {
    ZPoly p(static_cast<std::size_t>(d) + 1, BigInt(0));
    p[0] = 1;
    p[static_cast<std::size_t>(d)] = -1;
    return p;
}

// Keep only the minimal monomials under divisibility (and drop duplicates).
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (i == j) continue;
            if (divides(gens[j], gens[i])) {
                // On ties (equal monomials) keep the first occurrence.
                redundant = !(gens[i] == gens[j]) || j < i;
            }
        }
        if (!redundant) out.push_back(gens[i]);
    }
    return out;
}

ZPoly numerator_rec(std::vector<Monomial> gens, int nvars) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return ZPoly{BigInt(1)};
    for (const Monomial& m : gens) {
        if (m.is_one()) return {};  // S/(1) has zero Hilbert series
    }
    // How often each variable occurs among the generators.
    std::vector<int> occ(static_cast<std::size_t>(nvars), 0);
    for (const Monomial& m : gens) {
        for (int v = 0; v < nvars; ++v) {
            if (m.exp[static_cast<std::size_t>(v)] > 0) ++occ[static_cast<std::size_t>(v)];
        }
    }
    const int pivot =
        static_cast<int>(std::max_element(occ.begin(), occ.end()) - occ.begin());
    if (occ[static_cast<std::size_t>(pivot)] <= 1) {
        // Pairwise coprime generators: N = prod (1 - t^deg).
        ZPoly out{BigInt(1)};
        for (const Monomial& m : gens) out = zp_mul(out, zp_one_minus_power(m.degree()));
        return out;
    }
    // N(M) = N(M + (x)) + t * N(M : x) for the pivot variable x.
    std::vector<Monomial> plus;   // generators of M + (x)
    std::vector<Monomial> colon;  // generators of M : x
    Monomial x_piv(nvars);
    x_piv.exp[static_cast<std::size_t>(pivot)] = 1;
    plus.push_back(x_piv);
    for (const Monomial& m : gens) {
        if (m.exp[static_cast<std::size_t>(pivot)] == 0) {
            plus.push_back(m);
            colon.push_back(m);
        } else {
            Monomial q = m;
            --q.exp[static_cast<std::size_t>(pivot)];
            colon.push_back(std::move(q));
        }
    }
    return zp_add(numerator_rec(std::move(plus), nvars),
                  zp_shift(numerator_rec(std::move(colon), nvars), 1));
}

// ---- dense rational polynomials in t ----

using QPoly = std::vector<Rational>;

void trimq(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qp_add(const QPoly& a, const QPoly& b, int sign_b) {
    QPoly out(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += sign_b * b[i];
    trimq(out);
    return out;
}

// Multiply by the linear factor (t + c).
QPoly qp_mul_linear(const QPoly& p, const Rational& c) {
    if (p.empty()) return {};
    QPoly out(p.size() + 1, Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i + 1] += p[i];
        out[i] += c * p[i];
    }
    trimq(out);
    return out;
}

// P_r(t) = C(t + r, r) = prod_{j=1..r} (t + j) / r!, expanded in t.
QPoly binomial_basis(int r) {
    QPoly p{Rational(1)};
    BigInt fact(1);
    for (int j = 1; j <= r; ++j) {
        p = qp_mul_linear(p, Rational(j));
        fact *= j;
    }
    for (Rational& c : p) c /= Rational(fact);
    return p;
}

BigInt factorial(int r) {
    BigInt f(1);
    for (int j = 2; j <= r; ++j) f *= j;
    return f;
}

std::string coeff_prefix(const Rational& mag, bool unit_symbol) {
    // mag is positive; returns "" for 1 when the symbol stands alone.
    if (unit_symbol && mag == 1) return "";
    return to_string(mag) + "*";
}

void require_homogeneous(const Ideal& i, const char* what) {
    if (!i.homogeneous_generators()) {
        throw std::invalid_argument(std::string(what) + ": generators must be homogeneous");
    }
}

ZPoly numerator_of(const Ideal& i) {
    std::vector<Monomial> lt;
    for (const Polynomial& g : i.groebner()) {
        lt.push_back(leading_monomial(g, MonomialOrder::grevlex()));
    }
    return numerator_rec(std::move(lt), i.nvars());
}

}  // namespace

std::vector<BigInt> hilbert_numerator(std::vector<Monomial> lt_gens, int nvars) {
    for (const Monomial& m : lt_gens) {
        if (static_cast<int>(m.exp.size()) != nvars) {
            throw std::invalid_argument("hilbert_numerator: monomial from a different ring");
        }
    }
    return numerator_rec(std::move(lt_gens), nvars);
}

HilbertPolynomial HilbertPolynomial::from_expanded(std::vector<Rational> expanded) {
    trimq(expanded);
    HilbertPolynomial h;
    h.expanded_ = std::move(expanded);
    // Peel leading coefficients: c_r = r! * [t^r], subtract c_r * P_r.
    QPoly rest = h.expanded_;
    std::vector<Rational> pr(rest.size(), Rational(0));
    while (!rest.empty()) {
        const int r = static_cast<int>(rest.size()) - 1;
        const Rational c = rest.back() * Rational(factorial(r));
        pr[static_cast<std::size_t>(r)] = c;
        QPoly basis = binomial_basis(r);
        for (Rational& b : basis) b *= c;
        rest = qp_add(rest, basis, -1);
        if (static_cast<int>(rest.size()) - 1 >= r) {
            throw std::logic_error("HilbertPolynomial: peeling failed to reduce degree");
        }
    }
    h.pr_ = std::move(pr);
    return h;
}

HilbertPolynomial HilbertPolynomial::from_binomial(std::vector<Rational> pr) {
    QPoly expanded;
    for (std::size_t r = 0; r < pr.size(); ++r) {
        if (pr[r] == 0) continue;
        QPoly basis = binomial_basis(static_cast<int>(r));
        for (Rational& b : basis) b *= pr[r];
        expanded = qp_add(expanded, basis, 1);
    }
    return from_expanded(std::move(expanded));
}

Rational HilbertPolynomial::operator()(const Rational& t) const {
    Rational v(0);
    for (auto it = expanded_.rbegin(); it != expanded_.rend(); ++it) v = v * t + *it;
    return v;
}

HilbertPolynomial HilbertPolynomial::operator+(const HilbertPolynomial& o) const {
    return from_expanded(qp_add(expanded_, o.expanded_, 1));
}

HilbertPolynomial HilbertPolynomial::operator-(const HilbertPolynomial& o) const {
    return from_expanded(qp_add(expanded_, o.expanded_, -1));
}

std::string HilbertPolynomial::binomial_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int r = static_cast<int>(pr_.size()) - 1; r >= 0; --r) {
        const Rational& c = pr_[static_cast<std::size_t>(r)];
        if (c == 0) continue;
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (out.empty()) {
            out += neg ? "-" : "";
        } else {
            out += neg ? " - " : " + ";
        }
        out += coeff_prefix(mag, true) + "P" + std::to_string(r);
    }
    return out;
}

std::string HilbertPolynomial::expanded_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = static_cast<int>(expanded_.size()) - 1; k >= 0; --k) {
        const Rational& c = expanded_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (out.empty()) {
            out += neg ? "-" : "";
        } else {
            out += neg ? " - " : " + ";
        }
        if (k == 0) {
            out += to_string(mag);
        } else if (k == 1) {
            out += coeff_prefix(mag, true) + "t";
        } else {
            out += coeff_prefix(mag, true) + "t^" + std::to_string(k);
        }
    }
    return out;
}

BigInt hilbert_function(const Ideal& i, int a) {
    require_homogeneous(i, "hilbert_function");
    if (a < 0) return 0;
    const ZPoly num = numerator_of(i);
    const int n = i.nvars();
    BigInt h(0);
    for (std::size_t k = 0; k < num.size(); ++k) {
        const int d = a - static_cast<int>(k);
        if (d < 0) continue;
        // Number of degree-d monomials in n variables: C(d + n - 1, n - 1).
        BigInt binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(d + n - 1),
                     static_cast<unsigned long>(n - 1));
        h += num[k] * binom;
    }
    return h;
}

HilbertPolynomial hilbert_polynomial(const Ideal& i) {
    require_homogeneous(i, "hilbert_polynomial");
    const ZPoly num = numerator_of(i);
    const int n = i.nvars();
    QPoly total;
    for (std::size_t k = 0; k < num.size(); ++k) {
        if (num[k] == 0) continue;
        // C(t - k + n - 1, n - 1) expanded: prod_{j=1..n-1} (t - k + j) / (n-1)!.
        QPoly term{Rational(1)};
        for (int j = 1; j <= n - 1; ++j) {
            term = qp_mul_linear(term, Rational(j - static_cast<int>(k)));
        }
        const Rational scale = Rational(num[k]) / Rational(factorial(n - 1));
        for (Rational& c : term) c *= scale;
        total = qp_add(total, term, 1);
    }
    return HilbertPolynomial::from_expanded(std::move(total));
}

HilbertPolynomial hilbert_polynomial_quotient(const Ideal& i, const Ideal& j) {
    if (i.nvars() != j.nvars()) {
        throw std::invalid_argument("hilbert_polynomial_quotient: different rings");
    }
    if (!i.contains(j)) {
        throw std::invalid_argument("hilbert_polynomial_quotient: J is not contained in I");
    }
    return hilbert_polynomial(j) - hilbert_polynomial(i);
}

int projective_dimension(const Ideal& i) {
    require_homogeneous(i, "projective_dimension");
    if (i.is_unit()) {
        throw std::invalid_argument("projective_dimension: the unit ideal has empty Proj");
    }
    const HilbertPolynomial h = hilbert_polynomial(i);
    return h.is_zero() ? -1 : h.degree();
}

}  // namespace folcalc
