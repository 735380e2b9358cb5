#include "folcalc/groebner.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace folcalc {

namespace {

// Engine representation: integer coefficients, terms sorted ord-descending.
// All basis elements are kept primitive with positive leading coefficient, and
// reduction is fraction-free (pseudo-division), so the hot loop never touches
// rationals.
struct ZTerm {
    BigInt c;
    Monomial m;
};
using ZTerms = std::vector<ZTerm>;

ZTerms to_zterms(const Polynomial& f, const MonomialOrder& ord) {
    BigInt den_lcm = 1;
    for (const Term& t : f.terms())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    ZTerms out;
    out.reserve(f.num_terms());
    for (const Term& t : sorted_terms(f, ord)) {
        Rational c = t.coeff * den_lcm;
        out.push_back(ZTerm{BigInt(c.get_num()), t.mono});
    }
    return out;
}

Polynomial from_zterms(int nvars, const ZTerms& p) {
    std::vector<Term> ts;
    ts.reserve(p.size());
    for (const ZTerm& t : p) ts.push_back(Term{Rational(t.c), t.m});
    return Polynomial::from_terms(nvars, std::move(ts));
}

BigInt zcontent(const ZTerms& p) {
    BigInt g = 0;
    for (const ZTerm& t : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void make_primitive(ZTerms& p) {
    if (p.empty()) return;
    BigInt g = zcontent(p);
    if (p.front().c < 0) g = -g;
    if (g != 1)
        for (ZTerm& t : p) t.c /= g;
}

// out := a*s + b*(m * g_tail), both inputs ord-descending; result descending.
ZTerms merge_scaled(const ZTerms& s, std::size_t s_from, const BigInt& a, const ZTerms& g,
                    std::size_t g_from, const BigInt& b, const Monomial& m,
                    const MonomialOrder& ord) {
    ZTerms out;
    out.reserve((s.size() - s_from) + (g.size() - g_from));
    std::size_t i = s_from, j = g_from;
    while (i < s.size() && j < g.size()) {
        Monomial gm = g[j].m * m;
        int c = ord.cmp(s[i].m, gm);
        if (c > 0) {
            out.push_back(ZTerm{a * s[i].c, s[i].m});
            ++i;
        } else if (c < 0) {
            out.push_back(ZTerm{b * g[j].c, std::move(gm)});
            ++j;
        } else {
            BigInt v = a * s[i].c + b * g[j].c;
            if (v != 0) out.push_back(ZTerm{std::move(v), s[i].m});
            ++i, ++j;
        }
    }
    for (; i < s.size(); ++i) out.push_back(ZTerm{a * s[i].c, s[i].m});
    for (; j < g.size(); ++j) out.push_back(ZTerm{b * g[j].c, g[j].m * m});
    return out;
}

class Engine {
  public:
    Engine(int nvars, MonomialOrder ord) : nvars_(nvars), ord_(std::move(ord)) {}

    // Fully (tail-)reduces p against the basis; result primitive.
    ZTerms reduce(ZTerms p) const {
        ZTerms out;
        std::size_t pos = 0;
        while (pos < p.size()) {
            const ZTerm& lead = p[pos];
            int gi = find_reducer(lead.m);
            if (gi < 0) {
                out.push_back(lead);
                ++pos;
                continue;
            }
            const ZTerms& g = basis_[static_cast<std::size_t>(gi)];
            Monomial shift = lead.m / g.front().m;
            const BigInt& glc = g.front().c;  // positive by invariant
            // p := glc * p_rest - lead.c * shift * g_rest (leads cancel)
            ZTerms next = merge_scaled(p, pos + 1, glc, g, 1, -lead.c, shift, ord_);
            if (glc != 1)
                for (ZTerm& t : out) t.c *= glc;
            p = std::move(next);
            pos = 0;
            // keep numbers small: strip the common content of emitted + pending
            BigInt c1 = zcontent(out), c2 = zcontent(p);
            BigInt g0;
            mpz_gcd(g0.get_mpz_t(), c1.get_mpz_t(), c2.get_mpz_t());
            if (g0 > 1) {
                for (ZTerm& t : out) t.c /= g0;
                for (ZTerm& t : p) t.c /= g0;
            }
        }
        make_primitive(out);
        return out;
    }

    void run(const std::vector<Polynomial>& gens) {
        for (const Polynomial& f : gens) {
            if (f.is_zero()) continue;
            ZTerms h = reduce(to_zterms(f, ord_));
            if (!h.empty()) update(std::move(h));
        }
        while (!pairs_.empty()) {
            // normal selection: smallest lcm in the order
            std::size_t best = 0;
            for (std::size_t k = 1; k < pairs_.size(); ++k)
                if (ord_.less(pairs_[k].lcm, pairs_[best].lcm)) best = k;
            Pair pr = pairs_[best];
            pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
            ZTerms s = spoly(pr);
            ZTerms r = reduce(std::move(s));
            if (!r.empty()) update(std::move(r));
        }
    }

    // Minimalize, inter-reduce, make monic, sort descending by lead.
    std::vector<Polynomial> finish() const {
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            bool minimal = true;
            for (std::size_t j = 0; j < basis_.size() && minimal; ++j) {
                if (i == j) continue;
                if (divides(basis_[j].front().m, basis_[i].front().m)) {
                    if (basis_[j].front().m == basis_[i].front().m)
                        minimal = j > i;  // equal leads: keep the first
                    else
                        minimal = false;
                }
            }
            if (minimal) keep.push_back(i);
        }
        std::vector<Polynomial> monic;
        for (std::size_t i : keep) {
            Engine sub(nvars_, ord_);
            for (std::size_t j : keep)
                if (j != i) sub.basis_.push_back(basis_[j]);
            ZTerms red = sub.reduce(basis_[i]);
            Polynomial p = from_zterms(nvars_, red);
            monic.push_back(make_monic(p, ord_));
        }
        std::sort(monic.begin(), monic.end(), [&](const Polynomial& a, const Polynomial& b) {
            return ord_.greater(leading_monomial(a, ord_), leading_monomial(b, ord_));
        });
        return monic;
    }

  private:
    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };

    int find_reducer(const Monomial& m) const {
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (divides(basis_[i].front().m, m)) return static_cast<int>(i);
        return -1;
    }

    ZTerms spoly(const Pair& pr) const {
        const ZTerms& f = basis_[pr.i];
        const ZTerms& g = basis_[pr.j];
        Monomial mf = pr.lcm / f.front().m;
        Monomial mg = pr.lcm / g.front().m;
        // lc_g * mf * f - lc_f * mg * g; leading terms cancel
        ZTerms shifted_f;
        shifted_f.reserve(f.size());
        for (const ZTerm& t : f) shifted_f.push_back(ZTerm{t.c, t.m * mf});
        ZTerms s = merge_scaled(shifted_f, 1, g.front().c, g, 1, -f.front().c, mg, ord_);
        make_primitive(s);
        return s;
    }

    // Gebauer-Moeller pair update for a new basis element h.
    void update(ZTerms h) {
        const Monomial& hm = h.front().m;
        const std::size_t t = basis_.size();
        struct Cand {
            std::size_t g;
            Monomial lcm;
            bool cop;
        };
        std::vector<Cand> cands;
        for (std::size_t g = 0; g < basis_.size(); ++g)
            cands.push_back(Cand{g, lcm(basis_[g].front().m, hm), coprime(basis_[g].front().m, hm)});
        // keep a pair only if no other candidate lcm properly divides it, and
        // among equal lcms keep a single representative
        std::vector<Cand> kept;
        for (std::size_t a = 0; a < cands.size(); ++a) {
            bool drop = false;
            for (std::size_t b = 0; b < cands.size() && !drop; ++b) {
                if (a == b) continue;
                if (cands[b].lcm == cands[a].lcm) {
                    if (b < a) drop = true;  // representative: first of the class
                } else if (divides(cands[b].lcm, cands[a].lcm)) {
                    drop = true;
                }
            }
            if (!drop) kept.push_back(cands[a]);
        }
        // Buchberger's coprime criterion
        std::vector<Pair> fresh;
        for (const Cand& c : kept) {
            bool class_has_coprime = false;
            for (const Cand& d : cands)
                if (d.lcm == c.lcm && d.cop) class_has_coprime = true;
            if (!class_has_coprime) fresh.push_back(Pair{c.g, t, c.lcm});
        }
        // chain criterion on the old pair set
        std::vector<Pair> survivors;
        for (const Pair& p : pairs_) {
            Monomial l = p.lcm;
            bool killed = divides(hm, l) && !(lcm(basis_[p.i].front().m, hm) == l) &&
                          !(lcm(basis_[p.j].front().m, hm) == l);
            if (!killed) survivors.push_back(p);
        }
        pairs_ = std::move(survivors);
        for (Pair& p : fresh) pairs_.push_back(std::move(p));
        basis_.push_back(std::move(h));
    }

    int nvars_;
    MonomialOrder ord_;
    std::vector<ZTerms> basis_;
    std::vector<Pair> pairs_;
};

}  // namespace

std::vector<Polynomial> groebner_basis(std::vector<Polynomial> gens, const MonomialOrder& ord) {
    int nvars = -1;
    for (const Polynomial& f : gens) {
        if (nvars == -1) nvars = f.nvars();
        if (f.nvars() != nvars) throw std::invalid_argument("groebner_basis: ring mismatch");
    }
    if (nvars == -1) return {};
    Engine eng(nvars, ord);
    eng.run(gens);
    std::vector<Polynomial> out = eng.finish();
    // unit ideal: canonicalize to {1}
    for (const Polynomial& g : out)
        if (!g.is_zero() && g.is_constant())
            return {Polynomial::constant(nvars, 1)};
    return out;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& ord) {
    std::vector<std::vector<Term>> b;
    for (const Polynomial& g : basis)
        if (!g.is_zero()) b.push_back(sorted_terms(g, ord));
    std::vector<Term> work = sorted_terms(f, ord);
    std::vector<Term> out;
    std::size_t pos = 0;
    while (pos < work.size()) {
        const Term& lead = work[pos];
        const std::vector<Term>* red = nullptr;
        for (const auto& g : b)
            if (divides(g.front().mono, lead.mono)) {
                red = &g;
                break;
            }
        if (!red) {
            out.push_back(lead);
            ++pos;
            continue;
        }
        Rational c = lead.coeff / (*red)[0].coeff;
        Monomial shift = lead.mono / (*red)[0].mono;
        // work := work_rest - c * shift * red_rest
        std::vector<Term> next;
        next.reserve(work.size() + red->size());
        std::size_t i = pos + 1, j = 1;
        while (i < work.size() && j < red->size()) {
            Monomial gm = (*red)[j].mono * shift;
            int cmp = ord.cmp(work[i].mono, gm);
            if (cmp > 0) {
                next.push_back(work[i++]);
            } else if (cmp < 0) {
                next.push_back(Term{-c * (*red)[j].coeff, std::move(gm)});
                ++j;
            } else {
                Rational v = work[i].coeff - c * (*red)[j].coeff;
                if (v != 0) next.push_back(Term{std::move(v), work[i].mono});
                ++i, ++j;
            }
        }
        for (; i < work.size(); ++i) next.push_back(work[i]);
        for (; j < red->size(); ++j) next.push_back(Term{-c * (*red)[j].coeff, (*red)[j].mono * shift});
        work = std::move(next);
        pos = 0;
    }
    return Polynomial::from_terms(f.nvars(), std::move(out));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("s_polynomial: zero input");
    const Term& tf = leading_term(f, ord);
    const Term& tg = leading_term(g, ord);
    Monomial u = lcm(tf.mono, tg.mono);
    Polynomial a = Polynomial::monomial(f.nvars(), u / tf.mono, Rational(1) / tf.coeff);
    Polynomial b = Polynomial::monomial(g.nvars(), u / tg.mono, Rational(1) / tg.coeff);
    return a * f - b * g;
}

}  // namespace folcalc
