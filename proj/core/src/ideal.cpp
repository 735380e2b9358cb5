#include "folcalc/ideal.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace folcalc {

namespace {

void check_same_ring(const Ideal& a, const Ideal& b, const char* what) {
    if (a.nvars() != b.nvars()) {
        throw std::invalid_argument(std::string(what) + ": ideals live in different rings");
    }
}

// Appends the generators of `i`, each lifted to a ring with one extra
// trailing variable, multiplied by `mult` (a polynomial in the big ring).
void append_scaled(std::vector<Polynomial>& out, const std::vector<Polynomial>& gens,
                   const Polynomial& mult) {
    for (const Polynomial& g : gens) {
        if (g.is_zero()) continue;
        out.push_back(mult * extend_ring(g, 1));
    }
}

}  // namespace

Ideal::Ideal(int nvars, std::vector<Polynomial> gens) : nvars_(nvars) {
    if (nvars < 0) throw std::invalid_argument("Ideal: negative variable count");
    gens_.reserve(gens.size());
    for (Polynomial& g : gens) {
        if (g.nvars() != nvars) {
            throw std::invalid_argument("Ideal: generator from a different ring");
        }
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

Ideal Ideal::unit(int nvars) {
    return Ideal(nvars, {Polynomial::constant(nvars, 1)});
}

Ideal Ideal::irrelevant(int nvars) {
    std::vector<Polynomial> gens;
    gens.reserve(static_cast<std::size_t>(nvars));
    for (int i = 0; i < nvars; ++i) gens.push_back(Polynomial::variable(nvars, i));
    return Ideal(nvars, std::move(gens));
}

Ideal Ideal::principal(Polynomial f) {
    const int nv = f.nvars();
    return Ideal(nv, {std::move(f)});
}

const std::vector<Polynomial>& Ideal::groebner(const MonomialOrder& ord) const {
    const std::string key = ord.name();
    {
        std::scoped_lock lock(cache_->mu);
        auto it = cache_->gb.find(key);
        if (it != cache_->gb.end()) return it->second;
    }
    std::vector<Polynomial> gb = groebner_basis(gens_, ord);
    std::scoped_lock lock(cache_->mu);
    auto [it, inserted] = cache_->gb.emplace(key, std::move(gb));
    (void)inserted;  // a concurrent duplicate computation yields the same basis
    return it->second;
}

bool Ideal::contains(const Polynomial& f) const {
    if (f.nvars() != nvars_) {
        throw std::invalid_argument("Ideal::contains: polynomial from a different ring");
    }
    if (f.is_zero()) return true;
    const auto& gb = groebner();
    if (gb.empty()) return false;  // the zero ideal
    return normal_form(f, gb, MonomialOrder::grevlex()).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
    check_same_ring(*this, other, "Ideal::contains");
    return std::all_of(other.gens_.begin(), other.gens_.end(),
                       [&](const Polynomial& g) { return contains(g); });
}

bool Ideal::equals(const Ideal& other) const {
    return contains(other) && other.contains(*this);
}

bool Ideal::is_zero_ideal() const { return groebner().empty(); }

bool Ideal::is_unit() const {
    const auto& gb = groebner();
    return gb.size() == 1 && degree(gb.front()) == 0;
}

bool Ideal::homogeneous_generators() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Polynomial& g) { return is_homogeneous(g); });
}

Ideal operator+(const Ideal& a, const Ideal& b) {
    check_same_ring(a, b, "operator+");
    std::vector<Polynomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return Ideal(a.nvars(), std::move(gens));
}

std::vector<Polynomial> eliminate_trailing(const std::vector<Polynomial>& gens, int k) {
    if (gens.empty()) return {};
    const int nv = gens.front().nvars();
    if (k < 0 || k > nv) throw std::invalid_argument("eliminate_trailing: bad block size");
    std::vector<Polynomial> gb = groebner_basis(gens, MonomialOrder::block(k));
    std::vector<Polynomial> kept;
    for (const Polynomial& g : gb) {
        bool free_of_tail = true;
        for (int v = nv - k; v < nv; ++v) {
            if (degree_in(g, v) > 0) {
                free_of_tail = false;
                break;
            }
        }
        if (!free_of_tail) continue;
        Polynomial h = g;
        for (int v = 0; v < k; ++v) h = drop_last_var(h);
        kept.push_back(std::move(h));
    }
    // The tail-free part of a block-order GB is a GB for the restricted
    // (grevlex) order; re-reduce so callers get the canonical form.
    return groebner_basis(kept, MonomialOrder::grevlex());
}

Ideal intersect(const Ideal& a, const Ideal& b) {
    check_same_ring(a, b, "intersect");
    const int nv = a.nvars();
    if (a.is_zero_ideal() || b.is_zero_ideal()) return Ideal::zero(nv);
    // t·I + (1−t)·J in Q[x0..x_{nv-1}, t], then eliminate t.
    const Polynomial t = Polynomial::variable(nv + 1, nv);
    const Polynomial one_minus_t = Polynomial::constant(nv + 1, 1) - t;
    std::vector<Polynomial> big;
    append_scaled(big, a.generators(), t);
    append_scaled(big, b.generators(), one_minus_t);
    return Ideal(nv, eliminate_trailing(big, 1));
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) {
        if (f.is_zero()) return Polynomial::zero(std::max(f.nvars(), 1));
        return std::nullopt;
    }
    if (f.nvars() != g.nvars()) {
        throw std::invalid_argument("divide_exact: operands from different rings");
    }
    const MonomialOrder ord = MonomialOrder::grevlex();
    const Term lt_g = leading_term(g, ord);
    Polynomial r = f;
    std::vector<Term> q_terms;
    while (!r.is_zero()) {
        const Term lt_r = leading_term(r, ord);
        if (!divides(lt_g.mono, lt_r.mono)) return std::nullopt;
        Term step{lt_r.coeff / lt_g.coeff, lt_r.mono / lt_g.mono};
        q_terms.push_back(step);
        r -= Polynomial::monomial(f.nvars(), step.mono, step.coeff) * g;
    }
    return Polynomial::from_terms(f.nvars(), std::move(q_terms));
}

Ideal quotient(const Ideal& i, const Ideal& j) {
    check_same_ring(i, j, "quotient");
    const int nv = i.nvars();
    if (j.is_zero_ideal()) throw std::invalid_argument("quotient: divisor ideal is zero");
    bool first = true;
    Ideal acc = Ideal::unit(nv);
    for (const Polynomial& g : j.generators()) {
        if (g.is_zero()) continue;
        // (I : g) = { q : q·g ∈ I } = (I ∩ (g)) / g.
        Ideal meet = intersect(i, Ideal::principal(g));
        std::vector<Polynomial> part;
        part.reserve(meet.generators().size());
        for (const Polynomial& h : meet.generators()) {
            auto q = divide_exact(h, g);
            if (!q) throw std::logic_error("quotient: intersection element not divisible");
            if (!q->is_zero()) part.push_back(std::move(*q));
        }
        Ideal colon_g(nv, std::move(part));
        acc = first ? std::move(colon_g) : intersect(acc, colon_g);
        first = false;
    }
    return acc;
}

Ideal saturate(const Ideal& i, const Polynomial& g) {
    if (g.nvars() != i.nvars()) {
        throw std::invalid_argument("saturate: polynomial from a different ring");
    }
    const int nv = i.nvars();
    if (g.is_zero()) throw std::invalid_argument("saturate: divisor polynomial is zero");
    if (degree(g) == 0) return i;  // unit multiplier changes nothing
    // Eliminate t from I + (1 − t·g) in Q[x.., t].
    const Polynomial t = Polynomial::variable(nv + 1, nv);
    std::vector<Polynomial> big;
    append_scaled(big, i.generators(), Polynomial::constant(nv + 1, 1));
    big.push_back(Polynomial::constant(nv + 1, 1) - t * extend_ring(g, 1));
    return Ideal(nv, eliminate_trailing(big, 1));
}

Ideal saturate(const Ideal& i, const Ideal& j) {
    check_same_ring(i, j, "saturate");
    const int nv = i.nvars();
    if (j.is_zero_ideal()) throw std::invalid_argument("saturate: divisor ideal is zero");
    bool first = true;
    Ideal acc = Ideal::unit(nv);
    for (const Polynomial& g : j.generators()) {
        if (g.is_zero()) continue;
        Ideal part = saturate(i, g);
        acc = first ? std::move(part) : intersect(acc, part);
        first = false;
    }
    return acc;
}

bool radical_membership(const Polynomial& f, const Ideal& i) {
    if (f.nvars() != i.nvars()) {
        throw std::invalid_argument("radical_membership: polynomial from a different ring");
    }
    if (f.is_zero()) return true;
    const int nv = i.nvars();
    const Polynomial t = Polynomial::variable(nv + 1, nv);
    std::vector<Polynomial> big;
    append_scaled(big, i.generators(), Polynomial::constant(nv + 1, 1));
    big.push_back(Polynomial::constant(nv + 1, 1) - t * extend_ring(f, 1));
    std::vector<Polynomial> gb = groebner_basis(big, MonomialOrder::grevlex());
    return gb.size() == 1 && degree(gb.front()) == 0;
}

bool radical_equal(const Ideal& a, const Ideal& b) {
    check_same_ring(a, b, "radical_equal");
    for (const Polynomial& g : a.generators()) {
        if (!radical_membership(g, b)) return false;
    }
    for (const Polynomial& g : b.generators()) {
        if (!radical_membership(g, a)) return false;
    }
    return true;
}

bool is_comaximal(const Ideal& a, const Ideal& b) {
    return (a + b).is_unit();
}

Ideal coefficient_ideal(const DiffForm& a) {
    return Ideal(a.nvars(), coefficient_polys(a));
}

std::string to_string(const Ideal& i, const std::vector<std::string>& names) {
    const auto gb = i.canonical_generators();
    if (gb.empty()) return "(0)";
    std::string out = "(";
    for (std::size_t k = 0; k < gb.size(); ++k) {
        if (k > 0) out += ", ";
        out += to_string(gb[k], names);
    }
    out += ")";
    return out;
}

std::string to_string(const Ideal& i) {
    return to_string(i, default_var_names(i.nvars()));
}

}  // namespace folcalc
