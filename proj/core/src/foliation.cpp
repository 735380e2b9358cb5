#include "folcalc/foliation.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "folcalc/parse.hpp"
#include "folcalc/zerodim.hpp"

namespace folcalc {

namespace {

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
    std::vector<Monomial> out;
    Monomial m(nvars);
    auto emit = [&](auto&& self, int var, int rest) -> void {
        if (var == nvars - 1) {
            m.exp[static_cast<std::size_t>(var)] = rest;
            out.push_back(m);
            return;
        }
        for (int k = rest; k >= 0; --k) {
            m.exp[static_cast<std::size_t>(var)] = k;
            self(self, var + 1, rest - k);
        }
    };
    if (nvars > 0 && d >= 0) emit(emit, 0, d);
    return out;
}

// Fetches a cached ideal, computing it outside the lock on a miss (a raced
// duplicate computation is discarded, keeping the slot write-once).
template <class Make>
Ideal cached_ideal(std::mutex& mu, std::optional<Ideal>& slot, Make make) {
    {
        std::lock_guard<std::mutex> g(mu);
        if (slot) return *slot;
    }
    Ideal v = make();
    std::lock_guard<std::mutex> g(mu);
    if (!slot) slot = std::move(v);
    return *slot;
}

void check_point(int nvars, std::span<const Rational> point) {
    if (static_cast<int>(point.size()) != nvars) {
        throw std::invalid_argument("point needs one homogeneous coordinate per variable");
    }
    for (const Rational& c : point) {
        if (c != 0) return;
    }
    throw std::invalid_argument("the origin of the cone is not a point of projective space");
}

}  // namespace

const char* to_string(FoliationInvariant inv) {
    switch (inv) {
        case FoliationInvariant::OneForm: return "one-form";
        case FoliationInvariant::Nonzero: return "nonzero";
        case FoliationInvariant::Homogeneity: return "homogeneity";
        case FoliationInvariant::Descent: return "descent";
        case FoliationInvariant::Integrability: return "integrability";
        case FoliationInvariant::SingularCodimension: return "singular-codimension";
    }
    return "unknown";
}

const char* to_string(Trivalent v) {
    switch (v) {
        case Trivalent::yes: return "true";
        case Trivalent::no: return "false";
        case Trivalent::undecided: return "undecided";
    }
    return "unknown";
}

FoliationValidationError::FoliationValidationError(FoliationInvariant inv,
                                                   const std::string& msg)
    : std::invalid_argument(msg), inv_(inv) {}

struct Foliation::Cache {
    std::mutex mu;
    std::optional<Ideal> j, cdw, k, l;
    std::map<int, Ideal> unfolding;  // keyed by the resolved d_max
};

Foliation::Foliation(DiffForm w, int e)
    : omega_(std::move(w)), e_(e), cache_(std::make_shared<Cache>()) {}

Foliation new_foliation(const DiffForm& omega) {
    if (omega.form_degree() != 1) {
        throw FoliationValidationError(
            FoliationInvariant::OneForm,
            "a foliation is defined by a 1-form, not a " +
                std::to_string(omega.form_degree()) + "-form");
    }
    if (omega.is_zero()) {
        throw FoliationValidationError(FoliationInvariant::Nonzero,
                                       "the zero form does not define a foliation");
    }
    const std::optional<int> deg = coefficient_degree(omega);
    if (!deg) {
        throw FoliationValidationError(
            FoliationInvariant::Homogeneity,
            "the coefficients must be homogeneous of one common degree");
    }
    if (!contract(VectorField::radial(omega.nvars()), omega).is_zero()) {
        throw FoliationValidationError(
            FoliationInvariant::Descent,
            "i_R omega != 0: the form does not descend to projective space");
    }
    if (!wedge(omega, exterior_derivative(omega)).is_zero()) {
        throw FoliationValidationError(
            FoliationInvariant::Integrability,
            "omega ^ d(omega) != 0: the integrability condition fails");
    }
    const Ideal j = coefficient_ideal(omega);
    if (projective_dimension(j) > omega.nvars() - 3) {
        throw FoliationValidationError(
            FoliationInvariant::SingularCodimension,
            "sing(omega) has codimension < 2 (a divisorial singular component)");
    }
    return Foliation(omega, *deg + 1);
}

Ideal singular_ideal(const Foliation& f) {
    return cached_ideal(f.cache_->mu, f.cache_->j,
                        [&] { return coefficient_ideal(f.omega_); });
}

Ideal dw_coefficient_ideal(const Foliation& f) {
    return cached_ideal(f.cache_->mu, f.cache_->cdw, [&] {
        return coefficient_ideal(exterior_derivative(f.omega_));
    });
}

Ideal kupka_ideal(const Foliation& f) {
    return cached_ideal(f.cache_->mu, f.cache_->k, [&] {
        return quotient(singular_ideal(f), dw_coefficient_ideal(f));
    });
}

Ideal non_kupka_ideal(const Foliation& f) {
    return cached_ideal(f.cache_->mu, f.cache_->l, [&] {
        return saturate(singular_ideal(f), kupka_ideal(f));
    });
}

Ideal unfolding_ideal(const Foliation& f, std::optional<int> d_max) {
    const int resolved = d_max.value_or(2 * f.e_);
    auto& c = *f.cache_;
    {
        std::lock_guard<std::mutex> g(c.mu);
        auto it = c.unfolding.find(resolved);
        if (it != c.unfolding.end()) return it->second;
    }
    Ideal i = assemble_unfolding_ideal(f.omega_, resolved);
    if (!i.contains(singular_ideal(f))) {
        throw std::logic_error("unfolding ideal postcondition failed: J <= I does not hold");
    }
    if (!kupka_ideal(f).contains(i)) {
        throw std::logic_error("unfolding ideal postcondition failed: I <= K does not hold");
    }
    std::lock_guard<std::mutex> g(c.mu);
    return c.unfolding.emplace(resolved, std::move(i)).first->second;
}

bool is_division_point(const Foliation& f, std::span<const Rational> point,
                       std::optional<int> d_max) {
    check_point(f.nvars(), point);
    const Ideal i = unfolding_ideal(f, d_max);
    for (const Polynomial& g : i.generators()) {
        if (evaluate(g, point) != 0) return true;
    }
    return false;
}

bool in_kupka_set(const Foliation& f, std::span<const Rational> point) {
    check_point(f.nvars(), point);
    for (const Polynomial& a : f.omega().components()) {
        if (evaluate(a, point) != 0) return false;  // p not on sing(omega)
    }
    const DiffForm dw = exterior_derivative(f.omega());
    for (const Polynomial& a : dw.components()) {
        if (evaluate(a, point) != 0) return true;
    }
    return false;  // d(omega) vanishes at p
}

bool in_U(const Foliation& f, std::optional<int> d_max) {
    const Ideal i = unfolding_ideal(f, d_max);
    const Ideal k = kupka_ideal(f);
    return i.equals(k) || radical_equal(i, k);
}

bool kupka_scheme_nonempty(const Foliation& f) {
    const Ideal k = kupka_ideal(f);
    return !saturate(k, Ideal::irrelevant(k.nvars())).is_unit();
}

Trivalent j_radical(const Foliation& f, std::optional<int> witness_degree_bound) {
    const Ideal j = singular_ideal(f);
    const int nv = j.nvars();
    const int pd = projective_dimension(j);
    if (pd < 0) {
        // Proj(S/J) empty: J is m-primary, and the only homogeneous radical
        // m-primary ideal is m itself.
        return j.equals(Ideal::irrelevant(nv)) ? Trivalent::yes : Trivalent::no;
    }
    if (pd == 0) {
        // Finitely many projective points: decide exactly. Each affine chart
        // is zero-dimensional, so Seidenberg's radical applies; radical charts
        // plus no irrelevant-primary component is equivalent to J radical.
        for (int chart = 0; chart < nv; ++chart) {
            std::vector<Polynomial> gens;
            for (const Polynomial& g : j.generators()) {
                gens.push_back(dehomogenize(g, chart));
            }
            const Ideal affine(nv - 1, std::move(gens));
            if (affine.is_unit()) continue;  // the chart misses V(J)
            if (!zero_dim_radical(affine).equals(affine)) return Trivalent::no;
        }
        return j.equals(saturate(j, Ideal::irrelevant(nv))) ? Trivalent::yes
                                                            : Trivalent::no;
    }
    const int bound = witness_degree_bound.value_or(f.e());
    if (find_nonreduced_witness(j, kupka_ideal(f), bound)) return Trivalent::no;
    return Trivalent::undecided;
}

IJComparison compare_IJ_SL(const Foliation& f, std::optional<int> d_max) {
    IJComparison out;
    out.p_ij = hilbert_polynomial_quotient(unfolding_ideal(f, d_max), singular_ideal(f));
    out.p_sl = hilbert_polynomial(non_kupka_ideal(f));
    const Ideal m = Ideal::irrelevant(f.nvars());
    out.k_comaximal_with_cdomega =
        is_comaximal(saturate(kupka_ideal(f), m), saturate(dw_coefficient_ideal(f), m));
    out.polynomials_equal = (out.p_ij == out.p_sl);
    return out;
}

FoliationReport make_report(const Foliation& f, std::optional<int> d_max) {
    FoliationReport r;
    r.j = singular_ideal(f);
    r.i = unfolding_ideal(f, d_max);
    r.k = kupka_ideal(f);
    r.l = non_kupka_ideal(f);
    const IJComparison cmp = compare_IJ_SL(f, d_max);
    r.p_ij = cmp.p_ij;
    r.p_sl = cmp.p_sl;
    r.predicates.i_equals_k = r.i.equals(r.k);
    r.predicates.in_u = r.predicates.i_equals_k || radical_equal(r.i, r.k);
    r.predicates.kupka_nonempty = kupka_scheme_nonempty(f);
    r.predicates.j_radical = j_radical(f);
    r.predicates.k_comaximal_with_cdomega = cmp.k_comaximal_with_cdomega;
    r.predicates.ij_iso_sl_hilbert = cmp.polynomials_equal;
    return r;
}

PullbackResult pullback_foliation(std::span<const Polynomial> map3, const Foliation& omega2) {
    if (omega2.nvars() != 3) {
        throw std::invalid_argument("pullback_foliation: the pulled-back foliation must live on P^2");
    }
    if (map3.size() != 3) {
        throw std::invalid_argument("pullback_foliation: the map needs exactly 3 components");
    }
    const int nv = map3[0].nvars();
    int nu = -1;
    for (const Polynomial& fi : map3) {
        if (fi.nvars() != nv) {
            throw std::invalid_argument("pullback_foliation: map components in different rings");
        }
        if (!is_homogeneous(fi)) {
            throw std::invalid_argument("pullback_foliation: map components must be homogeneous");
        }
        if (fi.is_zero()) continue;
        if (nu == -1) nu = degree(fi);
        if (degree(fi) != nu) {
            throw std::invalid_argument("pullback_foliation: map components of mixed degrees");
        }
    }
    if (nu < 1) {
        throw std::invalid_argument(
            "pullback_foliation: the map needs a common positive degree");
    }

    PullbackResult out{new_foliation(pullback_form(map3, omega2.omega())), Ideal(), false, {}};

    std::vector<Polynomial> pred;
    for (const Polynomial& a : omega2.omega().components()) {
        Polynomial s = substitute(a, map3);
        if (!s.is_zero()) pred.push_back(std::move(s));
    }
    out.predicted = Ideal(nv, std::move(pred));

    // Genericity is an open condition, not a decision procedure; what is
    // checked here are its testable consequences.
    const Ideal j2 = singular_ideal(omega2);
    if (j_radical(omega2) != Trivalent::yes) {
        out.genericity_failures.push_back("sing(omega2) is not certified reduced");
    }
    if (!radical_equal(j2, kupka_ideal(omega2))) {
        out.genericity_failures.push_back("sing(omega2) is not certified all-Kupka");
    }
    const int e2 = omega2.e();
    const long n_points = static_cast<long>(e2 - 2) * (e2 - 2) + e2 - 1;
    const HilbertPolynomial count = hilbert_polynomial(saturate(j2, Ideal::irrelevant(3)));
    if (count.degree() != 0 || count.expanded_coeffs()[0] != Rational(n_points)) {
        out.genericity_failures.push_back(
            "sing(omega2) does not consist of (e-2)^2 + e - 1 points");
    }
    // Critical locus of F: where the 3 x nv Jacobian has rank < 3. V(predicted)
    // contains both the base locus and the preimage of sing(omega2), so one
    // disjointness check covers the two critical-set conditions.
    std::vector<Polynomial> jac;
    jac.reserve(3 * static_cast<std::size_t>(nv));
    for (const Polynomial& fi : map3) {
        for (int c = 0; c < nv; ++c) jac.push_back(partial_derivative(fi, c));
    }
    auto entry = [&](int r, int c) { return jac[static_cast<std::size_t>(r * nv + c)]; };
    std::vector<Polynomial> minors;
    for (int a = 0; a < nv; ++a) {
        for (int b = a + 1; b < nv; ++b) {
            for (int c = b + 1; c < nv; ++c) {
                Polynomial det = entry(0, a) * (entry(1, b) * entry(2, c) -
                                                entry(1, c) * entry(2, b)) -
                                 entry(0, b) * (entry(1, a) * entry(2, c) -
                                                entry(1, c) * entry(2, a)) +
                                 entry(0, c) * (entry(1, a) * entry(2, b) -
                                                entry(1, b) * entry(2, a));
                if (!det.is_zero()) minors.push_back(std::move(det));
            }
        }
    }
    const Ideal crit(nv, std::move(minors));
    if (!saturate(crit + out.predicted, Ideal::irrelevant(nv)).is_unit()) {
        out.genericity_failures.push_back(
            "the critical locus of the map meets the predicted singular scheme");
    }
    out.verified_generic = out.genericity_failures.empty();
    return out;
}

Foliation dulac(int p, int q, const Rational& alpha, const Rational& beta) {
    if (p < 1 || q < 1) {
        throw std::invalid_argument("dulac: the type (p, q) needs p >= 1 and q >= 1");
    }
    const int nv = 4;
    auto x = [&](int i) { return Polynomial::variable(nv, i); };
    const Polynomial x0pow = x(0).pow(static_cast<unsigned>(p + q - 1));

    std::vector<Polynomial> xc(nv, Polynomial::zero(nv));
    xc[1] = Rational(-(q + 1)) * (x0pow * x(1));
    xc[2] = Rational(p + 1) * (x0pow * x(2));
    xc[3] = Rational(p - q) * (x0pow * x(3)) +
            (Rational(q + 1) * beta - Rational(p + 1) * alpha) *
                (x(1).pow(static_cast<unsigned>(p)) * x(2).pow(static_cast<unsigned>(q)));
    std::vector<Polynomial> yc(nv, Polynomial::zero(nv));
    yc[1] = -beta * x(1);
    yc[2] = alpha * x(2);
    yc[3] = (Rational(q) * alpha - Rational(p) * beta) * x(3);

    const std::vector<VectorField> fields = {VectorField(std::move(xc)),
                                             VectorField(std::move(yc))};
    return new_foliation(normalized(split_contraction(fields)));
}

Foliation sl2_example() {
    const std::vector<std::string> v = {"x0", "x1", "x2", "x3", "x4"};
    const std::vector<VectorField> fields = {
        parse_vector_field("x0*ddx0 - x1*ddx1 + 2*x2*ddx2 - 2*x3*ddx3", v),
        parse_vector_field("x4*ddx0 + x3*ddx1 + x0*ddx2 + x1*ddx4", v),
        parse_vector_field("-4*x2*ddx0 - 6*x4*ddx1 - 4*x1*ddx3 - 6*x0*ddx4", v)};
    return new_foliation(normalized(split_contraction(fields)));
}

Foliation example_p2a() {
    return new_foliation(
        parse_form("y*z^2*dx + x^2*z*dy - (x^2*y + x*y*z)*dz", {"x", "y", "z"}));
}

Foliation example_p2b() {
    return new_foliation(parse_form("x0^2*x2*dx0 + x1^2*x2*dx1 + (-x0^3 - x1^3)*dx2",
                                    {"x0", "x1", "x2"}));
}

Foliation example_p2c() {
    return new_foliation(
        parse_form("x1*x2*dx0 + x0*x2*dx1 - 2*x0*x1*dx2", {"x0", "x1", "x2"}));
}

Foliation transverse_example() {
    return new_foliation(parse_form(
        "(-x0^4*x1 - x0^4*x3 - 2*x0^3*x1*x3 + x0^2*x1^2*x3 - 2*x0*x1^3*x3 - 2*x0^2*x1*x2*x3"
        " - x0^2*x1*x3^2 + x0*x1^2*x3^2 - x1^3*x3^2 + x0^2*x2*x3^2 - x1^2*x2*x3^2"
        " - x1*x2^2*x3^2)*dx0 + "
        "(x0^5 + x0^4*x3 + x0^2*x1^2*x3 + 2*x0^3*x2*x3 + x0^3*x3^2 - x0^2*x1*x3^2"
        " + x0*x1^2*x3^2 + x0^2*x2*x3^2 + x1^2*x2*x3^2 + x0*x2^2*x3^2)*dx1 + "
        "(-x0^3*x3^2 - x0^2*x1*x3^2 + x0*x1^2*x3^2 - x1^3*x3^2)*dx2 + "
        "(x0^5 + x0^4*x1 - x0^3*x1^2 + x0^2*x1^3)*dx3",
        {"x0", "x1", "x2", "x3"}));
}

std::optional<Polynomial> find_nonreduced_witness(const Ideal& j, const Ideal& candidates,
                                                  int d_max) {
    for (const Polynomial& g : candidates.generators()) {
        if (g.is_zero() || !is_homogeneous(g) || degree(g) > d_max) continue;
        if (!j.contains(g) && radical_membership(g, j)) return g;
    }
    const int nv = j.nvars();
    for (int d = 1; d <= d_max; ++d) {
        for (const Monomial& m : monomials_of_degree(nv, d)) {
            Polynomial f = Polynomial::monomial(nv, m);
            if (candidates.contains(f) && !j.contains(f) && radical_membership(f, j)) {
                return f;
            }
        }
    }
    return std::nullopt;
}

Ideal rational_point_ideal(std::span<const Rational> point) {
    const int nv = static_cast<int>(point.size());
    bool all_zero = true;
    for (const Rational& c : point) {
        if (c != 0) all_zero = false;
    }
    if (all_zero) {
        throw std::invalid_argument("the origin of the cone is not a point of projective space");
    }
    std::vector<Polynomial> gens;
    for (int i = 0; i < nv; ++i) {
        for (int k = i + 1; k < nv; ++k) {
            Polynomial g = point[static_cast<std::size_t>(i)] * Polynomial::variable(nv, k) -
                           point[static_cast<std::size_t>(k)] * Polynomial::variable(nv, i);
            if (!g.is_zero()) gens.push_back(std::move(g));
        }
    }
    return Ideal(nv, std::move(gens));
}

}  // namespace folcalc
