#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "folcalc/diff_form.hpp"
#include "folcalc/ideal.hpp"
#include "folcalc/parse.hpp"
#include "oracle_util.hpp"

using namespace folcalc;
using namespace folcalc::testutil;

namespace {

const std::vector<std::string> XYZ = {"x", "y", "z"};
const std::vector<std::string> X3 = {"x0", "x1", "x2"};

Polynomial P(const std::string& text, const std::vector<std::string>& vars = X3) {
    return parse_polynomial(text, vars);
}

Ideal I3(std::initializer_list<std::string> gens, const std::vector<std::string>& vars = X3) {
    std::vector<Polynomial> ps;
    for (const auto& g : gens) ps.push_back(parse_polynomial(g, vars));
    return Ideal(static_cast<int>(vars.size()), std::move(ps));
}

bool same_basis(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
    return a == b;
}

}  // namespace

TEST_CASE("reduced Groebner bases match hand-computed results") {
    SUBCASE("two generators with one reduction") {
        // Hand run: S(x0^2, x0x1 + x0^2) reduces to zero after the second
        // generator is tail-reduced by the first to x0x1.
        Ideal i = I3({"x0^2", "x0*x1 + x0^2"});
        const auto gb = i.canonical_generators();
        REQUIRE(gb.size() == 2);
        CHECK(gb[0] == P("x0^2"));
        CHECK(gb[1] == P("x0*x1"));
    }
    SUBCASE("unit ideal") {
        Ideal i = I3({"1 + x0", "x0"});
        const auto gb = i.canonical_generators();
        REQUIRE(gb.size() == 1);
        CHECK(gb[0] == P("1"));
        CHECK(i.is_unit());
    }
    SUBCASE("zero ideal") {
        Ideal i = Ideal::zero(3);
        CHECK(i.canonical_generators().empty());
        CHECK(i.is_zero_ideal());
        CHECK_FALSE(i.is_unit());
    }
    SUBCASE("linear change of coordinates") {
        // (x0 + x1, x0 - x1) = (x0, x1).
        Ideal i = I3({"x0 + x1", "x0 - x1"});
        const auto gb = i.canonical_generators();
        REQUIRE(gb.size() == 2);
        CHECK(gb[0] == P("x0"));
        CHECK(gb[1] == P("x1"));
    }
}

TEST_CASE("reduced GB is canonical: invariant under shuffling, duplication, scaling") {
    std::mt19937 rng(20260823);
    std::uniform_int_distribution<int> scale(1, 7);
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<Polynomial> gens;
        const int ngens = 2 + static_cast<int>(rng() % 3);
        for (int k = 0; k < ngens; ++k) {
            Polynomial g = random_homog(rng, 3, 2 + static_cast<int>(rng() % 2));
            if (!g.is_zero()) gens.push_back(g);
        }
        if (gens.empty()) continue;
        const auto reference = Ideal(3, gens).canonical_generators();

        std::vector<Polynomial> mutated = gens;
        mutated.push_back(gens.front() * Rational(scale(rng)));  // duplicate, rescaled
        std::shuffle(mutated.begin(), mutated.end(), rng);
        for (Polynomial& g : mutated) g *= Rational(scale(rng), scale(rng));
        CHECK(same_basis(reference, Ideal(3, mutated).canonical_generators()));
    }
}

TEST_CASE("GB correctness properties: S-polynomials and inputs reduce to zero") {
    std::mt19937 rng(424242);
    const MonomialOrder ord = MonomialOrder::grevlex();
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<Polynomial> gens;
        for (int k = 0; k < 3; ++k) {
            Polynomial g = random_homog(rng, 3, 2);
            if (!g.is_zero()) gens.push_back(g);
        }
        if (gens.empty()) continue;
        const auto gb = groebner_basis(gens, ord);
        if (gb.empty()) continue;
        for (const Polynomial& g : gens) {
            CHECK(normal_form(g, gb, ord).is_zero());
        }
        for (std::size_t a = 0; a < gb.size(); ++a) {
            for (std::size_t b = a + 1; b < gb.size(); ++b) {
                CHECK(normal_form(s_polynomial(gb[a], gb[b], ord), gb, ord).is_zero());
            }
        }
        // Reduced-ness: no element reduces against the others.
        for (std::size_t a = 0; a < gb.size(); ++a) {
            std::vector<Polynomial> others;
            for (std::size_t b = 0; b < gb.size(); ++b) {
                if (b != a) others.push_back(gb[b]);
            }
            if (others.empty()) continue;
            CHECK(normal_form(gb[a], others, ord) == gb[a]);
        }
    }
}

TEST_CASE("membership") {
    CHECK(Ideal::principal(P("x0")).contains(P("x0*x1")));
    CHECK_FALSE(Ideal::principal(P("x0")).contains(P("x1")));
    CHECK(Ideal::zero(3).contains(Polynomial::zero(3)));

    // J = C(w) sits inside K = (yz^2, x^2z, 2xy - yz) for the first
    // projective corpus example.
    DiffForm w = parse_form("y*z^2*dx + x^2*z*dy - (x^2*y + x*y*z)*dz", XYZ);
    Ideal j = coefficient_ideal(w);
    Ideal k = I3({"y*z^2", "x^2*z", "2*x*y - y*z"}, XYZ);
    CHECK(k.contains(j));
    CHECK_FALSE(j.contains(k));
}

TEST_CASE("cached GB generates the same ideal as the declared generators") {
    DiffForm w = parse_form("y*z^2*dx + x^2*z*dy - (x^2*y + x*y*z)*dz", XYZ);
    for (const Ideal& i : {coefficient_ideal(w), I3({"x0^2 - x1*x2", "x0*x1 - x2^2"})}) {
        const Ideal from_gb(i.nvars(), i.canonical_generators());
        CHECK(from_gb.equals(i));
    }
}

TEST_CASE("intersection") {
    SUBCASE("principal ideals") {
        Ideal meet = intersect(Ideal::principal(P("x0")), Ideal::principal(P("x1")));
        REQUIRE(meet.canonical_generators().size() == 1);
        CHECK(meet.canonical_generators()[0] == P("x0*x1"));
    }
    SUBCASE("coordinate primes, with a graded brute-force oracle") {
        Ideal a = I3({"x0", "x1"});
        Ideal b = I3({"x0", "x2"});
        Ideal meet = intersect(a, b);
        const auto expected = I3({"x0", "x1*x2"}).canonical_generators();
        CHECK(same_basis(meet.canonical_generators(), expected));

        // Independent check on the graded pieces of degree <= 2: dimension of
        // the intersection via rank arithmetic, and membership of every
        // computed generator in both row spaces.
        for (int d = 0; d <= 2; ++d) {
            const auto basis = degree_monomials(3, d);
            auto ra = graded_piece(a.generators(), 3, d, basis);
            auto rb = graded_piece(b.generators(), 3, d, basis);
            auto rm = graded_piece(meet.canonical_generators(), 3, d, basis);
            auto runion = ra;
            runion.insert(runion.end(), rb.begin(), rb.end());
            const int dim_a = rref(ra);
            const int dim_b = rref(rb);
            const int dim_sum = rref(runion);
            const int dim_meet = rref(rm);
            CHECK(dim_meet == dim_a + dim_b - dim_sum);
            for (const Polynomial& g : meet.canonical_generators()) {
                if (degree(g) != d) continue;
                const QRow v = coeff_vector(g, basis);
                CHECK(in_rowspace(ra, v));
                CHECK(in_rowspace(rb, v));
            }
        }
    }
    SUBCASE("idempotent") {
        Ideal i = I3({"x0^2 - x1*x2", "x1^3"});
        CHECK(intersect(i, i).equals(i));
    }
    SUBCASE("with the zero ideal") {
        Ideal i = I3({"x0"});
        CHECK(intersect(i, Ideal::zero(3)).is_zero_ideal());
    }
}

TEST_CASE("ideal quotient") {
    SUBCASE("principal examples") {
        Ideal q = quotient(Ideal::principal(P("x0^2")), Ideal::principal(P("x0")));
        REQUIRE(q.canonical_generators().size() == 1);
        CHECK(q.canonical_generators()[0] == P("x0"));
    }
    SUBCASE("quotient by the unit ideal is the identity") {
        Ideal i = I3({"x0^2 - x1*x2", "x1*x2"});
        CHECK(quotient(i, Ideal::unit(3)).equals(i));
    }
    SUBCASE("quotient by zero throws") {
        CHECK_THROWS_AS((void)quotient(I3({"x0"}), Ideal::zero(3)), std::invalid_argument);
    }
    SUBCASE("first projective example: K = (J : C(dw))") {
        DiffForm w = parse_form("y*z^2*dx + x^2*z*dy - (x^2*y + x*y*z)*dz", XYZ);
        Ideal j = coefficient_ideal(w);
        Ideal cdw = coefficient_ideal(exterior_derivative(w));
        Ideal k = quotient(j, cdw);
        CHECK(k.equals(I3({"y*z^2", "x^2*z", "2*x*y - y*z"}, XYZ)));
    }
    SUBCASE("containment laws (property)") {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 6; ++trial) {
            std::vector<Polynomial> gi, gj;
            for (int k = 0; k < 2; ++k) {
                Polynomial a = random_homog(rng, 3, 2);
                Polynomial b = random_homog(rng, 3, 1 + static_cast<int>(rng() % 2));
                if (!a.is_zero()) gi.push_back(a);
                if (!b.is_zero()) gj.push_back(b);
            }
            if (gi.empty() || gj.empty()) continue;
            Ideal i(3, gi), j(3, gj);
            Ideal q = quotient(i, j);
            CHECK(q.contains(i));  // I ⊆ (I : J)
            for (const Polynomial& a : q.generators()) {
                for (const Polynomial& b : j.generators()) {
                    CHECK(i.contains(a * b));  // (I : J)·J ⊆ I
                }
            }
        }
    }
}

TEST_CASE("saturation") {
    SUBCASE("power of a variable") {
        Ideal s = saturate(Ideal::principal(P("x0^2*x1")), P("x0"));
        REQUIRE(s.canonical_generators().size() == 1);
        CHECK(s.canonical_generators()[0] == P("x1"));
    }
    SUBCASE("saturate by zero throws") {
        CHECK_THROWS_AS((void)saturate(I3({"x0"}), Ideal::zero(3)), std::invalid_argument);
    }
    SUBCASE("idempotence (property)") {
        std::mt19937 rng(11);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<Polynomial> gi;
            for (int k = 0; k < 2; ++k) {
                Polynomial a = random_homog(rng, 3, 2);
                if (!a.is_zero()) gi.push_back(a);
            }
            if (gi.empty()) continue;
            Ideal i(3, gi);
            Ideal j = I3({"x0", "x1"});
            Ideal s1 = saturate(i, j);
            CHECK(saturate(s1, j).equals(s1));
            CHECK(s1.contains(quotient(i, j)));  // (I:J) ⊆ (I:J^∞)
        }
    }
    SUBCASE("last projective example: L = (J : K^∞) = C(dw) = (x0, x1)") {
        DiffForm w = parse_form("x1*x2*dx0 + x0*x2*dx1 - 2*x0*x1*dx2", X3);
        Ideal j = coefficient_ideal(w);
        Ideal cdw = coefficient_ideal(exterior_derivative(w));
        Ideal k = quotient(j, cdw);
        CHECK(k.equals(I3({"x2", "x0*x1"})));
        Ideal l = saturate(j, k);
        CHECK(l.equals(I3({"x0", "x1"})));
        CHECK(l.equals(cdw));
    }
}

TEST_CASE("radical membership and radical equality") {
    CHECK(radical_membership(P("x0"), Ideal::principal(P("x0^2"))));
    CHECK_FALSE(radical_membership(P("x1"), Ideal::principal(P("x0^2"))));
    CHECK(radical_equal(Ideal::principal(P("x0^2")), Ideal::principal(P("x0"))));
    CHECK_FALSE(radical_equal(Ideal::principal(P("x0")), Ideal::principal(P("x1"))));
    // Zero polynomial is in every radical; units are in no proper radical.
    CHECK(radical_membership(Polynomial::zero(3), Ideal::zero(3)));
    CHECK_FALSE(radical_membership(P("1"), I3({"x0"})));
    CHECK(radical_membership(P("1"), Ideal::unit(3)));
}

TEST_CASE("quotient lemma for radical J: (J:I) = (J:I^inf) = (J:sqrt(I)) (property)") {
    // J is an intersection of coordinate primes, hence radical; I is a random
    // monomial ideal, whose radical is generated by the squarefree parts.
    std::mt19937 rng(20260824);
    const int nv = 3;
    for (int trial = 0; trial < 8; ++trial) {
        // Random coordinate primes.
        std::vector<Ideal> primes;
        for (int p = 0; p < 2; ++p) {
            std::vector<Polynomial> gens;
            for (int v = 0; v < nv; ++v) {
                if (rng() % 2 == 0) gens.push_back(Polynomial::variable(nv, v));
            }
            if (gens.empty()) gens.push_back(Polynomial::variable(nv, static_cast<int>(rng() % nv)));
            primes.push_back(Ideal(nv, std::move(gens)));
        }
        Ideal j = primes[0];
        for (std::size_t p = 1; p < primes.size(); ++p) j = intersect(j, primes[p]);

        std::vector<Polynomial> mono_gens, rad_gens;
        for (int k = 0; k < 2; ++k) {
            Monomial m = random_monomial(rng, nv, 3);
            if (m.is_one()) continue;
            Monomial sq = m;
            for (auto& e : sq.exp) e = e > 0 ? 1 : 0;
            mono_gens.push_back(Polynomial::monomial(nv, m));
            rad_gens.push_back(Polynomial::monomial(nv, sq));
        }
        if (mono_gens.empty()) continue;
        Ideal i(nv, mono_gens);
        Ideal sqrt_i(nv, rad_gens);

        Ideal q1 = quotient(j, i);
        Ideal q2 = saturate(j, i);
        Ideal q3 = quotient(j, sqrt_i);
        CHECK(q1.equals(q2));
        CHECK(q1.equals(q3));
    }
}

TEST_CASE("comaximality") {
    CHECK(is_comaximal(Ideal::principal(P("x0")), Ideal::principal(P("x0 - 1"))));
    CHECK_FALSE(is_comaximal(Ideal::principal(P("x0")), Ideal::principal(P("x0"))));

    // Last projective example: K and C(dw) are not comaximal; the radical of
    // their sum is the irrelevant ideal.
    DiffForm w = parse_form("x1*x2*dx0 + x0*x2*dx1 - 2*x0*x1*dx2", X3);
    Ideal j = coefficient_ideal(w);
    Ideal cdw = coefficient_ideal(exterior_derivative(w));
    Ideal k = quotient(j, cdw);
    CHECK_FALSE(is_comaximal(k, cdw));
    CHECK(radical_equal(k + cdw, Ideal::irrelevant(3)));
}

TEST_CASE("elimination produces the implicit equation of the twisted cusp") {
    // (x0 - t^2, x1 - t^3) with t the trailing variable: eliminating t gives
    // the plane cusp x0^3 - x1^2.
    const std::vector<std::string> xt = {"x0", "x1", "t"};
    std::vector<Polynomial> gens = {parse_polynomial("x0 - t^2", xt),
                                    parse_polynomial("x1 - t^3", xt)};
    const auto elim = eliminate_trailing(gens, 1);
    REQUIRE(elim.size() == 1);
    CHECK(elim[0] == parse_polynomial("x0^3 - x1^2", {"x0", "x1"}));
}

TEST_CASE("second projective example: K and L meet exactly in J") {
    // w = x0^2*x2 dx0 + x1^2*x2 dx1 - (x0^3 + x1^3) dx2 on P^2.
    DiffForm w = parse_form("x0^2*x2*dx0 + x1^2*x2*dx1 + (-x0^3 - x1^3)*dx2", X3);
    Ideal j = coefficient_ideal(w);
    Ideal cdw = coefficient_ideal(exterior_derivative(w));
    Ideal k = quotient(j, cdw);
    Ideal l = saturate(j, k);
    CHECK(intersect(k, l).equals(j));
}

TEST_CASE("normal form is the identity on irreducible inputs") {
    const MonomialOrder ord = MonomialOrder::grevlex();
    const auto gb = I3({"x0^2", "x0*x1 + x0^2"}).groebner();
    CHECK(normal_form(P("x1^5 + x2"), gb, ord) == P("x1^5 + x2"));
    CHECK(normal_form(P("x0^2*x2 + x1"), gb, ord) == P("x1"));
}
