#include <doctest.h>

#include <vector>

#include "folcalc/diff_form.hpp"
#include "folcalc/hilbert.hpp"
#include "folcalc/parse.hpp"
#include "folcalc/zerodim.hpp"

using namespace folcalc;

namespace {

const std::vector<std::string> XYZ = {"x", "y", "z"};
const std::vector<std::string> X3 = {"x0", "x1", "x2"};

Ideal make_ideal(std::initializer_list<std::string> gens,
                 const std::vector<std::string>& vars) {
    std::vector<Polynomial> ps;
    for (const auto& g : gens) ps.push_back(parse_polynomial(g, vars));
    return Ideal(static_cast<int>(vars.size()), std::move(ps));
}

Ideal dehomogenized(const Ideal& i, int chart) {
    std::vector<Polynomial> gens;
    for (const Polynomial& g : i.generators()) gens.push_back(dehomogenize(g, chart));
    return Ideal(i.nvars() - 1, std::move(gens));
}

std::vector<Rational> pt(std::initializer_list<int> coords) {
    std::vector<Rational> p;
    for (int c : coords) p.emplace_back(c);
    return p;
}

// First projective corpus example on P^2.
DiffForm p2a_form() {
    return parse_form("y*z^2*dx + x^2*z*dy - (x^2*y + x*y*z)*dz", XYZ);
}

// Second projective corpus example on P^2 (the x0^2*x2 one).
DiffForm p2b_form() {
    return parse_form("x0^2*x2*dx0 + x1^2*x2*dx1 + (-x0^3 - x1^3)*dx2", X3);
}

// Last projective corpus example on P^2.
DiffForm p2c_form() {
    return parse_form("x1*x2*dx0 + x0*x2*dx1 - 2*x0*x1*dx2", X3);
}

// Constant term of the Hilbert polynomial of S/sat(I): the degree of a
// zero-dimensional projective scheme.
Rational scheme_degree(const Ideal& i) {
    const Ideal sat = saturate(i, Ideal::irrelevant(i.nvars()));
    const HilbertPolynomial h = hilbert_polynomial(sat);
    REQUIRE(h.degree() == 0);
    return h(Rational(0));
}

}  // namespace

TEST_CASE("zero-dimensional radical via univariate eliminants") {
    SUBCASE("simple fat point") {
        const Ideal i = make_ideal({"x0^2", "x1"}, {"x0", "x1"});
        const Ideal rad = zero_dim_radical(i);
        const auto gb = rad.canonical_generators();
        REQUIRE(gb.size() == 2);
        CHECK(gb[0] == parse_polynomial("x0", {"x0", "x1"}));
        CHECK(gb[1] == parse_polynomial("x1", {"x0", "x1"}));
    }
    SUBCASE("one variable") {
        const Ideal i = Ideal::principal(parse_polynomial("x0^3 - x0^2", {"x0"}));
        const Ideal rad = zero_dim_radical(i);
        REQUIRE(rad.canonical_generators().size() == 1);
        CHECK(rad.canonical_generators()[0] == parse_polynomial("x0^2 - x0", {"x0"}));
    }
    SUBCASE("not zero-dimensional throws") {
        CHECK_THROWS_AS((void)zero_dim_radical(make_ideal({"x0"}, {"x0", "x1"})),
                        std::invalid_argument);
    }
    SUBCASE("unit ideal stays the unit ideal") {
        CHECK(zero_dim_radical(Ideal::unit(2)).is_unit());
    }
    SUBCASE("radical is idempotent and contains the input") {
        const Ideal i = make_ideal({"x0^2 - x1", "x1^2"}, {"x0", "x1"});
        const Ideal rad = zero_dim_radical(i);
        CHECK(rad.contains(i));
        CHECK(zero_dim_radical(rad).equals(rad));
        // Independent cross-check: Rabinowitsch membership agrees generator-wise.
        for (const Polynomial& g : rad.generators()) {
            CHECK(radical_membership(g, i));
        }
    }
}

TEST_CASE("first projective example: the singular ideal is not radical in the chart z=1") {
    const Ideal j = coefficient_ideal(p2a_form());
    const Ideal j_aff = dehomogenized(j, 2);
    const Ideal rad = zero_dim_radical(j_aff);
    CHECK(rad.contains(j_aff));
    CHECK_FALSE(j_aff.equals(rad));  // strictly larger: J is not radical
    // In this chart the only singular point is the origin with multiplicity 2:
    // radical = (x, y).
    CHECK(rad.equals(make_ideal({"x", "y"}, {"x", "y"})));
}

TEST_CASE("last projective example: the singular ideal is radical in every chart") {
    const Ideal j = coefficient_ideal(p2c_form());
    for (int chart = 0; chart < 3; ++chart) {
        CAPTURE(chart);
        const Ideal j_aff = dehomogenized(j, chart);
        CHECK(zero_dim_radical(j_aff).equals(j_aff));
    }
}

TEST_CASE("artinian dimension") {
    const std::vector<std::string> xy = {"x0", "x1"};
    CHECK(artinian_dimension(make_ideal({"x0^2", "x0*x1", "x1^3"}, xy)) == 4);
    CHECK(artinian_dimension(make_ideal({"x0", "x1"}, xy)) == 1);
    CHECK(artinian_dimension(Ideal::unit(2)) == 0);
    CHECK_THROWS_AS((void)artinian_dimension(make_ideal({"x0"}, xy)), std::invalid_argument);
}

TEST_CASE("first projective example: point multiplicities of J and K") {
    const DiffForm w = p2a_form();
    const Ideal j = coefficient_ideal(w);
    const Ideal k = quotient(j, coefficient_ideal(exterior_derivative(w)));

    const auto e0 = pt({1, 0, 0});
    const auto e1 = pt({0, 1, 0});
    const auto e2 = pt({0, 0, 1});

    CHECK(point_multiplicity(j, e0) == 1);
    CHECK(point_multiplicity(j, e1) == 4);
    CHECK(point_multiplicity(j, e2) == 2);

    CHECK(point_multiplicity(k, e0) == 1);
    CHECK(point_multiplicity(k, e1) == 2);
    CHECK(point_multiplicity(k, e2) == 2);

    // Degree-sum rule: all points are rational here, so the multiplicities
    // account for the whole scheme degree.
    CHECK(scheme_degree(j) == 7);
    CHECK(scheme_degree(k) == 5);
}

TEST_CASE("second projective example: multiplicities 1, 2 and 4") {
    const Ideal j = coefficient_ideal(p2b_form());
    // Rational points: (0:0:1) carries multiplicity 4, (1:-1:0) carries 1.
    CHECK(point_multiplicity(j, pt({0, 0, 1})) == 4);
    CHECK(point_multiplicity(j, pt({1, -1, 0})) == 1);
    // The remaining point is a conjugate pair (x0^2 - x0*x1 + x1^2 = 0 on the
    // line x2 = 0); its length is certified by the degree-sum rule.
    CHECK(scheme_degree(j) == 7);  // 4 + 1 + 2
}

TEST_CASE("multiplicity sum equals the scheme degree (invariant)") {
    // Constructed scheme: a doubled point at (0:0:1) plus a reduced point at
    // (0:1:1); the degree must come out as 2 + 1.
    const Ideal fat = make_ideal({"x0^2", "x1"}, X3);
    const Ideal simple = make_ideal({"x0", "x1 - x2"}, X3);
    const Ideal i = intersect(fat, simple);

    CHECK(point_multiplicity(i, pt({0, 0, 1})) == 2);
    CHECK(point_multiplicity(i, pt({0, 1, 1})) == 1);
    CHECK(scheme_degree(i) == 3);
    // The Hilbert polynomial is insensitive to saturation.
    CHECK(hilbert_polynomial(i) == hilbert_polynomial(saturate(i, Ideal::irrelevant(3))));
}

TEST_CASE("point_multiplicity error handling") {
    const Ideal j = coefficient_ideal(p2a_form());
    // Not on the scheme.
    CHECK_THROWS_AS((void)point_multiplicity(j, pt({1, 1, 1})), std::invalid_argument);
    // All-zero coordinates.
    CHECK_THROWS_AS((void)point_multiplicity(j, pt({0, 0, 0})), std::invalid_argument);
    // Wrong coordinate count.
    CHECK_THROWS_AS((void)point_multiplicity(j, pt({1, 0})), std::invalid_argument);
    // Positive-dimensional at the point: a line through (0:0:1).
    const Ideal line = make_ideal({"x0"}, X3);
    CHECK_THROWS_AS((void)point_multiplicity(line, pt({0, 0, 1})), std::invalid_argument);
}
