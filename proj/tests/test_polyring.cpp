#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "folcalc/polynomial.hpp"

using namespace folcalc;

namespace {

Polynomial var(int nv, int i) { return Polynomial::variable(nv, i); }

// Small random polynomial generator for property tests (fixed seeds only).
Polynomial random_poly(std::mt19937& rng, int nvars, int max_deg, int max_terms) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> coef(-5, 5);
    std::uniform_int_distribution<int> expo(0, max_deg);
    std::vector<Term> ts;
    const int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Monomial m(nvars);
        int budget = max_deg;
        for (int i = 0; i < nvars; ++i) {
            int e = expo(rng) % (budget + 1);
            m.exp[static_cast<std::size_t>(i)] = e;
            budget -= e;
        }
        ts.push_back(Term{Rational(coef(rng)), std::move(m)});
    }
    return Polynomial::from_terms(nvars, std::move(ts));
}

}  // namespace

TEST_CASE("monomial arithmetic") {
    Monomial a{2, 0, 1}, b{1, 3, 0};
    CHECK(a.degree() == 3);
    CHECK((a * b) == Monomial{3, 3, 1});
    CHECK(lcm(a, b) == Monomial{2, 3, 1});
    CHECK(divides(a, a * b));
    CHECK_FALSE(divides(b, a));
    CHECK((a * b) / a == b);
    CHECK(coprime(Monomial{1, 0, 0}, Monomial{0, 2, 1}));
    CHECK_FALSE(coprime(a, b));
    CHECK_THROWS(a * Monomial{1, 1});
}

TEST_CASE("grevlex order basics") {
    auto o = MonomialOrder::grevlex();
    // degree first
    CHECK(o.greater(Monomial{2, 0, 0}, Monomial{1, 0, 0}));
    // same degree: x0^2 > x0*x1 > x1^2 > x0*x2 > x1*x2 > x2^2
    std::vector<Monomial> expect = {{2, 0, 0}, {1, 1, 0}, {0, 2, 0},
                                    {1, 0, 1}, {0, 1, 1}, {0, 0, 2}};
    for (std::size_t i = 0; i + 1 < expect.size(); ++i)
        CHECK(o.greater(expect[i], expect[i + 1]));
}

TEST_CASE("lex order basics") {
    auto o = MonomialOrder::lex();
    CHECK(o.greater(Monomial{1, 0, 0}, Monomial{0, 5, 5}));
    CHECK(o.greater(Monomial{1, 1, 0}, Monomial{1, 0, 9}));
}

TEST_CASE("block order pushes trailing variables first") {
    // block(1) on 3 vars: any monomial containing x2 beats any without it.
    auto o = MonomialOrder::block(1);
    CHECK(o.greater(Monomial{0, 0, 1}, Monomial{4, 4, 0}));
    // ties on the tail fall back to grevlex on the head
    CHECK(o.greater(Monomial{2, 0, 1}, Monomial{1, 1, 1}));
}

TEST_CASE("order laws (property)") {
    std::mt19937 rng(20260823);
    std::uniform_int_distribution<int> expo(0, 4);
    auto rand_mono = [&](int nv) {
        Monomial m(nv);
        for (auto& e : m.exp) e = expo(rng);
        return m;
    };
    for (const auto& ord :
         {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::block(2)}) {
        for (int it = 0; it < 200; ++it) {
            Monomial a = rand_mono(4), b = rand_mono(4), c = rand_mono(4), u = rand_mono(4);
            // antisymmetry & totality
            CHECK(ord.cmp(a, b) == -ord.cmp(b, a));
            CHECK((ord.cmp(a, b) == 0) == (a == b));
            // transitivity
            if (ord.greater(a, b) && ord.greater(b, c)) CHECK(ord.greater(a, c));
            // multiplicative: a > b  =>  au > bu
            if (ord.greater(a, b)) CHECK(ord.greater(a * u, b * u));
            // well-order base: m >= 1
            Monomial one(4);
            CHECK(ord.cmp(a, one) >= 0);
        }
    }
}

TEST_CASE("polynomial canonical form and equality") {
    int nv = 3;
    Polynomial f = var(nv, 0) * var(nv, 1) + var(nv, 2) * var(nv, 2);
    Polynomial g = var(nv, 2) * var(nv, 2) + var(nv, 1) * var(nv, 0);
    CHECK(f == g);
    CHECK((f - g).is_zero());
    // terms are grevlex descending
    REQUIRE(f.num_terms() == 2);
    CHECK(f.terms()[0].mono == Monomial{1, 1, 0});
    CHECK(f.terms()[1].mono == Monomial{0, 0, 2});
    // cancellation
    Polynomial h = f - var(nv, 0) * var(nv, 1);
    CHECK(h.num_terms() == 1);
    CHECK(Polynomial::zero(nv) == Polynomial::from_terms(nv, {}));
    CHECK_THROWS(f + Polynomial::zero(2));
}

TEST_CASE("ring axioms (property)") {
    std::mt19937 rng(42);
    for (int it = 0; it < 60; ++it) {
        Polynomial a = random_poly(rng, 3, 4, 5), b = random_poly(rng, 3, 4, 5),
                   c = random_poly(rng, 3, 4, 5);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Polynomial::zero(3) == a);
        CHECK(a * Polynomial::constant(3, 1) == a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("degree and homogeneity") {
    int nv = 3;
    Polynomial f = var(nv, 0).pow(2) * var(nv, 1) - var(nv, 2).pow(3);
    CHECK(degree(f) == 3);
    CHECK(is_homogeneous(f));
    CHECK(degree(Polynomial::zero(nv)) == -1);
    CHECK(is_homogeneous(Polynomial::zero(nv)));
    CHECK_FALSE(is_homogeneous(f + Polynomial::constant(nv, 1)));
    CHECK(degree_in(f, 2) == 3);
    CHECK(degree_in(f, 1) == 1);
}

TEST_CASE("partial derivative and Euler identity") {
    std::mt19937 rng(7);
    // Euler: sum x_i * d f/dx_i = deg(f) * f for homogeneous f
    for (int it = 0; it < 40; ++it) {
        Polynomial f = random_poly(rng, 3, 3, 4);
        // homogenize by keeping only the top-degree part
        int d = degree(f);
        if (d < 0) continue;
        std::vector<Term> top;
        for (const Term& t : f.terms())
            if (t.mono.degree() == d) top.push_back(t);
        Polynomial h = Polynomial::from_terms(3, top);
        Polynomial lhs(3);
        for (int i = 0; i < 3; ++i)
            lhs += Polynomial::variable(3, i) * partial_derivative(h, i);
        CHECK(lhs == Rational(d) * h);
    }
    // Leibniz
    std::mt19937 rng2(8);
    Polynomial a = random_poly(rng2, 3, 3, 4), b = random_poly(rng2, 3, 3, 4);
    for (int i = 0; i < 3; ++i)
        CHECK(partial_derivative(a * b, i) ==
              partial_derivative(a, i) * b + a * partial_derivative(b, i));
}

TEST_CASE("substitute and evaluate") {
    int nv = 2;
    Polynomial f = var(nv, 0).pow(2) + var(nv, 1);  // x0^2 + x1
    // x0 := y0+y1, x1 := y0*y1 in 2 fresh vars
    std::vector<Polynomial> images = {var(2, 0) + var(2, 1), var(2, 0) * var(2, 1)};
    Polynomial g = substitute(f, images);
    Polynomial y0 = var(2, 0), y1 = var(2, 1);
    CHECK(g == y0 * y0 + 2 * y0 * y1 + y1 * y1 + y0 * y1);
    std::vector<Rational> pt = {Rational(2), Rational(-3)};
    CHECK(evaluate(f, pt) == Rational(1));
    // substitution commutes with arithmetic
    std::mt19937 rng(11);
    Polynomial a = random_poly(rng, 2, 3, 4), b = random_poly(rng, 2, 3, 4);
    CHECK(substitute(a * b, images) == substitute(a, images) * substitute(b, images));
    CHECK(substitute(a + b, images) == substitute(a, images) + substitute(b, images));
}

TEST_CASE("content and primitive part") {
    int nv = 2;
    Polynomial f = Rational(4, 6) * var(nv, 0) + Rational(2) * var(nv, 1);
    // coefficients 2/3 and 2 -> content 2/3
    CHECK(content(f) == Rational(2, 3));
    Polynomial p = primitive_part(f);
    CHECK(content(p) == 1);
    CHECK(content(f) * p == f);
    CHECK(content(Polynomial::zero(nv)) == 0);
    // sign: leading coefficient of the primitive part is positive
    Polynomial g = Rational(-3) * var(nv, 0) * var(nv, 0) + Rational(6) * var(nv, 1);
    CHECK(content(g) == Rational(-3));
    CHECK(leading_coeff(primitive_part(g), MonomialOrder::grevlex()) > 0);
}

TEST_CASE("leading data under different orders") {
    int nv = 3;
    // f = x0*x2^2 + x1^3: grevlex leader x1^3, lex leader x0*x2^2
    Polynomial f = var(nv, 0) * var(nv, 2).pow(2) + var(nv, 1).pow(3);
    CHECK(leading_monomial(f, MonomialOrder::grevlex()) == Monomial{0, 3, 0});
    CHECK(leading_monomial(f, MonomialOrder::lex()) == Monomial{1, 0, 2});
    Polynomial m = make_monic(Rational(5) * f, MonomialOrder::grevlex());
    CHECK(leading_coeff(m, MonomialOrder::grevlex()) == 1);
}

TEST_CASE("ring plumbing") {
    int nv = 3;
    Polynomial f = var(nv, 0) * var(nv, 1) + var(nv, 2).pow(2);
    Polynomial g = extend_ring(f, 1);
    CHECK(g.nvars() == 4);
    CHECK(drop_last_var(g) == f);
    std::vector<int> perm = {2, 0, 1};  // x0->x2, x1->x0, x2->x1
    Polynomial p = permute_vars(f, perm);
    CHECK(p == var(nv, 2) * var(nv, 0) + var(nv, 1).pow(2));
    // dehomogenize at chart 2: x2 := 1, ring drops to 2 vars
    Polynomial d = dehomogenize(f, 2);
    CHECK(d == var(2, 0) * var(2, 1) + Polynomial::constant(2, 1));
    CHECK(insert_var(d, 2).nvars() == 3);
}

TEST_CASE("printing") {
    int nv = 3;
    Polynomial f = Rational(3) * var(nv, 1).pow(2) - var(nv, 0) * var(nv, 2) -
                   Polynomial::constant(nv, 1);
    CHECK(to_string(f) == "3*x1^2 - x0*x2 - 1");
    CHECK(to_string(Polynomial::zero(nv)) == "0");
    CHECK(to_string(Polynomial::constant(nv, Rational(-1, 2))) == "-1/2");
    std::vector<std::string> xyz = {"x", "y", "z"};
    CHECK(to_string(f, xyz) == "3*y^2 - x*z - 1");
}
