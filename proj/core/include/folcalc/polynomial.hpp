#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "folcalc/monomial.hpp"
#include "folcalc/rational.hpp"

namespace folcalc {

struct Term {
    Rational coeff;
    Monomial mono;

    bool operator==(const Term& o) const = default;
};

// Multivariate polynomial over Q in a fixed number of variables. Terms are
// kept canonical: nonzero coefficients, distinct monomials, sorted grevlex
// descending. Structural equality on the canonical form is polynomial
// equality. The arity is carried explicitly so that 0 in Q[x0,x1] and 0 in
// Q[x0] stay distinguishable.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial zero(int nvars) { return Polynomial(nvars); }
    static Polynomial constant(int nvars, Rational c);
    static Polynomial variable(int nvars, int i);
    static Polynomial monomial(int nvars, Monomial m, Rational c = 1);
    // Builds the canonical form from an arbitrary term soup.
    static Polynomial from_terms(int nvars, std::vector<Term> terms);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t num_terms() const { return terms_.size(); }

    bool operator==(const Polynomial& o) const = default;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    Polynomial operator-() const;

    Polynomial pow(unsigned k) const;

  private:
    int nvars_ = 0;
    std::vector<Term> terms_;  // canonical: grevlex descending

    void canonicalize();
};

// Total degree; -1 for the zero polynomial.
int degree(const Polynomial& f);
// Every term has the same total degree (vacuously true for 0).
bool is_homogeneous(const Polynomial& f);
// Largest exponent of variable i appearing in f (0 if absent).
int degree_in(const Polynomial& f, int i);

Polynomial partial_derivative(const Polynomial& f, int i);
// Simultaneous substitution x_i := images[i]; images live in a common ring
// whose arity sets the result's arity.
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images);
Rational evaluate(const Polynomial& f, std::span<const Rational> point);

// gcd of numerators / lcm of denominators, with the sign of the grevlex
// leading coefficient; content(0) = 0. f == content(f) * primitive_part(f),
// and primitive parts have integer coprime coefficients with positive leading
// coefficient.
Rational content(const Polynomial& f);
Polynomial primitive_part(const Polynomial& f);

// Leading data with respect to an order (terms are stored grevlex-sorted, so
// non-grevlex orders scan).
const Term& leading_term(const Polynomial& f, const MonomialOrder& ord);
Monomial leading_monomial(const Polynomial& f, const MonomialOrder& ord);
Rational leading_coeff(const Polynomial& f, const MonomialOrder& ord);
Polynomial make_monic(const Polynomial& f, const MonomialOrder& ord);
std::vector<Term> sorted_terms(const Polynomial& f, const MonomialOrder& ord);

// Ring plumbing. extend_ring appends `extra` fresh trailing variables;
// drop_last_var requires the variable to be absent from f.
Polynomial extend_ring(const Polynomial& f, int extra);
Polynomial drop_last_var(const Polynomial& f);
Polynomial permute_vars(const Polynomial& f, std::span<const int> perm);  // x_i -> x_perm[i]
// Sets x_chart := 1 and renumbers the remaining variables in order.
Polynomial dehomogenize(const Polynomial& f, int chart);
// Inverse-ish: inserts a variable at position `chart` (absent from the result
// unless homogenize is requested elsewhere).
Polynomial insert_var(const Polynomial& f, int chart);

std::string to_string(const Polynomial& f, const std::vector<std::string>& names);
std::string to_string(const Polynomial& f);

}  // namespace folcalc
